#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "linkparity/colouring.hpp"
#include "linkparity/diagram.hpp"
#include "linkparity/parity.hpp"

namespace linkparity {

// Classical Reidemeister rewrites located in a diagram. Virtual moves and
// the detour move do not change a Gauss diagram, so only R1/R2/R3 exist
// here. Chord and component fields refer to the diagram the site was
// enumerated for.

// Add a kink: a new chord with both endpoints in one gap of one circle.
// gap g means "before the endpoint currently at position g" (a circle of
// size s has gaps 0..s-1; an empty circle has the single gap 0).
struct R1Insert {
    int component = 0;
    int gap = 0;
    int sign = +1;
    bool over_first = true;
};

// Remove a chord whose endpoints are cyclically adjacent on one circle.
struct R1Delete {
    int chord = 0;  // chord index
};

// Poke one strand under another: two new chords x (sign) and y (-sign).
// Their over endpoints land in gap1 as (O_x, O_y); their under endpoints in
// gap2 as (U_x, U_y), or (U_y, U_x) when reversed. Sites may coincide, in
// which case the under pair goes directly after the over pair.
struct R2Insert {
    int component1 = 0;
    int gap1 = 0;
    int component2 = 0;
    int gap2 = 0;
    bool reversed = true;
    int sign = +1;
};

// Remove two chords whose endpoints form an adjacent over/over pair and an
// adjacent under/under pair, with opposite signs.
struct R2Delete {
    int chord_a = 0;
    int chord_b = 0;
};

// Start of an adjacent endpoint pair: positions (position, position+1 mod
// size) on one circle.
struct PairSite {
    int component = 0;
    int position = 0;
};

// Slide a strand across a crossing. The three pairs are the over/over arc,
// the mixed arc and the under/under arc of the triangle; chords[0..2] are
// the chord indices in the roles (top-middle, top-bottom, middle-bottom).
// Applying the move swaps the two endpoints inside each pair.
struct R3Rewrite {
    std::array<PairSite, 3> pairs{};
    std::array<int, 3> chords{};
};

using MoveKind = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Rewrite>;

struct MoveSite {
    MoveKind kind;
    std::uint64_t fingerprint = 0;  // of the diagram the site belongs to
};

struct MoveFilter {
    bool r1_insert = true;
    bool r1_delete = true;
    bool r2_insert = true;
    bool r2_delete = true;
    bool r3 = true;

    static MoveFilter all() { return {}; }
    static MoveFilter deletions_and_r3() { return {false, true, false, true, true}; }
};

std::string describe(const MoveKind& kind);

// Complete enumeration of the valid sites of the requested kinds.
std::vector<MoveSite> available_moves(const GaussDiagram& d, const MoveFilter& filter = {});

struct ApplyResult {
    GaussDiagram diagram;
    std::vector<int> chord_map;             // old chord index -> new index, -1 if deleted
    std::vector<int> created;               // chord indices new in the result
    std::vector<std::uint8_t> colour_xor;   // per component; see transport()
};

// Rewrite the diagram at the site. StaleSite if the site was enumerated for
// a different diagram.
ApplyResult apply(const GaussDiagram& d, const MoveSite& site);

// Carry a colouring across a move: every interval that survives keeps its
// colour.
TwoColouring transport(const ApplyResult& result, const TwoColouring& before);

// A deterministic trajectory of diagrams, each one move from its
// predecessor. Inserts become rarer as the chord count approaches
// max_chords. Returns steps+1 diagrams starting with d.
std::vector<GaussDiagram> random_walk(const GaussDiagram& d, int steps, std::uint64_t seed,
                                      int max_chords);

// Parity scheme under test: maps a diagram and a colouring to an
// assignment. Schemes that ignore the colouring (the naive parity) may do
// so.
using ParityFn = std::function<ParityAssignment(const GaussDiagram&, const TwoColouring&)>;

struct AxiomWitness {
    std::string diagram;     // Gauss code before the move
    std::string move;
    std::string colouring;   // bits, or "-" for colouring-free schemes
    int axiom = -1;          // 0..3
    std::string detail;
};

struct AxiomReport {
    bool pass = true;
    long long steps = 0;
    long long colourings_checked = 0;
    long long r3_sites_checked = 0;
    long long r3_all_odd = 0;  // strong-parity violations observed
    std::optional<AxiomWitness> witness;
};

// Walk a random trajectory and check the parity axioms at every move, for
// every generating-set colouring transported across the move:
//   0. untouched chords keep their parity
//   1. an R1 chord is even
//   2. an R2 pair has equal parities
//   3. an R3 triple has 0, 2 or (for weak parities) 3 odd members, and the
//      parities survive the move.
// Every enumerated R3 site is also screened; with require_strong set,
// an all-odd triple fails the run, otherwise it is only counted.
AxiomReport verify_parity_axioms(const GaussDiagram& d, int steps, std::uint64_t seed,
                                 int max_chords, const ParityFn& parity,
                                 bool require_strong);

// Convenience overload: the 2-colour parity, strong required.
AxiomReport verify_parity_axioms(const GaussDiagram& d, int steps, std::uint64_t seed,
                                 int max_chords = 24);

}  // namespace linkparity
