#pragma once

#include <array>
#include <optional>
#include <vector>

#include "linkparity/colouring.hpp"
#include "linkparity/diagram.hpp"
#include "linkparity/parity.hpp"

namespace linkparity {

// Everything the invariants layer can say about one diagram. Fields that
// need a 2-colouring are absent on degenerate diagrams; the IP fields are
// absent unless all pairwise linking numbers are even.
struct WritheProfile {
    int components = 0;
    int chords = 0;
    bool two_colourable = false;

    std::optional<std::vector<long long>> j2;  // sorted ascending, 2^(n-1) entries
    std::optional<long long> j2_self;
    long long naive = 0;
    std::optional<long long> ip_self;
    std::optional<std::array<long long, 2>> ip_candidates;
    std::vector<std::vector<long long>> lk;  // symmetric, zero diagonal, no 1/2 factor

    bool chequerboard_certified = false;
    std::optional<bool> slice_obstructed;
    std::optional<bool> amphichiral_obstructed;
    std::optional<bool> cb_concordance_obstructed;
    bool compatible = false;
};

// Sum of the signs of the chords that are odd under the 2-colour parity
// for c.
long long writhe(const GaussDiagram& d, const TwoColouring& c);

// J^2 by direct enumeration over the generating set; the brute-force oracle
// for the fast path.
std::vector<long long> two_colour_writhe_enum(const GaussDiagram& d);

// J^2 from one pass over the chords: the base writhe, every single- and
// double-dual writhe, then the remaining generating-set entries by the
// inclusion-exclusion identity
//   J_v = sum_{k<l} J_{p_k,p_l} - (m-2) sum_s J_{p_s} + (m-1)(m-2)/2 J_base.
// Crossing-level work is O(#chords + n^2). Refuses n > max_components since
// the output alone has 2^(n-1) entries.
std::vector<long long> two_colour_writhe_fast(const GaussDiagram& d, int max_components = 20);

// Signed count of the odd self-chords; the same for every colouring.
long long self_writhe(const GaussDiagram& d);

// Signed count of the mixed chords; equals the sum of pairwise linking
// numbers.
long long naive_writhe(const GaussDiagram& d);

std::vector<std::vector<long long>> linking_matrix(const GaussDiagram& d);

struct IpWrithe {
    long long self = 0;                        // IP_S
    std::array<long long, 2> candidates{0, 0}; // {IP_S, IP_S + sum of pairwise lk}
};

// Requires even pairwise linking numbers (OddLinkingNumbers otherwise).
IpWrithe ip_self_writhe(const GaussDiagram& d);

// Height of the alternately coloured smoothing for c: the number of
// 1-resolutions (+odd and -even chords) minus the number of negative
// chords. Always equals writhe(d, c).
long long smoothing_height(const GaussDiagram& d, const TwoColouring& c);

// A colouring under which every chord is even, if one exists. Found by
// propagating the constraint odd(chord) = base_odd(chord) XOR v_i XOR v_j
// over the component graph, so this runs in O(#chords + n).
std::optional<TwoColouring> chequerboard_certificate(const GaussDiagram& d);

enum class J2Mode { Fast, Enum, Check };

// Full profile. J2Mode::Check computes both routes and throws Error on
// disagreement.
WritheProfile report(const GaussDiagram& d, J2Mode mode = J2Mode::Fast, int max_components = 20);

}  // namespace linkparity
