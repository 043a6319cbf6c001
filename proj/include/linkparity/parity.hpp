#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linkparity/colouring.hpp"
#include "linkparity/diagram.hpp"

namespace linkparity {

enum class ParityScheme : std::uint8_t { TwoColour, Gaussian, Naive, IPSelf, FreeTwoColour };

// Parity values for the chords of one diagram, indexed like its chord list.
// A value of -1 marks a chord outside the scheme's domain (only the IP
// scheme excludes chords: its mixed-crossing branch is an external
// condition, so mixed chords carry no value).
struct ParityAssignment {
    ParityScheme scheme = ParityScheme::TwoColour;
    std::optional<TwoColouring> colouring;
    std::vector<std::int8_t> value;

    bool in_domain(int chord_index) const { return value.at(static_cast<std::size_t>(chord_index)) >= 0; }
    bool odd(int chord_index) const;  // IndexError if outside the domain
};

// A chord is odd exactly when the incoming colours at its two endpoints
// agree.
ParityAssignment two_colour_parity(const GaussDiagram& d, const TwoColouring& c);

// Knot parity: odd iff an odd number of endpoints lies strictly between the
// chord's endpoints. Requires a 1-component diagram.
ParityAssignment gaussian_parity(const GaussDiagram& d);

// Self-crossings even, mixed crossings odd.
ParityAssignment naive_parity(const GaussDiagram& d);

// Im-Park self-parity: a self-chord is odd iff it encloses an odd number of
// endpoints on its own circle. Defined only when all pairwise linking
// numbers are even; mixed chords are left out of the domain.
ParityAssignment ip_self_parity(const GaussDiagram& d);

// Parity projection: delete every chord that is odd under the 2-colour
// parity for c. The component count is preserved.
GaussDiagram project(const GaussDiagram& d, const TwoColouring& c);

// The same rule as two_colour_parity, computed from undecorated data.
ParityAssignment free_two_colour_parity(const SimpleGaussDiagram& s, const TwoColouring& c);

}  // namespace linkparity
