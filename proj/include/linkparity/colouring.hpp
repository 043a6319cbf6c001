#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "linkparity/diagram.hpp"

namespace linkparity {

// A 2-colouring, stored as one bit per component: the colour of the interval
// containing that component's basepoint (0 = red, 1 = green). The interval
// entering endpoint k of component i has colour bits[i] XOR (k mod 2), so
// alternation is built in. Only meaningful on diagrams without degenerate
// components.
struct TwoColouring {
    std::vector<std::uint8_t> bits;

    int components() const { return static_cast<int>(bits.size()); }
    std::string to_string() const;
    static TwoColouring from_string(std::string_view s);  // SyntaxError on non-bits

    friend bool operator==(const TwoColouring&, const TwoColouring&) = default;
    friend auto operator<=>(const TwoColouring&, const TwoColouring&) = default;
};

// Components carrying an odd number of chord endpoints.
std::vector<int> degenerate_components(const GaussDiagram& d);
std::vector<int> degenerate_components(const SimpleGaussDiagram& d);

bool two_colourable(const GaussDiagram& d);
bool two_colourable(const SimpleGaussDiagram& d);

// All 2^n colourings when no component is degenerate, in lexicographic order
// of their bit-strings; empty otherwise. Refuses n > max_components to keep
// the output bounded.
std::vector<TwoColouring> colourings(const GaussDiagram& d, int max_components = 20);

// Flip the bits on the given set of components (duplicates are ignored).
TwoColouring dualize(const TwoColouring& c, const std::vector<int>& components);
TwoColouring global_dual(const TwoColouring& c);

// One colouring from each global-dual pair: for odd n all bit-vectors of
// weight <= n/2; for even n those of weight < n/2 plus the weight-n/2
// vectors preceding their complements in dictionary order. Ordered by
// weight, then lexicographically. Size is exactly 2^(n-1).
std::vector<TwoColouring> generating_set(int n_components);

// Colour of the interval entering the given endpoint.
int incoming_colour(const GaussDiagram& d, const TwoColouring& c, int component, int position);
int incoming_colour(const SimpleGaussDiagram& d, const TwoColouring& c, int component, int position);

}  // namespace linkparity
