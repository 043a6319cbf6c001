#include "linkparity/colouring.hpp"

#include <algorithm>
#include <bit>

namespace linkparity {

std::string TwoColouring::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (std::uint8_t b : bits) s.push_back(b ? '1' : '0');
    return s;
}

TwoColouring TwoColouring::from_string(std::string_view s) {
    TwoColouring c;
    c.bits.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw SyntaxError("colouring must be a string of 0s and 1s");
        c.bits.push_back(ch == '1' ? 1 : 0);
    }
    return c;
}

namespace {

template <typename Diagram>
std::vector<int> degenerate_components_impl(const Diagram& d) {
    std::vector<int> out;
    for (int i = 0; i < d.components(); ++i)
        if (d.is_degenerate(i)) out.push_back(i);
    return out;
}

template <typename Diagram>
void require_colourable(const Diagram& d, const TwoColouring& c) {
    if (!two_colourable(d)) throw NotTwoColourable("diagram has a degenerate component");
    if (c.components() != d.components())
        throw IndexError("colouring has " + std::to_string(c.components()) + " bits for " +
                         std::to_string(d.components()) + " components");
}

template <typename Diagram>
int incoming_colour_impl(const Diagram& d, const TwoColouring& c, int component, int position) {
    require_colourable(d, c);
    if (component < 0 || component >= d.components())
        throw IndexError("component " + std::to_string(component) + " out of range");
    if (position < 0 || position >= d.size(component))
        throw IndexError("position " + std::to_string(position) + " out of range");
    return c.bits[static_cast<std::size_t>(component)] ^ (position & 1);
}

}  // namespace

std::vector<int> degenerate_components(const GaussDiagram& d) { return degenerate_components_impl(d); }
std::vector<int> degenerate_components(const SimpleGaussDiagram& d) { return degenerate_components_impl(d); }

bool two_colourable(const GaussDiagram& d) { return degenerate_components(d).empty(); }
bool two_colourable(const SimpleGaussDiagram& d) { return degenerate_components(d).empty(); }

std::vector<TwoColouring> colourings(const GaussDiagram& d, int max_components) {
    if (!two_colourable(d)) return {};
    int n = d.components();
    if (n > max_components)
        throw Error("refusing to enumerate 2^" + std::to_string(n) + " colourings; raise the cap to insist");
    std::vector<TwoColouring> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        TwoColouring c;
        c.bits.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            c.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> (n - 1 - i)) & 1);
        out.push_back(std::move(c));
    }
    return out;
}

TwoColouring dualize(const TwoColouring& c, const std::vector<int>& components) {
    TwoColouring out = c;
    std::vector<std::uint8_t> flip(c.bits.size(), 0);
    for (int i : components) {
        if (i < 0 || i >= c.components())
            throw IndexError("component " + std::to_string(i) + " out of range");
        flip[static_cast<std::size_t>(i)] = 1;
    }
    for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] ^= flip[i];
    return out;
}

TwoColouring global_dual(const TwoColouring& c) {
    TwoColouring out = c;
    for (auto& b : out.bits) b ^= 1;
    return out;
}

std::vector<TwoColouring> generating_set(int n_components) {
    if (n_components < 1) throw IndexError("component count must be at least 1");
    int n = n_components;
    std::vector<TwoColouring> out;
    out.reserve(n <= 62 ? (std::size_t{1} << (n - 1)) : 0);
    // Weight-major, lexicographic within a weight. A vector of weight n/2
    // precedes its complement exactly when its first bit is 0.
    for (int w = 0; w <= n / 2; ++w) {
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            if (std::popcount(x) != w) continue;
            if (n % 2 == 0 && w == n / 2 && (x >> (n - 1)) & 1) continue;
            TwoColouring c;
            c.bits.resize(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i)
                c.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((x >> (n - 1 - i)) & 1);
            out.push_back(std::move(c));
        }
    }
    return out;
}

int incoming_colour(const GaussDiagram& d, const TwoColouring& c, int component, int position) {
    return incoming_colour_impl(d, c, component, position);
}

int incoming_colour(const SimpleGaussDiagram& d, const TwoColouring& c, int component, int position) {
    return incoming_colour_impl(d, c, component, position);
}

}  // namespace linkparity
