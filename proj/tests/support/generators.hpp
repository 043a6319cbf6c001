#pragma once

// Seeded generators and independent oracles shared by the unit and
// acceptance suites. Everything here must stay independent of the library
// code paths it is used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "linkparity/colouring.hpp"
#include "linkparity/diagram.hpp"

namespace linkparity::testing {

// A random diagram: endpoints are dealt to random circles, interleaved at
// random, with random signs and over/under roles. Not filtered for
// degeneracy.
inline GaussDiagram random_diagram(std::mt19937_64& rng, int n_components, int n_chords) {
    struct EndPos {
        int chord;
        Role role;
    };
    std::vector<std::vector<EndPos>> circles(static_cast<std::size_t>(n_components));
    auto draw = [&](std::size_t n) { return static_cast<int>(rng() % n); };

    for (int c = 0; c < n_chords; ++c) {
        bool over_here = (rng() & 1) != 0;
        circles[static_cast<std::size_t>(draw(static_cast<std::size_t>(n_components)))].push_back(
            {c, over_here ? Role::Over : Role::Under});
        circles[static_cast<std::size_t>(draw(static_cast<std::size_t>(n_components)))].push_back(
            {c, over_here ? Role::Under : Role::Over});
    }
    for (auto& circ : circles)
        for (std::size_t i = circ.size(); i > 1; --i)
            std::swap(circ[i - 1], circ[static_cast<std::size_t>(rng() % i)]);

    std::vector<Chord> chords(static_cast<std::size_t>(n_chords));
    for (int c = 0; c < n_chords; ++c) {
        chords[static_cast<std::size_t>(c)].label = c + 1;
        chords[static_cast<std::size_t>(c)].sign = (rng() & 1) ? +1 : -1;
    }
    for (int comp = 0; comp < n_components; ++comp) {
        const auto& circ = circles[static_cast<std::size_t>(comp)];
        for (int pos = 0; pos < static_cast<int>(circ.size()); ++pos) {
            const EndPos& e = circ[static_cast<std::size_t>(pos)];
            Chord& ch = chords[static_cast<std::size_t>(e.chord)];
            (e.role == Role::Over ? ch.over : ch.under) = EndpointRef{comp, pos};
        }
    }
    return GaussDiagram(n_components, std::move(chords));
}

// Rejection-sampled non-degenerate diagram (every circle even).
inline GaussDiagram random_nondegenerate(std::mt19937_64& rng, int n_components, int n_chords) {
    for (;;) {
        GaussDiagram d = random_diagram(rng, n_components, n_chords);
        if (two_colourable(d)) return d;
    }
}

// Brute-force interval colouring: assign one of two colours to every
// interval of every circle, keep the assignments where adjacent intervals
// always differ, and read off the basepoint bits. The library never touches
// per-interval assignments, so this is an independent route.
inline std::vector<std::vector<std::uint8_t>> brute_force_colourings(const GaussDiagram& d) {
    std::vector<int> interval_count(static_cast<std::size_t>(d.components()));
    int total = 0;
    for (int i = 0; i < d.components(); ++i) {
        interval_count[static_cast<std::size_t>(i)] = std::max(d.size(i), 1);
        total += interval_count[static_cast<std::size_t>(i)];
    }

    std::vector<std::vector<std::uint8_t>> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
        bool ok = true;
        int offset = 0;
        for (int i = 0; i < d.components() && ok; ++i) {
            int m = interval_count[static_cast<std::size_t>(i)];
            if (d.size(i) == 0) {
                offset += m;
                continue;  // a single interval, nothing to alternate
            }
            for (int j = 0; j < m; ++j) {
                int here = static_cast<int>((mask >> (offset + j)) & 1);
                int next = static_cast<int>((mask >> (offset + (j + 1) % m)) & 1);
                if (here == next) {
                    ok = false;
                    break;
                }
            }
            offset += m;
        }
        if (!ok) continue;
        std::vector<std::uint8_t> bits;
        int at = 0;
        for (int i = 0; i < d.components(); ++i) {
            bits.push_back(static_cast<std::uint8_t>((mask >> at) & 1));
            at += interval_count[static_cast<std::size_t>(i)];
        }
        found.push_back(std::move(bits));
    }
    return found;
}

}  // namespace linkparity::testing
