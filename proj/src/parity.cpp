#include "linkparity/parity.hpp"

#include <algorithm>

namespace linkparity {

bool ParityAssignment::odd(int chord_index) const {
    std::int8_t v = value.at(static_cast<std::size_t>(chord_index));
    if (v < 0) throw IndexError("chord " + std::to_string(chord_index) + " is outside the parity's domain");
    return v == 1;
}

namespace {

void require_colouring(int diagram_components, bool colourable, const TwoColouring& c) {
    if (!colourable) throw NotTwoColourable("diagram has a degenerate component");
    if (c.components() != diagram_components)
        throw IndexError("colouring has " + std::to_string(c.components()) + " bits for " +
                         std::to_string(diagram_components) + " components");
}

}  // namespace

ParityAssignment two_colour_parity(const GaussDiagram& d, const TwoColouring& c) {
    require_colouring(d.components(), two_colourable(d), c);
    ParityAssignment out;
    out.scheme = ParityScheme::TwoColour;
    out.colouring = c;
    out.value.resize(static_cast<std::size_t>(d.chord_count()));
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        int colour_over = c.bits[static_cast<std::size_t>(ch.over.component)] ^ (ch.over.position & 1);
        int colour_under = c.bits[static_cast<std::size_t>(ch.under.component)] ^ (ch.under.position & 1);
        out.value[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(colour_over == colour_under ? 1 : 0);
    }
    return out;
}

ParityAssignment gaussian_parity(const GaussDiagram& d) {
    if (d.components() != 1)
        throw NotAKnot("Gaussian parity needs a 1-component diagram, got " +
                       std::to_string(d.components()) + " components");
    ParityAssignment out;
    out.scheme = ParityScheme::Gaussian;
    out.value.resize(static_cast<std::size_t>(d.chord_count()));
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        // An odd count of endpoints strictly between the two visits means
        // the positions have equal parity.
        out.value[static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>((ch.over.position & 1) == (ch.under.position & 1) ? 1 : 0);
    }
    return out;
}

ParityAssignment naive_parity(const GaussDiagram& d) {
    ParityAssignment out;
    out.scheme = ParityScheme::Naive;
    out.value.resize(static_cast<std::size_t>(d.chord_count()));
    for (int i = 0; i < d.chord_count(); ++i)
        out.value[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(d.is_self(i) ? 0 : 1);
    return out;
}

ParityAssignment ip_self_parity(const GaussDiagram& d) {
    // Pairwise linking numbers are even iff the mixed-crossing counts are.
    int n = d.components();
    std::vector<int> mixed_count(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        if (ch.over.component == ch.under.component) continue;
        mixed_count[static_cast<std::size_t>(ch.over.component) * n + ch.under.component]++;
        mixed_count[static_cast<std::size_t>(ch.under.component) * n + ch.over.component]++;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mixed_count[static_cast<std::size_t>(i) * n + j] % 2 != 0)
                throw OddLinkingNumbers("lk of components " + std::to_string(i) + " and " +
                                        std::to_string(j) + " is odd");

    ParityAssignment out;
    out.scheme = ParityScheme::IPSelf;
    out.value.resize(static_cast<std::size_t>(d.chord_count()));
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        if (ch.over.component != ch.under.component) {
            out.value[static_cast<std::size_t>(i)] = -1;
            continue;
        }
        out.value[static_cast<std::size_t>(i)] =
            static_cast<std::int8_t>((ch.over.position & 1) == (ch.under.position & 1) ? 1 : 0);
    }
    return out;
}

GaussDiagram project(const GaussDiagram& d, const TwoColouring& c) {
    ParityAssignment parity = two_colour_parity(d, c);

    // New position of each surviving endpoint: old position minus the number
    // of deleted endpoints before it on its circle.
    std::vector<std::vector<int>> deleted_before(static_cast<std::size_t>(d.components()));
    for (int comp = 0; comp < d.components(); ++comp) {
        const auto& circ = d.circle(comp);
        auto& acc = deleted_before[static_cast<std::size_t>(comp)];
        acc.resize(circ.size() + 1, 0);
        for (std::size_t p = 0; p < circ.size(); ++p)
            acc[p + 1] = acc[p] + (parity.odd(circ[p].chord) ? 1 : 0);
    }

    std::vector<Chord> kept;
    for (int i = 0; i < d.chord_count(); ++i) {
        if (parity.odd(i)) continue;
        Chord ch = d.chord(i);
        for (Role r : {Role::Over, Role::Under}) {
            EndpointRef& e = ch.end(r);
            e.position -= deleted_before[static_cast<std::size_t>(e.component)][static_cast<std::size_t>(e.position)];
        }
        kept.push_back(ch);
    }
    return GaussDiagram(d.components(), std::move(kept));
}

ParityAssignment free_two_colour_parity(const SimpleGaussDiagram& s, const TwoColouring& c) {
    require_colouring(s.components(), two_colourable(s), c);
    ParityAssignment out;
    out.scheme = ParityScheme::FreeTwoColour;
    out.colouring = c;
    out.value.resize(static_cast<std::size_t>(s.chord_count()));
    for (int i = 0; i < s.chord_count(); ++i) {
        const SimpleChord& ch = s.chords()[static_cast<std::size_t>(i)];
        int colour_a = c.bits[static_cast<std::size_t>(ch.a.component)] ^ (ch.a.position & 1);
        int colour_b = c.bits[static_cast<std::size_t>(ch.b.component)] ^ (ch.b.position & 1);
        out.value[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(colour_a == colour_b ? 1 : 0);
    }
    return out;
}

}  // namespace linkparity
