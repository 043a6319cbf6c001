#include "linkparity/invariants.hpp"

#include <algorithm>
#include <queue>

namespace linkparity {

long long writhe(const GaussDiagram& d, const TwoColouring& c) {
    ParityAssignment parity = two_colour_parity(d, c);
    long long total = 0;
    for (int i = 0; i < d.chord_count(); ++i)
        if (parity.odd(i)) total += d.chord(i).sign;
    return total;
}

std::vector<long long> two_colour_writhe_enum(const GaussDiagram& d) {
    if (!two_colourable(d)) throw NotTwoColourable("diagram has a degenerate component");
    std::vector<long long> out;
    for (const TwoColouring& c : generating_set(d.components())) out.push_back(writhe(d, c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> two_colour_writhe_fast(const GaussDiagram& d, int max_components) {
    if (!two_colourable(d)) throw NotTwoColourable("diagram has a degenerate component");
    int n = d.components();
    if (n > max_components)
        throw Error("J^2 has 2^" + std::to_string(n - 1) + " entries; raise the cap to insist");

    // One pass against the base colouring (all zeros). A mixed chord between
    // i and j is odd under v exactly when base_odd XOR v_i XOR v_j; so per
    // ordered pair we only need the signed sums of even and odd mixed
    // chords.
    long long j_base = 0;
    std::vector<long long> even_at(static_cast<std::size_t>(n) * n, 0);
    std::vector<long long> odd_at(static_cast<std::size_t>(n) * n, 0);
    for (int idx = 0; idx < d.chord_count(); ++idx) {
        const Chord& ch = d.chord(idx);
        // incoming colours under the base colouring are position parities,
        // so this is the base parity for self and mixed chords alike
        bool base_odd = (ch.over.position & 1) == (ch.under.position & 1);
        if (base_odd) j_base += ch.sign;
        int a = ch.over.component, b = ch.under.component;
        if (a == b) continue;
        auto& table = base_odd ? odd_at : even_at;
        table[static_cast<std::size_t>(a) * n + b] += ch.sign;
        table[static_cast<std::size_t>(b) * n + a] += ch.sign;
    }

    // J_i = sum(C^i even) - sum(C^i odd) + J_base
    std::vector<long long> j1(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        long long delta = 0;
        for (int j = 0; j < n; ++j)
            delta += even_at[static_cast<std::size_t>(i) * n + j] - odd_at[static_cast<std::size_t>(i) * n + j];
        j1[static_cast<std::size_t>(i)] = delta + j_base;
    }

    // J_{i,j} = J_i + J_j + 2 sum(C^i cap C^j odd) - 2 sum(C^i cap C^j even) - J_base
    std::vector<long long> j2pair(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long v = j1[static_cast<std::size_t>(i)] + j1[static_cast<std::size_t>(j)] +
                          2 * odd_at[static_cast<std::size_t>(i) * n + j] -
                          2 * even_at[static_cast<std::size_t>(i) * n + j] - j_base;
            j2pair[static_cast<std::size_t>(i) * n + j] = v;
            j2pair[static_cast<std::size_t>(j) * n + i] = v;
        }

    std::vector<long long> out;
    std::vector<int> support;
    for (const TwoColouring& v : generating_set(n)) {
        support.clear();
        for (int i = 0; i < n; ++i)
            if (v.bits[static_cast<std::size_t>(i)]) support.push_back(i);
        long long m = static_cast<long long>(support.size());
        long long value = 0;
        if (m == 0) {
            value = j_base;
        } else if (m == 1) {
            value = j1[static_cast<std::size_t>(support[0])];
        } else if (m == 2) {
            value = j2pair[static_cast<std::size_t>(support[0]) * n + support[1]];
        } else {
            for (std::size_t k = 0; k < support.size(); ++k)
                for (std::size_t l = k + 1; l < support.size(); ++l)
                    value += j2pair[static_cast<std::size_t>(support[k]) * n + support[l]];
            long long singles = 0;
            for (int s : support) singles += j1[static_cast<std::size_t>(s)];
            value += -(m - 2) * singles + (m - 1) * (m - 2) / 2 * j_base;
        }
        out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long long self_writhe(const GaussDiagram& d) {
    if (!two_colourable(d)) throw NotTwoColourable("diagram has a degenerate component");
    long long total = 0;
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        if (ch.over.component != ch.under.component) continue;
        if ((ch.over.position & 1) == (ch.under.position & 1)) total += ch.sign;
    }
    return total;
}

long long naive_writhe(const GaussDiagram& d) {
    long long total = 0;
    for (int i = 0; i < d.chord_count(); ++i)
        if (!d.is_self(i)) total += d.chord(i).sign;
    return total;
}

std::vector<std::vector<long long>> linking_matrix(const GaussDiagram& d) {
    int n = d.components();
    std::vector<std::vector<long long>> lk(static_cast<std::size_t>(n),
                                           std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        int a = ch.over.component, b = ch.under.component;
        if (a == b) continue;
        lk[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += ch.sign;
        lk[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] += ch.sign;
    }
    return lk;
}

IpWrithe ip_self_writhe(const GaussDiagram& d) {
    ParityAssignment parity = ip_self_parity(d);  // throws OddLinkingNumbers
    IpWrithe out;
    for (int i = 0; i < d.chord_count(); ++i)
        if (parity.in_domain(i) && parity.odd(i)) out.self += d.chord(i).sign;
    long long lk_sum = 0;
    auto lk = linking_matrix(d);
    for (std::size_t i = 0; i < lk.size(); ++i)
        for (std::size_t j = i + 1; j < lk.size(); ++j) lk_sum += lk[i][j];
    out.candidates = {out.self, out.self + lk_sum};
    return out;
}

long long smoothing_height(const GaussDiagram& d, const TwoColouring& c) {
    ParityAssignment parity = two_colour_parity(d, c);
    long long one_resolutions = 0;
    long long negatives = 0;
    for (int i = 0; i < d.chord_count(); ++i) {
        bool positive = d.chord(i).sign > 0;
        if (!positive) ++negatives;
        // resolution table: (+, odd) -> 1, (+, even) -> 0, (-, odd) -> 0, (-, even) -> 1
        if (positive == parity.odd(i)) ++one_resolutions;
    }
    return one_resolutions - negatives;
}

std::optional<TwoColouring> chequerboard_certificate(const GaussDiagram& d) {
    if (!two_colourable(d)) return std::nullopt;
    int n = d.components();

    // Self chords have colouring-independent parity; any odd one rules out
    // certification.
    struct Edge {
        int to;
        std::uint8_t need;  // required v_i XOR v_j
    };
    std::vector<std::vector<Edge>> graph(static_cast<std::size_t>(n));
    for (int i = 0; i < d.chord_count(); ++i) {
        const Chord& ch = d.chord(i);
        bool base_odd = (ch.over.position & 1) == (ch.under.position & 1);
        int a = ch.over.component, b = ch.under.component;
        if (a == b) {
            if (base_odd) return std::nullopt;
            continue;
        }
        // odd under v iff base_odd XOR v_a XOR v_b; evenness forces
        // v_a XOR v_b = base_odd
        std::uint8_t need = base_odd ? 1 : 0;
        graph[static_cast<std::size_t>(a)].push_back({b, need});
        graph[static_cast<std::size_t>(b)].push_back({a, need});
    }

    TwoColouring cert;
    cert.bits.assign(static_cast<std::size_t>(n), 0);
    std::vector<std::int8_t> assigned(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (assigned[static_cast<std::size_t>(start)] >= 0) continue;
        assigned[static_cast<std::size_t>(start)] = 0;
        std::queue<int> frontier;
        frontier.push(start);
        while (!frontier.empty()) {
            int at = frontier.front();
            frontier.pop();
            for (const Edge& e : graph[static_cast<std::size_t>(at)]) {
                std::int8_t want =
                    static_cast<std::int8_t>(assigned[static_cast<std::size_t>(at)] ^ e.need);
                if (assigned[static_cast<std::size_t>(e.to)] < 0) {
                    assigned[static_cast<std::size_t>(e.to)] = want;
                    frontier.push(e.to);
                } else if (assigned[static_cast<std::size_t>(e.to)] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int i = 0; i < n; ++i) cert.bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(assigned[static_cast<std::size_t>(i)]);
    return cert;
}

WritheProfile report(const GaussDiagram& d, J2Mode mode, int max_components) {
    WritheProfile out;
    out.components = d.components();
    out.chords = d.chord_count();
    out.two_colourable = two_colourable(d);
    out.naive = naive_writhe(d);
    out.lk = linking_matrix(d);

    out.compatible = true;
    for (const auto& row : out.lk) {
        long long sum = 0;
        for (long long v : row) sum += v;
        if (sum != 0) out.compatible = false;
    }

    if (out.two_colourable) {
        out.j2 = mode == J2Mode::Enum ? two_colour_writhe_enum(d)
                                      : two_colour_writhe_fast(d, max_components);
        if (mode == J2Mode::Check && *out.j2 != two_colour_writhe_enum(d))
            throw Error("fast and enumerated J^2 disagree; this is a bug");
        out.j2_self = self_writhe(d);

        bool nonzero = std::any_of(out.j2->begin(), out.j2->end(), [](long long v) { return v != 0; });
        out.slice_obstructed = nonzero;
        std::vector<long long> negated(out.j2->rbegin(), out.j2->rend());
        for (long long& v : negated) v = -v;
        out.amphichiral_obstructed = negated != *out.j2;
        out.cb_concordance_obstructed =
            !std::binary_search(out.j2->begin(), out.j2->end(), 0LL);

        try {
            IpWrithe ip = ip_self_writhe(d);
            out.ip_self = ip.self;
            out.ip_candidates = ip.candidates;
        } catch (const OddLinkingNumbers&) {
        }
    }

    out.chequerboard_certified = chequerboard_certificate(d).has_value();
    return out;
}

}  // namespace linkparity
