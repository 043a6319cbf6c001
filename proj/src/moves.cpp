#include "linkparity/moves.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

namespace linkparity {

namespace {

struct Token {
    int label = 0;
    Role role = Role::Over;
};

std::vector<std::vector<Token>> to_tokens(const GaussDiagram& d) {
    std::vector<std::vector<Token>> circles(static_cast<std::size_t>(d.components()));
    for (int comp = 0; comp < d.components(); ++comp) {
        auto& out = circles[static_cast<std::size_t>(comp)];
        out.reserve(static_cast<std::size_t>(d.size(comp)));
        for (const Slot& s : d.circle(comp)) out.push_back({d.chord(s.chord).label, s.role});
    }
    return circles;
}

GaussDiagram from_tokens(const std::vector<std::vector<Token>>& circles,
                         const std::unordered_map<int, int>& signs) {
    struct Partial {
        EndpointRef over{-1, -1};
        EndpointRef under{-1, -1};
    };
    std::unordered_map<int, Partial> partial;
    std::vector<int> order;
    for (int comp = 0; comp < static_cast<int>(circles.size()); ++comp) {
        const auto& circ = circles[static_cast<std::size_t>(comp)];
        for (int pos = 0; pos < static_cast<int>(circ.size()); ++pos) {
            const Token& t = circ[static_cast<std::size_t>(pos)];
            auto [it, inserted] = partial.try_emplace(t.label);
            if (inserted) order.push_back(t.label);
            EndpointRef& e = t.role == Role::Over ? it->second.over : it->second.under;
            e = EndpointRef{comp, pos};
        }
    }
    std::vector<Chord> chords;
    chords.reserve(order.size());
    for (int label : order)
        chords.push_back(Chord{label, signs.at(label), partial.at(label).over, partial.at(label).under});
    return GaussDiagram(static_cast<int>(circles.size()), std::move(chords));
}

std::unordered_map<int, int> sign_table(const GaussDiagram& d) {
    std::unordered_map<int, int> signs;
    for (const Chord& c : d.chords()) signs.emplace(c.label, c.sign);
    return signs;
}

int gap_count(const GaussDiagram& d, int comp) { return std::max(d.size(comp), 1); }

// Cyclic adjacency: q directly follows p.
bool follows(int p, int q, int len) { return len >= 2 && (p + 1) % len == q; }

// The canonical start of an adjacent endpoint pair of one chord, or -1.
int r1_pair_start(const GaussDiagram& d, int chord) {
    const Chord& c = d.chord(chord);
    if (c.over.component != c.under.component) return -1;
    int len = d.size(c.over.component);
    int p = c.over.position, q = c.under.position;
    if (follows(p, q, len) && (p < q || !follows(q, p, len))) return p;
    if (follows(q, p, len)) return q;
    return -1;
}

struct AdjacentPair {
    int component = 0;
    int position = 0;  // pair occupies (position, position+1 mod len)
    Slot first;
    Slot second;
};

std::vector<AdjacentPair> adjacent_pairs(const GaussDiagram& d) {
    std::vector<AdjacentPair> out;
    for (int comp = 0; comp < d.components(); ++comp) {
        int len = d.size(comp);
        if (len < 2) continue;
        for (int p = 0; p < len; ++p) {
            const Slot& s1 = d.slot(comp, p);
            const Slot& s2 = d.slot(comp, (p + 1) % len);
            if (s1.chord == s2.chord) continue;
            out.push_back({comp, p, s1, s2});
        }
    }
    return out;
}

bool pair_positions_disjoint(const GaussDiagram& d, const PairSite& a, const PairSite& b) {
    if (a.component != b.component) return true;
    int len = d.size(a.component);
    int a1 = a.position, a2 = (a.position + 1) % len;
    int b1 = b.position, b2 = (b.position + 1) % len;
    return a1 != b1 && a1 != b2 && a2 != b1 && a2 != b2;
}

// One admissible R3 local pattern: the reading direction of each arc
// (eps = +1 when the over/over arc reads (a, b), the mixed arc (c, a) and
// the under/under arc (c, b)) together with the three chord signs.
struct R3Pattern {
    int eps_t, eps_m, eps_b;
    int sign_a, sign_b, sign_c;

    friend bool operator==(const R3Pattern&, const R3Pattern&) = default;
};

// The catalogue of admissible patterns, one row per planar triangle: the
// orbit of the strand hierarchy top > middle > bottom under strand
// reorientation (8 combinations) and reflection (which negates all three
// signs and is a second class of rows). Adjusting the catalogue means
// editing this table only.
const std::vector<R3Pattern>& r3_catalogue() {
    static const std::vector<R3Pattern> table = [] {
        std::vector<R3Pattern> rows;
        for (int eps_t : {+1, -1})
            for (int eps_m : {+1, -1})
                for (int eps_b : {+1, -1}) {
                    rows.push_back({eps_t, eps_m, eps_b,  //
                                    eps_t * eps_m, eps_t * eps_b, -eps_m * eps_b});
                    rows.push_back({eps_t, eps_m, eps_b,  //
                                    -eps_t * eps_m, -eps_t * eps_b, eps_m * eps_b});
                }
        return rows;
    }();
    return table;
}

// Matches a pair triple against the catalogue.
std::optional<R3Rewrite> classify_r3(const GaussDiagram& d, std::array<PairSite, 3> sites) {
    std::array<AdjacentPair, 3> pairs;
    for (int i = 0; i < 3; ++i) {
        const PairSite& s = sites[static_cast<std::size_t>(i)];
        if (s.component < 0 || s.component >= d.components()) return std::nullopt;
        int len = d.size(s.component);
        if (len < 2 || s.position < 0 || s.position >= len) return std::nullopt;
        const Slot& s1 = d.slot(s.component, s.position);
        const Slot& s2 = d.slot(s.component, (s.position + 1) % len);
        if (s1.chord == s2.chord) return std::nullopt;
        pairs[static_cast<std::size_t>(i)] = {s.component, s.position, s1, s2};
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!pair_positions_disjoint(d, sites[static_cast<std::size_t>(i)], sites[static_cast<std::size_t>(j)]))
                return std::nullopt;

    auto pair_type = [](const AdjacentPair& p) {
        int overs = (p.first.role == Role::Over ? 1 : 0) + (p.second.role == Role::Over ? 1 : 0);
        return overs;  // 2 = over/over, 0 = under/under, 1 = mixed
    };
    const AdjacentPair* top = nullptr;
    const AdjacentPair* middle = nullptr;
    const AdjacentPair* bottom = nullptr;
    int top_i = -1, middle_i = -1, bottom_i = -1;
    for (int i = 0; i < 3; ++i) {
        const AdjacentPair& p = pairs[static_cast<std::size_t>(i)];
        switch (pair_type(p)) {
            case 2: if (top) return std::nullopt; top = &p; top_i = i; break;
            case 1: if (middle) return std::nullopt; middle = &p; middle_i = i; break;
            default: if (bottom) return std::nullopt; bottom = &p; bottom_i = i; break;
        }
    }
    if (!top || !middle || !bottom) return std::nullopt;

    // Chords: a joins top and middle, b joins top and bottom, c joins middle
    // and bottom. Six distinct endpoints of exactly three chords.
    auto chord_set = [](const AdjacentPair& p) { return std::array<int, 2>{p.first.chord, p.second.chord}; };
    auto in_pair = [&](const AdjacentPair& p, int chord) {
        return p.first.chord == chord || p.second.chord == chord;
    };
    int a = -1, b = -1, c = -1;
    for (int chord : chord_set(*top)) {
        if (in_pair(*middle, chord)) a = chord;
        if (in_pair(*bottom, chord)) b = chord;
    }
    for (int chord : chord_set(*middle))
        if (in_pair(*bottom, chord)) c = chord;
    if (a < 0 || b < 0 || c < 0) return std::nullopt;
    if (a == b || a == c || b == c) return std::nullopt;
    if (in_pair(*top, c) || in_pair(*middle, b) || in_pair(*bottom, a)) return std::nullopt;

    R3Pattern observed{top->first.chord == a ? +1 : -1, middle->first.chord == c ? +1 : -1,
                       bottom->first.chord == c ? +1 : -1, d.chord(a).sign, d.chord(b).sign,
                       d.chord(c).sign};
    const auto& table = r3_catalogue();
    if (std::find(table.begin(), table.end(), observed) == table.end()) return std::nullopt;

    R3Rewrite out;
    out.pairs = {sites[static_cast<std::size_t>(top_i)], sites[static_cast<std::size_t>(middle_i)],
                 sites[static_cast<std::size_t>(bottom_i)]};
    out.chords = {a, b, c};
    return out;
}

void check_component(const GaussDiagram& d, int comp) {
    if (comp < 0 || comp >= d.components())
        throw IndexError("component " + std::to_string(comp) + " out of range");
}

void check_gap(const GaussDiagram& d, int comp, int gap) {
    check_component(d, comp);
    if (gap < 0 || gap >= gap_count(d, comp))
        throw IndexError("gap " + std::to_string(gap) + " out of range");
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1) throw IndexError("sign must be +1 or -1");
}

// Colour re-anchoring after removing chunks of endpoints (even-sized blocks
// of cyclically consecutive positions). The interval entering the first
// surviving endpoint keeps its colour; with no survivors the circle keeps
// the colour of the interval entering the first chunk.
std::uint8_t delete_colour_xor(int len, std::vector<int> deleted, int first_chunk_start) {
    std::sort(deleted.begin(), deleted.end());
    if (len == static_cast<int>(deleted.size()))
        return static_cast<std::uint8_t>(first_chunk_start & 1);
    // First surviving position and how many deleted positions precede it;
    // deleted is sorted and duplicate-free, so scan for the first gap.
    int s = 0;
    std::size_t k = 0;
    while (k < deleted.size() && deleted[k] == s) {
        ++s;
        ++k;
    }
    int s_new = s - static_cast<int>(k);
    return static_cast<std::uint8_t>((s ^ s_new) & 1);
}

}  // namespace

std::string describe(const MoveKind& kind) {
    std::ostringstream out;
    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, R1Insert>) {
                out << "R1 insert at component " << m.component << " gap " << m.gap << " sign "
                    << (m.sign > 0 ? "+" : "-") << (m.over_first ? " over-first" : " under-first");
            } else if constexpr (std::is_same_v<T, R1Delete>) {
                out << "R1 delete chord " << m.chord;
            } else if constexpr (std::is_same_v<T, R2Insert>) {
                out << "R2 insert at (" << m.component1 << "," << m.gap1 << ") and (" << m.component2
                    << "," << m.gap2 << ")" << (m.reversed ? " reversed" : " parallel") << " sign "
                    << (m.sign > 0 ? "+" : "-");
            } else if constexpr (std::is_same_v<T, R2Delete>) {
                out << "R2 delete chords " << m.chord_a << "," << m.chord_b;
            } else {
                out << "R3 at pairs";
                for (const PairSite& p : m.pairs) out << " (" << p.component << "," << p.position << ")";
                out << " chords " << m.chords[0] << "," << m.chords[1] << "," << m.chords[2];
            }
        },
        kind);
    return out.str();
}

std::vector<MoveSite> available_moves(const GaussDiagram& d, const MoveFilter& filter) {
    std::vector<MoveSite> out;
    std::uint64_t fp = d.fingerprint();
    auto add = [&](MoveKind kind) { out.push_back(MoveSite{std::move(kind), fp}); };

    if (filter.r1_delete)
        for (int i = 0; i < d.chord_count(); ++i)
            if (r1_pair_start(d, i) >= 0) add(R1Delete{i});

    if (filter.r2_delete) {
        auto adjacent = [&](const EndpointRef& a, const EndpointRef& b) {
            if (a.component != b.component) return false;
            int len = d.size(a.component);
            return follows(a.position, b.position, len) || follows(b.position, a.position, len);
        };
        for (int i = 0; i < d.chord_count(); ++i)
            for (int j = i + 1; j < d.chord_count(); ++j) {
                const Chord& x = d.chord(i);
                const Chord& y = d.chord(j);
                if (x.sign == y.sign) continue;
                if (adjacent(x.over, y.over) && adjacent(x.under, y.under)) add(R2Delete{i, j});
            }
    }

    if (filter.r3) {
        // Index adjacent pairs by the unordered chord pair they join, then
        // assemble triples through their two smallest chords.
        std::map<std::pair<int, int>, std::vector<PairSite>> by_chords;
        for (const AdjacentPair& p : adjacent_pairs(d)) {
            auto key = std::minmax(p.first.chord, p.second.chord);
            by_chords[{key.first, key.second}].push_back(PairSite{p.component, p.position});
        }
        for (const auto& [key_ab, sites_ab] : by_chords) {
            auto [x, y] = key_ab;
            for (int z = y + 1; z < d.chord_count(); ++z) {
                auto it_xz = by_chords.find({x, z});
                auto it_yz = by_chords.find({y, z});
                if (it_xz == by_chords.end() || it_yz == by_chords.end()) continue;
                for (const PairSite& p1 : sites_ab)
                    for (const PairSite& p2 : it_xz->second)
                        for (const PairSite& p3 : it_yz->second)
                            if (auto rewrite = classify_r3(d, {p1, p2, p3})) add(*rewrite);
            }
        }
    }

    if (filter.r1_insert)
        for (int comp = 0; comp < d.components(); ++comp)
            for (int gap = 0; gap < gap_count(d, comp); ++gap)
                for (int sign : {+1, -1})
                    for (bool over_first : {true, false}) add(R1Insert{comp, gap, sign, over_first});

    if (filter.r2_insert)
        for (int c1 = 0; c1 < d.components(); ++c1)
            for (int g1 = 0; g1 < gap_count(d, c1); ++g1)
                for (int c2 = 0; c2 < d.components(); ++c2)
                    for (int g2 = 0; g2 < gap_count(d, c2); ++g2)
                        for (bool reversed : {true, false})
                            for (int sign : {+1, -1})
                                add(R2Insert{c1, g1, c2, g2, reversed, sign});

    return out;
}

ApplyResult apply(const GaussDiagram& d, const MoveSite& site) {
    if (site.fingerprint != d.fingerprint())
        throw StaleSite("move site does not belong to this diagram");

    auto circles = to_tokens(d);
    auto signs = sign_table(d);
    std::vector<std::uint8_t> colour_xor(static_cast<std::size_t>(d.components()), 0);
    std::vector<int> created_labels;
    int next_label = d.max_label();

    auto insert_tokens = [&](int comp, int gap, std::vector<Token> block) {
        auto& circ = circles[static_cast<std::size_t>(comp)];
        circ.insert(circ.begin() + gap, block.begin(), block.end());
    };

    // Removes the listed positions from one circle and re-anchors its
    // colouring; chunk_start is the canonical first position of the move's
    // local region on this circle.
    auto remove_positions = [&](int comp, std::vector<int> positions, int chunk_start) {
        auto& circ = circles[static_cast<std::size_t>(comp)];
        colour_xor[static_cast<std::size_t>(comp)] =
            delete_colour_xor(static_cast<int>(circ.size()), positions, chunk_start);
        std::sort(positions.begin(), positions.end(), std::greater<int>());
        for (int p : positions) circ.erase(circ.begin() + p);
    };

    std::visit(
        [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, R1Insert>) {
                check_gap(d, m.component, m.gap);
                check_sign(m.sign);
                int label = ++next_label;
                created_labels.push_back(label);
                signs.emplace(label, m.sign);
                Token first{label, m.over_first ? Role::Over : Role::Under};
                Token second{label, m.over_first ? Role::Under : Role::Over};
                insert_tokens(m.component, m.gap, {first, second});
            } else if constexpr (std::is_same_v<T, R1Delete>) {
                if (m.chord < 0 || m.chord >= d.chord_count())
                    throw IndexError("chord index " + std::to_string(m.chord) + " out of range");
                int start = r1_pair_start(d, m.chord);
                if (start < 0) throw IndexError("chord " + std::to_string(m.chord) + " is not a kink");
                const Chord& c = d.chord(m.chord);
                int comp = c.over.component;
                remove_positions(comp, {c.over.position, c.under.position}, start);
            } else if constexpr (std::is_same_v<T, R2Insert>) {
                check_gap(d, m.component1, m.gap1);
                check_gap(d, m.component2, m.gap2);
                check_sign(m.sign);
                int label_x = ++next_label;
                int label_y = ++next_label;
                created_labels = {label_x, label_y};
                signs.emplace(label_x, m.sign);
                signs.emplace(label_y, -m.sign);
                std::vector<Token> over_block{{label_x, Role::Over}, {label_y, Role::Over}};
                std::vector<Token> under_block = m.reversed
                                                     ? std::vector<Token>{{label_y, Role::Under}, {label_x, Role::Under}}
                                                     : std::vector<Token>{{label_x, Role::Under}, {label_y, Role::Under}};
                if (m.component1 == m.component2 && m.gap1 == m.gap2) {
                    std::vector<Token> block = over_block;
                    block.insert(block.end(), under_block.begin(), under_block.end());
                    insert_tokens(m.component1, m.gap1, block);
                } else if (m.component1 == m.component2) {
                    // Insert at the larger gap first so the smaller index
                    // still refers to the original circle.
                    if (m.gap1 > m.gap2) {
                        insert_tokens(m.component1, m.gap1, over_block);
                        insert_tokens(m.component2, m.gap2, under_block);
                    } else {
                        insert_tokens(m.component2, m.gap2, under_block);
                        insert_tokens(m.component1, m.gap1, over_block);
                    }
                } else {
                    insert_tokens(m.component1, m.gap1, over_block);
                    insert_tokens(m.component2, m.gap2, under_block);
                }
            } else if constexpr (std::is_same_v<T, R2Delete>) {
                if (m.chord_a < 0 || m.chord_a >= d.chord_count() || m.chord_b < 0 ||
                    m.chord_b >= d.chord_count() || m.chord_a == m.chord_b)
                    throw IndexError("bad chord pair for R2 delete");
                const Chord& x = d.chord(m.chord_a);
                const Chord& y = d.chord(m.chord_b);
                if (x.sign == y.sign) throw IndexError("R2 pair must have opposite signs");
                auto pair_start = [&](const EndpointRef& a, const EndpointRef& b) -> int {
                    if (a.component != b.component) return -1;
                    int len = d.size(a.component);
                    if (follows(a.position, b.position, len) &&
                        (a.position < b.position || !follows(b.position, a.position, len)))
                        return a.position;
                    if (follows(b.position, a.position, len)) return b.position;
                    return -1;
                };
                int over_start = pair_start(x.over, y.over);
                int under_start = pair_start(x.under, y.under);
                if (over_start < 0 || under_start < 0)
                    throw IndexError("chords " + std::to_string(m.chord_a) + "," +
                                     std::to_string(m.chord_b) + " do not form an R2 pair");
                int over_comp = x.over.component;
                int under_comp = x.under.component;
                if (over_comp == under_comp) {
                    remove_positions(over_comp,
                                     {x.over.position, y.over.position, x.under.position, y.under.position},
                                     std::min(over_start, under_start));
                } else {
                    remove_positions(over_comp, {x.over.position, y.over.position}, over_start);
                    remove_positions(under_comp, {x.under.position, y.under.position}, under_start);
                }
            } else {
                static_assert(std::is_same_v<T, R3Rewrite>);
                auto classified = classify_r3(d, m.pairs);
                if (!classified || classified->chords != m.chords)
                    throw IndexError("pairs do not form an admissible R3 site");
                for (const PairSite& p : m.pairs) {
                    auto& circ = circles[static_cast<std::size_t>(p.component)];
                    int len = static_cast<int>(circ.size());
                    std::swap(circ[static_cast<std::size_t>(p.position)],
                              circ[static_cast<std::size_t>((p.position + 1) % len)]);
                }
            }
        },
        site.kind);

    ApplyResult result{from_tokens(circles, signs), {}, {}, std::move(colour_xor)};
    result.chord_map.resize(static_cast<std::size_t>(d.chord_count()), -1);
    for (int i = 0; i < d.chord_count(); ++i)
        result.chord_map[static_cast<std::size_t>(i)] = result.diagram.index_of_label(d.chord(i).label);
    for (int label : created_labels) result.created.push_back(result.diagram.index_of_label(label));
    return result;
}

TwoColouring transport(const ApplyResult& result, const TwoColouring& before) {
    if (static_cast<std::size_t>(before.components()) != result.colour_xor.size())
        throw IndexError("colouring size does not match the move's diagram");
    TwoColouring after = before;
    for (std::size_t i = 0; i < after.bits.size(); ++i) after.bits[i] ^= result.colour_xor[i];
    return after;
}

namespace {

class Walker {
public:
    Walker(std::uint64_t seed, int max_chords) : rng_(seed), max_chords_(max_chords) {}

    MoveSite step(const GaussDiagram& d) {
        std::vector<MoveSite> shrinking = available_moves(d, MoveFilter::deletions_and_r3());
        bool insert;
        if (shrinking.empty())
            insert = true;
        else if (d.chord_count() >= max_chords_)
            insert = false;
        else
            insert = uniform() < 0.6 * (1.0 - static_cast<double>(d.chord_count()) / max_chords_);

        if (!insert) return shrinking[static_cast<std::size_t>(draw(shrinking.size()))];

        std::uint64_t fp = d.fingerprint();
        bool use_r2 = d.chord_count() + 2 <= max_chords_ && coin();
        if (use_r2) {
            auto [c1, g1] = random_gap(d);
            auto [c2, g2] = random_gap(d);
            return MoveSite{R2Insert{c1, g1, c2, g2, coin(), coin() ? +1 : -1}, fp};
        }
        auto [c, g] = random_gap(d);
        return MoveSite{R1Insert{c, g, coin() ? +1 : -1, coin()}, fp};
    }

private:
    std::mt19937_64 rng_;
    int max_chords_;

    std::uint64_t draw(std::size_t n) { return rng_() % n; }
    bool coin() { return (rng_() & 1) != 0; }
    double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
    std::pair<int, int> random_gap(const GaussDiagram& d) {
        int comp = static_cast<int>(draw(static_cast<std::size_t>(d.components())));
        int gap = static_cast<int>(draw(static_cast<std::size_t>(gap_count(d, comp))));
        return {comp, gap};
    }
};

}  // namespace

std::vector<GaussDiagram> random_walk(const GaussDiagram& d, int steps, std::uint64_t seed,
                                      int max_chords) {
    if (steps < 0) throw IndexError("step count must be non-negative");
    Walker walker(seed, max_chords);
    std::vector<GaussDiagram> trail{d};
    trail.reserve(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i < steps; ++i)
        trail.push_back(apply(trail.back(), walker.step(trail.back())).diagram);
    return trail;
}

namespace {

int odd_count(const ParityAssignment& parity, const std::array<int, 3>& chords) {
    int n = 0;
    for (int c : chords)
        if (parity.in_domain(c) && parity.odd(c)) ++n;
    return n;
}

}  // namespace

AxiomReport verify_parity_axioms(const GaussDiagram& d, int steps, std::uint64_t seed,
                                 int max_chords, const ParityFn& parity,
                                 bool require_strong) {
    if (!two_colourable(d)) throw NotTwoColourable("diagram has a degenerate component");
    AxiomReport report;
    Walker walker(seed, max_chords);
    std::vector<TwoColouring> gen = generating_set(d.components());
    GaussDiagram current = d;

    auto fail = [&](const GaussDiagram& before, const MoveKind& kind, const TwoColouring& c,
                    int axiom, std::string detail) {
        report.pass = false;
        report.witness =
            AxiomWitness{serialize(before), describe(kind), c.to_string(), axiom, std::move(detail)};
    };

    for (int step = 0; step < steps && report.pass; ++step) {
        MoveSite site = walker.step(current);
        ApplyResult res = apply(current, site);
        std::vector<MoveSite> r3_sites = available_moves(current, {false, false, false, false, true});
        report.r3_sites_checked += static_cast<long long>(r3_sites.size()) *
                                   static_cast<long long>(gen.size());

        for (const TwoColouring& c : gen) {
            ParityAssignment before = parity(current, c);
            ParityAssignment after = parity(res.diagram, transport(res, c));
            ++report.colourings_checked;

            // Axiom 0: untouched chords keep their parity.
            for (int i = 0; i < current.chord_count() && report.pass; ++i) {
                int j = res.chord_map[static_cast<std::size_t>(i)];
                if (j < 0) continue;
                if (before.value[static_cast<std::size_t>(i)] != after.value[static_cast<std::size_t>(j)])
                    fail(current, site.kind, c, 0,
                         "chord " + std::to_string(current.chord(i).label) + " changed parity");
            }
            if (!report.pass) break;

            // Axioms 1-3 for the move itself.
            if (const auto* r1d = std::get_if<R1Delete>(&site.kind)) {
                if (before.in_domain(r1d->chord) && before.odd(r1d->chord))
                    fail(current, site.kind, c, 1, "eliminated R1 chord is odd");
            } else if (std::holds_alternative<R1Insert>(site.kind)) {
                int chord = res.created.at(0);
                if (after.in_domain(chord) && after.odd(chord))
                    fail(current, site.kind, c, 1, "inserted R1 chord is odd");
            } else if (const auto* r2d = std::get_if<R2Delete>(&site.kind)) {
                if (before.value[static_cast<std::size_t>(r2d->chord_a)] !=
                    before.value[static_cast<std::size_t>(r2d->chord_b)])
                    fail(current, site.kind, c, 2, "eliminated R2 pair has unequal parities");
            } else if (std::holds_alternative<R2Insert>(site.kind)) {
                if (after.value[static_cast<std::size_t>(res.created.at(0))] !=
                    after.value[static_cast<std::size_t>(res.created.at(1))])
                    fail(current, site.kind, c, 2, "inserted R2 pair has unequal parities");
            } else if (const auto* r3 = std::get_if<R3Rewrite>(&site.kind)) {
                int odd = odd_count(before, r3->chords);
                if (odd == 1 || (require_strong && odd == 3))
                    fail(current, site.kind, c, 3, std::to_string(odd) + " odd chords in R3 triple");
                for (int chord : r3->chords) {
                    int j = res.chord_map[static_cast<std::size_t>(chord)];
                    if (before.value[static_cast<std::size_t>(chord)] != after.value[static_cast<std::size_t>(j)])
                        fail(current, site.kind, c, 3, "R3 changed the parity of chord " +
                                                           std::to_string(current.chord(chord).label));
                }
            }
            if (!report.pass) break;

            // Strong-parity screening across every R3 site of this diagram.
            for (const MoveSite& r3_site : r3_sites) {
                const auto& rewrite = std::get<R3Rewrite>(r3_site.kind);
                int odd = odd_count(before, rewrite.chords);
                if (odd == 3) {
                    ++report.r3_all_odd;
                    if (require_strong) {
                        fail(current, r3_site.kind, c, 3, "all-odd R3 triple");
                        break;
                    }
                }
                if (odd == 1) {
                    fail(current, r3_site.kind, c, 3, "exactly one odd chord in R3 triple");
                    break;
                }
            }
            if (!report.pass) break;
        }

        current = std::move(res.diagram);
        ++report.steps;
    }
    return report;
}

AxiomReport verify_parity_axioms(const GaussDiagram& d, int steps, std::uint64_t seed,
                                 int max_chords) {
    return verify_parity_axioms(
        d, steps, seed, max_chords,
        [](const GaussDiagram& diagram, const TwoColouring& c) { return two_colour_parity(diagram, c); },
        true);
}

}  // namespace linkparity
