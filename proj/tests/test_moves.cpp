#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "linkparity/invariants.hpp"
#include "linkparity/moves.hpp"
#include "support/generators.hpp"

using namespace linkparity;

namespace {

const char* kTrefoil = "O1+ O2+ U1+ U2+";
const char* kHopf = "O1+ U2+ / O2+ U1+";

// One R3 triangle spread over three circles, and the same triangle on one
// circle; the single-circle form admits exactly one orientation per arc.
const char* kTriangle3 = "O1+ O2+ / O3- U1+ / U3- U2+";
const char* kTriangle1 = "O1+ O2+ O3- U1+ U3- U2+";
const char* kNoTriangle = "O1+ O2+ O3+ U1+ U3+ U2+";

template <typename Kind>
int count_kind(const std::vector<MoveSite>& sites) {
    int n = 0;
    for (const MoveSite& s : sites)
        if (std::holds_alternative<Kind>(s.kind)) ++n;
    return n;
}

template <typename Kind>
MoveSite first_kind(const std::vector<MoveSite>& sites) {
    for (const MoveSite& s : sites)
        if (std::holds_alternative<Kind>(s.kind)) return s;
    throw std::runtime_error("kind not found");
}

}  // namespace

TEST_CASE("available moves on a kink") {
    GaussDiagram d = parse("O1+ U1+");
    auto sites = available_moves(d);
    CHECK(count_kind<R1Delete>(sites) == 1);
    CHECK(std::get<R1Delete>(first_kind<R1Delete>(sites).kind).chord == 0);
}

TEST_CASE("available moves on an R2 pair") {
    GaussDiagram d = parse("O1+ O2- U2- U1+");
    auto sites = available_moves(d);
    CHECK(count_kind<R2Delete>(sites) == 1);
    auto r2 = std::get<R2Delete>(first_kind<R2Delete>(sites).kind);
    CHECK(((r2.chord_a == 0 && r2.chord_b == 1) || (r2.chord_a == 1 && r2.chord_b == 0)));
    CHECK(serialize(apply(d, first_kind<R2Delete>(sites)).diagram) == "_");
}

TEST_CASE("same signs are not an R2 pair") {
    GaussDiagram d = parse("O1+ O2+ U2+ U1+");
    CHECK(count_kind<R2Delete>(available_moves(d)) == 0);
}

TEST_CASE("unknot offers only insertions") {
    GaussDiagram d = parse("_");
    auto sites = available_moves(d);
    CHECK(count_kind<R1Delete>(sites) == 0);
    CHECK(count_kind<R2Delete>(sites) == 0);
    CHECK(count_kind<R3Rewrite>(sites) == 0);
    CHECK(count_kind<R1Insert>(sites) == 4);   // one gap, 2 signs, 2 orders
    CHECK(count_kind<R2Insert>(sites) == 4);   // one gap pair, 2 patterns, 2 signs
}

TEST_CASE("R1 delete golden") {
    GaussDiagram d = parse("O1+ U1+");
    auto sites = available_moves(d, MoveFilter::deletions_and_r3());
    ApplyResult res = apply(d, sites.at(0));
    CHECK(serialize(res.diagram) == "_");
    CHECK(res.chord_map == std::vector<int>{-1});
}

TEST_CASE("insert then delete is the identity") {
    std::mt19937_64 rng(321);
    for (int i = 0; i < 150; ++i) {
        GaussDiagram d = testing::random_diagram(rng, 1 + static_cast<int>(rng() % 3),
                                                 static_cast<int>(rng() % 6));
        auto inserts = available_moves(d, {true, false, true, false, false});
        const MoveSite& site = inserts[rng() % inserts.size()];
        ApplyResult grown = apply(d, site);

        // Deleting the freshly created chord(s) must restore the diagram.
        bool restored = false;
        for (const MoveSite& del : available_moves(grown.diagram, MoveFilter::deletions_and_r3())) {
            if (const auto* r1 = std::get_if<R1Delete>(&del.kind)) {
                if (grown.created.size() == 1 && r1->chord == grown.created[0] &&
                    structurally_equal(apply(grown.diagram, del).diagram, d))
                    restored = true;
            } else if (const auto* r2 = std::get_if<R2Delete>(&del.kind)) {
                std::set<int> chords{r2->chord_a, r2->chord_b};
                if (grown.created.size() == 2 &&
                    chords == std::set<int>{grown.created[0], grown.created[1]} &&
                    structurally_equal(apply(grown.diagram, del).diagram, d))
                    restored = true;
            }
        }
        CHECK(restored);
    }
}

TEST_CASE("stale sites are rejected") {
    GaussDiagram d = parse(kTrefoil);
    auto sites = available_moves(d);
    GaussDiagram other = parse(kHopf);
    CHECK_THROWS_AS(apply(other, sites.at(0)), StaleSite);
}

TEST_CASE("R3 site detection and rewrite") {
    GaussDiagram spread = parse(kTriangle3);
    CHECK(count_kind<R3Rewrite>(available_moves(spread)) > 0);

    GaussDiagram flat = parse(kTriangle1);
    auto sites = available_moves(flat, {false, false, false, false, true});
    REQUIRE(count_kind<R3Rewrite>(sites) == 1);
    ApplyResult res = apply(flat, sites.at(0));
    CHECK(res.diagram.chord_count() == 3);
    CHECK(two_colour_writhe_fast(res.diagram) == two_colour_writhe_fast(flat));
    CHECK(self_writhe(res.diagram) == self_writhe(flat));
    // the rewrite swaps each adjacent pair; canonical labels then renumber
    CHECK(serialize(res.diagram) == "O1+ O2+ U2+ O3- U1+ U3-");

    CHECK(count_kind<R3Rewrite>(available_moves(parse(kNoTriangle))) == 0);
}

TEST_CASE("random walk basics") {
    GaussDiagram d = parse(kHopf);
    auto only = random_walk(d, 0, 9, 20);
    REQUIRE(only.size() == 1);
    CHECK(structurally_equal(only[0], d));

    auto a = random_walk(d, 60, 12345, 16);
    auto b = random_walk(d, 60, 12345, 16);
    REQUIRE(a.size() == 61);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(structurally_equal(a[i], b[i]));

    for (const GaussDiagram& step : a) CHECK(step.chord_count() <= 18);
}

TEST_CASE("R2 insertion on the trefoil keeps its invariants") {
    GaussDiagram d = parse(kTrefoil);
    MoveSite site{R2Insert{0, 1, 0, 3, true, +1}, d.fingerprint()};
    ApplyResult res = apply(d, site);
    CHECK(res.diagram.chord_count() == 4);
    CHECK(two_colour_writhe_fast(res.diagram) == two_colour_writhe_fast(d));
    CHECK(self_writhe(res.diagram) == self_writhe(d));
}

TEST_CASE("invariants are constant along walks") {
    for (const char* start : {kTrefoil, kHopf, kTriangle3}) {
        GaussDiagram d = parse(start);
        WritheProfile base = report(d);
        for (const GaussDiagram& step : random_walk(d, 250, 777, 18)) {
            WritheProfile p = report(step);
            CHECK(p.j2 == base.j2);
            CHECK(p.j2_self == base.j2_self);
            CHECK(p.naive == base.naive);
            CHECK(p.lk == base.lk);
            CHECK(p.ip_self == base.ip_self);
        }
    }
}

TEST_CASE("colouring transport preserves writhes move by move") {
    std::mt19937_64 rng(909);
    for (int i = 0; i < 20; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 3),
                                                       static_cast<int>(rng() % 5));
        GaussDiagram current = d;
        for (int step = 0; step < 40; ++step) {
            auto all = available_moves(current);
            const MoveSite& site = all[rng() % all.size()];
            ApplyResult res = apply(current, site);
            std::set<std::string> before_set, after_set;
            for (const TwoColouring& c : colourings(current)) {
                CHECK(writhe(current, c) == writhe(res.diagram, transport(res, c)));
                before_set.insert(c.to_string());
                after_set.insert(transport(res, c).to_string());
            }
            CHECK(before_set == after_set);  // transport is a bijection
            current = std::move(res.diagram);
        }
    }
}

TEST_CASE("parity axioms hold for the 2-colour parity") {
    AxiomReport trefoil = verify_parity_axioms(parse(kTrefoil), 300, 2024, 16);
    CHECK(trefoil.pass);
    CHECK(trefoil.steps == 300);

    AxiomReport hopf = verify_parity_axioms(parse(kHopf), 300, 2025, 16);
    CHECK(hopf.pass);
    CHECK(hopf.r3_all_odd == 0);
}

TEST_CASE("parity axioms hold for the naive parity") {
    auto naive = [](const GaussDiagram& g, const TwoColouring&) { return naive_parity(g); };
    AxiomReport r = verify_parity_axioms(parse(kHopf), 300, 2026, 16, naive, false);
    CHECK(r.pass);
}

TEST_CASE("a corrupted parity fails with a witness") {
    // flip the parity of the lowest-labelled chord
    auto corrupted = [](const GaussDiagram& g, const TwoColouring& c) {
        ParityAssignment p = two_colour_parity(g, c);
        int lowest = -1;
        for (int i = 0; i < g.chord_count(); ++i)
            if (lowest < 0 || g.chord(i).label < g.chord(lowest).label) lowest = i;
        if (lowest >= 0) p.value[static_cast<std::size_t>(lowest)] ^= 1;
        return p;
    };
    AxiomReport r = verify_parity_axioms(parse(kTrefoil), 300, 2027, 16, corrupted, true);
    CHECK(!r.pass);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->axiom >= 0);
    CHECK(!r.witness->diagram.empty());
    CHECK(!r.witness->move.empty());
}

TEST_CASE("verifier rejects degenerate starts") {
    CHECK_THROWS_AS(verify_parity_axioms(parse("O1+ / U1+"), 10, 1, 16), NotTwoColourable);
}

TEST_CASE("move descriptions are printable") {
    for (const MoveSite& s : available_moves(parse(kTriangle1))) CHECK(!describe(s.kind).empty());
}
