#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "linkparity/invariants.hpp"
#include "support/generators.hpp"

using namespace linkparity;

namespace {

const char* kTrefoil = "O1+ O2+ U1+ U2+";
const char* kHopf = "O1+ U2+ / O2+ U1+";

TwoColouring bits(const char* s) { return TwoColouring::from_string(s); }

std::vector<long long> negated_sorted(std::vector<long long> v) {
    for (long long& x : v) x = -x;
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("writhe golden values") {
    GaussDiagram trefoil = parse(kTrefoil);
    CHECK(writhe(trefoil, bits("0")) == 2);
    CHECK(writhe(trefoil, bits("1")) == 2);
    GaussDiagram hopf = parse(kHopf);
    CHECK(writhe(hopf, bits("00")) == 0);
    CHECK(writhe(hopf, bits("01")) == 2);
    CHECK_THROWS_AS(writhe(parse("O1+ / U1+"), bits("00")), NotTwoColourable);
}

TEST_CASE("enumerated J^2 golden values") {
    CHECK(two_colour_writhe_enum(parse(kTrefoil)) == std::vector<long long>{2});
    CHECK(two_colour_writhe_enum(parse(kHopf)) == std::vector<long long>{0, 2});
    CHECK(two_colour_writhe_enum(parse("_ / _")) == std::vector<long long>{0, 0});
}

TEST_CASE("fast path equals the enumeration oracle") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 1500; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 6),
                                                       static_cast<int>(rng() % 13));
        CHECK(two_colour_writhe_fast(d) == two_colour_writhe_enum(d));
    }
}

TEST_CASE("weight-3 inclusion-exclusion identity") {
    std::mt19937_64 rng(5151);
    int checked = 0;
    while (checked < 200) {
        GaussDiagram d = testing::random_nondegenerate(rng, 3 + static_cast<int>(rng() % 3),
                                                       static_cast<int>(rng() % 12));
        int n = d.components();
        auto single = [&](int i) {
            std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            return writhe(d, TwoColouring{v});
        };
        auto pair = [&](int i, int j) {
            std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(j)] = 1;
            return writhe(d, TwoColouring{v});
        };
        long long base = writhe(d, TwoColouring{std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    std::vector<std::uint8_t> v(static_cast<std::size_t>(n), 0);
                    v[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(j)] =
                        v[static_cast<std::size_t>(k)] = 1;
                    long long direct = writhe(d, TwoColouring{v});
                    long long formula = pair(i, j) + pair(i, k) + pair(j, k) - single(i) -
                                        single(j) - single(k) + base;
                    CHECK(direct == formula);
                    ++checked;
                }
    }
}

TEST_CASE("self writhe") {
    CHECK(self_writhe(parse(kTrefoil)) == 2);
    CHECK(self_writhe(parse(kHopf)) == 0);

    std::mt19937_64 rng(5152);
    for (int i = 0; i < 120; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 4),
                                                       static_cast<int>(rng() % 8));
        long long expected = self_writhe(d);
        for (const TwoColouring& c : colourings(d)) {
            ParityAssignment p = two_colour_parity(d, c);
            long long via_colouring = 0;
            for (int j = 0; j < d.chord_count(); ++j)
                if (d.is_self(j) && p.odd(j)) via_colouring += d.chord(j).sign;
            CHECK(via_colouring == expected);
        }
    }
}

TEST_CASE("naive writhe and the linking matrix") {
    CHECK(naive_writhe(parse(kHopf)) == 2);
    CHECK(naive_writhe(parse(kTrefoil)) == 0);
    CHECK(linking_matrix(parse(kHopf)) ==
          std::vector<std::vector<long long>>{{0, 2}, {2, 0}});
    CHECK(linking_matrix(parse("O1+ / U1+")) ==
          std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    CHECK(linking_matrix(parse("_ / _")) ==
          std::vector<std::vector<long long>>{{0, 0}, {0, 0}});

    std::mt19937_64 rng(5153);
    for (int i = 0; i < 200; ++i) {
        GaussDiagram d = testing::random_diagram(rng, 1 + static_cast<int>(rng() % 4),
                                                 static_cast<int>(rng() % 9));
        auto lk = linking_matrix(d);
        long long sum = 0;
        for (std::size_t a = 0; a < lk.size(); ++a) {
            CHECK(lk[a][a] == 0);
            for (std::size_t b = a + 1; b < lk.size(); ++b) {
                CHECK(lk[a][b] == lk[b][a]);
                sum += lk[a][b];
            }
        }
        CHECK(naive_writhe(d) == sum);
    }
}

TEST_CASE("IP self writhe") {
    IpWrithe trefoil = ip_self_writhe(parse(kTrefoil));
    CHECK(trefoil.self == 2);
    CHECK(trefoil.candidates == std::array<long long, 2>{2, 2});

    IpWrithe hopf = ip_self_writhe(parse(kHopf));
    CHECK(hopf.self == 0);
    CHECK(hopf.candidates == std::array<long long, 2>{0, 2});

    CHECK_THROWS_AS(ip_self_writhe(parse("O1+ / U1+")), OddLinkingNumbers);
}

TEST_CASE("smoothing height equals the writhe") {
    GaussDiagram trefoil = parse(kTrefoil);
    CHECK(smoothing_height(trefoil, bits("0")) == 2);
    GaussDiagram hopf = parse(kHopf);
    CHECK(smoothing_height(hopf, bits("00")) == 0);
    // all-negative, all-even: height = n_- - n_- = 0
    GaussDiagram neg_hopf = parse("O1- U2- / O2- U1-");
    CHECK(smoothing_height(neg_hopf, bits("00")) == 0);

    std::mt19937_64 rng(5154);
    for (int i = 0; i < 200; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 4),
                                                       static_cast<int>(rng() % 9));
        for (const TwoColouring& c : generating_set(d.components()))
            CHECK(smoothing_height(d, c) == writhe(d, c));
    }
}

TEST_CASE("chequerboard certification") {
    auto hopf_cert = chequerboard_certificate(parse(kHopf));
    REQUIRE(hopf_cert.has_value());
    CHECK(writhe(parse(kHopf), *hopf_cert) == 0);
    CHECK(!chequerboard_certificate(parse(kTrefoil)).has_value());
    CHECK(chequerboard_certificate(parse("_ / _")).has_value());
    CHECK(!chequerboard_certificate(parse("O1+ / U1+")).has_value());

    // independent route: scan the generating set for an all-even colouring
    std::mt19937_64 rng(5155);
    for (int i = 0; i < 200; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 4),
                                                       static_cast<int>(rng() % 8));
        bool by_scan = false;
        for (const TwoColouring& c : generating_set(d.components())) {
            ParityAssignment p = two_colour_parity(d, c);
            bool all_even = true;
            for (int j = 0; j < d.chord_count(); ++j)
                if (p.odd(j)) all_even = false;
            if (all_even) by_scan = true;
        }
        auto cert = chequerboard_certificate(d);
        CHECK(cert.has_value() == by_scan);
        if (cert) {
            ParityAssignment p = two_colour_parity(d, *cert);
            for (int j = 0; j < d.chord_count(); ++j) CHECK(!p.odd(j));
        }
    }
}

TEST_CASE("chequerboard base formulas") {
    std::mt19937_64 rng(5156);
    int seen = 0;
    for (int i = 0; i < 400; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 2 + static_cast<int>(rng() % 3),
                                                       static_cast<int>(rng() % 8));
        auto cert = chequerboard_certificate(d);
        if (!cert) continue;
        ++seen;
        auto lk = linking_matrix(d);
        int n = d.components();
        for (int c1 = 0; c1 < n; ++c1) {
            TwoColouring v = *cert;
            v.bits[static_cast<std::size_t>(c1)] ^= 1;
            long long row = 0;
            for (int j = 0; j < n; ++j) row += lk[static_cast<std::size_t>(c1)][static_cast<std::size_t>(j)];
            CHECK(writhe(d, v) == row);
            for (int c2 = c1 + 1; c2 < n; ++c2) {
                TwoColouring w = v;
                w.bits[static_cast<std::size_t>(c2)] ^= 1;
                long long rest = 0;
                for (int j = 0; j < n; ++j) {
                    if (j == c1 || j == c2) continue;
                    rest += lk[static_cast<std::size_t>(c1)][static_cast<std::size_t>(j)] +
                            lk[static_cast<std::size_t>(c2)][static_cast<std::size_t>(j)];
                }
                CHECK(writhe(d, w) == rest);
            }
        }
    }
    CHECK(seen > 10);
}

TEST_CASE("mirrors negate J^2, reversal preserves it") {
    std::mt19937_64 rng(5157);
    for (int i = 0; i < 150; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 4),
                                                       static_cast<int>(rng() % 9));
        auto j2 = two_colour_writhe_fast(d);
        CHECK(two_colour_writhe_fast(transform(d, TransformKind::vertical_mirror())) ==
              negated_sorted(j2));
        CHECK(two_colour_writhe_fast(transform(d, TransformKind::horizontal_mirror())) ==
              negated_sorted(j2));
        CHECK(two_colour_writhe_fast(transform(d, TransformKind::reverse_all())) == j2);
    }
}

TEST_CASE("invariants are basepoint and label independent") {
    std::mt19937_64 rng(5158);
    for (int i = 0; i < 120; ++i) {
        GaussDiagram d = testing::random_nondegenerate(rng, 1 + static_cast<int>(rng() % 4),
                                                       static_cast<int>(rng() % 9));
        int comp = static_cast<int>(rng() % d.components());
        int len = d.size(comp);
        GaussDiagram moved = rotate_basepoint(d, comp, len == 0 ? 0 : static_cast<int>(rng() % len));
        GaussDiagram relabeled = parse(serialize(d));
        for (const GaussDiagram* other : {&moved, &relabeled}) {
            CHECK(two_colour_writhe_fast(*other) == two_colour_writhe_fast(d));
            CHECK(self_writhe(*other) == self_writhe(d));
            CHECK(naive_writhe(*other) == naive_writhe(d));
            CHECK(linking_matrix(*other) == linking_matrix(d));
        }
    }
}

TEST_CASE("report on the virtual trefoil") {
    WritheProfile p = report(parse(kTrefoil));
    CHECK(p.components == 1);
    CHECK(p.chords == 2);
    CHECK(p.two_colourable);
    CHECK(p.j2 == std::vector<long long>{2});
    CHECK(p.j2_self == 2);
    CHECK(p.naive == 0);
    CHECK(p.ip_self == 2);
    CHECK(p.ip_candidates == std::array<long long, 2>{2, 2});
    CHECK(!p.chequerboard_certified);
    CHECK(p.slice_obstructed == true);
    CHECK(p.amphichiral_obstructed == true);
    CHECK(p.cb_concordance_obstructed == true);
    CHECK(p.compatible);
}

TEST_CASE("report on the Hopf link") {
    WritheProfile p = report(parse(kHopf));
    CHECK(p.j2 == std::vector<long long>{0, 2});
    CHECK(p.j2_self == 0);
    CHECK(p.naive == 2);
    CHECK(p.ip_self == 0);
    CHECK(p.ip_candidates == std::array<long long, 2>{0, 2});
    CHECK(p.chequerboard_certified);
    CHECK(p.slice_obstructed == true);
    CHECK(p.cb_concordance_obstructed == false);
    CHECK(!p.compatible);
}

TEST_CASE("report on the 2-component unlink") {
    WritheProfile p = report(parse("_ / _"));
    CHECK(p.j2 == std::vector<long long>{0, 0});
    CHECK(p.chequerboard_certified);
    CHECK(p.slice_obstructed == false);
    CHECK(p.amphichiral_obstructed == false);
    CHECK(p.cb_concordance_obstructed == false);
    CHECK(p.compatible);
}

TEST_CASE("degenerate links get a partial profile") {
    WritheProfile p = report(parse("O1+ / U1+"));
    CHECK(!p.two_colourable);
    CHECK(!p.j2);
    CHECK(!p.j2_self);
    CHECK(!p.ip_self);
    CHECK(!p.ip_candidates);
    CHECK(p.naive == 1);
    CHECK(p.lk == std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    CHECK(!p.chequerboard_certified);
    CHECK(!p.slice_obstructed);
    CHECK(!p.compatible);
}

TEST_CASE("check mode accepts, caps reject") {
    CHECK(report(parse(kHopf), J2Mode::Check).j2 == std::vector<long long>{0, 2});
    std::string many = "_";
    for (int i = 0; i < 21; ++i) many += " / _";
    CHECK_THROWS_AS(two_colour_writhe_fast(parse(many)), Error);
}
