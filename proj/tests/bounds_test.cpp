#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kinks/bounds.hpp"
#include "kinks/closure.hpp"
#include "kinks/families.hpp"

using namespace kinks;

namespace {

BraidWord random_word(std::mt19937& rng, int max_strands = 6, int max_len = 12) {
    BraidWord w;
    w.strands = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_strands));
    if (w.strands == 1) return w;
    const int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
    for (int i = 0; i < len; ++i)
        w.letters.push_back({1 + static_cast<int>(rng() % static_cast<unsigned>(w.strands - 1)),
                             rng() % 2 ? 1 : -1});
    return w;
}

} // namespace

TEST_CASE("eq2 bound on braid words", "[bounds]") {
    const BoundReport trefoil = braid_kappa_plus_lb(parse_braid("B2: 1 1 1"));
    CHECK(trefoil.raw == half_int::whole(1));
    CHECK(trefoil.kappa_plus_lb == 1);
    CHECK(trefoil.u_plus_lb == 1);
    CHECK(trefoil.source == BoundSource::eq2);
    CHECK(trefoil.presentation == "B2: 1 1 1");

    // torus t(3,5) braid: 1 + (12 - 5 - 1)/2 = 4
    const BoundReport t35 = braid_kappa_plus_lb(parse_braid("B5: 1 2 3 4 1 2 3 4 1 2 3 4"));
    CHECK(t35.kappa_plus_lb == 4);

    const BoundReport neg = braid_kappa_plus_lb(parse_braid("B2: -1 -1 -1"));
    CHECK(neg.raw == half_int::whole(-2));
    CHECK(neg.kappa_plus_lb == 0);

    const BoundReport id3 = braid_kappa_plus_lb(parse_braid("B3:"));
    CHECK(id3.kappa_plus_lb == 0);
}

TEST_CASE("eq4 reports the same right-hand side as eq2", "[bounds]") {
    CHECK(braid_u_plus_lb(parse_braid("B2: 1 1 1")).u_plus_lb == 1);
    // t(2,7): 1 + (7 - 2 - 1)/2 = 3
    CHECK(braid_u_plus_lb(parse_braid("B2: 1 1 1 1 1 1 1")).u_plus_lb == 3);
    CHECK(braid_u_plus_lb(parse_braid("B2:")).u_plus_lb == 0);

    std::mt19937 rng(59);
    for (int i = 0; i < 100; ++i) {
        const BraidWord w = random_word(rng);
        const BoundReport kappa = braid_kappa_plus_lb(w);
        const BoundReport u = braid_u_plus_lb(w);
        CHECK(kappa.raw == u.raw);
        CHECK(kappa.kappa_plus_lb == u.u_plus_lb);
    }
}

TEST_CASE("chi upper bound", "[bounds]") {
    const BraidWord trefoil = parse_braid("B2: 1 1 1");
    CHECK(chi_upper_bound(trefoil, 0) == -1);
    CHECK(chi_upper_bound(trefoil, 1) == 1);
    CHECK(chi_upper_bound(parse_braid("B1:"), 0) == 1);
    CHECK_THROWS_AS(chi_upper_bound(trefoil, -1), input_error);
}

TEST_CASE("eq5 bound on diagrams", "[bounds]") {
    const OrientedDiagram right = parse_pd("X+(1,4,2,5) X+(3,6,4,1) X+(5,2,6,3)");
    const BoundReport r = diagram_kappa_plus_lb(right);
    CHECK(r.raw == half_int::whole(1));
    CHECK(r.kappa_plus_lb == 1);
    CHECK(r.source == BoundSource::eq5);

    const BoundReport l = diagram_kappa_plus_lb(mirror(right));
    CHECK(l.raw == half_int::whole(0));  // 1 + (-3-2-1)/2 + 2
    CHECK(l.kappa_plus_lb == 0);

    const BoundReport kink = diagram_kappa_plus_lb(closure_diagram(parse_braid("B2: 1")));
    CHECK(kink.raw == half_int::whole(0));  // 1 + (1-2-1)/2 + 0
    CHECK(kink.kappa_plus_lb == 0);
}

TEST_CASE("kappa-minus is kappa-plus of the mirror", "[bounds]") {
    const OrientedDiagram right = parse_pd("X+(1,4,2,5) X+(3,6,4,1) X+(5,2,6,3)");
    const OrientedDiagram left = mirror(right);

    const BoundReport lm = diagram_kappa_minus_lb(left);
    REQUIRE(lm.kappa_minus_lb.has_value());
    CHECK(*lm.kappa_minus_lb == 1);

    const BoundReport rm = diagram_kappa_minus_lb(right);
    CHECK(*rm.kappa_minus_lb == 0);

    // Eq. 5 is computed unconditionally; on the crossing-free unknot the free
    // loop counts into s_minus and the right-hand side comes out 1 + (0-1-1)/2
    // + 1 = 1. The inequality itself is stated for nontrivial links only.
    CHECK(diagram_kappa_minus_lb(parse_pd("O 1")).raw == half_int::whole(1));

    std::mt19937 rng(61);
    for (int i = 0; i < 100; ++i) {
        BraidWord w = random_word(rng);
        if (w.strands < 2) continue;
        const OrientedDiagram d = closure_diagram(w);
        const BoundReport minus = diagram_kappa_minus_lb(d);
        const BoundReport plus_of_mirror = diagram_kappa_plus_lb(mirror(d));
        CHECK(minus.raw == plus_of_mirror.raw);
        CHECK(*minus.kappa_minus_lb == plus_of_mirror.kappa_plus_lb);
    }
}

TEST_CASE("eq5 on a closure is eq2 plus the strongly-negative correction", "[bounds]") {
    std::mt19937 rng(79);
    for (int i = 0; i < 120; ++i) {
        BraidWord w = random_word(rng);
        if (w.strands < 2 || w.letters.empty()) continue;
        const OrientedDiagram d = closure_diagram(w);
        const half_int via_braid = braid_kappa_plus_lb(w).raw;
        const half_int via_diagram = diagram_kappa_plus_lb(d).raw;
        const int s_minus = seifert_data(d).s_minus;
        CHECK(via_diagram == via_braid + half_int::whole(s_minus));
        CHECK(via_diagram >= via_braid);
        if (s_minus == 0) CHECK(via_diagram == via_braid);
    }
}

TEST_CASE("eq2 is invariant under positive stabilization", "[bounds]") {
    std::mt19937 rng(67);
    for (int i = 0; i < 100; ++i) {
        const BraidWord w = random_word(rng);
        BraidWord stabilized = w;
        stabilized.strands = w.strands + 1;
        stabilized.letters.push_back({w.strands, 1});
        CHECK(braid_kappa_plus_lb(stabilized).raw == braid_kappa_plus_lb(w).raw);
    }
}

TEST_CASE("sqp profile", "[bounds]") {
    const SqpProfile cubed = sqp_profile(BandWord{2, {{1, 2}, {1, 2}, {1, 2}}});
    CHECK(cubed.slice_genus == 1);
    CHECK(cubed.kappa_plus_lb == 1);
    CHECK(cubed.u_plus_lb == 1);

    const SqpProfile unknot = sqp_profile(BandWord{2, {{1, 2}}});
    CHECK(unknot.slice_genus == 0);

    // closure of sigma_{1,3} sigma_{1,2} sigma_{2,3} in B3 is a 2-component link
    CHECK_THROWS_AS(sqp_profile(BandWord{3, {{1, 3}, {1, 2}, {2, 3}}}), input_error);
}

TEST_CASE("positive braid profile", "[bounds]") {
    const PositiveBraidProfile trefoil = positive_braid_profile(parse_braid("B2: 1 1 1"));
    CHECK(trefoil.genus == 1);
    CHECK(trefoil.unknotting == 1);
    CHECK(trefoil.u_plus == 1);
    CHECK(trefoil.kappa_plus == 1);
    CHECK(trefoil.u_minus == 0);
    CHECK(trefoil.kappa_minus == 0);

    // t(5,3): genus (10 - 3 + 1)/2 = 4 = (5-1)(3-1)/2
    const PositiveBraidProfile t53 = positive_braid_profile(torus_braid(5, 3));
    CHECK(t53.genus == 4);

    const PositiveBraidProfile unknot = positive_braid_profile(parse_braid("B2: 1"));
    CHECK(unknot.genus == 0);
    CHECK(unknot.u_plus == 0);

    CHECK_THROWS_AS(positive_braid_profile(parse_braid("B2: -1")), input_error);
    CHECK_THROWS_AS(positive_braid_profile(parse_braid("B3: 1 1")), input_error);
}

TEST_CASE("eq2 is sharp on positive braid knots", "[bounds]") {
    std::mt19937 rng(71);
    int tested = 0;
    while (tested < 60) {
        BraidWord w = random_word(rng);
        if (w.strands < 2) continue;
        for (auto& l : w.letters) l.sign = 1;
        if (closure_components(w).components != 1) continue;
        ++tested;
        CHECK(braid_kappa_plus_lb(w).kappa_plus_lb == positive_braid_profile(w).genus);
    }
}

TEST_CASE("crossing change audit", "[bounds]") {
    const BoundReport trefoil = braid_kappa_plus_lb(parse_braid("B2: 1 1 1"));

    const ChangeAudit ok = audit_crossing_change_sequence({1}, trefoil);
    CHECK(ok.positive_changes == 1);
    CHECK(ok.negative_changes == 0);
    CHECK(ok.consistent);

    const ChangeAudit bad = audit_crossing_change_sequence({-1}, trefoil);
    CHECK_FALSE(bad.consistent);

    const ChangeAudit empty = audit_crossing_change_sequence({}, BoundReport{});
    CHECK(empty.consistent);

    CHECK_THROWS_AS(audit_crossing_change_sequence({2}, trefoil), input_error);

    BoundReport with_minus = trefoil;
    with_minus.kappa_minus_lb = 1;
    CHECK_FALSE(audit_crossing_change_sequence({1}, with_minus).consistent);
    CHECK(audit_crossing_change_sequence({1, -1}, with_minus).consistent);
}

TEST_CASE("raw bounds are integral for every word and diagram", "[bounds]") {
    std::mt19937 rng(73);
    for (int i = 0; i < 150; ++i) {
        const BraidWord w = random_word(rng);
        CHECK(braid_kappa_plus_lb(w).raw.integral());
        CHECK(diagram_kappa_plus_lb(closure_diagram(w)).raw.integral());
    }
}
