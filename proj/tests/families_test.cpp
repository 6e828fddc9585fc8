#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "kinks/bounds.hpp"
#include "kinks/closure.hpp"
#include "kinks/families.hpp"

using namespace kinks;

namespace {

const std::vector<int> kOddGrid = {-9, -7, -5, -3, -1, 1, 3, 5, 7, 9};

} // namespace

TEST_CASE("torus braids", "[families]") {
    CHECK(torus_braid(2, 3) == parse_braid("B3: 1 2 1 2"));
    CHECK(torus_braid(3, 2) == parse_braid("B2: 1 1 1"));
    CHECK(exponent_sum(torus_braid(2, 3)) == 4);
    CHECK(closure_components(torus_braid(2, 3)).components == 1);

    // t(5,3): eq2 bound equals (5-1)(3-1)/2 = 4
    CHECK(braid_kappa_plus_lb(torus_braid(5, 3)).kappa_plus_lb == 4);

    CHECK_THROWS_AS(torus_braid(2, 4), input_error);
    CHECK_THROWS_AS(torus_braid(1, 3), input_error);
    CHECK_THROWS_AS(torus_braid(3, 0), input_error);
}

TEST_CASE("pretzel diagram K(1,1,1) is the left trefoil", "[families]") {
    const OrientedDiagram d = pretzel_diagram({1, 1, 1});
    CHECK(d.crossings.size() == 3);
    const SeifertData sd = seifert_data(d);
    CHECK(sd.x_minus == 3);
    CHECK(sd.x_plus == 0);
    CHECK(sd.writhe == -3);
    CHECK(sd.components == 1);
    CHECK(sd.s == 2);
}

TEST_CASE("pretzel diagram K(-3,3,-3)", "[families]") {
    const OrientedDiagram d = pretzel_diagram({-3, 3, -3});
    CHECK(d.crossings.size() == 9);
    const SeifertData sd = seifert_data(d);
    CHECK(sd.writhe == 3);
    CHECK(sd.components == 1);
    CHECK(sd.s_minus == 2);  // the circles interior to the middle band

    const OrientedDiagram core = positive_core(d);
    const SeifertData sc = seifert_data(core);
    CHECK(core.crossings.size() == 6);
    CHECK(sc.s == sd.s - sd.s_minus);
    CHECK(sc.s == 6);
    CHECK(sc.x_minus == 0);
}

TEST_CASE("pretzel diagrams over the grid: knots with the banded-surface genus",
          "[families]") {
    for (int p : kOddGrid) {
        for (int q : kOddGrid) {
            for (int r : kOddGrid) {
                const OrientedDiagram d = pretzel_diagram({p, q, r});
                validate(d);
                const SeifertData sd = seifert_data(d);
                CHECK(sd.components == 1);
                CHECK(sd.writhe == -(p + q + r));
                CHECK(static_cast<int>(d.crossings.size()) ==
                      std::abs(p) + std::abs(q) + std::abs(r));
                // two disks and three bands: chi = -1, genus 1
                CHECK(sd.chi_S == -1);
                CHECK(seifert_genus_of_diagram(d) == half_int::whole(1));
            }
        }
    }
}

TEST_CASE("pretzel diagrams reject even parameters", "[families]") {
    CHECK_THROWS_AS(pretzel_diagram({2, 1, 1}), input_error);
    CHECK_THROWS_AS(pretzel_seifert_matrix({1, 0, 1}), input_error);
    CHECK_THROWS_AS(pretzel_classify({1, 1, 4}), input_error);
}

TEST_CASE("pretzel Seifert matrix anchors", "[families]") {
    const SeifertMatrix2 v111 = pretzel_seifert_matrix({1, 1, 1});
    CHECK(v111 == SeifertMatrix2{1, 1, 0, 1});

    const SeifertMatrix2 v = pretzel_seifert_matrix({-9, 5, -9});
    CHECK(2 * v.v11 == -4);
    CHECK(v.v12 + v.v21 == 5);
    CHECK(2 * v.v22 == -4);

    // det(V + V^T) = pq + pr + qr, checked across the grid
    for (int p : kOddGrid) {
        for (int q : kOddGrid) {
            for (int r : kOddGrid) {
                const SeifertMatrix2 m = pretzel_seifert_matrix({p, q, r});
                const std::int64_t det =
                    (2 * m.v11) * (2 * m.v22) - (m.v12 + m.v21) * (m.v12 + m.v21);
                CHECK(det == static_cast<std::int64_t>(p) * q + static_cast<std::int64_t>(p) * r +
                                 static_cast<std::int64_t>(q) * r);
            }
        }
    }
}

TEST_CASE("pretzel invariants", "[families]") {
    const PretzelInvariants trefoil = pretzel_invariants({1, 1, 1});
    CHECK(trefoil.alexander.str() == "t - 1 + t^-1");
    CHECK(trefoil.determinant == 3);
    CHECK(trefoil.signature == 2);

    const PretzelInvariants zero_sig = pretzel_invariants({-9, 5, -9});
    CHECK(zero_sig.signature == 0);
    CHECK(zero_sig.determinant == 9);

    const PretzelInvariants slice = pretzel_invariants({5, 7, -3});
    CHECK(slice.alexander == Laurent::constant(1));
    CHECK(slice.determinant == 1);

    const PretzelInvariants unknot = pretzel_invariants({-1, 1, 1});
    CHECK(unknot.alexander == Laurent::constant(1));
    CHECK(unknot.determinant == 1);
    CHECK(unknot.signature == 0);
}

TEST_CASE("alexander triviality iff pq+pr+qr = -1", "[families]") {
    for (int p : kOddGrid) {
        for (int q : kOddGrid) {
            for (int r : kOddGrid) {
                const std::int64_t s = static_cast<std::int64_t>(p) * q +
                                       static_cast<std::int64_t>(p) * r +
                                       static_cast<std::int64_t>(q) * r;
                const PretzelInvariants inv = pretzel_invariants({p, q, r});
                CHECK((inv.alexander == Laurent::constant(1)) == (s == -1));
            }
        }
    }
}

TEST_CASE("pretzel classifier", "[families]") {
    const PretzelFlags k111 = pretzel_classify({1, 1, 1});
    CHECK(k111.min_pair_sum_positive);
    CHECK(k111.infinite_order);
    CHECK(k111.not_positively_unknottable);
    CHECK(k111.mirror_sqp);
    CHECK_FALSE(k111.trivial);

    const PretzelFlags slice = pretzel_classify({5, 7, -3});
    CHECK(slice.alexander_trivial);
    CHECK(slice.min_pair_sum_positive);  // min{12, 4, 2} > 0
    CHECK(slice.infinite_order);
    CHECK(slice.not_positively_unknottable);

    const PretzelFlags trivial = pretzel_classify({3, -1, 1});
    CHECK(trivial.trivial);
    CHECK(trivial.alexander_trivial);  // 3*(-1) + 3*1 + (-1)*1 = -1
    CHECK_FALSE(trivial.infinite_order);

    // flag implications across the grid
    for (int p : kOddGrid) {
        for (int q : kOddGrid) {
            for (int r : kOddGrid) {
                const PretzelFlags f = pretzel_classify({p, q, r});
                if (f.min_pair_sum_positive) {
                    CHECK(f.infinite_order);
                    CHECK(f.not_positively_unknottable);
                    CHECK(f.mirror_sqp);
                }
                if (f.trivial) CHECK_FALSE(f.infinite_order);
                const PretzelFlags fm = pretzel_classify({-p, -q, -r});
                CHECK_FALSE((f.min_pair_sum_positive && fm.min_pair_sum_positive));
            }
        }
    }
}

TEST_CASE("twist stand-in diagrams", "[families]") {
    for (int m = 1; m <= 6; ++m) {
        const OrientedDiagram d = twist_knot_diagram(m);
        validate(d);
        CHECK(static_cast<int>(d.crossings.size()) == m + 2);
        const SeifertData sd = seifert_data(d);
        CHECK(sd.components == 1);
        CHECK(sd.x_minus == m);
        CHECK(sd.x_plus == 2);
    }
    CHECK_THROWS_AS(twist_knot_diagram(0), input_error);
}

TEST_CASE("twist invariants from the matrix oracle", "[families]") {
    const TwistInvariants m1 = twist_invariants(1);
    CHECK(m1.alexander.str() == "-t + 3 - t^-1");
    CHECK(m1.determinant == 5);

    for (int m = 1; m <= 50; ++m) {
        const TwistInvariants inv = twist_invariants(m);
        CHECK(inv.determinant == 4 * m + 1);
        CHECK(inv.alexander.eval(1) == 1);
        CHECK(inv.kappa_profile.kappa_plus == 0);
        CHECK(inv.kappa_profile.kappa_minus == 0);
        CHECK(inv.kappa_profile.unknotting == 1);
        // -m t + (2m+1) - m t^-1
        CHECK(inv.alexander.coeff(1) == -m);
        CHECK(inv.alexander.coeff(0) == 2 * m + 1);
        CHECK(inv.alexander.coeff(-1) == -m);
    }

    CHECK(twist_invariants(12).determinant == 49);
    CHECK_THROWS_AS(twist_invariants(0), input_error);
}

TEST_CASE("square twist generators", "[families]") {
    CHECK(square_twist_generators(20) == std::vector<int>{2, 6, 12, 20});
    CHECK(square_twist_generators(1).empty());
    CHECK(square_twist_generators(2) == std::vector<int>{2});
    CHECK(square_twist_generators(50) == std::vector<int>{2, 6, 12, 20, 30, 42});
    for (int m : square_twist_generators(200)) {
        const int root = static_cast<int>(std::lround(std::sqrt(4.0 * m + 1.0)));
        CHECK(root * root == 4 * m + 1);
    }
    CHECK_THROWS_AS(square_twist_generators(0), input_error);
}
