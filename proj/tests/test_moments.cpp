#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hartogs/annulus.hpp"
#include "hartogs/domain.hpp"
#include "hartogs/grid.hpp"
#include "hartogs/grid_function.hpp"
#include "hartogs/mode_norms.hpp"
#include "oracle.hpp"

using namespace hartogs;

namespace {
constexpr double kPi = std::numbers::pi;

HartogsDomain product_domain() {
    return make_domain(Region::disc({0, 0}, 1.0), RadialProfile("constant", {0.0}),
                       RadialProfile("constant", {std::log(2.0)}), CaseTag::Case1);
}
}  // namespace

TEST_CASE("radial moments match the closed forms and the oracle") {
    Annulus A(1.0, 2.0);
    // frozen oracle values (adaptive quadrature, 30 digits)
    CHECK(radial_moment(A, 0).value() == doctest::Approx(9.42477796076938).epsilon(1e-12));
    CHECK(radial_moment(A, 1).value() == doctest::Approx(23.5619449019234493).epsilon(1e-12));
    CHECK(radial_moment(A, -1).value() == doctest::Approx(4.35517218060720426).epsilon(1e-12));
    CHECK(radial_moment(A, -3).value() == doctest::Approx(1.47262155637021558).epsilon(1e-12));
    // live oracle cross-check on a sweep
    for (int n = -12; n <= 12; ++n) {
        double o = oracle::radial_moment(1.0, 2.0, n);
        CHECK(radial_moment(A, n).value() == doctest::Approx(o).epsilon(1e-10));
    }
}

TEST_CASE("distance moments match the closed forms and the oracle") {
    CHECK(distance_moment(Annulus(1, 3), 0).value() ==
          doctest::Approx(8.37758040957278197).epsilon(1e-12));
    CHECK(distance_moment(Annulus(1, 2), 1).value() ==
          doctest::Approx(1.82605072989906732).epsilon(1e-12));
    Annulus A(1.0, 2.0);
    for (int n = -12; n <= 12; ++n) {
        double o = oracle::distance_moment(1.0, 2.0, n);
        CHECK(distance_moment(A, n).value() == doctest::Approx(o).epsilon(1e-9));
    }
}

TEST_CASE("distance moment is positive and dominated by the half-gap bound") {
    for (auto [a, b] : {std::pair{1.0, 2.0}, {0.5, 3.0}, {1.0, 1.1}}) {
        Annulus A(a, b);
        double cap = 0.25 * (b - a) * (b - a);
        for (int n = -40; n <= 40; ++n) {
            LogValue d = distance_moment(A, n);
            LogValue r = radial_moment(A, n);
            CHECK(d.sign == 1);
            CHECK(r.sign == 1);
            CHECK(d.logmag <= std::log(cap) + r.logmag + 1e-9);
        }
    }
}

TEST_CASE("moment ratio tends to b^2/2 upward and a^2/2 downward") {
    // +inf limit b^2/2 (frozen closed-form evaluations at |n| = 200)
    CHECK(moment_ratio(Annulus(1, 2), 200) ==
          doctest::Approx(1.96545709161486868).epsilon(1e-12));
    CHECK(moment_ratio(Annulus(1, 3), 200) ==
          doctest::Approx(4.42227845613345454).epsilon(1e-12));
    CHECK(std::abs(moment_ratio(Annulus(1, 2), 200) - 2.0) < 0.05);
    CHECK(std::abs(moment_ratio(Annulus(1, 3), 200) - 4.5) < 0.09);
    // -inf limit is a^2/2: the weight concentrates at the inner radius, where
    // the boundary distance grows like (|w| - a)
    CHECK(moment_ratio(Annulus(1, 2), -200) ==
          doctest::Approx(0.50886700760756176).epsilon(1e-12));
    CHECK(moment_ratio(Annulus(1, 3), -200) ==
          doctest::Approx(0.50886700760756176).epsilon(1e-12));
    CHECK(std::abs(moment_ratio(Annulus(1, 2), -200) - 0.5) < 0.01);
    CHECK_THROWS(moment_ratio(Annulus(1, 2), 0));
}

TEST_CASE("lemma1 constant: sup over a sweep, monotone in the outer radius") {
    std::vector<int> range;
    for (int n = 1; n <= 200; ++n) {
        range.push_back(n);
        range.push_back(-n);
    }
    double c12 = lemma1_constant(Annulus(1, 2), range);
    double c13 = lemma1_constant(Annulus(1, 3), range);
    CHECK(c12 == doctest::Approx(1.96545709161486868).epsilon(1e-12));
    CHECK(c13 > c12);
    CHECK(c12 >= 2.0 - 0.05);
    // singleton range collapses to moment_ratio
    CHECK(lemma1_constant(Annulus(1, 2), {7}) ==
          doctest::Approx(moment_ratio(Annulus(1, 2), 7)));
    CHECK_THROWS(lemma1_constant(Annulus(1, 2), {}));
    CHECK_THROWS(lemma1_constant(Annulus(1, 2), {1, 0, 2}));
}

TEST_CASE("annulus invariants") {
    CHECK_THROWS(Annulus(2.0, 1.0));
    CHECK_THROWS(Annulus(0.0, 1.0));
    CHECK_THROWS(Annulus(-1.0, 1.0));
    Annulus A(1.0, 2.0);
    CHECK(A.boundary_distance(1.5) == doctest::Approx(0.5));
    CHECK(A.boundary_distance(1.1) == doctest::Approx(0.1));
    CHECK(A.boundary_distance(2.0) == doctest::Approx(0.0));
}

TEST_CASE("mode norms on the product domain") {
    HartogsDomain d = product_domain();
    GridPtr grid = make_grid(d.base(), 128);
    GridFunction one(grid, [](complexd) { return complexd{1.0, 0.0}; });

    // || 1 * w ||^2 = area(disc) * radial_moment(A(1,2), 1) = 7.5 pi^2
    double v = mode_l2_norm(d, one, 1);
    CHECK(v == doctest::Approx(74.0220330081702).epsilon(2e-4));

    GridFunction zero(grid);
    CHECK(mode_l2_norm(d, zero, 1) == 0.0);

    GridFunction two(grid, [](complexd) { return complexd{2.0, 0.0}; });
    CHECK(mode_l2_norm(d, two, 5) ==
          doctest::Approx(4.0 * mode_l2_norm(d, one, 5)).epsilon(1e-12));

    // additivity over a partition of the base mask
    GridFunction left(grid, [](complexd z) {
        return z.real() < 0 ? complexd{1.0, 0.0} : complexd{0.0, 0.0};
    });
    GridFunction right(grid, [](complexd z) {
        return z.real() < 0 ? complexd{0.0, 0.0} : complexd{1.0, 0.0};
    });
    double sum = mode_l2_norm(d, left, 3) + mode_l2_norm(d, right, 3);
    CHECK(sum == doctest::Approx(mode_l2_norm(d, one, 3)).epsilon(1e-12));
}

TEST_CASE("distance-weighted surrogate ratio") {
    HartogsDomain d = product_domain();
    GridPtr grid = make_grid(d.base(), 128);
    GridFunction one(grid, [](complexd) { return complexd{1.0, 0.0}; });

    // constant fibers: ratio = sqrt(distance_moment / radial_moment)
    CHECK(sobolev_surrogate_ratio(d, one, 1) ==
          doctest::Approx(0.2783882181415011).epsilon(1e-10));

    // n * ratio stays below 1.1 * b/sqrt(2) and approaches b/sqrt(2)
    double bound = 1.1 * std::sqrt(2.0);
    double sup = 0.0;
    for (int n = 2; n <= 200; n += (n < 16 ? 1 : 7)) {
        double r = n * sobolev_surrogate_ratio(d, one, n);
        sup = std::max(sup, r);
    }
    CHECK(sup <= bound);
    CHECK(200.0 * sobolev_surrogate_ratio(d, one, 200) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(0.05));

    GridFunction zero(grid);
    CHECK_THROWS(sobolev_surrogate_ratio(d, zero, 3));
}

TEST_CASE("log values survive huge exponents") {
    Annulus A(1.0, 2.0);
    LogValue r = radial_moment(A, 200);
    CHECK(r.sign == 1);
    // log(pi/201) + 402 log 2 (inner term negligible)
    CHECK(r.logmag == doctest::Approx(std::log(kPi / 201.0) + 402.0 * std::log(2.0))
                          .epsilon(1e-10));
    LogValue rn = radial_moment(A, -200);
    CHECK(rn.sign == 1);
    CHECK(rn.logmag == doctest::Approx(std::log(kPi / 199.0)).epsilon(1e-10));
    LogValue sum = LogValue::from_log(10.0, 1) + LogValue::from_log(10.0, -1);
    CHECK(sum.is_zero());
    LogValue diff = LogValue::from_log(700.0, 1) - LogValue::from_log(699.0, 1);
    CHECK(diff.sign == 1);
    CHECK(diff.logmag == doctest::Approx(700.0 + std::log1p(-std::exp(-1.0))));
}
