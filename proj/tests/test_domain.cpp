#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hartogs/domain.hpp"
#include "hartogs/grid.hpp"
#include "hartogs/zoo.hpp"

using namespace hartogs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("make_domain: product, bounds, crossing error") {
    Region base = Region::disc({0, 0}, 1.0);
    // product D(0,1) x A(1,2)
    HartogsDomain d = make_domain(base, RadialProfile("constant", {0.0}),
                                  RadialProfile("constant", {std::log(2.0)}),
                                  CaseTag::Case1);
    auto [rin, rout] = fiber_interval(d, {0.3, -0.2});
    CHECK(rin == doctest::Approx(1.0));
    CHECK(rout == doctest::Approx(2.0));
    CHECK(d.fiber_scale() == doctest::Approx(1.0));

    // inner e^{|z|^2} stays below outer 4
    CHECK_NOTHROW(make_domain(base, RadialProfile("quadratic-radial", {1.0}),
                              RadialProfile("constant", {std::log(4.0)}),
                              CaseTag::Case1));

    // inner 2 over outer 1 crosses
    CHECK_THROWS_WITH_AS(
        make_domain(base, RadialProfile("constant", {std::log(2.0)}),
                    RadialProfile("constant", {0.0}), CaseTag::Case1),
        doctest::Contains("profile crossing"), std::invalid_argument);
}

TEST_CASE("fiber normalization per case") {
    Region base = Region::disc({0, 0}, 1.0);
    // case-1 domain given below |w|=1 gets rescaled up to min radius 1
    HartogsDomain d1 = make_domain(base, RadialProfile("constant", {std::log(0.5)}),
                                   RadialProfile("constant", {std::log(0.9)}),
                                   CaseTag::Case1);
    CHECK(d1.min_inner_radius() == doctest::Approx(1.0));
    auto [a1, b1] = fiber_interval(d1, {0, 0});
    CHECK(a1 == doctest::Approx(1.0));
    CHECK(b1 == doctest::Approx(1.8));

    // case-2 domain given above |w|=1 gets rescaled down to max radius 1
    HartogsDomain d2 = make_domain(base, RadialProfile("constant", {std::log(2.0)}),
                                   RadialProfile("constant", {std::log(5.0)}),
                                   CaseTag::Case2);
    CHECK(d2.max_outer_radius() == doctest::Approx(1.0));

    for (const auto& e : zoo()) {
        HartogsDomain d = e.build();
        if (d.case_tag() == CaseTag::Case1)
            CHECK(d.min_inner_radius() >= 1.0 - 1e-12);
        else
            CHECK(d.max_outer_radius() <= 1.0 + 1e-12);
    }
}

TEST_CASE("fiber intervals of the zoo shell") {
    HartogsDomain z2 = zoo_entry("Z2").build();
    auto [r0, r1] = fiber_interval(z2, {0, 0});
    CHECK(r0 == doctest::Approx(1.0));
    CHECK(r1 == doctest::Approx(4.0));
    auto [ra, rb] = fiber_interval(z2, {1.0, 0.0});
    CHECK(ra == doctest::Approx(std::exp(1.0)));
    CHECK(rb == doctest::Approx(4.0));
    CHECK_THROWS(fiber_interval(z2, {1.5, 0.0}));
}

TEST_CASE("fiber distance: values, Lipschitz, endpoint zeros") {
    HartogsDomain d = zoo_entry("Z1").build();
    CHECK(fiber_distance(d, {0, 0}, 1.5) == doctest::Approx(0.5));
    CHECK(fiber_distance(d, {0, 0}, 1.1) == doctest::Approx(0.1));
    CHECK(fiber_distance(d, {0, 0}, 2.0) == doctest::Approx(0.0));
    CHECK(fiber_distance(d, {0, 0}, 1.0) == doctest::Approx(0.0));
    CHECK_THROWS(fiber_distance(d, {0, 0}, 2.5));
    CHECK_THROWS(fiber_distance(d, {0, 0}, 0.5));
    // 1-Lipschitz in |w| on samples
    double prev = fiber_distance(d, {0.2, 0.1}, 1.0);
    for (int k = 1; k <= 100; ++k) {
        double w = 1.0 + k * 0.01;
        double cur = fiber_distance(d, {0.2, 0.1}, w);
        CHECK(std::abs(cur - prev) <= 0.01 + 1e-12);
        prev = cur;
    }
}

TEST_CASE("strata classification") {
    HartogsDomain d = zoo_entry("Z1").build();

    SUBCASE("profile-derived boundaries land in stratum 1") {
        std::vector<std::pair<complexd, double>> pts = {
            {{0.0, 0.0}, 2.0}, {{0.5, 0.0}, 2.0}, {{0.0, 0.0}, 1.0}};
        auto out = classify_strata(d, pts, 10);
        for (const auto& s : out) {
            CHECK(std::abs(s.rho_w) == doctest::Approx(1.0));
            CHECK(s.stratum_index == 1);
        }
        CHECK(out[0].rho_w == doctest::Approx(1.0));   // outer side
        CHECK(out[2].rho_w == doctest::Approx(-1.0));  // inner side
    }

    SUBCASE("ellipsoid defining function, numeric rho_w") {
        const double a1 = 1.0, b1 = 3.0;
        std::function<double(complexd, double)> rho = [&](complexd z, double r) {
            return std::norm(z) / (a1 * a1) + r * r / (b1 * b1) - 1.0;
        };
        // top of the cap: |w| = b1, rho_w = 2/3 -> stratum 2
        std::vector<std::pair<complexd, double>> pts = {{{0.0, 0.0}, b1}};
        auto out = classify_strata(d, pts, 10, &rho);
        CHECK(out[0].rho_w == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
        CHECK(out[0].stratum_index == 2);

        // rim of the cap: |w| = 0 level, rho_w = 0 -> stratum 0
        std::vector<std::pair<complexd, double>> rim = {{{1.0, 0.0}, 0.0}};
        auto out0 = classify_strata(d, rim, 10, &rho);
        CHECK(out0[0].stratum_index == 0);

        // scale consistency: c * rho multiplies rho_w by c
        std::function<double(complexd, double)> rho3 = [&](complexd z, double r) {
            return 3.0 * rho(z, r);
        };
        auto out3 = classify_strata(d, pts, 10, &rho3);
        CHECK(out3[0].rho_w == doctest::Approx(2.0).epsilon(1e-8));
        CHECK(out3[0].stratum_index == 1);
    }

    SUBCASE("errors") {
        CHECK_THROWS(classify_strata(d, {{{0.0, 0.0}, 1.5}}, 10));  // not boundary
        CHECK_THROWS(classify_strata(d, {{{0.0, 0.0}, 2.0}}, 0));   // k_max < 1
    }
}

TEST_CASE("grids: spacing, mask fraction, coverage") {
    GridPtr g = make_grid(Region::disc({0, 0}, 1.0), 128);
    CHECK(g->spacing() == doctest::Approx(2.0 / 128));
    CHECK(g->mask_fraction() == doctest::Approx(kPi / 4.0).epsilon(0.02));

    GridPtr g2 = make_grid(Region::disc({0, 0}, 0.5), 64);
    CHECK(g2->spacing() == doctest::Approx(1.0 / 64));

    CHECK_THROWS(make_grid(Region::disc({0, 0}, 1.0), 4));
    CHECK_THROWS(Region::disc({0, 0}, 0.0));
    CHECK_THROWS(Region::annulus({0, 0}, 2.0, 1.0));

    // coverage-weighted area close to the exact disc area
    double area = 0.0;
    for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j) area += g->cell_weight(i, j);
    CHECK(area == doctest::Approx(kPi).epsilon(1e-4));
}

TEST_CASE("profile registry families and Laplacian classes") {
    RadialProfile c("constant", {0.7});
    CHECK(c.log_radius({0.3, 0.4}) == doctest::Approx(0.7));
    CHECK(c.laplacian_class() == LaplacianClass::Harmonic);

    RadialProfile q("quadratic-radial", {2.0});
    CHECK(q.log_radius({0.5, 0.0}) == doctest::Approx(0.5));
    CHECK(q.laplacian_class() == LaplacianClass::Subharmonic);

    RadialProfile e("ellipsoid-cap", {1.0, 3.0});
    CHECK(std::exp(e.log_radius({0, 0})) == doctest::Approx(3.0));
    CHECK(e.laplacian_class() == LaplacianClass::Superharmonic);

    RadialProfile pb("paraboloid-cap", {0.15, 0.1});
    CHECK(std::exp(pb.log_radius({0, 0})) == doctest::Approx(0.15));
    CHECK(pb.laplacian_class() == LaplacianClass::Subharmonic);

    RadialProfile mp("mollified-plateau", {0.25, 2.8});
    CHECK(mp.log_radius({0.4, 0.0}) == doctest::Approx(0.0));
    CHECK(mp.log_radius({1.0, 0.0}) ==
          doctest::Approx(2.8 * 0.75 * 0.75 * 0.75));
    CHECK(mp.laplacian_class() == LaplacianClass::Subharmonic);

    CHECK_THROWS(RadialProfile("nope", {1.0}));
    CHECK_THROWS(RadialProfile("constant", {1.0, 2.0}));

    // analytic derivative data vs numerical differences
    for (const RadialProfile* p : {&q, &e, &pb, &mp}) {
        complexd z{0.37, -0.22};
        double s = 1e-4;
        auto f = [&](complexd zz) { return p->log_radius(zz); };
        double fx = (-f(z + 2 * s) + 8 * f(z + s) - 8 * f(z - s) + f(z - 2 * s)) /
                    (12 * s);
        complexd is{0.0, s};
        double fy = (-f(z + 2.0 * is) + 8 * f(z + is) - 8 * f(z - is) +
                     f(z - 2.0 * is)) /
                    (12 * s);
        complexd dz = p->log_radius_dz(z);
        CHECK(dz.real() == doctest::Approx(0.5 * fx).epsilon(1e-6));
        CHECK(dz.imag() == doctest::Approx(-0.5 * fy).epsilon(1e-6));
        double lap = (f(z + s) + f(z - s) + f(z + is) + f(z - is) - 4.0 * f(z)) /
                     (s * s);
        CHECK(p->log_radius_lap(z) == doctest::Approx(lap).epsilon(1e-4));
    }
}
