#include <doctest.h>

#include <cmath>
#include <numbers>

#include "egrav/error.hpp"
#include "egrav/self_energy.hpp"

using namespace egrav;

namespace {

constexpr double pi = std::numbers::pi;
const double G = codata2018.G;

SelfEnergyResult numeric(const DensityProfile& p, double b, Axis axis = Axis::symmetry, double tol = 1e-9) {
    return eg_numeric(p, SuperpositionConfig::make(p.shape, b, axis), {tol, 20});
}

}  // namespace

TEST_SUITE("self_energy") {
    TEST_CASE("sphere closed forms at touching and infinity") {
        CHECK(eg_uniform_sphere(1.0, 1.0, 1.0).dimensionless == doctest::Approx(0.7).epsilon(1e-14));
        CHECK(eg_tf_sphere(1.0, 1.0, 1.0).dimensionless == doctest::Approx(13.0 / 14.0).epsilon(1e-14));
        CHECK(eg_uniform_sphere(1e12, 1.0, 1.0).dimensionless == doctest::Approx(1.2));
        CHECK(eg_tf_sphere(1e12, 1.0, 1.0).dimensionless == doctest::Approx(10.0 / 7.0));
        CHECK(eg_uniform_sphere(0.0, 1.0, 1.0).value == 0.0);
        CHECK(eg_tf_sphere(0.0, 1.0, 1.0).value == 0.0);
        const auto r = eg_uniform_sphere(1.0, 2.0, 3.0);
        CHECK(r.value == doctest::Approx(0.7 * G * 4.0 / 3.0));
        CHECK(r.ref_length == 3.0);
    }

    TEST_CASE("sphere branches meet at touching") {
        for (auto f : {&eg_uniform_sphere, &eg_tf_sphere}) {
            const double lo = f(1.0 - 1e-8, 1.0, 1.0, {}).dimensionless;
            const double hi = f(1.0 + 1e-8, 1.0, 1.0, {}).dimensionless;
            CHECK(lo == doctest::Approx(hi).epsilon(1e-7));
        }
    }

    TEST_CASE("Gaussian sphere values, limits and monotonicity") {
        CHECK(eg_gaussian_sphere(1.0, 1.0, 1.0).dimensionless == doctest::Approx(0.32063469275104456).epsilon(1e-13));
        CHECK(eg_gaussian_sphere(1e8, 1.0, 1.0).dimensionless == doctest::Approx(std::sqrt(2.0 / pi)).epsilon(1e-8));
        CHECK(eg_gaussian_sphere(0.0, 1.0, 1.0).dimensionless == 0.0);
        const double x = 0.1 / std::sqrt(2.0);
        CHECK(eg_gaussian_sphere(x * (1 - 1e-12), 1, 1).dimensionless ==
              doctest::Approx(eg_gaussian_sphere(x * (1 + 1e-12), 1, 1).dimensionless).epsilon(1e-9));
        double prev = 0.0;
        for (double l = 1e-3; l < 50.0; l *= 1.05) {
            const double v = eg_gaussian_sphere(l, 1.0, 1.0).dimensionless;
            CHECK(v > prev);
            prev = v;
        }
    }

    TEST_CASE("gamma rescales linearly") {
        const double base = eg_tf_sphere(1.0, 1.0, 1.0).value;
        CHECK(eg_tf_sphere(1.0, 1.0, 1.0, GammaParameter::alternative()).value ==
              doctest::Approx(64.0 * pi * pi * base));
    }

    TEST_CASE("invalid inputs are rejected") {
        CHECK_THROWS_AS(eg_uniform_sphere(-1.0, 1.0, 1.0), ValidationError);
        CHECK_THROWS_AS(eg_tf_sphere(1.0, 0.0, 1.0), ValidationError);
        CHECK_THROWS_AS(eg_gaussian_sphere(1.0, 1.0, -1.0), ValidationError);
        CHECK_THROWS_AS(limits::uniform_prolate_C(0.5), ValidationError);
        const Shape s = Shape::spheroid(0.5, 1.0);
        CHECK_THROWS_AS(eg_numeric(DensityProfile::uniform(s, 1.0), SuperpositionConfig::make(s, 0.1, Axis::symmetry),
                                   {1e-12, 10}),
                        ValidationError);
    }

    TEST_CASE("quadrature reproduces the sphere closed forms") {
        const Shape s = Shape::sphere(1.0);
        for (double l : {0.25, 0.5, 1.0, 2.0}) {
            CHECK(numeric(DensityProfile::uniform(s, 1.0), 2 * l).dimensionless ==
                  doctest::Approx(eg_uniform_sphere(l, 1, 1).dimensionless).epsilon(1e-8));
            CHECK(numeric(DensityProfile::thomas_fermi(s, 1.0), 2 * l).dimensionless ==
                  doctest::Approx(eg_tf_sphere(l, 1, 1).dimensionless).epsilon(1e-8));
            CHECK(numeric(DensityProfile::gaussian(s, 1.0), 2 * l).dimensionless ==
                  doctest::Approx(eg_gaussian_sphere(l, 1, 1).dimensionless).epsilon(1e-8));
        }
        CHECK(numeric(DensityProfile::uniform(s, 1.0), 0.0).value == 0.0);
    }

    TEST_CASE("infinite separation") {
        CHECK(eg_infinite_separation(DensityProfile::uniform(Shape::sphere(1.0), 1.0)).dimensionless == doctest::Approx(1.2));
        CHECK(eg_infinite_separation(DensityProfile::gaussian(Shape::sphere(1.0), 1.0)).dimensionless ==
              doctest::Approx(std::sqrt(2.0 / pi)));
        for (const Shape s : {Shape::sphere(1.0), Shape::spheroid(0.5, 1.0), Shape::spheroid(1.0, 0.5)}) {
            const double u = eg_infinite_separation(DensityProfile::uniform(s, 1.0)).value;
            const double t = eg_infinite_separation(DensityProfile::thomas_fermi(s, 1.0)).value;
            CHECK(t / u == doctest::Approx(25.0 / 21.0).epsilon(1e-12));
        }
        const Shape o = Shape::spheroid(1.0, 0.8);  // e = 0.6
        CHECK(eg_infinite_separation(DensityProfile::uniform(o, 1.0)).value ==
              doctest::Approx(1.2 * G * std::asin(0.6) / 0.6).epsilon(1e-13));
        const Shape p = Shape::spheroid(0.8, 1.0);
        CHECK(eg_infinite_separation(DensityProfile::uniform(p, 1.0)).value ==
              doctest::Approx(1.2 * G * std::atanh(0.6) / 0.6).epsilon(1e-13));
    }

    TEST_CASE("infinite separation agrees with quadrature at large displacement") {
        for (const Shape s : {Shape::spheroid(0.5, 1.0), Shape::spheroid(1.0, 0.5)})
            for (Axis ax : {Axis::symmetry, Axis::equatorial}) {
                const auto d = DensityProfile::uniform(s, 1.0);
                CHECK(numeric(d, 1e3, ax, 1e-8).value / eg_infinite_separation(d).value == doctest::Approx(1.0).epsilon(1e-3));
            }
    }

    TEST_CASE("limit branches meet at their seams") {
        CHECK(limits::uniform_prolate_A(1.0) == doctest::Approx(20 * std::log(2.0) - 13).epsilon(1e-15));
        CHECK(limits::uniform_prolate_A(1.0) == doctest::Approx(limits::uniform_prolate_C(1.0)).epsilon(1e-13));
        CHECK(limits::uniform_prolate_B(1.0) == doctest::Approx(1.0));
        CHECK(limits::tf_prolate_A(1.0) / 24.0 == doctest::Approx(limits::tf_prolate_C(1.0) / 1536.0).epsilon(1e-12));
        CHECK(limits::tf_prolate_B(1.0) == doctest::Approx(1.0));
        // Upper branches switch to their tail series at lambda = 2.5.
        for (auto f : {&limits::uniform_prolate_C, &limits::tf_prolate_C, &limits::uniform_oblate_C})
            CHECK(f(2.5 * (1 - 1e-15)) == doctest::Approx(f(2.5)).epsilon(1e-12));
        CHECK(limits::tf_prolate_C(3.0) == doctest::Approx(884.02075728893525).epsilon(1e-14));
        CHECK(limits::tf_prolate_C(1.5) == doctest::Approx(693.78746500931028).epsilon(1e-13));
    }

    TEST_CASE("oblate seam jump shrinks like eps^2 ln eps") {
        double prev = 1.0;
        for (double e : {0.1, 0.01, 0.001}) {
            const double jump = std::abs(limits::uniform_oblate_A(e, e) / (limits::uniform_oblate_C(e) / 4.0 - e) - 1.0);
            CHECK(jump < 5.0 * e * e * std::abs(std::log(e)));
            CHECK(jump < prev);
            prev = jump;
        }
    }

    TEST_CASE("prolate limits track quadrature") {
        for (double eps : {0.01, 0.003})
            for (double l : {0.5, 1.0, 2.0}) {
                const Shape s = Shape::spheroid(eps, 1.0);
                const auto cfg = SuperpositionConfig::make(s, 2 * l, Axis::symmetry);
                const double tol = 2.0 * eps * eps;
                CHECK(eg_uniform_spheroid_limit(cfg, 1.0).value / numeric(DensityProfile::uniform(s, 1.0), 2 * l).value ==
                      doctest::Approx(1.0).epsilon(tol));
                CHECK(eg_tf_prolate_limit(l, 1.0, eps, eps).value / numeric(DensityProfile::thomas_fermi(s, 1.0), 2 * l).value ==
                      doctest::Approx(1.0).epsilon(tol));
            }
    }

    TEST_CASE("oblate limit tracks quadrature") {
        for (double eps : {0.01, 0.003})
            for (double l : {0.5, 1.0, 2.0}) {
                const Shape s = Shape::spheroid(1.0, eps);
                const auto cfg = SuperpositionConfig::make(s, 2 * l * eps, Axis::symmetry);
                const double tol = 3.0 * eps * eps * std::abs(std::log(eps));
                CHECK(eg_uniform_spheroid_limit(cfg, 1.0).value /
                          numeric(DensityProfile::uniform(s, 1.0), 2 * l * eps).value ==
                      doctest::Approx(1.0).epsilon(tol));
            }
        const Shape s = Shape::spheroid(0.5, 1.0);
        CHECK_THROWS_AS(eg_uniform_spheroid_limit(SuperpositionConfig::make(s, 0.1, Axis::equatorial), 1.0), ValidationError);
    }

    TEST_CASE("quadrature is quadratic at small displacement") {
        const auto d = DensityProfile::uniform(Shape::spheroid(0.7, 1.0), 1.0);
        const double e1 = numeric(d, 1e-2, Axis::symmetry, 1e-7).value;
        const double e2 = numeric(d, 2e-2, Axis::symmetry, 1e-7).value;
        CHECK(e2 / e1 == doctest::Approx(4.0).epsilon(1e-2));
    }
}
