#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "egrav/collapse.hpp"
#include "egrav/error.hpp"

using namespace egrav;

namespace {

const double hbar = codata2018.hbar;
const double mCs = 2.2069469514537008e-25;

}  // namespace

TEST_SUITE("collapse") {
    TEST_CASE("collapse law from the energy") {
        const auto law = CollapseLaw::from_energy(2.0 * hbar);
        CHECK(law.tau == doctest::Approx(0.5));
        CHECK(law.rate == doctest::Approx(2.0));
        const auto zero = CollapseLaw::from_energy(0.0);
        CHECK(std::isinf(zero.tau));
        CHECK(zero.rate == 0.0);
        CHECK_THROWS_AS(CollapseLaw::from_energy(-1.0), ValidationError);
    }

    TEST_CASE("survival probability") {
        const auto s0 = survival_probability(hbar, 0.0);
        CHECK(s0.ps == 1.0);
        CHECK(s0.pd == 0.0);
        CHECK_FALSE(std::signbit(s0.log_ps));
        const auto s1 = survival_probability(hbar, 1.0);
        CHECK(s1.ps == doctest::Approx(std::exp(-1.0)));
        CHECK(s1.ps + s1.pd == doctest::Approx(1.0));
        const auto tiny = survival_probability(hbar, 1e-12);
        CHECK(tiny.pd == doctest::Approx(1e-12).epsilon(1e-9));
        const auto late = survival_probability(hbar, 1e4);
        CHECK(late.log_ps == doctest::Approx(-1e4));
        CHECK(late.pd == 1.0);
        CHECK_THROWS_AS(survival_probability(hbar, -1.0), ValidationError);
    }

    TEST_CASE("reference lifetimes") {
        CHECK(sphere_lifetime(1e-14, 1e-6) == doctest::Approx(0.01316707141572899).epsilon(1e-9));
        CHECK(sphere_lifetime(1e-14, 1e-6, 1e3) == doctest::Approx(sphere_lifetime(1e-14, 1e-6)).epsilon(1e-6));
        CHECK(sphere_lifetime(1e-14, 1e-6, 2e-6) > sphere_lifetime(1e-14, 1e-6));
        CHECK(bec_touching_lifetime(mCs, 4e9, 1e-6, Regime::thomas_fermi) ==
              doctest::Approx(2.1834907157347026).epsilon(1e-9));
        CHECK(bec_touching_lifetime(mCs, 4e9, 1e-6, Regime::thomas_fermi, GammaParameter::alternative()) ==
              doctest::Approx(2.1834907157347026 / (64.0 * M_PI * M_PI)).epsilon(1e-9));
    }

    TEST_CASE("lifetime scales as R / M^2") {
        const double t = sphere_lifetime(1e-14, 1e-6);
        CHECK(sphere_lifetime(2e-14, 1e-6) == doctest::Approx(t / 4.0));
        CHECK(sphere_lifetime(1e-14, 3e-6) == doctest::Approx(3.0 * t));
    }

    TEST_CASE("NOON correlation under collapse") {
        const auto c0 = noon_correlation_collapse(4, hbar, 0.0);
        CHECK(c0.value == doctest::Approx(12.0));
        const auto c1 = noon_correlation_collapse(4, hbar, 2.0);
        CHECK(c1.value == doctest::Approx(12.0 * std::exp(-2.0)));
        const auto big = noon_correlation_collapse(200, hbar, 1.0);
        CHECK(big.log_value == doctest::Approx(std::lgamma(201.0) - std::log(2.0) - 1.0));
    }

    TEST_CASE("sampler is deterministic and partitions differ") {
        const auto a = sample_collapse_times(hbar, 100, 42);
        const auto b = sample_collapse_times(hbar, 100, 42);
        CHECK(a == b);
        CHECK(sample_collapse_times(hbar, 100, 43) != a);
        CHECK(sample_collapse_times(hbar, 100, 42, 1) != sample_collapse_times(hbar, 100, 42, 2));
        for (double t : a) CHECK(t >= 0.0);
    }

    TEST_CASE("sampler follows the exponential law") {
        const auto s = sample_collapse_times(hbar, 20000, 7);
        const double mean = std::accumulate(s.begin(), s.end(), 0.0) / s.size();
        CHECK(mean == doctest::Approx(1.0).epsilon(0.03));
        CHECK(ks_statistic(s, 1.0) < 0.015);
        CHECK(ks_statistic(s, 2.0) > 0.1);
    }

    TEST_CASE("KS statistic of exact quantiles") {
        std::vector<double> q;
        const int n = 1000;
        for (int i = 0; i < n; ++i) q.push_back(-std::log1p(-(i + 0.5) / n));
        CHECK(ks_statistic(q, 1.0) == doctest::Approx(0.5 / n).epsilon(1e-6));
    }
}
