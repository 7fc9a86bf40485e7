#include <doctest.h>

#include <cmath>
#include <numbers>

#include "egrav/error.hpp"
#include "egrav/feasibility.hpp"

using namespace egrav;

TEST_SUITE("feasibility") {
    TEST_CASE("entanglement phases") {
        const Phases p = entanglement_phases(1e-14, 200e-6, 250e-6, 2.5);
        CHECK(p.phi1 == doctest::Approx(-3.95557460644712070).epsilon(1e-9));
        CHECK(p.phi2 == doctest::Approx(-0.43950828960523563).epsilon(1e-9));
        CHECK(p.sum() == doctest::Approx(-4.39508289605235634).epsilon(1e-9));
        CHECK(entanglement_phases(1e-14, 200e-6, 0.0, 2.5).sum() == 0.0);
    }

    TEST_CASE("Casimir separation bound") {
        CHECK(casimir_min_separation(1e-14, 1e-6, 5.0) == doctest::Approx(174.57772744183298e-6).epsilon(1e-9));
        CHECK(casimir_min_separation(1e-14, 2e-6, 5.0) == doctest::Approx(2.0 * casimir_min_separation(1e-14, 1e-6, 5.0)));
        CHECK_THROWS_AS(casimir_min_separation(1e-14, 1e-6, 1.0), ValidationError);
    }

    TEST_CASE("every preset evaluates") {
        for (const auto& name : preset_names()) {
            const Scenario s = preset(name);
            CHECK(s.name == name);
            const RateReport r = evaluate(s);
            CHECK(r.E_G > 0.0);
            CHECK(r.tau * r.collapse_rate == doctest::Approx(1.0));
            CHECK(r.ratio > 0.0);
        }
        CHECK_THROWS_AS(preset("no-such-preset"), ValidationError);
    }

    TEST_CASE("touching condensate reference scenario") {
        const RateReport r = evaluate(preset("cs-4e9-1um"));
        CHECK(r.tau == doctest::Approx(2.1834907157347026).epsilon(1e-9));
    }

    TEST_CASE("three-body exponent of the reduced scattering-length preset") {
        const RateReport r = evaluate(preset("tf-threebody"));
        CHECK(r.channels.Gamma3 / r.collapse_rate == doctest::Approx(115.8765187714).epsilon(1e-8));
    }

    TEST_CASE("gamma rescales the collapse rate only") {
        const Scenario s = preset("gamma-8pi");
        Scenario base = s;
        base.gamma = 1.0 / (8.0 * std::numbers::pi);
        const RateReport a = evaluate(s), b = evaluate(base);
        CHECK(a.E_G / b.E_G == doctest::Approx(64.0 * std::numbers::pi * std::numbers::pi));
        CHECK(a.channels.total() == doctest::Approx(b.channels.total()));
    }

    TEST_CASE("verdict follows the ratio") {
        for (const auto& name : preset_names()) {
            Scenario s = preset(name);
            for (double th : {2.0, 10.0, 1e3}) {
                s.threshold = th;
                const RateReport r = evaluate(s);
                const Verdict v = r.ratio > th    ? Verdict::collapse_dominated
                                  : r.ratio < 1.0 ? Verdict::decoherence_dominated
                                                  : Verdict::marginal;
                CHECK(r.verdict == v);
            }
            s.threshold = 1.0;
            CHECK_THROWS_AS(evaluate(s), ValidationError);
        }
    }

    TEST_CASE("verdict is monotone in N at fixed density") {
        Scenario s = preset("tf-threebody");
        s.temperature = 0.0;
        s.pressure = 0.0;
        const double N0 = s.N, R0 = s.R;
        double prev = 0.0;
        int prev_rank = -1;
        for (double f : {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0, 1e3}) {
            s.N = N0 * f;
            s.R = R0 * std::cbrt(f);
            const RateReport r = evaluate(s);
            CHECK(r.ratio > prev);
            const int rank = r.verdict == Verdict::decoherence_dominated ? 0 : r.verdict == Verdict::marginal ? 1 : 2;
            CHECK(rank >= prev_rank);
            prev = r.ratio;
            prev_rank = rank;
        }
    }

    TEST_CASE("crossover temperature balances the rates") {
        Scenario s = preset("gaussian-thermal");
        const double T = crossover_temperature(s);
        s.temperature = T;
        CHECK(evaluate(s).ratio == doctest::Approx(1.0).epsilon(1e-6));
        s.temperature = 2.0 * T;
        CHECK(evaluate(s).ratio < 1.0);
    }

    TEST_CASE("scan axes") {
        const auto lin = axis_values({"N", 1.0, 2.0, 5, AxisScale::linear});
        REQUIRE(lin.size() == 5);
        CHECK(lin.front() == 1.0);
        CHECK(lin.back() == 2.0);
        const auto lg = axis_values({"T", 1e-12, 1e-6, 7, AxisScale::log});
        CHECK(lg.front() == 1e-12);
        CHECK(lg.back() == 1e-6);
        CHECK(lg[3] == doctest::Approx(1e-9));
        CHECK(axis_values({"N", 3.0, 3.0, 1, AxisScale::linear}) == std::vector<double>{3.0});
        CHECK_THROWS_AS(axis_values({"T", 0.0, 1.0, 3, AxisScale::log}), ValidationError);
        CHECK_THROWS_AS(axis_values({"T", 2.0, 1.0, 3, AxisScale::linear}), ValidationError);
        Scenario s;
        CHECK_THROWS_AS(set_parameter(s, "colour", 1.0), ValidationError);
        set_parameter(s, "P", 1e-9);
        CHECK(s.pressure == 1e-9);
    }

    TEST_CASE("two-axis scan") {
        ScanRequest req{preset("cs-4e9-1um"), {{"N", 1e9, 4e9, 3, AxisScale::log}, {"T", 1e-10, 1e-8, 4, AxisScale::log}}};
        const auto pts = dominance_scan(req);
        REQUIRE(pts.size() == 12);
        CHECK(pts.front().values == std::vector<double>{1e9, 1e-10});
        CHECK(pts.back().values == std::vector<double>{4e9, 1e-8});
        req.axes = {{"N", 1.0, 2.0, 1001, AxisScale::linear}, {"T", 1e-10, 1e-8, 1001, AxisScale::log}};
        CHECK_THROWS_AS(dominance_scan(req), ValidationError);
    }
}
