#include <doctest.h>

#include <cmath>
#include <numbers>

#include "egrav/error.hpp"
#include "egrav/oracle.hpp"
#include "egrav/twomode.hpp"

using namespace egrav;

namespace {

std::vector<double> grid(double t_end, int n) {
    std::vector<double> t;
    for (int i = 0; i <= n; ++i) t.push_back(t_end * i / n);
    return t;
}

}  // namespace

TEST_SUITE("oracle") {
    TEST_CASE("voxel grids conserve mass") {
        const Shape sphere = Shape::sphere(1.0);
        const Shape pro = Shape::spheroid(0.6, 1.2);
        for (const auto& p : {DensityProfile::uniform(sphere, 2.0), DensityProfile::thomas_fermi(sphere, 2.0),
                              DensityProfile::gaussian(sphere, 2.0), DensityProfile::uniform(pro, 2.0),
                              DensityProfile::thomas_fermi(pro, 2.0)}) {
            const VoxelGrid g = build_voxel_grid(p, 1.0 / 12.0);
            CHECK(g.total_mass() == doctest::Approx(2.0).epsilon(5e-3));
            for (double m : g.mass) CHECK(m >= 0.0);
        }
    }

    TEST_CASE("self kernel is the equal-volume sphere value") {
        CHECK(voxel_self_kernel() == doctest::Approx(1.2 / std::cbrt(3.0 / (4.0 * std::numbers::pi))));
    }

    TEST_CASE("zero displacement and invalid displacements") {
        const Shape s = Shape::sphere(1.0);
        const auto d = DensityProfile::uniform(s, 1.0);
        CHECK(eg_voxel(d, SuperpositionConfig::make(s, 0.0, Axis::symmetry), 0.125) == 0.0);
        CHECK_THROWS_AS(eg_voxel(d, SuperpositionConfig::make(s, 0.3, Axis::symmetry), 0.125), ValidationError);
        CHECK_THROWS_AS(eg_voxel(d, SuperpositionConfig::make(s, 1.0, Axis::symmetry), 0.125, 1024), NumericalError);
        VoxelOptions o;
        o.cells = 4;
        CHECK_THROWS_AS(eg_bruteforce(d, SuperpositionConfig::make(s, 1.0, Axis::symmetry), o), ValidationError);
    }

    TEST_CASE("voxel error falls with the cell size") {
        const Shape s = Shape::sphere(1.0);
        const auto d = DensityProfile::uniform(s, 1.0);
        const auto cfg = SuperpositionConfig::make(s, 1.0, Axis::symmetry);
        const double exact = eg_uniform_sphere(0.5, 1.0, 1.0).value;
        const double e1 = std::abs(eg_voxel(d, cfg, 1.0 / 8.0) / exact - 1.0);
        const double e2 = std::abs(eg_voxel(d, cfg, 1.0 / 16.0) / exact - 1.0);
        CHECK(e2 < 0.7 * e1);
    }

    TEST_CASE("brute force matches the sphere closed forms") {
        const Shape s = Shape::sphere(1.0);
        VoxelOptions o;
        o.cells = 24;
        const auto u = eg_bruteforce(DensityProfile::uniform(s, 1.0), SuperpositionConfig::make(s, 1.0, Axis::symmetry), o);
        CHECK(u.method == Method::oracle);
        CHECK(u.value / eg_uniform_sphere(0.5, 1.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-2));
        const auto t = eg_bruteforce(DensityProfile::thomas_fermi(s, 1.0), SuperpositionConfig::make(s, 2.0, Axis::symmetry), o);
        CHECK(t.value / eg_tf_sphere(1.0, 1.0, 1.0).value == doctest::Approx(1.0).epsilon(1e-2));
    }

    TEST_CASE("brute force matches quadrature on a spheroid") {
        const Shape s = Shape::spheroid(0.8, 1.0);
        const auto d = DensityProfile::uniform(s, 1.0);
        const auto cfg = SuperpositionConfig::make(s, 1.0, Axis::equatorial);
        VoxelOptions o;
        o.cells = 24;
        CHECK(eg_bruteforce(d, cfg, o).value / eg_numeric(d, cfg).value == doctest::Approx(1.0).epsilon(1e-2));
    }

    TEST_CASE("Lindblad trace is physical and starts at N!/2") {
        for (Channel c : {Channel::three_body, Channel::thermal, Channel::foreign}) {
            const int N = 3;
            const double k = lindblad_coherence_rate(c, N, 1.0);
            const auto tr = lindblad_decay(c, N, 1.0, grid(1.0 / k, 8));
            CHECK(tr.correlation.front().real() == doctest::Approx(3.0));
            CHECK(tr.max_trace_drift < 1e-10);
            CHECK(tr.max_hermiticity_error < 1e-10);
            for (std::size_t i = 1; i < tr.correlation.size(); ++i)
                CHECK(std::abs(tr.correlation[i]) < std::abs(tr.correlation[i - 1]));
        }
    }

    TEST_CASE("Lindblad decay follows the master-equation rate") {
        for (Channel c : {Channel::three_body, Channel::thermal, Channel::foreign})
            for (int N : {2, 4}) {
                const double k = lindblad_coherence_rate(c, N, 0.5);
                if (k == 0.0) continue;
                const auto tr = lindblad_decay(c, N, 0.5, grid(2.0 / k, 10));
                CHECK(fit_decay_exponent(tr) == doctest::Approx(k).epsilon(1e-4));
            }
        CHECK(lindblad_coherence_rate(Channel::three_body, 2, 1.0) == 0.0);
        CHECK(lindblad_coherence_rate(Channel::foreign, 5, 2.0) == doctest::Approx(10.0));
    }

    TEST_CASE("Hamiltonian phase leaves the modulus unchanged") {
        const int N = 2;
        const auto H = build_full_space_hamiltonian({0.0, 1.0}, N);
        LindbladOptions o;
        o.hamiltonian = H;
        const auto tr = lindblad_decay(Channel::foreign, N, 0.0, grid(1.0, 4), o);
        CHECK(std::abs(tr.correlation.back()) == doctest::Approx(1.0).epsilon(1e-6));
    }

    TEST_CASE("Lindblad input validation") {
        CHECK_THROWS_AS(lindblad_decay(Channel::foreign, lindblad_max_n + 1, 1.0, grid(1.0, 2)), ValidationError);
        CHECK_THROWS_AS(lindblad_decay(Channel::foreign, 2, -1.0, grid(1.0, 2)), ValidationError);
        CHECK_THROWS_AS(lindblad_decay(Channel::foreign, 2, 1.0, {}), ValidationError);
        CHECK_THROWS_AS(lindblad_decay(Channel::foreign, 2, 1.0, {1.0, 0.5}), ValidationError);
    }
}
