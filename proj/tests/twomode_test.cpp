#include <doctest.h>

#include <cmath>

#include "egrav/error.hpp"
#include "egrav/twomode.hpp"

using namespace egrav;

TEST_SUITE("twomode") {
    TEST_CASE("exact NOON correlation") {
        std::uint64_t f = 1;
        for (int N = 2; N <= 20; ++N) {
            f *= static_cast<std::uint64_t>(N);
            CHECK(noon_correlation_exact(N) == f / 2);
        }
        CHECK(noon_correlation_exact(20) == 1216451004088320000ULL);
        CHECK_THROWS_AS(noon_correlation_exact(21), ValidationError);
        CHECK_THROWS_AS(noon_correlation_exact(1), ValidationError);
    }

    TEST_CASE("correlation of NOON and Fock states") {
        for (int N : {2, 5, 10, 20}) {
            const auto c = n_particle_correlation(noon_state(N));
            CHECK(c.real() == doctest::Approx(static_cast<double>(noon_correlation_exact(N))).epsilon(1e-15));
            CHECK(c.imag() == 0.0);
            CHECK(std::abs(n_particle_correlation(fock_state(N, N / 2))) == 0.0);
        }
        const auto s = noon_state(4);
        const Eigen::MatrixXcd rho = s.amp * s.amp.adjoint();
        CHECK(n_particle_correlation(rho, 4).real() == doctest::Approx(12.0));
        CHECK(noon_state(7).norm() == doctest::Approx(1.0));
        CHECK_THROWS_AS(noon_state(twomode_max_n + 1), ValidationError);
        CHECK_THROWS_AS(fock_state(3, 4), ValidationError);
    }

    TEST_CASE("Bose-Hubbard matrix elements") {
        const int N = 5;
        const auto H = build_hamiltonian({0.3, -1.7}, N);
        CHECK((H - H.transpose()).norm() == 0.0);
        for (int n = 0; n <= N; ++n) {
            const double m = N - n;
            CHECK(H(n, n) == doctest::Approx(-0.85 * (n * (n - 1.0) + m * (m - 1.0))));
            if (n < N) CHECK(H(n + 1, n) == doctest::Approx(0.3 * std::sqrt((n + 1.0) * m)));
            if (n + 2 <= N) CHECK(H(n + 2, n) == 0.0);
        }
    }

    TEST_CASE("cross-well collision terms") {
        const int N = 6;
        ExtendedParams a;
        a.U_LLLR = 1.0;
        ExtendedParams b;
        b.U_RRRL = 1.0;
        const auto Ha = build_extended_hamiltonian(a, N);
        const auto Hb = build_extended_hamiltonian(b, N);
        const double ka = Ha(2, 1) / (1.0 * std::sqrt(2.0 * 5.0));
        const double kb = Hb(1, 0) / (5.0 * std::sqrt(1.0 * 6.0));
        for (int n = 1; n < N; ++n) {
            const double m = N - n;
            CHECK(Ha(n + 1, n) == doctest::Approx(ka * n * std::sqrt((n + 1.0) * m)));
            CHECK(Hb(n + 1, n) == doctest::Approx(kb * (m - 1.0) * std::sqrt((n + 1.0) * m)));
        }
        ExtendedParams c;
        c.U_LLRR = 0.5;
        const auto Hc = build_extended_hamiltonian(c, N);
        CHECK(Hc(3, 1) == doctest::Approx(0.5 * std::sqrt(2.0 * 3.0 * 5.0 * 4.0)));
        CHECK(Hc(2, 1) == 0.0);
        ExtendedParams d;
        d.U_LRLR = 1.0;
        d.xi_L = 2.0;
        const auto Hd = build_extended_hamiltonian(d, N);
        CHECK(Hd(2, 2) == doctest::Approx(2.0 * 2.0 + 4.0 * 2.0 * 4.0));
    }

    TEST_CASE("full-space Hamiltonian reduces to the fixed-N block") {
        const int N = 4;
        const BoseHubbardParams p{0.7, -0.4};
        const auto full = build_full_space_hamiltonian(p, N);
        const auto fixed = build_hamiltonian(p, N);
        CHECK((full - full.adjoint()).norm() == 0.0);
        for (int n = 0; n <= N; ++n)
            for (int k = 0; k <= N; ++k)
                CHECK(full(n * (N + 1) + (N - n), k * (N + 1) + (N - k)).real() == doctest::Approx(fixed(n, k)));
    }

    TEST_CASE("attractive ground state is a NOON state") {
        const auto r = ground_state_fidelity_with_noon({1.0, -1e4}, 8);
        CHECK(r.degenerate);
        CHECK(r.fidelity > 0.99);
        CHECK(r.eigenvalues.size() == 9);
        const auto free = ground_state_fidelity_with_noon({1.0, 0.0}, 8);
        CHECK_FALSE(free.degenerate);
        CHECK(free.fidelity == doctest::Approx(1.0 / 128.0).epsilon(1e-10));
        const auto rep = ground_state_fidelity_with_noon({1.0, 1e4}, 8, Branch::highest);
        CHECK(rep.fidelity > 0.99);
    }
}
