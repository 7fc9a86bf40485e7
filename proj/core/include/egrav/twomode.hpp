#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace egrav {

inline constexpr int twomode_max_n = 64;

// Amplitudes over |n, N-n>, n = 0..N (n atoms in the left mode).
struct TwoModeState {
    int N = 0;
    Eigen::VectorXcd amp;

    double norm() const { return amp.norm(); }
};

struct BoseHubbardParams {
    double E_LR = 0.0;  // J
    double U = 0.0;     // J
};

// Two-mode Hamiltonian including cross-well collision terms. All energies in J.
// The U_LLRR term is taken as pair tunnelling aL^dag^2 aR^2 + h.c., which conserves N.
struct ExtendedParams {
    double xi_L = 0.0, xi_R = 0.0;
    double J_LR = 0.0;
    double U_L = 0.0, U_R = 0.0;
    double U_LRLR = 0.0;
    double U_LLLR = 0.0, U_RRRL = 0.0;
    double U_LLRR = 0.0;

    static ExtendedParams from(const BoseHubbardParams& p);
};

Eigen::MatrixXd build_hamiltonian(const BoseHubbardParams& p, int N);
Eigen::MatrixXd build_extended_hamiltonian(const ExtendedParams& p, int N);

// Same operator on the (N+1)^2 space |nL, nR>, nL, nR = 0..N, index nL*(N+1)+nR.
Eigen::MatrixXcd build_full_space_hamiltonian(const BoseHubbardParams& p, int N);

TwoModeState noon_state(int N);
TwoModeState fock_state(int N, int n_left);

// <aL^dag^N aR^N>
std::complex<double> n_particle_correlation(const TwoModeState& s);
std::complex<double> n_particle_correlation(const Eigen::MatrixXcd& rho, int N);

// N!/2 in integer arithmetic; 2 <= N <= 20.
std::uint64_t noon_correlation_exact(int N);

enum class Branch { ground, highest };

struct FidelityResult {
    double fidelity = 0.0;
    bool degenerate = false;
    double gap = 0.0;  // J, between the extremal pair
    std::vector<double> eigenvalues;
};

FidelityResult ground_state_fidelity_with_noon(const BoseHubbardParams& p, int N, Branch branch = Branch::ground,
                                               double degeneracy_tol = 1e-9);

}  // namespace egrav
