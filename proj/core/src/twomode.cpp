#include "egrav/twomode.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "egrav/error.hpp"

namespace egrav {

namespace {

void check_n(int N) {
    if (N < 1 || N > twomode_max_n)
        throw ValidationError("two-mode atom number must be in [1, " + std::to_string(twomode_max_n) + "], got " +
                              std::to_string(N));
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

ExtendedParams ExtendedParams::from(const BoseHubbardParams& p) {
    ExtendedParams e;
    e.J_LR = p.E_LR;
    e.U_L = e.U_R = 0.5 * p.U;
    return e;
}

Eigen::MatrixXd build_extended_hamiltonian(const ExtendedParams& p, int N) {
    check_n(N);
    Eigen::MatrixXd H = Eigen::MatrixXd::Zero(N + 1, N + 1);
    for (int n = 0; n <= N; ++n) {
        const double m = N - n;
        H(n, n) = p.xi_L * n + p.xi_R * m + p.U_L * n * (n - 1.0) + p.U_R * m * (m - 1.0) + 4.0 * p.U_LRLR * n * m;
        if (n < N) {
            // <n+1, m-1| aL^dag aR |n, m>
            const double hop = std::sqrt((n + 1.0) * m);
            const double v = p.J_LR * hop + 2.0 * p.U_LLLR * n * hop + 2.0 * p.U_RRRL * (m - 1.0) * hop;
            H(n + 1, n) += v;
            H(n, n + 1) += v;
        }
        if (n + 2 <= N) {
            const double pair = std::sqrt((n + 1.0) * (n + 2.0) * m * (m - 1.0));
            H(n + 2, n) += p.U_LLRR * pair;
            H(n, n + 2) += p.U_LLRR * pair;
        }
    }
    return H;
}

Eigen::MatrixXd build_hamiltonian(const BoseHubbardParams& p, int N) {
    check_n(N);
    return build_extended_hamiltonian(ExtendedParams::from(p), N);
}

Eigen::MatrixXcd build_full_space_hamiltonian(const BoseHubbardParams& p, int N) {
    check_n(N);
    const Eigen::Index D = Eigen::Index(N + 1) * (N + 1);
    Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(D, D);
    const auto idx = [N](int nl, int nr) { return Eigen::Index(nl) * (N + 1) + nr; };
    for (int nl = 0; nl <= N; ++nl)
        for (int nr = 0; nr <= N; ++nr) {
            H(idx(nl, nr), idx(nl, nr)) = 0.5 * p.U * (nl * (nl - 1.0) + nr * (nr - 1.0));
            if (nl < N && nr > 0) {
                const double v = p.E_LR * std::sqrt((nl + 1.0) * nr);
                H(idx(nl + 1, nr - 1), idx(nl, nr)) = v;
                H(idx(nl, nr), idx(nl + 1, nr - 1)) = v;
            }
        }
    return H;
}

TwoModeState noon_state(int N) {
    check_n(N);
    TwoModeState s{N, Eigen::VectorXcd::Zero(N + 1)};
    s.amp(0) = s.amp(N) = 1.0 / std::numbers::sqrt2;
    return s;
}

TwoModeState fock_state(int N, int n_left) {
    check_n(N);
    if (n_left < 0 || n_left > N) throw ValidationError("Fock occupation out of range");
    TwoModeState s{N, Eigen::VectorXcd::Zero(N + 1)};
    s.amp(n_left) = 1.0;
    return s;
}

std::complex<double> n_particle_correlation(const TwoModeState& s) {
    if (s.amp.size() != s.N + 1) throw ValidationError("state dimension does not match N");
    return std::conj(s.amp(s.N)) * s.amp(0) * factorial(s.N);
}

std::complex<double> n_particle_correlation(const Eigen::MatrixXcd& rho, int N) {
    if (rho.rows() != N + 1 || rho.cols() != N + 1) throw ValidationError("density matrix dimension does not match N");
    return rho(0, N) * factorial(N);
}

std::uint64_t noon_correlation_exact(int N) {
    if (N < 2 || N > 20) throw ValidationError("exact N!/2 is an integer for 2 <= N <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= N; ++i) f *= std::uint64_t(i);
    return f / 2;
}

FidelityResult ground_state_fidelity_with_noon(const BoseHubbardParams& p, int N, Branch branch,
                                               double degeneracy_tol) {
    const Eigen::MatrixXd H = build_hamiltonian(p, N);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    if (es.info() != Eigen::Success) throw NumericalError("eigen-decomposition failed");
    const Eigen::VectorXd& ev = es.eigenvalues();
    const Eigen::MatrixXd& V = es.eigenvectors();

    FidelityResult r;
    r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
    const Eigen::Index i0 = branch == Branch::ground ? 0 : N;
    const Eigen::Index i1 = branch == Branch::ground ? 1 : N - 1;
    r.gap = std::abs(ev(i1) - ev(i0));
    const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
    r.degenerate = r.gap <= degeneracy_tol * scale;

    const Eigen::VectorXd noon = noon_state(N).amp.real();
    const double f0 = std::pow(V.col(i0).dot(noon), 2);
    r.fidelity = r.degenerate ? f0 + std::pow(V.col(i1).dot(noon), 2) : f0;
    return r;
}

}  // namespace egrav
