#include "egrav/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "egrav/error.hpp"

namespace egrav {

namespace {

constexpr double pi = std::numbers::pi;

struct FftwBuffer {
    explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {
        if (!ptr) throw NumericalError("voxel oracle: allocation of " + std::to_string(bytes) + " bytes failed");
    }
    ~FftwBuffer() { fftw_free(ptr); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    void* ptr;
};

struct Extent {
    double e[3];
};

Extent grid_extent(const DensityProfile& p) {
    const double s = p.regime == Regime::gaussian ? gaussian_box_widths : 1.0;
    return {{p.shape.a * s, p.shape.a * s, p.shape.c * s}};
}

// Smallest and largest ellipsoidal radius m^2 over an axis-aligned box.
void m2_range(const double lo[3], const double hi[3], const double ax[3], double& mn, double& mx) {
    mn = mx = 0.0;
    for (int d = 0; d < 3; ++d) {
        const double near = lo[d] > 0.0 ? lo[d] : (hi[d] < 0.0 ? hi[d] : 0.0);
        const double far = std::max(std::abs(lo[d]), std::abs(hi[d]));
        mn += near * near / (ax[d] * ax[d]);
        mx += far * far / (ax[d] * ax[d]);
    }
}

template <class F>
double gauss_cell(const double c[3], double h, int order, F&& rho) {
    static const double x2[] = {-0.5 / std::numbers::sqrt3, 0.5 / std::numbers::sqrt3};
    static const double w2[] = {0.5, 0.5};
    static const double x3[] = {-0.5 * std::sqrt(0.6), 0.0, 0.5 * std::sqrt(0.6)};
    static const double w3[] = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};
    const double* x = order == 2 ? x2 : x3;
    const double* w = order == 2 ? w2 : w3;
    double sum = 0.0;
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j)
            for (int k = 0; k < order; ++k)
                sum += w[i] * w[j] * w[k] * rho(c[0] + x[i] * h, c[1] + x[j] * h, c[2] + x[k] * h);
    return sum;
}

template <class F>
double midpoint_cell(const double c[3], double h, int s, F&& rho) {
    double sum = 0.0;
    const double step = h / s;
    const double start = -0.5 * h + 0.5 * step;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j)
            for (int k = 0; k < s; ++k)
                sum += rho(c[0] + start + i * step, c[1] + start + j * step, c[2] + start + k * step);
    return sum / (s * s * s);
}

}  // namespace

double VoxelGrid::total_mass() const {
    long double s = 0.0L;
    for (double m : mass) s += m;
    return static_cast<double>(s);
}

double voxel_self_kernel() { return 1.2 / std::cbrt(3.0 / (4.0 * pi)); }

VoxelGrid build_voxel_grid(const DensityProfile& p, double h) {
    if (!(h > 0.0)) throw ValidationError("cell size must be > 0");
    VoxelGrid g;
    g.h = h;
    const Extent ext = grid_extent(p);
    for (int d = 0; d < 3; ++d) {
        g.n[d] = 2 * static_cast<int>(std::ceil(ext.e[d] / h - 1e-12));
        g.origin[d] = -0.5 * g.n[d] * h + 0.5 * h;
    }
    g.mass.assign(std::size_t(g.n[0]) * g.n[1] * g.n[2], 0.0);

    const double ax[3] = {p.shape.a, p.shape.a, p.shape.c};
    const auto rho = [&](double x, double y, double z) { return evaluate_density(p, std::hypot(x, y), z); };
    const double h3 = h * h * h;
    const double rho_mean = p.mean_density();

    for (int i = 0; i < g.n[0]; ++i)
        for (int j = 0; j < g.n[1]; ++j)
            for (int k = 0; k < g.n[2]; ++k) {
                const double c[3] = {g.origin[0] + i * h, g.origin[1] + j * h, g.origin[2] + k * h};
                double m = 0.0;
                if (p.regime == Regime::gaussian) {
                    m = gauss_cell(c, h, 3, rho);
                } else {
                    const double lo[3] = {c[0] - 0.5 * h, c[1] - 0.5 * h, c[2] - 0.5 * h};
                    const double hi[3] = {c[0] + 0.5 * h, c[1] + 0.5 * h, c[2] + 0.5 * h};
                    double mn, mx;
                    m2_range(lo, hi, ax, mn, mx);
                    if (mn >= 1.0) continue;
                    if (mx <= 1.0)
                        m = p.regime == Regime::uniform ? rho_mean : gauss_cell(c, h, 2, rho);
                    else
                        m = midpoint_cell(c, h, 8, rho);
                }
                g.mass[(std::size_t(i) * g.n[1] + j) * g.n[2] + k] = m * h3;
            }
    return g;
}

double eg_voxel(const DensityProfile& p, const SuperpositionConfig& cfg, double h, std::size_t budget) {
    if (cfg.b == 0.0) return 0.0;
    const double kr = cfg.b / h;
    const long k = std::lround(kr);
    if (k < 1 || std::abs(kr - k) > 1e-9 * kr)
        throw ValidationError("voxel oracle: displacement must be a whole number of cells");

    const Extent ext = grid_extent(p);
    int n[3];
    for (int d = 0; d < 3; ++d) n[d] = 2 * static_cast<int>(std::ceil(ext.e[d] / h - 1e-12));
    const std::size_t P0 = 2 * std::size_t(n[0]), P1 = 2 * std::size_t(n[1]), P2 = 2 * std::size_t(n[2]);
    const std::size_t H2 = P2 / 2 + 1;
    const std::size_t bytes = 8 * P0 * P1 * P2 + 16 * P0 * P1 * H2;
    if (bytes > budget)
        throw NumericalError("voxel oracle needs " + std::to_string(bytes >> 20) + " MiB (budget " +
                             std::to_string(budget >> 20) + " MiB); use a larger cell size");

    const VoxelGrid g = build_voxel_grid(p, h);

    FftwBuffer real_buf(8 * P0 * P1 * P2);
    FftwBuffer cplx_buf(16 * P0 * P1 * H2);
    auto* in = static_cast<double*>(real_buf.ptr);
    auto* out = static_cast<fftw_complex*>(cplx_buf.ptr);

    const int dims[3] = {int(P0), int(P1), int(P2)};
    fftw_plan fwd = fftw_plan_dft_r2c(3, dims, in, out, FFTW_ESTIMATE);
    fftw_plan bwd = fftw_plan_dft_c2r(3, dims, out, in, FFTW_ESTIMATE);

    std::fill(in, in + P0 * P1 * P2, 0.0);
    for (int i = 0; i < n[0]; ++i)
        for (int j = 0; j < n[1]; ++j)
            for (int l = 0; l < n[2]; ++l)
                in[(i * P1 + j) * P2 + l] = g.mass[(std::size_t(i) * n[1] + j) * n[2] + l];

    fftw_execute(fwd);
    for (std::size_t q = 0; q < P0 * P1 * H2; ++q) {
        const double re = out[q][0], im = out[q][1];
        out[q][0] = re * re + im * im;
        out[q][1] = 0.0;
    }
    fftw_execute(bwd);
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);

    // in[] now holds the mass autocorrelation A(d) times P0*P1*P2.
    const double norm = 1.0 / (double(P0) * double(P1) * double(P2));
    const double k0 = voxel_self_kernel();
    const int axis = cfg.axis == Axis::symmetry ? 2 : 0;
    const auto kernel = [&](long dx, long dy, long dz) {
        const double r2 = double(dx) * dx + double(dy) * dy + double(dz) * dz;
        return r2 == 0.0 ? k0 : 1.0 / std::sqrt(r2);
    };
    const auto wrap = [](std::size_t idx, std::size_t P) { return idx < P / 2 ? long(idx) : long(idx) - long(P); };

    long double total = 0.0L;
    for (std::size_t i = 0; i < P0; ++i) {
        const long dx = wrap(i, P0);
        if (std::abs(dx) >= n[0]) continue;
        long double plane = 0.0L;
        for (std::size_t j = 0; j < P1; ++j) {
            const long dy = wrap(j, P1);
            if (std::abs(dy) >= n[1]) continue;
            double row = 0.0;
            for (std::size_t l = 0; l < P2; ++l) {
                const long dz = wrap(l, P2);
                if (std::abs(dz) >= n[2]) continue;
                const double a = in[(i * P1 + j) * P2 + l] * norm;
                const double shifted = axis == 2 ? kernel(dx, dy, dz + k) : kernel(dx + k, dy, dz);
                row += a * (kernel(dx, dy, dz) - shifted);
            }
            plane += row;
        }
        total += plane;
    }
    return codata2018.G * static_cast<double>(total) / h;
}

VoxelEstimate eg_voxel_estimate(const DensityProfile& p, const SuperpositionConfig& cfg, VoxelOptions opt) {
    if (opt.cells < 8) throw ValidationError("voxel oracle needs at least 8 cells across the body");
    const Extent ext = grid_extent(p);
    const double h0 = 2.0 * std::max({ext.e[0], ext.e[1], ext.e[2]}) / opt.cells;
    VoxelEstimate est;
    if (cfg.b == 0.0) return est;
    const long k = std::max(1L, std::lround(cfg.b / h0));
    est.h_coarse = cfg.b / double(k);
    est.shift_cells = int(k);
    est.coarse = eg_voxel(p, cfg, est.h_coarse, opt.memory_budget);
    if (!opt.richardson) {
        est.fine = est.extrapolated = est.coarse;
        return est;
    }
    est.fine = eg_voxel(p, cfg, 0.5 * est.h_coarse, opt.memory_budget);
    const double f = std::pow(2.0, opt.richardson_order) - 1.0;
    est.extrapolated = est.fine + (est.fine - est.coarse) / f;
    return est;
}

SelfEnergyResult eg_bruteforce(const DensityProfile& p, const SuperpositionConfig& cfg, VoxelOptions opt,
                               GammaParameter gamma) {
    const VoxelEstimate est = eg_voxel_estimate(p, cfg, opt);
    SelfEnergyResult r;
    r.method = Method::oracle;
    r.value = est.extrapolated * gamma.factor();
    r.rel_error = est.extrapolated != 0.0 ? std::abs(est.fine - est.extrapolated) / std::abs(est.extrapolated) : 0.0;
    r.ref_length = std::cbrt(p.shape.a * p.shape.a * p.shape.c);
    r.dimensionless = r.value / (codata2018.G * p.mass * p.mass / r.ref_length);
    return r;
}

// Lindblad integrator

namespace {

using Mat = Eigen::MatrixXcd;

struct TwoModeOps {
    int N;
    Eigen::Index D;
    Mat aL, aR;
};

TwoModeOps make_ops(int N) {
    TwoModeOps o{N, Eigen::Index(N + 1) * (N + 1), {}, {}};
    o.aL = Mat::Zero(o.D, o.D);
    o.aR = Mat::Zero(o.D, o.D);
    const auto idx = [N](int nl, int nr) { return Eigen::Index(nl) * (N + 1) + nr; };
    for (int nl = 0; nl <= N; ++nl)
        for (int nr = 0; nr <= N; ++nr) {
            if (nl > 0) o.aL(idx(nl - 1, nr), idx(nl, nr)) = std::sqrt(double(nl));
            if (nr > 0) o.aR(idx(nl, nr - 1), idx(nl, nr)) = std::sqrt(double(nr));
        }
    return o;
}

struct Generator {
    Mat H;  // zero if absent
    bool has_h = false;
    std::vector<Mat> jumps;
    std::vector<Mat> jump_dag;
    Mat sum_jdj;  // sum L^dag L
    double gamma = 0.0;
    bool dephasing = false;
    Mat delta;

    Mat operator()(const Mat& rho) const {
        Mat out = Mat::Zero(rho.rows(), rho.cols());
        const std::complex<double> I(0.0, 1.0);
        if (has_h) out -= I * (H * rho - rho * H);
        if (gamma == 0.0) return out;
        if (dephasing) {
            const Mat c = delta * rho - rho * delta;
            out -= gamma * (delta * c - c * delta);
            return out;
        }
        for (std::size_t q = 0; q < jumps.size(); ++q) out += gamma * (jumps[q] * rho * jump_dag[q]);
        out -= 0.5 * gamma * (sum_jdj * rho + rho * sum_jdj);
        return out;
    }
};

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

struct RunResult {
    std::vector<std::complex<double>> c;
    double drift = 0.0;
    double herm = 0.0;
};

RunResult integrate(const Generator& gen, const Mat& rho0, const Mat& obs, const std::vector<double>& t_grid,
                    double dt) {
    RunResult res;
    Mat rho = rho0;
    double t = 0.0;
    const auto corr = [&](const Mat& r) { return (r * obs).trace(); };
    for (double target : t_grid) {
        const double span = target - t;
        if (span > 0.0) {
            const long steps = std::max(1L, long(std::ceil(span / dt - 1e-9)));
            const double step = span / double(steps);
            for (long s = 0; s < steps; ++s) {
                const Mat k1 = gen(rho);
                const Mat k2 = gen(rho + 0.5 * step * k1);
                const Mat k3 = gen(rho + 0.5 * step * k2);
                const Mat k4 = gen(rho + step * k3);
                rho += (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            t = target;
        }
        res.c.push_back(corr(rho));
        res.drift = std::max(res.drift, std::abs(rho.trace() - 1.0));
        res.herm = std::max(res.herm, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    }
    return res;
}

}  // namespace

double lindblad_coherence_rate(Channel channel, int N, double rate) {
    switch (channel) {
        case Channel::three_body: return rate * N * (N - 1.0) * (N - 2.0);
        case Channel::thermal: return 4.0 * rate * N * N;
        case Channel::foreign: return rate * N;
    }
    return 0.0;
}

LindbladTrace lindblad_decay(Channel channel, int N, double rate, const std::vector<double>& t_grid,
                             LindbladOptions opt) {
    if (N < 1 || N > lindblad_max_n)
        throw ValidationError("Lindblad oracle supports 1 <= N <= " + std::to_string(lindblad_max_n));
    if (!(rate >= 0.0)) throw ValidationError("rate must be >= 0");
    if (t_grid.empty()) throw ValidationError("empty time grid");
    if (t_grid.front() < 0.0 || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw ValidationError("time grid must be non-negative and ascending");

    const TwoModeOps ops = make_ops(N);
    Generator gen;
    gen.gamma = rate;
    if (opt.hamiltonian) {
        if (opt.hamiltonian->rows() != ops.D || opt.hamiltonian->cols() != ops.D)
            throw ValidationError("Hamiltonian must act on the (N+1)^2 two-mode basis");
        gen.H = *opt.hamiltonian;
        gen.has_h = true;
    }
    switch (channel) {
        case Channel::three_body:
            gen.jumps = {ops.aL * ops.aL * ops.aL, ops.aR * ops.aR * ops.aR};
            break;
        case Channel::foreign:
            gen.jumps = {ops.aL, ops.aR};
            break;
        case Channel::thermal:
            gen.dephasing = true;
            gen.delta = ops.aL.adjoint() * ops.aL - ops.aR.adjoint() * ops.aR;
            break;
    }
    gen.sum_jdj = Mat::Zero(ops.D, ops.D);
    for (const Mat& L : gen.jumps) {
        gen.jump_dag.push_back(L.adjoint());
        gen.sum_jdj += L.adjoint() * L;
    }

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(ops.D);
    psi(Eigen::Index(N) * (N + 1)) = 1.0 / std::numbers::sqrt2;
    psi(N) = 1.0 / std::numbers::sqrt2;
    const Mat rho0 = psi * psi.adjoint();
    Mat obs = Mat::Identity(ops.D, ops.D);
    for (int q = 0; q < N; ++q) obs = obs * ops.aL.adjoint();
    for (int q = 0; q < N; ++q) obs = obs * ops.aR;

    double scale = rate * std::max(1.0, lindblad_coherence_rate(channel, N, 1.0) + N * N * N);
    if (gen.has_h) scale += gen.H.cwiseAbs().rowwise().sum().maxCoeff();
    const double t_end = t_grid.back();
    double dt = scale > 0.0 ? 0.2 / scale : (t_end > 0.0 ? t_end : 1.0);
    if (t_end > 0.0) dt = std::min(dt, t_end);

    const double ref = factorial(N) / 2.0;
    RunResult prev = integrate(gen, rho0, obs, t_grid, dt);
    for (int h = 0; h < opt.max_halvings; ++h) {
        RunResult next = integrate(gen, rho0, obs, t_grid, 0.5 * dt);
        double diff = 0.0;
        for (std::size_t q = 0; q < next.c.size(); ++q) diff = std::max(diff, std::abs(next.c[q] - prev.c[q]));
        dt *= 0.5;
        prev = std::move(next);
        if (diff <= opt.tolerance * ref) {
            LindbladTrace tr;
            tr.t = t_grid;
            tr.correlation = std::move(prev.c);
            tr.dt = dt;
            tr.max_trace_drift = prev.drift;
            tr.max_hermiticity_error = prev.herm;
            return tr;
        }
    }
    throw NumericalError("Lindblad oracle: step halving did not converge");
}

double fit_decay_exponent(const LindbladTrace& tr) {
    if (tr.t.size() < 2) throw ValidationError("need at least two samples to fit a decay exponent");
    const double c0 = std::abs(tr.correlation.front());
    double st = 0, sy = 0, stt = 0, sty = 0;
    int n = 0;
    for (std::size_t q = 0; q < tr.t.size(); ++q) {
        const double c = std::abs(tr.correlation[q]);
        if (!(c > 1e-12 * c0)) continue;
        const double y = std::log(c);
        st += tr.t[q];
        sy += y;
        stt += tr.t[q] * tr.t[q];
        sty += tr.t[q] * y;
        ++n;
    }
    const double den = n * stt - st * st;
    if (n < 2 || den == 0.0) throw NumericalError("decay fit is degenerate");
    return -(n * sty - st * sy) / den;
}

}  // namespace egrav
