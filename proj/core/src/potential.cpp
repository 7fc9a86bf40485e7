#include "egrav/potential.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "egrav/error.hpp"
#include "egrav/legendre.hpp"

namespace egrav {

namespace {

constexpr double pi = std::numbers::pi;
const double two_over_sqrt_pi = 2.0 / std::sqrt(pi);

double G() { return codata2018.G; }

bool inside(double r, double z, const Shape& s) { return r * r / (s.a * s.a) + z * z / (s.c * s.c) <= 1.0; }

// J_pq = int_0^inf du / ((a^2+u)^(1+p) (c^2+u)^(1/2+q)), ordered J00 J10 J01 J20 J11 J02.
std::array<double, 6> index_symbols(const Shape& s) {
    static const int pq[6][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    const double a2 = s.a * s.a, c2 = s.c * s.c, L2 = std::max(a2, c2);
    boost::math::quadrature::exp_sinh<double> integrator;
    std::array<double, 6> J{};
    for (int k = 0; k < 6; ++k) {
        const int p = pq[k][0], q = pq[k][1];
        // u = L2 * v keeps the integrand O(1) near the origin.
        auto f = [&](double v) {
            const double u = L2 * v;
            return L2 / (std::pow(a2 + u, 1.0 + p) * std::pow(c2 + u, 0.5 + q));
        };
        double err = 0.0;
        J[k] = integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14, &err);
    }
    return J;
}

double phi_prolate_spheroidal(double r, double z, const Shape& s, double M) {
    using namespace legendre;
    const double l = s.focal_distance();
    const auto [xi, eta] = prolate_coords(r, z, l);
    const double x0 = s.c / l;
    const double k = -G() * M / l;
    if (xi > x0) return k * (Q0(xi) - Q2(xi) * P2(eta));
    const double g1 = 1.0 - P2(xi) * P2(eta);
    const double g2 = 1.5 * P2(eta) * xi;
    const double g3 = 0.5 + P2(xi) * P2(eta);
    const double d = x0 * (x0 * x0 - 1.0);
    return k * (Q0(x0) * g1 + xi * (xi * xi - 1.0) / d * g2 + (x0 * x0 - xi * xi) / d * g3);
}

double phi_oblate_spheroidal(double r, double z, const Shape& s, double M) {
    using namespace legendre;
    const double l = s.focal_distance();
    const auto [xi, eta] = oblate_coords(r, z, l);
    const double x0 = s.c / l;
    const double k = -G() * M / l;
    if (xi > x0) return k * (q0(xi) + q2(xi) * P2(eta));
    const double p2 = 0.5 * (3.0 * xi * xi + 1.0);
    const double d = x0 * (x0 * x0 + 1.0);
    return k * (q0(x0) * (1.0 + p2 * P2(eta)) - 1.5 * xi * xi * (xi * xi + 1.0) * P2(eta) / d +
                (x0 * x0 - xi * xi) / d * (0.5 - p2 * P2(eta)));
}

double phi_spheroid_cylindrical(double r, double z, const Shape& s, double M) {
    const double l = s.focal_distance();
    const double l2 = l * l, r2 = r * r, z2 = z * z;
    const double C = r2 + 2.0 * z2, D = r2 - 2.0 * z2;
    const double k = -3.0 * G() * M / (4.0 * l2 * l);
    const double a2 = s.a * s.a, c = s.c;
    const bool in = inside(r, z, s);
    if (s.kind == ShapeKind::prolate) {
        if (in) return k * ((2.0 * l2 + D) * std::asinh(l / s.a) - l * (c * c * r2 - 2.0 * a2 * z2) / (a2 * c));
        const double A = r2 + z2 + std::sqrt(l2 * l2 + 2.0 * l2 * (r2 - z2) + (z2 + r2) * (z2 + r2));
        const double B2 = A - l2, E = std::sqrt(A + l2);
        return k * ((2.0 * l2 + D) * std::asinh(std::sqrt(2.0) * l / std::sqrt(B2)) -
                    std::sqrt(2.0) * l * (A * D + l2 * C) / (E * B2));
    }
    if (in) return k * ((2.0 * l2 - D) * std::asin(l / s.a) + l * (c * c * r2 - 2.0 * a2 * z2) / (a2 * c));
    const double A = r2 + z2 + std::sqrt(z2 * z2 + 2.0 * z2 * (r2 + l2) + (l2 - r2) * (l2 - r2));
    const double B2 = A + l2, E = std::sqrt(A - l2);
    return k * ((2.0 * l2 - D) * std::asin(std::sqrt(2.0) * l / std::sqrt(B2)) +
                std::sqrt(2.0) * l * (A * D - l2 * C) / (E * B2));
}

// (2/sqrt(pi)) e^{-u^2} p(u) - K erf(u), divided by u^d. p holds coefficients of
// u^1, u^3, u^5, ...; the combination vanishes to order u^lead.
double gauss_bracket(const double* p, int np, double K, int lead, int d, double u) {
    if (u >= 2.0) {
        double poly = 0.0;
        for (int i = np - 1; i >= 0; --i) poly = poly * u * u + p[i];
        poly *= u;
        return (two_over_sqrt_pi * std::exp(-u * u) * poly - K * std::erf(u)) / std::pow(u, d);
    }
    // Power series: coefficient of u^(2n+1) in e^{-u^2} p(u) minus (K/2 sqrt(pi)) erf part.
    constexpr int nmax = 60;
    double sum = 0.0;
    const double u2 = u * u;
    double upow = std::pow(u, lead - d);
    for (int n = (lead - 1) / 2; n < nmax; ++n) {
        double c = 0.0;
        for (int i = 0; i < np && i <= n; ++i) {
            const int k = n - i;  // from e^{-u^2}: (-1)^k / k!
            c += p[i] * ((k % 2) ? -1.0 : 1.0) / std::tgamma(k + 1.0);
        }
        c -= K * ((n % 2) ? -1.0 : 1.0) / (std::tgamma(n + 1.0) * (2.0 * n + 1.0));
        const double term = two_over_sqrt_pi * c * upow;
        sum += term;
        if (n > lead && std::abs(term) < 1e-18 * std::abs(sum)) break;
        upow *= u2;
    }
    return sum;
}

}  // namespace

double phi_uniform_sphere(double r, double R, double M) {
    if (r < R) return -G() * M / R * (1.5 - 0.5 * r * r / (R * R));
    return -G() * M / r;
}

double phi_tf_sphere(double r, double R, double M) {
    if (r < R) {
        const double x2 = r * r / (R * R);
        return -G() * M / (8.0 * R) * (15.0 - 10.0 * x2 + 3.0 * x2 * x2);
    }
    return -G() * M / r;
}

double phi_gaussian_sphere(double r, double width, double M) {
    const double u = r / width;
    if (u < 1e-4) return -G() * M / width * two_over_sqrt_pi * (1.0 - u * u / 3.0 + u * u * u * u / 10.0);
    return -G() * M * std::erf(u) / r;
}

double phi_uniform_spheroid(double r, double z, const Shape& shape, double M, SpheroidMethod method) {
    validate(shape);
    if (shape.is_sphere()) throw ValidationError("spheroid potential called for a sphere; use phi_uniform_sphere");
    r = std::abs(r);
    switch (method) {
        case SpheroidMethod::small_e: return phi_uniform_spheroid_small_e(r, z, shape, M);
        case SpheroidMethod::spheroidal:
            return shape.kind == ShapeKind::prolate ? phi_prolate_spheroidal(r, z, shape, M)
                                                    : phi_oblate_spheroidal(r, z, shape, M);
        case SpheroidMethod::cylindrical:
            // The closed form loses ~2 log10(1/e) digits; below e = 2e-3 the
            // expansion error O(e^4) is smaller.
            if (shape.ellipticity() < 2e-3) return phi_uniform_spheroid_small_e(r, z, shape, M);
            return phi_spheroid_cylindrical(r, z, shape, M);
    }
    return 0.0;
}

double phi_uniform_spheroid_small_e(double r, double z, const Shape& shape, double M) {
    const double R = std::cbrt(shape.a * shape.a * shape.c);
    const double e = shape.ellipticity();
    const double rr = std::hypot(r, z);
    const double sgn = shape.kind == ShapeKind::prolate ? -1.0 : 1.0;
    const double p2 = rr > 0.0 ? legendre::P2(z / rr) : 0.0;
    const double base = phi_uniform_sphere(rr, R, M);
    if (rr < R) return base + sgn * G() * M * e * e * rr * rr / (5.0 * R * R * R) * p2;
    return base + sgn * G() * M * R * R * e * e / (5.0 * rr * rr * rr) * p2;
}

TfSpheroidPotential::TfSpheroidPotential(const Shape& shape, double M)
    : shape_(shape), M_(M), l_(shape.focal_distance()), J_(index_symbols(shape)) {
    validate(shape);
}

double TfSpheroidPotential::interior(double r, double z) const {
    const double r2 = r * r, z2 = z * z;
    const auto& J = J_;
    return -15.0 * G() * M_ / 16.0 *
           (J[0] - 2.0 * r2 * J[1] - 2.0 * z2 * J[2] + r2 * r2 * J[3] + 2.0 * r2 * z2 * J[4] + z2 * z2 * J[5]);
}

double TfSpheroidPotential::exterior(double r, double z) const {
    using namespace legendre;
    if (shape_.is_sphere()) return -G() * M_ / std::hypot(r, z);
    const double k = -G() * M_ / (7.0 * l_);
    if (shape_.kind == ShapeKind::prolate) {
        const auto [xi, eta] = prolate_coords(r, z, l_);
        return k * (7.0 * Q0(xi) - 10.0 * Q2(xi) * P2(eta) + 3.0 * Q4(xi) * P4(eta));
    }
    const auto [xi, eta] = oblate_coords(r, z, l_);
    return k * (7.0 * q0(xi) + 10.0 * q2(xi) * P2(eta) + 3.0 * q4(xi) * P4(eta));
}

double TfSpheroidPotential::operator()(double r, double z) const {
    return inside(r, z, shape_) ? interior(r, z) : exterior(r, z);
}

double phi_tf_spheroid(double r, double z, const Shape& shape, double M) {
    return TfSpheroidPotential(shape, M)(r, z);
}

double phi_uniform_ellipsoid_interior(double r, double z, const Shape& shape, double M) {
    const auto J = index_symbols(shape);
    return -0.75 * G() * M * (J[0] - r * r * J[1] - z * z * J[2]);
}

double phi_gaussian_spheroid(double r, double z, const Shape& w, double M) {
    validate(w);
    if (w.is_sphere()) return phi_gaussian_sphere(std::hypot(r, z), w.a, M);
    // t = s / sqrt(1 + c^2 s^2) maps the kernel integral onto [0, 1/c].
    const double d2 = w.a * w.a - w.c * w.c;
    const double r2 = r * r, z2 = z * z;
    auto f = [&](double t) {
        const double t2 = t * t;
        const double q = 1.0 + d2 * t2;
        return std::exp(-r2 * t2 / q - z2 * t2) / q;
    };
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    const double tmax = 1.0 / w.c;
    const double dist = std::hypot(r, z);
    double sum = 0.0;
    // Split where the Gaussian factor has decayed so the adaptive rule sees both scales.
    const double t1 = dist > 0.0 ? std::min(tmax, 6.0 / dist) : tmax;
    sum += GK::integrate(f, 0.0, t1, 15, 1e-13);
    if (t1 < tmax) sum += GK::integrate(f, t1, tmax, 15, 1e-13);
    return -two_over_sqrt_pi * G() * M * sum;
}

SmallEPotential phi_gaussian_spheroid_small_e(double r, double z, const Shape& w, double M, int order) {
    if (order != 0 && order != 2 && order != 4) throw ValidationError("small-e order must be 0, 2 or 4");
    const double R = std::cbrt(w.a * w.a * w.c);
    const double e = w.is_sphere() ? 0.0 : w.ellipticity();
    const double rr = std::hypot(r, z);
    const double u = rr / R;
    const double x = rr > 0.0 ? z / rr : 0.0;
    const double P2 = legendre::P2(x), P4 = legendre::P4(x);
    const double s = w.kind == ShapeKind::oblate ? -1.0 : 1.0;
    const double beta = w.kind == ShapeKind::oblate ? 2.0 : 1.0;
    const double gm_r = G() * M / R;

    double value = phi_gaussian_sphere(rr, R, M);
    if (order >= 2 && e > 0.0) {
        static const double p2[] = {3.0, 2.0};
        value += s * gm_r * e * e / 6.0 * P2 * gauss_bracket(p2, 2, 3.0, 5, 3, u);
    }
    if (order >= 4 && e > 0.0) {
        const double p4[] = {21.0, 14.0, 2.0 * s * beta};
        static const double y4[] = {105.0, 70.0, 28.0, 8.0};
        const double e4 = e * e * e * e;
        const double t0 = two_over_sqrt_pi * std::exp(-u * u) * (u * u + 1.0) / 45.0;
        const double t2 = s / (63.0 * beta) * gauss_bracket(p4, 3, 21.0, 5, 3, u) * P2;
        const double t4 = gauss_bracket(y4, 4, 105.0, 9, 5, u) / 140.0 * P4;
        value += gm_r * e4 * (t0 + t2 + t4);
    }
    return {value, e > 0.3};
}

PotentialField::PotentialField(const DensityProfile& profile) : profile_(profile) {
    if (profile.regime == Regime::thomas_fermi && !profile.shape.is_sphere()) tf_.emplace(profile.shape, profile.mass);
}

double PotentialField::operator()(double r, double z) const {
    const auto& p = profile_;
    r = std::abs(r);
    switch (p.regime) {
        case Regime::uniform:
            if (p.shape.is_sphere()) return phi_uniform_sphere(std::hypot(r, z), p.shape.a, p.mass);
            return phi_uniform_spheroid(r, z, p.shape, p.mass, SpheroidMethod::cylindrical);
        case Regime::thomas_fermi:
            if (p.shape.is_sphere()) return phi_tf_sphere(std::hypot(r, z), p.shape.a, p.mass);
            return (*tf_)(r, z);
        case Regime::gaussian: return phi_gaussian_spheroid(r, z, p.shape, p.mass);
    }
    return 0.0;
}

}  // namespace egrav
