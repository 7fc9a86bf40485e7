#include "egrav/self_energy.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "egrav/error.hpp"
#include "egrav/kvfile.hpp"
#include "egrav/potential.hpp"

namespace egrav {

namespace {

constexpr double pi = std::numbers::pi;
const double ln2 = std::log(2.0);
using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

SelfEnergyResult make(double value_over_scale, double M, double L, Method m, double rel, GammaParameter g) {
    SelfEnergyResult r;
    r.ref_length = L;
    r.dimensionless = value_over_scale * g.factor();
    r.value = r.dimensionless * codata2018.G * M * M / L;
    r.method = m;
    r.rel_error = rel;
    return r;
}

void check_lambda(double lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw ValidationError("displacement ratio must be finite and >= 0");
}

void check_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw ValidationError(std::string(what) + " must be positive and finite");
}

// p * ln|x| with the convention 0 * ln 0 = 0.
using ld = long double;
ld plog(ld p, ld x) { return p == 0.0L ? 0.0L : p * std::log(std::abs(x)); }
const ld ln2l = std::log(2.0L);

double odd_series(const double* c, int n, double x) {
    // c[k] multiplies x^(2k+1)
    double s = 0.0;
    const double x2 = x * x;
    for (int k = n - 1; k >= 0; --k) s = s * x2 + c[k];
    return s * x;
}

// Large-argument tails, coefficients of x^1, x^3, ..., x^27 with x = 1/lambda.
constexpr double kUniC[] = {-5.0 / 3,    -1.0 / 6,    -3.0 / 70,    -1.0 / 63,    -5.0 / 693,
                            -15.0 / 4004, -1.0 / 468,  -1.0 / 765,   -3.0 / 3553,  -5.0 / 8778,
                            -5.0 / 12558, -3.0 / 10465, -1.0 / 4725, -1.0 / 6264};
constexpr double kOblC[] = {-5.0 / 3,    1.0 / 6,    -3.0 / 70,   1.0 / 63,    -5.0 / 693,
                            15.0 / 4004, -1.0 / 468, 1.0 / 765,   -3.0 / 3553, 5.0 / 8778,
                            -5.0 / 12558, 3.0 / 10465, -1.0 / 4725, 1.0 / 6264};
constexpr double kTfC[] = {-2688.0 / 5,    -192.0 / 5,    -256.0 / 35,   -160.0 / 77,    -320.0 / 429,
                           -224.0 / 715,   -1792.0 / 12155, -1344.0 / 17765, -1920.0 / 46189, -960.0 / 39767,
                           -768.0 / 52325, -16.0 / 1725,  -224.0 / 36975, -560.0 / 137547};
constexpr double kTail = 2.5;

}  // namespace

std::string_view to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::series: return "series";
        case Method::quadrature: return "quadrature";
        case Method::oracle: return "oracle";
    }
    return "?";
}

SelfEnergyResult eg_uniform_sphere(double lambda, double M, double R, GammaParameter g) {
    check_lambda(lambda);
    check_positive(M, "mass");
    check_positive(R, "radius");
    const double l = lambda;
    const double v = l <= 1.0 ? 1.2 * (5.0 / 3.0 * l * l - 1.25 * l * l * l + std::pow(l, 5) / 6.0)
                              : 1.2 * (1.0 - 5.0 / (12.0 * l));
    return make(v, M, R, Method::closed_form, 1e-15, g);
}

SelfEnergyResult eg_tf_sphere(double lambda, double M, double R, GammaParameter g) {
    check_lambda(lambda);
    check_positive(M, "mass");
    check_positive(R, "radius");
    const double l = lambda, l2 = l * l;
    const double v = l <= 1.0
                         ? 10.0 / 7.0 * (2.0 * l2 - 4.2 * l2 * l2 + 3.5 * l2 * l2 * l - 0.75 * l2 * l2 * l2 * l +
                                         l2 * l2 * l2 * l2 * l / 10.0)
                         : 10.0 / 7.0 * (1.0 - 7.0 / (20.0 * l));
    return make(v, M, R, Method::closed_form, 1e-15, g);
}

SelfEnergyResult eg_gaussian_sphere(double lambda0, double M, double width, GammaParameter g) {
    check_lambda(lambda0);
    check_positive(M, "mass");
    check_positive(width, "width");
    const double x = std::sqrt(2.0) * lambda0;
    const double k = std::sqrt(2.0 / pi);
    double v;
    if (x < 0.1) {
        // sqrt(2/pi) sum_{n>=1} (-1)^(n+1) x^(2n) / (n! (2n+1))
        double term = 1.0, sum = 0.0;
        for (int n = 1; n < 12; ++n) {
            term *= x * x / n;
            sum += ((n % 2) ? 1.0 : -1.0) * term / (2.0 * n + 1.0);
        }
        v = k * sum;
    } else {
        v = k - std::erf(x) / (2.0 * lambda0);
    }
    return make(v, M, width, Method::closed_form, 1e-15, g);
}

namespace limits {

double uniform_prolate_A(double l) { return l * l * (20.0 * ln2 - 20.0 + 10.0 * l - 3.0 * l * l * l); }

double uniform_prolate_B(double l) { return 5.0 * l * l - 5.0 * l * l * l + std::pow(l, 5); }

double uniform_prolate_C(double l) {
    if (l < 1.0) throw ValidationError("upper branch needs lambda >= 1");
    if (l >= kTail) return 4.0 * ln2 + odd_series(kUniC, 14, 1.0 / l);
    // Extended precision: the logarithmic terms cancel strongly.
    const ld x = l, x3 = x * x * x;
    return double(4.0L * ln2l - 11.0L * x - 2.0L * x3 + plog(4.0L * x3 * (x * x - 5.0L), x) +
                  plog(-2.0L * std::pow(x - 1.0L, 3) * (x * x + 3.0L * x + 1.0L), x - 1.0L) +
                  plog(-2.0L * std::pow(x + 1.0L, 3) * (x * x - 3.0L * x + 1.0L), x + 1.0L));
}

double uniform_oblate_A(double b, double e) {
    const double b2 = b * b, b3 = b2 * b, b5 = b3 * b2;
    // Slab terms plus the edge correction; the next order is O(b^3 ln e).
    return 5.0 * b2 / e - 2.5 * b3 / (e * e) + 0.25 * b5 / (e * e * e * e) - 2.5 * pi * b2;
}

double uniform_oblate_C(double b) {
    if (b >= kTail) return 2.0 * pi + odd_series(kOblC, 14, 1.0 / b);
    const double b2 = b * b, b3 = b2 * b;
    return 2.0 * pi + 11.0 * b - 2.0 * b3 - 4.0 * (1.0 + 5.0 * b2) * std::atan2(1.0, b) +
           2.0 * b3 * (5.0 + b2) * std::log1p(1.0 / b2);
}

double tf_prolate_A(double l) {
    const double l2 = l * l, l4 = l2 * l2;
    return 144.0 * l2 * (ln2 - 1.0) - 168.0 * l4 * (3.0 * ln2 - 4.0) - 378.0 * l4 * l + 132.0 * l4 * l2 * l -
           25.0 * l4 * l4 * l;
}

double tf_prolate_B(double l) {
    const double l2 = l * l, l4 = l2 * l2;
    return 6.0 * l2 - 21.0 * l4 + 21.0 * l4 * l - 6.0 * l4 * l2 * l + l4 * l4 * l;
}

double tf_prolate_C(double l) {
    if (l < 1.0) throw ValidationError("upper branch needs lambda >= 1");
    if (l >= kTail) return 1536.0 * ln2 + odd_series(kTfC, 14, 1.0 / l);
    const ld x = l, x2 = x * x, x3 = x2 * x, x5 = x3 * x2, x7 = x5 * x2;
    return double(-768.0L * x7 + 4224.0L * x5 + 18176.0L * x3 - 5184.0L * x + 1536.0L * ln2l +
                  plog(1536.0L * x5 * (x2 * x2 - 6.0L * x2 + 21.0L), x) +
                  plog(-768.0L * std::pow(x - 1.0L, 5) * (x2 * x2 + 5.0L * x3 + 9.0L * x2 + 5.0L * x + 1.0L), x - 1.0L) +
                  plog(-768.0L * std::pow(x + 1.0L, 5) * (x2 * x2 - 5.0L * x3 + 9.0L * x2 - 5.0L * x + 1.0L), x + 1.0L));
}

}  // namespace limits

SelfEnergyResult eg_uniform_spheroid_limit(const SuperpositionConfig& cfg, double M, GammaParameter g) {
    check_positive(M, "mass");
    const auto p = dimensionless(cfg);
    const double eps = p.epsilon;
    if (cfg.label == ConfigLabel::b) {
        const double l = p.lambda, le = std::log(eps);
        const double v = l <= 1.0 ? 1.2 * (limits::uniform_prolate_A(l) / 4.0 - limits::uniform_prolate_B(l) * le)
                                  : 1.2 * (limits::uniform_prolate_C(l) / 4.0 - le);
        return make(v, M, cfg.shape.c, Method::closed_form, eps * eps, g);
    }
    if (cfg.label == ConfigLabel::a) {
        const double b = p.beta;
        const double v = b <= eps ? 1.2 * limits::uniform_oblate_A(b, eps)
                                  : 1.2 * (limits::uniform_oblate_C(b) / 4.0 - eps);
        return make(v, M, cfg.shape.a, Method::closed_form, eps * eps, g);
    }
    throw ValidationError("no closed-form high-ellipticity limit for configuration " +
                          std::string(to_string(cfg.label)) + "; use eg_numeric");
}

SelfEnergyResult eg_tf_prolate_limit(double lambda, double M, double a, double epsilon, GammaParameter g) {
    check_lambda(lambda);
    check_positive(M, "mass");
    check_positive(a, "equatorial radius");
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw ValidationError("epsilon must lie in (0, 1)");
    const double c = a / epsilon, le = std::log(epsilon);
    const double v = lambda <= 1.0 ? 10.0 / 7.0 * (limits::tf_prolate_A(lambda) / 24.0 - limits::tf_prolate_B(lambda) * le)
                                   : 10.0 / 7.0 * (limits::tf_prolate_C(lambda) / 1536.0 - le);
    return make(v, M, c, Method::closed_form, epsilon * epsilon, g);
}

SelfEnergyResult eg_infinite_separation(const DensityProfile& p, GammaParameter g) {
    const Shape& s = p.shape;
    validate(s);
    const double l = s.focal_distance();
    if (p.regime == Regime::gaussian) {
        // Self-convolved kernel at the origin: (2/sqrt(pi)) int_0^{1/(sqrt2 c)} dt / (1 + 2(a^2-c^2) t^2).
        double v;
        if (s.is_sphere()) {
            v = std::sqrt(2.0 / pi);
            return make(v, p.mass, s.a, Method::closed_form, 1e-15, g);
        }
        const double k = s.kind == ShapeKind::oblate ? std::atan(l / s.c) : std::atanh(l / s.c);
        v = 2.0 / std::sqrt(pi) * k / std::sqrt(2.0);
        return make(v, p.mass, l, Method::closed_form, 1e-15, g);
    }
    const double tf = p.regime == Regime::thomas_fermi ? 25.0 / 21.0 : 1.0;
    if (s.is_sphere()) return make(tf * 1.2, p.mass, s.a, Method::closed_form, 1e-15, g);
    const double e = s.ellipticity();
    // atanh(e)/l -> 1/c and asin(e)/l -> 1/a as l -> 0; both are evaluated on l directly.
    const double k = s.kind == ShapeKind::prolate ? std::atanh(e) : std::asin(e);
    return make(tf * 1.2 * k, p.mass, l, Method::closed_form, 1e-14, g);
}

namespace {

struct Accum {
    double err = 0.0;
};

// Breakpoint-aware adaptive rule on [lo, hi] with an interior kink at k.
template <class F>
double integrate_split(F&& f, double lo, double hi, double k, unsigned depth, double tol, Accum& acc) {
    double e1 = 0.0, e2 = 0.0, v = 0.0;
    if (k > lo && k < hi) {
        v = GK::integrate(f, lo, k, depth, tol, &e1) + GK::integrate(f, k, hi, depth, tol, &e2);
    } else {
        v = GK::integrate(f, lo, hi, depth, tol, &e1);
    }
    acc.err += e1 + e2;
    return v;
}

double numeric_axial(const DensityProfile& p, const PotentialField& phi, double b, const NumericOptions& o,
                     double& err) {
    const double a = p.shape.a, c = p.shape.c;
    Accum outer, inner;
    const double itol = o.tol * 0.1;
    auto along = [&](double t) {
        const double st = std::sin(t), ct = std::cos(t);
        const double r = a * st, h = c * ct;
        if (!(h > 0.0)) return 0.0;
        auto g = [&](double s) {
            const double z = h * s;
            const double rho = evaluate_density(p, r, z);
            return rho == 0.0 ? 0.0 : rho * (phi(r, z + b) - phi(r, z));
        };
        const double I = integrate_split(g, -1.0, 1.0, 1.0 - b / h, o.max_depth, itol, inner);
        return 2.0 * pi * r * a * c * ct * ct * I;
    };
    const double tk = b < 2.0 * c ? std::acos(b / (2.0 * c)) : -1.0;
    const double v = integrate_split(along, 0.0, pi / 2.0, tk, o.max_depth, o.tol, outer);
    err = outer.err;
    return v;
}

double numeric_equatorial(const DensityProfile& p, const PotentialField& phi, double b, const NumericOptions& o,
                          double& err) {
    const double a = p.shape.a, c = p.shape.c;
    Accum outer, mid, inner;
    const double mtol = o.tol * 0.1, itol = o.tol * 0.01;
    auto over_theta = [&](double th) {
        const double cth = std::cos(th), sth = std::sin(th);
        auto over_t = [&](double t) {
            const double st = std::sin(t), ct = std::cos(t);
            const double X = a * ct;
            if (!(X > 0.0)) return 0.0;
            const double y = a * st * cth, z = c * st * sth;
            auto g = [&](double s) {
                const double x = X * s;
                const double r0 = std::hypot(x, y);
                const double rho = evaluate_density(p, r0, z);
                return rho == 0.0 ? 0.0 : rho * (phi(std::hypot(x + b, y), z) - phi(r0, z));
            };
            const double I = integrate_split(g, -1.0, 1.0, 1.0 - b / X, o.max_depth, itol, inner);
            return X * a * c * st * ct * I;
        };
        const double tk = b < 2.0 * a ? std::acos(b / (2.0 * a)) : -1.0;
        return integrate_split(over_t, 0.0, pi / 2.0, tk, o.max_depth, mtol, mid);
    };
    const double v = 4.0 * integrate_split(over_theta, 0.0, pi / 2.0, -1.0, o.max_depth, o.tol, outer);
    err = 4.0 * outer.err;
    return v;
}

// M [Phi2(0) - Phi2(b)] with Phi2 the potential of the self-convolved Gaussian.
double numeric_gaussian(const DensityProfile& p, double br, double bz, const NumericOptions& o, double& err) {
    const double a2 = 2.0 * p.shape.a * p.shape.a, c2 = 2.0 * p.shape.c * p.shape.c;
    const double d = a2 - c2;
    auto f = [&](double t) {
        const double t2 = t * t, q = 1.0 + d * t2;
        return -std::expm1(-(br * br * t2 / q + bz * bz * t2)) / q;
    };
    const double tmax = 1.0 / std::sqrt(c2);
    const double dist = std::hypot(br, bz);
    Accum acc;
    const double t1 = dist > 0.0 ? std::min(tmax, 6.0 / dist) : tmax;
    double v = integrate_split(f, 0.0, tmax, t1, o.max_depth, o.tol * 0.01, acc);
    err = acc.err;
    const double k = 2.0 / std::sqrt(pi) * codata2018.G * p.mass * p.mass;
    err *= k;
    return k * v;
}

}  // namespace

SelfEnergyResult eg_numeric(const DensityProfile& p, const SuperpositionConfig& cfg, NumericOptions o,
                            GammaParameter g) {
    validate(p.shape);
    if (!(o.tol >= 1e-10)) throw ValidationError("quadrature tolerance must be >= 1e-10");
    if (!(cfg.shape.a == p.shape.a && cfg.shape.c == p.shape.c)) {
        throw ValidationError("configuration shape does not match the density profile");
    }
    const double L = std::cbrt(p.shape.a * p.shape.a * p.shape.c);
    const double scale = codata2018.G * p.mass * p.mass / L;
    if (cfg.b == 0.0) return make(0.0, p.mass, L, Method::quadrature, 0.0, g);

    const bool axial = cfg.axis == Axis::symmetry || p.shape.is_sphere();
    double err = 0.0, v = 0.0;
    if (p.regime == Regime::gaussian) {
        v = axial ? numeric_gaussian(p, 0.0, cfg.b, o, err) : numeric_gaussian(p, cfg.b, 0.0, o, err);
    } else {
        const PotentialField phi(p);
        v = axial ? numeric_axial(p, phi, cfg.b, o, err) : numeric_equatorial(p, phi, cfg.b, o, err);
    }
    const double rel = v != 0.0 ? std::abs(err / v) : 0.0;
    if (rel > o.tol) {
        throw NumericalError("eg_numeric did not converge: estimated relative error " + format_double(rel) +
                             " exceeds tolerance " + format_double(o.tol));
    }
    return make(v / scale, p.mass, L, Method::quadrature, std::max(rel, 1e-15), g);
}

}  // namespace egrav
