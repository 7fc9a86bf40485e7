#include "egrav/density.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "egrav/error.hpp"

namespace egrav {

namespace {
constexpr double pi = std::numbers::pi;

void check_mass(double mass) {
    if (!(mass > 0.0) || !std::isfinite(mass)) throw ValidationError("mass must be positive and finite");
}
}  // namespace

std::string_view to_string(Regime regime) {
    switch (regime) {
        case Regime::uniform: return "uniform";
        case Regime::thomas_fermi: return "tf";
        case Regime::gaussian: return "gaussian";
    }
    return "?";
}

Regime parse_regime(std::string_view text) {
    if (text == "uniform") return Regime::uniform;
    if (text == "tf" || text == "thomas_fermi") return Regime::thomas_fermi;
    if (text == "gaussian") return Regime::gaussian;
    throw ValidationError("unknown profile '" + std::string(text) + "' (expected uniform, tf or gaussian)");
}

DensityProfile DensityProfile::uniform(const Shape& shape, double mass) {
    validate(shape);
    check_mass(mass);
    return {Regime::uniform, shape, mass};
}

DensityProfile DensityProfile::thomas_fermi(const Shape& shape, double mass) {
    validate(shape);
    check_mass(mass);
    return {Regime::thomas_fermi, shape, mass};
}

DensityProfile DensityProfile::gaussian(const Shape& widths, double mass) {
    validate(widths);
    check_mass(mass);
    return {Regime::gaussian, widths, mass};
}

double DensityProfile::mean_density() const { return mass / shape.volume(); }

double DensityProfile::peak_density() const {
    switch (regime) {
        case Regime::uniform: return mean_density();
        case Regime::thomas_fermi: return 2.5 * mean_density();
        case Regime::gaussian: return 4.0 / (3.0 * std::sqrt(pi)) * mean_density();
    }
    return 0.0;
}

double DensityProfile::support_scale() const {
    return regime == Regime::gaussian ? 8.0 * shape.major() : shape.major();
}

double evaluate_density(const DensityProfile& p, double r, double z) {
    const double a = p.shape.a, c = p.shape.c;
    const double m2 = r * r / (a * a) + z * z / (c * c);
    switch (p.regime) {
        case Regime::uniform: return m2 <= 1.0 ? p.mean_density() : 0.0;
        case Regime::thomas_fermi: return m2 < 1.0 ? 2.5 * p.mean_density() * (1.0 - m2) : 0.0;
        case Regime::gaussian: return p.peak_density() * std::exp(-m2);
    }
    return 0.0;
}

double CondensateSpec::omega0() const { return std::cbrt(omega_r * omega_r * omega_z); }

double CondensateSpec::s0() const { return std::sqrt(codata2018.hbar / (species.mass() * omega0())); }

void validate(const CondensateSpec& s) {
    if (!(s.N >= 1.0) || !std::isfinite(s.N)) throw ValidationError("N must be >= 1");
    if (!(s.omega_r > 0.0) || !(s.omega_z > 0.0)) throw ValidationError("trap frequencies must be positive (rad/s)");
    if (!(s.alpha_r > 0.0) || !(s.alpha_z > 0.0)) throw ValidationError("alpha factors must be positive");
    if (!(s.temperature >= 0.0)) throw ValidationError("temperature must be >= 0");
    if (!(s.pressure >= 0.0)) throw ValidationError("pressure must be >= 0");
    if (!std::isfinite(s.a_s)) throw ValidationError("scattering length must be finite");
}

GaussianWidths gaussian_width(const CondensateSpec& spec) {
    validate(spec);
    const double hbar = codata2018.hbar, m = spec.species.mass();
    GaussianWidths w{};
    w.a0 = std::sqrt(hbar / (m * spec.omega_r));
    w.c0 = std::sqrt(hbar / (m * spec.omega_z));
    w.a = spec.alpha_r * w.a0;
    w.c = spec.alpha_z * w.c0;
    w.R0 = spec.s0();
    w.R = spec.alpha_r * w.R0;
    return w;
}

TfSize tf_size(const CondensateSpec& spec) {
    validate(spec);
    if (!(spec.a_s > 0.0)) {
        throw ValidationError("Thomas-Fermi size needs a repulsive gas (a_s > 0)");
    }
    const auto w = gaussian_width(spec);
    const double lw = spec.lambda_omega();
    TfSize t{};
    t.a = std::pow(15.0 * spec.N * spec.a_s * std::pow(w.a0, 4) * lw, 0.2);
    t.c = t.a / lw;
    t.R = std::pow(15.0 * spec.N * spec.a_s * std::pow(w.R0, 4), 0.2);
    return t;
}

TfValidity tf_valid(const CondensateSpec& spec) {
    validate(spec);
    if (!(spec.a_s > 0.0)) throw ValidationError("Thomas-Fermi validity needs a_s > 0");
    const double margin = spec.N * spec.a_s / spec.s0();
    return {margin > 100.0, margin};
}

double critical_number(const CondensateSpec& spec, double k_c) {
    validate(spec);
    if (!(spec.a_s < 0.0)) throw ValidationError("critical number applies only to attractive gases (a_s < 0)");
    return k_c * spec.s0() / std::abs(spec.a_s);
}

DensityProfile gaussian_profile(const CondensateSpec& spec) {
    const auto w = gaussian_width(spec);
    return DensityProfile::gaussian(Shape::spheroid(w.a, w.c), spec.mass());
}

DensityProfile tf_profile(const CondensateSpec& spec) {
    const auto t = tf_size(spec);
    // Isotropic traps use R directly so a == c holds exactly.
    const Shape s = spec.omega_r == spec.omega_z ? Shape::sphere(t.R) : Shape::spheroid(t.a, t.c);
    return DensityProfile::thomas_fermi(s, spec.mass());
}

}  // namespace egrav
