#include "egrav/feasibility.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "egrav/error.hpp"
#include "egrav/self_energy.hpp"

namespace egrav {

namespace {
constexpr double pi = std::numbers::pi;
}

Phases entanglement_phases(double M, double d, double b, double t) {
    if (!(M > 0.0) || !(d > 0.0) || !(b >= 0.0) || !(t >= 0.0))
        throw ValidationError("phases need M > 0, d > 0, b >= 0, t >= 0");
    if (d == b) throw ValidationError("phases are singular at d = b");
    const auto& k = codata2018;
    const double base = k.G * M * M * t * b / (k.hbar * d);
    return {base / (d - b), -base / (d + b)};
}

double casimir_min_separation(double M, double R, double eps_r) {
    if (!(eps_r > 1.0)) throw ValidationError("relative permittivity must be > 1");
    if (!(M > 0.0) || !(R > 0.0)) throw ValidationError("mass and radius must be > 0");
    const auto& k = codata2018;
    const double cm = (eps_r - 1.0) / (eps_r + 2.0);
    return std::pow(23.0 * k.hbar * k.c / (0.1 * 4.0 * pi * k.G * M * M) * cm * cm, 1.0 / 6.0) * R;
}

std::vector<std::string> preset_names() {
    return {"cs-4e9-1um", "tf-threebody", "tf-threebody-alt", "gamma-8pi", "gaussian-thermal", "tf-thermal"};
}

Scenario preset(std::string_view name) {
    const double stock = lookup_species("Cs133").scattering_length();
    Scenario s;
    s.name = std::string(name);
    s.species = "Cs133";
    if (name == "cs-4e9-1um") {
        s.N = 4e9;
        s.R = 1e-6;
        s.a_s = stock;
        s.omega = 300.0;
        return s;
    }
    if (name == "tf-threebody") {
        s.N = 4e9;
        s.R = 10e-6;
        s.a_s = stock * 1e-4;
        s.omega = 300.0;
        return s;
    }
    if (name == "tf-threebody-alt") {
        s.N = 4e10;
        s.R = 0.1e-3;
        s.a_s = stock * 1e-3;
        s.omega = 10.0;
        return s;
    }
    if (name == "gamma-8pi") {
        s.N = 6e8;
        s.R = 0.1e-3;
        s.a_s = stock * 1e-2;
        s.omega = 10.0;
        s.gamma = 8.0 * pi;
        return s;
    }
    if (name == "gaussian-thermal") {
        const double m = lookup_species("Cs133").mass();
        s.N = 4e9;
        s.R = 1e-6;
        s.a_s = stock * 1e-6;
        s.regime = Regime::gaussian;
        s.omega = codata2018.hbar / (m * s.R * s.R);
        s.temperature = 1e-9;
        s.thermal_model = ThermalModel::gaussian_cloud;
        return s;
    }
    if (name == "tf-thermal") {
        s.N = 4e11;
        s.R = 0.1e-3;
        s.a_s = stock * 1e-6;
        s.omega = 10.0;
        s.temperature = 0.1e-9;
        s.thermal_model = ThermalModel::tf_cloud;
        return s;
    }
    std::string names;
    for (const auto& n : preset_names()) names += (names.empty() ? "" : ", ") + n;
    throw ValidationError("unknown preset '" + std::string(name) + "'; available: " + names);
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::collapse_dominated: return "collapse-dominated";
        case Verdict::marginal: return "marginal";
        case Verdict::decoherence_dominated: return "decoherence-dominated";
    }
    return "?";
}

RateReport evaluate(const Scenario& s) {
    if (!(s.N > 0.0) || !(s.R > 0.0)) throw ValidationError("scenario needs N > 0 and R > 0");
    if (!(s.threshold > 1.0)) throw ValidationError("dominance threshold must be > 1");
    const Species& sp = lookup_species(s.species);
    const GammaParameter g = make_gamma(s.gamma);
    const double M = sp.mass() * s.N;

    RateReport r;
    DensityProfile profile;
    if (s.regime == Regime::thomas_fermi) {
        r.E_G = eg_tf_sphere(1.0, M, s.R, g).value;
        profile = DensityProfile::thomas_fermi(Shape::sphere(s.R), M);
    } else if (s.regime == Regime::gaussian) {
        r.E_G = eg_gaussian_sphere(1.0, M, s.R, g).value;
        profile = DensityProfile::gaussian(Shape::sphere(s.R), M);
    } else {
        throw ValidationError("scenario regime must be tf or gaussian");
    }
    r.collapse_rate = r.E_G / codata2018.hbar;
    r.tau = 1.0 / r.collapse_rate;

    CondensateSpec spec;
    spec.species = sp;
    spec.N = s.N;
    spec.omega_r = spec.omega_z = s.omega;
    spec.a_s = s.a_s;
    spec.temperature = s.temperature;
    spec.pressure = s.pressure;

    const double g3 = three_body_rate(spec, profile, s.density_scale);
    double gt = 0.0;
    if (s.temperature > 0.0) gt = thermal_rate(spec, s.thermal_model, s.mu).gamma;
    double gf = 0.0;
    if (s.pressure > 0.0) {
        const Species& bg = lookup_species(s.background);
        ForeignGas gas{bg.mass(), s.pressure, s.background_temperature, s.background_c6 ? s.background_c6 : bg.c6};
        gf = foreign_atom_rate(gas).gamma;
    }
    r.channels = make_channel_rates(s.N, g3, gt, gf);
    const double total = r.channels.total();
    r.ratio = total > 0.0 ? r.collapse_rate / total : std::numeric_limits<double>::infinity();
    r.verdict = r.ratio > s.threshold ? Verdict::collapse_dominated
                : r.ratio < 1.0       ? Verdict::decoherence_dominated
                                      : Verdict::marginal;
    return r;
}

double crossover_temperature(Scenario s, double t_lo, double t_hi) {
    const auto excess = [&](double T) {
        s.temperature = T;
        const RateReport r = evaluate(s);
        return std::log(r.collapse_rate) - std::log(r.channels.total());
    };
    double lo = std::log(t_lo), hi = std::log(t_hi);
    double flo = excess(t_lo), fhi = excess(t_hi);
    if (flo < 0.0 || fhi > 0.0) throw NumericalError("collapse/decoherence crossover not bracketed in temperature");
    for (int i = 0; i < 200 && hi - lo > 1e-12; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(std::exp(mid)) > 0.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

std::vector<double> axis_values(const ScanAxis& a) {
    if (a.points < 1) throw ValidationError("scan axis '" + a.parameter + "' needs at least one point");
    if (a.scale == AxisScale::log && !(a.min > 0.0 && a.max > 0.0))
        throw ValidationError("log axis '" + a.parameter + "' needs positive bounds");
    if (!(a.max >= a.min)) throw ValidationError("scan axis '" + a.parameter + "' has max < min");
    std::vector<double> v(a.points);
    for (std::size_t i = 0; i < a.points; ++i) {
        const double f = a.points == 1 ? 0.0 : double(i) / double(a.points - 1);
        v[i] = a.scale == AxisScale::log ? std::exp(std::log(a.min) + f * (std::log(a.max) - std::log(a.min)))
                                         : a.min + f * (a.max - a.min);
    }
    v.front() = a.min;
    if (a.points > 1) v.back() = a.max;
    return v;
}

void set_parameter(Scenario& s, std::string_view p, double value) {
    if (p == "N") s.N = value;
    else if (p == "R") s.R = value;
    else if (p == "a_s") s.a_s = value;
    else if (p == "omega") s.omega = value;
    else if (p == "T") s.temperature = value;
    else if (p == "P") s.pressure = value;
    else if (p == "gamma") s.gamma = value;
    else throw ValidationError("unknown scan parameter '" + std::string(p) + "' (N, R, a_s, omega, T, P, gamma)");
}

std::vector<ScanPoint> dominance_scan(const ScanRequest& req) {
    if (req.axes.empty() || req.axes.size() > 2) throw ValidationError("a scan takes one or two axes");
    std::vector<std::vector<double>> vals;
    std::size_t total = 1;
    for (const auto& a : req.axes) {
        Scenario probe = req.base;
        set_parameter(probe, a.parameter, 1.0);
        vals.push_back(axis_values(a));
        total *= vals.back().size();
        if (total > scan_max_points) throw ValidationError("scan exceeds 1e6 points");
    }
    std::vector<ScanPoint> out;
    out.reserve(total);
    const std::size_t n1 = req.axes.size() == 2 ? vals[1].size() : 1;
    for (double v0 : vals[0])
        for (std::size_t j = 0; j < n1; ++j) {
            Scenario s = req.base;
            ScanPoint pt;
            set_parameter(s, req.axes[0].parameter, v0);
            pt.values.push_back(v0);
            if (req.axes.size() == 2) {
                set_parameter(s, req.axes[1].parameter, vals[1][j]);
                pt.values.push_back(vals[1][j]);
            }
            pt.report = evaluate(s);
            out.push_back(std::move(pt));
        }
    return out;
}

}  // namespace egrav
