#include "egrav/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "egrav/error.hpp"

namespace egrav {

namespace {
constexpr double pi = std::numbers::pi;
}

std::string_view to_string(Channel c) {
    switch (c) {
        case Channel::three_body: return "three_body";
        case Channel::thermal: return "thermal";
        case Channel::foreign: return "foreign";
    }
    return "?";
}

Channel parse_channel(std::string_view text) {
    if (text == "three_body") return Channel::three_body;
    if (text == "thermal") return Channel::thermal;
    if (text == "foreign") return Channel::foreign;
    throw ValidationError("unknown channel '" + std::string(text) + "' (expected three_body, thermal or foreign)");
}

std::string_view to_string(ThermalModel m) {
    return m == ThermalModel::gaussian_cloud ? "gaussian_cloud" : "tf_cloud";
}

double three_body_K3(double atom_mass, double a_s) {
    const double a2 = a_s * a_s;
    return 23.0 * codata2018.hbar / atom_mass * a2 * a2;
}

double three_body_rate(const CondensateSpec& spec, const DensityProfile& profile, DensityScale scale) {
    validate(spec);
    const double m = spec.species.mass();
    const double rho = scale == DensityScale::peak ? profile.peak_density() : profile.mean_density();
    const double n = rho / m;
    return three_body_K3(m, spec.a_s) / 72.0 * n * n;
}

ThermalRate thermal_rate(const CondensateSpec& spec, ThermalModel model, double mu) {
    validate(spec);
    ThermalRate out;
    const double T = spec.temperature;
    if (T == 0.0) {
        out.zero_temperature = true;
        return out;
    }
    const auto& k = codata2018;
    const double m = spec.species.mass();
    const double w = spec.omega0();
    const double kT = k.kB * T;
    out.v_t = std::sqrt(2.0 * kT / m);
    if (model == ThermalModel::gaussian_cloud) {
        const double R_th = std::sqrt(2.0 * kT / (m * w * w));
        const double V_th = 4.0 / 3.0 * pi * R_th * R_th * R_th;
        out.n_th = std::exp(-mu / kT) / V_th * std::pow(kT / (k.hbar * w), 3);
        out.gamma = 64.0 * std::pow(pi, 4) * spec.a_s * spec.a_s * out.n_th * out.v_t;
        return out;
    }
    if (!(spec.a_s > 0.0)) throw ValidationError("TF thermal-cloud model needs a_s > 0");
    const double R0 = spec.s0();
    out.mu_tf = 0.5 * k.hbar * w * std::pow(15.0 * spec.N * spec.a_s / R0, 0.4);
    out.gamma = 4.0 * kT * std::pow(out.mu_tf, 4) /
                (9.0 * std::pow(pi, 4) * std::pow(k.hbar, 5) * std::pow(w, 4) * spec.N * spec.N) * std::exp(mu / kT);
    return out;
}

ForeignRate foreign_atom_rate(const ForeignGas& gas) {
    if (!(gas.pressure >= 0.0)) throw ValidationError("pressure must be >= 0");
    if (!(gas.temperature > 0.0)) throw ValidationError("background gas temperature must be > 0");
    if (!(gas.mass > 0.0)) throw ValidationError("background atom mass must be > 0");
    if (!gas.c6) throw ValidationError("foreign-atom rate needs the Van der Waals coefficient C6 (J m^6)");
    const auto& k = codata2018;
    ForeignRate out;
    out.u_f = std::sqrt(2.0 * k.kB * gas.temperature / gas.mass);
    out.n_f = gas.pressure / (k.kB * gas.temperature);
    out.sigma = 7.57 * 1.033 * 1.033 * std::pow(*gas.c6 / (k.hbar * out.u_f), 0.4);
    out.gamma = out.sigma * out.n_f * out.u_f / std::sqrt(6.0);
    return out;
}

double channel_exponent(Channel c, double N, double rate) {
    switch (c) {
        case Channel::three_body: return rate * N;
        case Channel::thermal: return rate * N * N;
        case Channel::foreign: return rate * N;
    }
    return 0.0;
}

double log_correlation_decay(Channel c, double N, double rate, double t) {
    if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
    return -channel_exponent(c, N, rate) * t;
}

double correlation_decay(Channel c, double N, double rate, double t) {
    return std::exp(log_correlation_decay(c, N, rate, t));
}

ChannelRates make_channel_rates(double N, double gamma3, double gammaT, double gammaF) {
    ChannelRates r;
    r.gamma3 = gamma3;
    r.gammaT = gammaT;
    r.gammaF = gammaF;
    r.Gamma3 = channel_exponent(Channel::three_body, N, gamma3);
    r.GammaT = channel_exponent(Channel::thermal, N, gammaT);
    r.GammaF = channel_exponent(Channel::foreign, N, gammaF);
    return r;
}

}  // namespace egrav
