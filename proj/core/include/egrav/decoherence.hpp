#pragma once

#include <optional>
#include <string_view>

#include "egrav/density.hpp"

namespace egrav {

enum class Channel { three_body, thermal, foreign };
std::string_view to_string(Channel c);
Channel parse_channel(std::string_view text);

enum class DensityScale { peak, mean };

// K3 = 23 (hbar/m) a_s^4
double three_body_K3(double atom_mass, double a_s);
// gamma3 = (K3/72) n^2 with n the number density of the chosen scale.
double three_body_rate(const CondensateSpec& spec, const DensityProfile& profile,
                       DensityScale scale = DensityScale::peak);

enum class ThermalModel { gaussian_cloud, tf_cloud };
std::string_view to_string(ThermalModel m);

struct ThermalRate {
    double gamma = 0.0;  // s^-1
    double v_t = 0.0;    // m/s
    double n_th = 0.0;   // m^-3 (gaussian_cloud)
    double mu_tf = 0.0;  // J (tf_cloud)
    bool zero_temperature = false;
};

// mu: chemical potential of the thermal cloud (J); enters as exp(-mu/kT) in the
// gaussian-cloud density and exp(+mu/kT) in the TF-cloud rate.
ThermalRate thermal_rate(const CondensateSpec& spec, ThermalModel model, double mu = 0.0);

struct ForeignGas {
    double mass = 0.0;         // kg
    double pressure = 0.0;     // Pa
    double temperature = 0.0;  // K
    std::optional<double> c6;  // J m^6
};

struct ForeignRate {
    double gamma = 0.0;
    double u_f = 0.0;
    double n_f = 0.0;
    double sigma = 0.0;
};

ForeignRate foreign_atom_rate(const ForeignGas& gas);

// NOON-correlation decay exponent: gamma3 N, gammaT N^2, gammaF N.
double channel_exponent(Channel c, double N, double rate);
double log_correlation_decay(Channel c, double N, double rate, double t);
double correlation_decay(Channel c, double N, double rate, double t);

struct ChannelRates {
    double gamma3 = 0.0, gammaT = 0.0, gammaF = 0.0;
    double Gamma3 = 0.0, GammaT = 0.0, GammaF = 0.0;
    double total() const { return Gamma3 + GammaT + GammaF; }
};

ChannelRates make_channel_rates(double N, double gamma3, double gammaT, double gammaF);

}  // namespace egrav
