#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "egrav/constants.hpp"
#include "egrav/decoherence.hpp"
#include "egrav/density.hpp"

namespace egrav {

struct Phases {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double sum() const { return phi1 + phi2; }
};

// Relative phases of two masses M held at separation d, one of them in a
// superposition of size b, after time t.
Phases entanglement_phases(double M, double d, double b, double t);

// Smallest gap d - b at which the Casimir-Polder force stays below a tenth of gravity.
double casimir_min_separation(double M, double R, double eps_r);

// A worked collapse-vs-decoherence example: touching spherical condensates of radius R.
struct Scenario {
    std::string name;
    std::string species = "Cs133";
    double N = 1.0;
    double R = 0.0;              // m
    double a_s = 0.0;            // m
    double omega = 0.0;          // rad/s, isotropic trap
    Regime regime = Regime::thomas_fermi;
    double temperature = 0.0;    // K, condensate thermal cloud
    ThermalModel thermal_model = ThermalModel::gaussian_cloud;
    double mu = 0.0;             // J, thermal-cloud chemical potential
    double pressure = 0.0;       // Pa, background gas
    std::string background = "H1";
    double background_temperature = 293.15;  // K
    std::optional<double> background_c6;     // J m^6, defaults to the background species value
    double gamma = 1.0 / (8.0 * std::numbers::pi);
    double threshold = 10.0;
    DensityScale density_scale = DensityScale::peak;
};

std::vector<std::string> preset_names();
Scenario preset(std::string_view name);

enum class Verdict { collapse_dominated, marginal, decoherence_dominated };
std::string_view to_string(Verdict v);

struct RateReport {
    double E_G = 0.0;           // J
    double tau = 0.0;           // s
    double collapse_rate = 0.0;  // s^-1
    ChannelRates channels;
    double ratio = 0.0;          // collapse_rate / total decoherence exponent
    Verdict verdict = Verdict::marginal;
};

RateReport evaluate(const Scenario& s);

// Temperature where the collapse rate equals the decoherence exponent, other parameters fixed.
double crossover_temperature(Scenario s, double t_lo = 1e-15, double t_hi = 1e-3);

enum class AxisScale { linear, log };

struct ScanAxis {
    std::string parameter;  // N, R, a_s, omega, T, P, gamma
    double min = 0.0, max = 0.0;
    std::size_t points = 1;
    AxisScale scale = AxisScale::linear;
};

struct ScanRequest {
    Scenario base;
    std::vector<ScanAxis> axes;
};

struct ScanPoint {
    std::vector<double> values;  // one per axis
    RateReport report;
};

inline constexpr std::size_t scan_max_points = 1000000;

std::vector<double> axis_values(const ScanAxis& axis);
void set_parameter(Scenario& s, std::string_view parameter, double value);
std::vector<ScanPoint> dominance_scan(const ScanRequest& request);

}  // namespace egrav
