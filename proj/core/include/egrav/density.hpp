#pragma once

#include <string_view>

#include "egrav/constants.hpp"
#include "egrav/geometry.hpp"

namespace egrav {

enum class Regime { uniform, thomas_fermi, gaussian };

std::string_view to_string(Regime regime);
Regime parse_regime(std::string_view text);

// For the gaussian regime `shape` holds the 1/e widths (a0', c0') rather than
// a sharp boundary.
struct DensityProfile {
    Regime regime = Regime::uniform;
    Shape shape;
    double mass = 1.0;  // kg

    static DensityProfile uniform(const Shape& shape, double mass);
    static DensityProfile thomas_fermi(const Shape& shape, double mass);
    static DensityProfile gaussian(const Shape& widths, double mass);

    // M / ((4/3) pi a^2 c)
    double mean_density() const;
    double peak_density() const;
    // Radius beyond which the density is treated as zero by quadrature.
    double support_scale() const;
    bool has_sharp_boundary() const { return regime != Regime::gaussian; }
};

double evaluate_density(const DensityProfile& profile, double r, double z);

struct CondensateSpec {
    Species species;
    double N = 1.0;
    double omega_r = 0.0;  // rad/s
    double omega_z = 0.0;  // rad/s
    double a_s = 0.0;      // m
    double alpha_r = 1.0;
    double alpha_z = 1.0;
    double temperature = 0.0;  // K
    double pressure = 0.0;     // Pa

    double mass() const { return species.mass() * N; }
    double omega0() const;           // (omega_r^2 omega_z)^(1/3)
    double lambda_omega() const { return omega_z / omega_r; }
    double s0() const;               // sqrt(hbar/(m omega0))
};

void validate(const CondensateSpec& spec);

struct GaussianWidths {
    double a0;  // equatorial width before alpha scaling
    double c0;
    double a;   // alpha_r * a0
    double c;   // alpha_z * c0
    double R0;  // isotropic width sqrt(hbar/(m omega0))
    double R;   // alpha_r * R0
};

GaussianWidths gaussian_width(const CondensateSpec& spec);

struct TfSize {
    double a;
    double c;
    double R;  // spherical radius (15 N a_s R0^4)^(1/5)
};

TfSize tf_size(const CondensateSpec& spec);

struct TfValidity {
    bool valid;
    double margin;  // N a_s / s0
};

// Valid when N > 100 s0 / a_s.
TfValidity tf_valid(const CondensateSpec& spec);

double critical_number(const CondensateSpec& spec, double k_c = 0.6);

DensityProfile gaussian_profile(const CondensateSpec& spec);
DensityProfile tf_profile(const CondensateSpec& spec);

}  // namespace egrav
