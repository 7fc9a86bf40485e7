#pragma once

#include <string_view>

#include "egrav/constants.hpp"
#include "egrav/density.hpp"
#include "egrav/geometry.hpp"

namespace egrav {

enum class Method { closed_form, series, quadrature, oracle };
std::string_view to_string(Method m);

struct SelfEnergyResult {
    double value = 0.0;  // J
    Method method = Method::closed_form;
    double rel_error = 0.0;
    double ref_length = 1.0;     // L in GM^2/L (m)
    double dimensionless = 0.0;  // value / (G M^2 / L)
};

// Closed forms assume gamma = 1/(8 pi); other gamma values scale the result by 8 pi gamma.

SelfEnergyResult eg_uniform_sphere(double lambda, double M, double R, GammaParameter gamma = {});
SelfEnergyResult eg_tf_sphere(double lambda, double M, double R, GammaParameter gamma = {});
// lambda0 = b / (2 R0')
SelfEnergyResult eg_gaussian_sphere(double lambda0, double M, double width, GammaParameter gamma = {});

// High-ellipticity limits, first order in epsilon. Config b: prolate along the
// symmetry axis, lambda = b/(2c); config a: oblate along the symmetry axis, beta = b/(2a).
SelfEnergyResult eg_uniform_spheroid_limit(const SuperpositionConfig& cfg, double M, GammaParameter gamma = {});
// TF prolate, config b. a is the equatorial radius, c = a / epsilon.
SelfEnergyResult eg_tf_prolate_limit(double lambda, double M, double a, double epsilon, GammaParameter gamma = {});

SelfEnergyResult eg_infinite_separation(const DensityProfile& profile, GammaParameter gamma = {});

struct NumericOptions {
    double tol = 1e-6;
    unsigned max_depth = 15;
};

// Adaptive quadrature of int phi (rho' - rho) d^3r over the body.
SelfEnergyResult eg_numeric(const DensityProfile& profile, const SuperpositionConfig& cfg, NumericOptions opt = {},
                            GammaParameter gamma = {});

// Dimensionless bracket functions of the limit formulas.
namespace limits {
double uniform_prolate_A(double lambda);
double uniform_prolate_B(double lambda);
double uniform_prolate_C(double lambda);
double uniform_oblate_A(double beta, double epsilon);
double uniform_oblate_C(double beta);
double tf_prolate_A(double lambda);
double tf_prolate_B(double lambda);
double tf_prolate_C(double lambda);
}  // namespace limits

}  // namespace egrav
