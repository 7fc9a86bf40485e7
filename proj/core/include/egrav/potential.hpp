#pragma once

#include <array>
#include <optional>

#include "egrav/density.hpp"
#include "egrav/geometry.hpp"

namespace egrav {

// All potentials in J/kg, points in cylindrical (r, z) with z on the symmetry axis.

double phi_uniform_sphere(double r, double R, double M);
double phi_tf_sphere(double r, double R, double M);
double phi_gaussian_sphere(double r, double width, double M);

enum class SpheroidMethod { spheroidal, cylindrical, small_e };

// Throws ValidationError for a sphere; use phi_uniform_sphere there.
double phi_uniform_spheroid(double r, double z, const Shape& shape, double M,
                            SpheroidMethod method = SpheroidMethod::cylindrical);

// Second-order expansion about the equal-volume sphere.
double phi_uniform_spheroid_small_e(double r, double z, const Shape& shape, double M);

// TF spheroid. Interior: quartic polynomial in (r^2, z^2) with index-symbol
// coefficients; exterior: terminating Legendre series 7Q0 -+ 10Q2P2 + 3Q4P4.
class TfSpheroidPotential {
public:
    TfSpheroidPotential(const Shape& shape, double M);
    double operator()(double r, double z) const;
    double interior(double r, double z) const;
    double exterior(double r, double z) const;

private:
    Shape shape_;
    double M_;
    double l_;
    std::array<double, 6> J_{};  // J00 J10 J01 J20 J11 J02
};

double phi_tf_spheroid(double r, double z, const Shape& shape, double M);

// Uniform interior via the same index symbols (valid for any spheroid, incl. sphere).
double phi_uniform_ellipsoid_interior(double r, double z, const Shape& shape, double M);

// Exact: one-dimensional integral over the Gaussian kernel.
double phi_gaussian_spheroid(double r, double z, const Shape& widths, double M);

struct SmallEPotential {
    double value;
    bool accuracy_warning;  // e > 0.3
};

// order 0, 2 or 4 in e. R is the equal-volume width (a^2 c)^(1/3).
SmallEPotential phi_gaussian_spheroid_small_e(double r, double z, const Shape& widths, double M, int order = 4);

// Dispatching potential of a density profile.
class PotentialField {
public:
    explicit PotentialField(const DensityProfile& profile);
    double operator()(double r, double z) const;
    const DensityProfile& profile() const { return profile_; }

private:
    DensityProfile profile_;
    std::optional<TfSpheroidPotential> tf_;
};

}  // namespace egrav
