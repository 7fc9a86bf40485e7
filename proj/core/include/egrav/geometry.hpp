#pragma once

#include <string_view>

namespace egrav {

enum class ShapeKind { sphere, oblate, prolate };

// a: equatorial radius, c: polar (symmetry-axis) radius.
struct Shape {
    ShapeKind kind = ShapeKind::sphere;
    double a = 1.0;
    double c = 1.0;

    static Shape sphere(double R);
    // Kind follows from the axes; a == c gives a sphere.
    static Shape spheroid(double a, double c);

    double volume() const;
    double focal_distance() const;  // l = sqrt|a^2 - c^2|
    double ellipticity() const;     // e
    double epsilon() const;         // minor/major axis ratio
    double major() const { return a > c ? a : c; }
    double minor() const { return a > c ? c : a; }
    bool is_sphere() const { return kind == ShapeKind::sphere; }
};

void validate(const Shape& s);

enum class Axis { symmetry, equatorial };

// Labels a-d follow the usual figure: a) oblate, symmetry axis; b) prolate,
// symmetry axis; c) oblate, equatorial; d) prolate, equatorial.
enum class ConfigLabel { a, b, c, d, sphere };

struct SuperpositionConfig {
    Shape shape;
    double b = 0.0;  // displacement (m)
    Axis axis = Axis::symmetry;
    ConfigLabel label = ConfigLabel::sphere;

    static SuperpositionConfig make(const Shape& shape, double b, Axis axis);
    static SuperpositionConfig labelled(const Shape& shape, double b, ConfigLabel label);
};

ConfigLabel label_for(ShapeKind kind, Axis axis);
Axis axis_for(ConfigLabel label);
std::string_view to_string(ConfigLabel label);
std::string_view to_string(ShapeKind kind);
ConfigLabel parse_config_label(std::string_view text);

struct DimensionlessParams {
    double lambda = 0.0;    // b/(2c), b/(2R) for a sphere
    double beta = 0.0;      // b/(2a)
    double epsilon = 1.0;   // minor/major
    double e = 0.0;         // ellipticity
    double e_second = 0.0;  // l/c (oblate second ellipticity)
    double l = 0.0;         // focal distance (m)
    double xi0 = 0.0;       // spheroidal coordinate of the surface, c/l
};

DimensionlessParams dimensionless(const SuperpositionConfig& cfg);

// a^2 c = R^3 with the requested axis ratio.
Shape equivalent_spheroid(double R, double epsilon, ShapeKind kind);

struct SpheroidalPoint {
    double xi;
    double eta;
};

// Prolate: xi >= 1, |eta| <= 1, foci at z = +-l.
SpheroidalPoint prolate_coords(double r, double z, double l);
void prolate_to_cylindrical(double xi, double eta, double l, double& r, double& z);

// Oblate: r = l sqrt(xi^2+1) sqrt(1-eta^2), z = l xi eta, xi >= 0.
SpheroidalPoint oblate_coords(double r, double z, double l);
void oblate_to_cylindrical(double xi, double eta, double l, double& r, double& z);

}  // namespace egrav
