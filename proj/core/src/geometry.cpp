#include "egrav/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "egrav/error.hpp"

namespace egrav {

Shape Shape::sphere(double R) {
    Shape s{ShapeKind::sphere, R, R};
    validate(s);
    return s;
}

Shape Shape::spheroid(double a, double c) {
    Shape s{a == c ? ShapeKind::sphere : (a > c ? ShapeKind::oblate : ShapeKind::prolate), a, c};
    validate(s);
    return s;
}

void validate(const Shape& s) {
    if (!(s.a > 0.0) || !(s.c > 0.0) || !std::isfinite(s.a) || !std::isfinite(s.c)) {
        throw ValidationError("shape radii must be positive and finite");
    }
    const bool ok = (s.kind == ShapeKind::sphere && s.a == s.c) || (s.kind == ShapeKind::oblate && s.a > s.c) ||
                    (s.kind == ShapeKind::prolate && s.c > s.a);
    if (!ok) throw ValidationError("shape kind inconsistent with its axes");
}

double Shape::volume() const { return 4.0 / 3.0 * std::numbers::pi * a * a * c; }

double Shape::focal_distance() const {
    // (a-c)(a+c) keeps relative accuracy for nearly spherical shapes.
    return std::sqrt(std::abs((a - c) * (a + c)));
}

double Shape::ellipticity() const { return focal_distance() / major(); }

double Shape::epsilon() const { return minor() / major(); }

ConfigLabel label_for(ShapeKind kind, Axis axis) {
    switch (kind) {
        case ShapeKind::sphere: return ConfigLabel::sphere;
        case ShapeKind::oblate: return axis == Axis::symmetry ? ConfigLabel::a : ConfigLabel::c;
        case ShapeKind::prolate: return axis == Axis::symmetry ? ConfigLabel::b : ConfigLabel::d;
    }
    return ConfigLabel::sphere;
}

Axis axis_for(ConfigLabel label) {
    return (label == ConfigLabel::c || label == ConfigLabel::d) ? Axis::equatorial : Axis::symmetry;
}

SuperpositionConfig SuperpositionConfig::make(const Shape& shape, double b, Axis axis) {
    validate(shape);
    if (!(b >= 0.0) || !std::isfinite(b)) throw ValidationError("displacement b must be finite and >= 0");
    return {shape, b, axis, label_for(shape.kind, axis)};
}

SuperpositionConfig SuperpositionConfig::labelled(const Shape& shape, double b, ConfigLabel label) {
    auto cfg = make(shape, b, axis_for(label));
    if (cfg.label != label) {
        throw ValidationError("configuration " + std::string(to_string(label)) + " does not apply to a " +
                              std::string(to_string(shape.kind)));
    }
    return cfg;
}

std::string_view to_string(ConfigLabel label) {
    switch (label) {
        case ConfigLabel::a: return "a";
        case ConfigLabel::b: return "b";
        case ConfigLabel::c: return "c";
        case ConfigLabel::d: return "d";
        case ConfigLabel::sphere: return "sphere";
    }
    return "?";
}

std::string_view to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::sphere: return "sphere";
        case ShapeKind::oblate: return "oblate";
        case ShapeKind::prolate: return "prolate";
    }
    return "?";
}

ConfigLabel parse_config_label(std::string_view text) {
    if (text == "a") return ConfigLabel::a;
    if (text == "b") return ConfigLabel::b;
    if (text == "c") return ConfigLabel::c;
    if (text == "d") return ConfigLabel::d;
    if (text == "sphere") return ConfigLabel::sphere;
    throw ValidationError("unknown configuration '" + std::string(text) + "' (expected a, b, c, d or sphere)");
}

DimensionlessParams dimensionless(const SuperpositionConfig& cfg) {
    const Shape& s = cfg.shape;
    validate(s);
    DimensionlessParams p;
    p.lambda = cfg.b / (2.0 * s.c);
    p.beta = cfg.b / (2.0 * s.a);
    p.epsilon = s.epsilon();
    p.l = s.focal_distance();
    p.e = p.l / s.major();
    p.e_second = p.l / s.c;
    p.xi0 = p.l > 0.0 ? s.c / p.l : 0.0;
    return p;
}

Shape equivalent_spheroid(double R, double epsilon, ShapeKind kind) {
    if (!(R > 0.0) || !(epsilon > 0.0) || epsilon > 1.0) {
        throw ValidationError("equivalent_spheroid needs R > 0 and 0 < epsilon <= 1");
    }
    if (epsilon == 1.0 || kind == ShapeKind::sphere) return Shape::sphere(R);
    if (kind == ShapeKind::oblate) {
        // a^2 (eps a) = R^3
        const double a = R / std::cbrt(epsilon);
        return Shape{ShapeKind::oblate, a, epsilon * a};
    }
    // (eps c)^2 c = R^3
    const double c = R / std::cbrt(epsilon * epsilon);
    return Shape{ShapeKind::prolate, epsilon * c, c};
}

SpheroidalPoint prolate_coords(double r, double z, double l) {
    if (!(l > 0.0)) throw ValidationError("prolate coordinates need l > 0; use the spherical path");
    const double s1 = std::hypot(r, z + l);
    const double s2 = std::hypot(r, z - l);
    double xi = (s1 + s2) / (2.0 * l);
    double eta = (s1 - s2) / (2.0 * l);
    xi = std::max(xi, 1.0);
    eta = std::clamp(eta, -1.0, 1.0);
    return {xi, eta};
}

void prolate_to_cylindrical(double xi, double eta, double l, double& r, double& z) {
    r = l * std::sqrt(std::max(0.0, (xi * xi - 1.0) * (1.0 - eta * eta)));
    z = l * xi * eta;
}

SpheroidalPoint oblate_coords(double r, double z, double l) {
    if (!(l > 0.0)) throw ValidationError("oblate coordinates need l > 0; use the spherical path");
    r = std::abs(r);
    // Distances to the focal ring give cosh(mu) = sqrt(xi^2+1).
    const double s1 = std::hypot(r + l, z);
    const double s2 = std::hypot(r - l, z);
    const double ch = (s1 + s2) / (2.0 * l);
    const double sn = (s1 - s2) / (2.0 * l);  // = sqrt(1-eta^2)
    const double xi = std::sqrt(std::max(0.0, (ch - 1.0) * (ch + 1.0)));
    double eta;
    if (xi > 1e-12) {
        eta = z / (l * xi);
    } else {
        eta = std::sqrt(std::max(0.0, 1.0 - sn * sn));
        if (z < 0.0) eta = -eta;
    }
    return {xi, std::clamp(eta, -1.0, 1.0)};
}

void oblate_to_cylindrical(double xi, double eta, double l, double& r, double& z) {
    r = l * std::sqrt((xi * xi + 1.0) * std::max(0.0, 1.0 - eta * eta));
    z = l * xi * eta;
}

}  // namespace egrav
