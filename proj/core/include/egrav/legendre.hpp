#pragma once

namespace egrav::legendre {

double P2(double x);
double P4(double x);

// Second kind on the cut-free real axis x > 1 (prolate radial functions).
double Q0(double x);
double Q2(double x);
double Q4(double x);

// Oblate radial functions, xi >= 0:
// q0 = acot xi, q2 = (3xi^2+1)/2 acot xi - 3xi/2,
// q4 = (35xi^4+30xi^2+3)/8 acot xi - xi(110+210xi^2)/48.
double q0(double xi);
double q2(double xi);
double q4(double xi);

}  // namespace egrav::legendre
