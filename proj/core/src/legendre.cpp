#include "egrav/legendre.hpp"

#include <cmath>
#include <numbers>

#include "egrav/error.hpp"

namespace egrav::legendre {

namespace {

// Hypergeometric tail shared by Q_n and q_n for large arguments:
// Q_n(x) = sqrt(pi) n! / (Gamma(n+3/2) (2x)^(n+1)) 2F1((n+1)/2, (n+2)/2; n+3/2; s/x^2)
// with s = +1 (prolate) or -1 (oblate).
double tail(int n, double x, double s) {
    const double z = s / (x * x);
    const double a = 0.5 * (n + 1), b = 0.5 * (n + 2), c = n + 1.5;
    double term = 1.0, sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    const double pref = std::sqrt(std::numbers::pi) * std::tgamma(n + 1.0) / std::tgamma(n + 1.5);
    return pref / std::pow(2.0 * x, n + 1) * sum;
}

constexpr double kSeriesFrom = 1.5;

double acot(double x) { return std::atan2(1.0, x); }

}  // namespace

double P2(double x) { return 0.5 * (3.0 * x * x - 1.0); }

double P4(double x) {
    const double x2 = x * x;
    return (35.0 * x2 * x2 - 30.0 * x2 + 3.0) / 8.0;
}

double Q0(double x) {
    if (!(x > 1.0)) throw NumericalError("Q0 needs x > 1");
    return std::atanh(1.0 / x);
}

double Q2(double x) {
    if (!(x > 1.0)) throw NumericalError("Q2 needs x > 1");
    if (x >= kSeriesFrom) return tail(2, x, 1.0);
    return P2(x) * Q0(x) - 1.5 * x;
}

double Q4(double x) {
    if (!(x > 1.0)) throw NumericalError("Q4 needs x > 1");
    if (x >= kSeriesFrom) return tail(4, x, 1.0);
    return x * (110.0 - 210.0 * x * x) / 48.0 + P4(x) * Q0(x);
}

double q0(double xi) { return acot(xi); }

double q2(double xi) {
    if (xi >= 2.0) return tail(2, xi, -1.0);
    return 0.5 * (3.0 * xi * xi + 1.0) * acot(xi) - 1.5 * xi;
}

double q4(double xi) {
    if (xi >= 2.0) return tail(4, xi, -1.0);
    const double x2 = xi * xi;
    return (35.0 * x2 * x2 + 30.0 * x2 + 3.0) / 8.0 * acot(xi) - xi * (110.0 + 210.0 * x2) / 48.0;
}

}  // namespace egrav::legendre
