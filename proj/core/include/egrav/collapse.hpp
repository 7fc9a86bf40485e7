#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "egrav/constants.hpp"
#include "egrav/density.hpp"

namespace egrav {

struct CollapseLaw {
    double E_G = 0.0;    // J
    double tau = 0.0;    // s, infinite when E_G = 0
    double rate = 0.0;   // s^-1

    static CollapseLaw from_energy(double E_G);
};

struct Survival {
    double log_ps = 0.0;  // ln P_s
    double ps = 1.0;
    double pd = 0.0;
};

Survival survival_probability(double E_G, double t);

// Far-field lifetime 5 hbar R / (6 G M^2) when b is empty, otherwise hbar / E_G(b).
double sphere_lifetime(double M, double R, std::optional<double> b = std::nullopt, GammaParameter gamma = {});

// Two touching spherical condensates of N atoms of mass m and radius R (TF radius or Gaussian width).
double bec_touching_lifetime(double atom_mass, double N, double R, Regime regime, GammaParameter gamma = {});
// Radius from the trap: TF radius or the scaled Gaussian width.
double bec_touching_lifetime(const CondensateSpec& spec, Regime regime, GammaParameter gamma = {});

struct NoonCorrelation {
    double value = 0.0;      // may underflow or overflow; see log_value
    double log_value = 0.0;  // ln(N!/2) - E_G t / hbar
};

NoonCorrelation noon_correlation_collapse(int N, double E_G, double t);

// Exponential collapse times from a 64-bit Mersenne Twister (mt19937_64) seeded with seed.
std::vector<double> sample_collapse_times(double E_G, std::size_t count, std::uint64_t seed);
// Partition p of a sampling run; partitions draw from derived seeds.
std::vector<double> sample_collapse_times(double E_G, std::size_t count, std::uint64_t seed, std::uint32_t partition);

// Kolmogorov-Smirnov distance between samples and 1 - exp(-t/tau).
double ks_statistic(std::vector<double> samples, double tau);

}  // namespace egrav
