#include "egrav/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "egrav/error.hpp"
#include "egrav/self_energy.hpp"

namespace egrav {

CollapseLaw CollapseLaw::from_energy(double E_G) {
    if (!(E_G >= 0.0)) throw ValidationError("E_G must be >= 0");
    CollapseLaw law;
    law.E_G = E_G;
    law.rate = E_G / codata2018.hbar;
    law.tau = E_G > 0.0 ? codata2018.hbar / E_G : std::numeric_limits<double>::infinity();
    return law;
}

Survival survival_probability(double E_G, double t) {
    if (!(E_G >= 0.0)) throw ValidationError("E_G must be >= 0");
    if (!(t >= 0.0)) throw ValidationError("time must be >= 0");
    Survival s;
    s.log_ps = t > 0.0 ? -E_G * t / codata2018.hbar : 0.0;
    s.ps = std::exp(s.log_ps);
    s.pd = -std::expm1(s.log_ps);
    return s;
}

double sphere_lifetime(double M, double R, std::optional<double> b, GammaParameter gamma) {
    if (!(M > 0.0) || !(R > 0.0)) throw ValidationError("sphere mass and radius must be > 0");
    if (!b) return 5.0 * codata2018.hbar * R / (6.0 * codata2018.G * M * M * gamma.factor());
    if (!(*b >= 0.0)) throw ValidationError("separation must be >= 0");
    const double E = eg_uniform_sphere(*b / (2.0 * R), M, R, gamma).value;
    return CollapseLaw::from_energy(E).tau;
}

double bec_touching_lifetime(double atom_mass, double N, double R, Regime regime, GammaParameter gamma) {
    if (!(atom_mass > 0.0) || !(N > 0.0) || !(R > 0.0)) throw ValidationError("mass, N and radius must be > 0");
    const double M = atom_mass * N;
    double E = 0.0;
    switch (regime) {
        case Regime::thomas_fermi: E = eg_tf_sphere(1.0, M, R, gamma).value; break;
        case Regime::gaussian: E = eg_gaussian_sphere(1.0, M, R, gamma).value; break;
        case Regime::uniform: E = eg_uniform_sphere(1.0, M, R, gamma).value; break;
    }
    return CollapseLaw::from_energy(E).tau;
}

double bec_touching_lifetime(const CondensateSpec& spec, Regime regime, GammaParameter gamma) {
    validate(spec);
    double R = 0.0;
    if (regime == Regime::thomas_fermi) {
        if (!(spec.a_s > 0.0)) throw ValidationError("TF regime requires a_s > 0");
        R = tf_size(spec).R;
    } else if (regime == Regime::gaussian) {
        R = gaussian_width(spec).R;
    } else {
        throw ValidationError("condensate lifetime needs the tf or gaussian regime");
    }
    return bec_touching_lifetime(spec.species.mass(), spec.N, R, regime, gamma);
}

NoonCorrelation noon_correlation_collapse(int N, double E_G, double t) {
    if (N < 1) throw ValidationError("N must be >= 1");
    if (!(E_G >= 0.0) || !(t >= 0.0)) throw ValidationError("E_G and t must be >= 0");
    NoonCorrelation c;
    c.log_value = std::lgamma(N + 1.0) - std::log(2.0) - E_G * t / codata2018.hbar;
    if (N <= 20) {
        std::uint64_t f = 1;
        for (int i = 2; i <= N; ++i) f *= std::uint64_t(i);
        c.value = 0.5 * double(f) * std::exp(-E_G * t / codata2018.hbar);
    } else {
        c.value = std::exp(c.log_value);
    }
    return c;
}

std::vector<double> sample_collapse_times(double E_G, std::size_t count, std::uint64_t seed) {
    if (!(E_G > 0.0)) throw ValidationError("E_G must be > 0 for collapse sampling (E_G = 0 never decays)");
    const double tau = codata2018.hbar / E_G;
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    for (double& x : out) {
        const double u = std::generate_canonical<double, 64>(rng);
        x = -tau * std::log1p(-u);
    }
    return out;
}

std::vector<double> sample_collapse_times(double E_G, std::size_t count, std::uint64_t seed, std::uint32_t partition) {
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), partition};
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return sample_collapse_times(E_G, count, (std::uint64_t(words[0]) << 32) | words[1]);
}

double ks_statistic(std::vector<double> samples, double tau) {
    if (samples.empty()) throw ValidationError("no samples");
    if (!(tau > 0.0)) throw ValidationError("tau must be > 0");
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double F = -std::expm1(-samples[i] / tau);
        d = std::max({d, (i + 1) / n - F, F - i / n});
    }
    return d;
}

}  // namespace egrav
