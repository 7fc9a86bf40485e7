#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "egrav/decoherence.hpp"
#include "egrav/density.hpp"
#include "egrav/geometry.hpp"
#include "egrav/self_energy.hpp"

namespace egrav {

// Cell masses of a single density profile on a regular grid centred on the body.
struct VoxelGrid {
    double h = 0.0;
    int n[3] = {0, 0, 0};       // x, y, z
    double origin[3] = {0, 0, 0};  // centre of cell (0,0,0)
    std::vector<double> mass;   // index (i*n[1] + j)*n[2] + k

    std::size_t size() const { return mass.size(); }
    double total_mass() const;
};

// Grid extent in units of the profile widths for the Gaussian regime.
inline constexpr double gaussian_box_widths = 4.0;

VoxelGrid build_voxel_grid(const DensityProfile& profile, double h);

struct VoxelOptions {
    int cells = 48;  // across the largest grid extent at the coarse level
    bool richardson = true;
    double richardson_order = 2.0;
    std::size_t memory_budget = std::size_t(2) << 30;  // bytes
};

struct VoxelEstimate {
    double coarse = 0.0;
    double fine = 0.0;
    double extrapolated = 0.0;
    double h_coarse = 0.0;
    int shift_cells = 0;  // displacement in coarse cells
};

// E_G(b) for gamma = 1/(8 pi) at a single cell size h with b/h integral.
double eg_voxel(const DensityProfile& profile, const SuperpositionConfig& cfg, double h,
                std::size_t memory_budget = std::size_t(2) << 30);

VoxelEstimate eg_voxel_estimate(const DensityProfile& profile, const SuperpositionConfig& cfg, VoxelOptions opt = {});

SelfEnergyResult eg_bruteforce(const DensityProfile& profile, const SuperpositionConfig& cfg, VoxelOptions opt = {},
                               GammaParameter gamma = {});

// Self-interaction of a cell, in units of 1/h, from the sphere of equal volume.
double voxel_self_kernel();

struct LindbladOptions {
    // Two-mode Hamiltonian in rad/s on the (N+1)^2 basis |nL, nR>, index nL*(N+1)+nR.
    std::optional<Eigen::MatrixXcd> hamiltonian;
    double tolerance = 1e-6;  // step-halving acceptance on the correlation, relative to N!/2
    int max_halvings = 14;
};

struct LindbladTrace {
    std::vector<double> t;
    std::vector<std::complex<double>> correlation;  // <aL^dag^N aR^N>(t)
    double dt = 0.0;
    double max_trace_drift = 0.0;
    double max_hermiticity_error = 0.0;
};

inline constexpr int lindblad_max_n = 6;

LindbladTrace lindblad_decay(Channel channel, int N, double rate, const std::vector<double>& t_grid,
                             LindbladOptions opt = {});

// Least-squares slope of -log|C(t)| against t.
double fit_decay_exponent(const LindbladTrace& trace);

// Decay rate of the NOON coherence implied by the master equation itself.
double lindblad_coherence_rate(Channel channel, int N, double rate);

}  // namespace egrav
