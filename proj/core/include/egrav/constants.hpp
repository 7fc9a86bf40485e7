#pragma once

#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace egrav {

struct PhysicalConstants {
    double G;     // m^3 kg^-1 s^-2
    double hbar;  // J s
    double kB;    // J/K
    double c;     // m/s
    double amu;   // kg
    double bohr;  // m
    double hartree;  // J
};

// CODATA 2018.
inline constexpr PhysicalConstants codata2018{
    6.67430e-11, 1.054571817e-34, 1.380649e-23, 299792458.0, 1.66053906660e-27, 5.29177210903e-11,
    4.3597447222071e-18};

inline constexpr std::string_view constants_version = "CODATA-2018";

inline const PhysicalConstants& constants() { return codata2018; }

// Atomic C6 unit E_h a_0^6 in J m^6.
double c6_atomic_unit();

// Canonical fields are the file units (u, nm, J m^6) so that a species
// survives a text round trip bit for bit.
struct Species {
    std::string name;
    double mass_amu = 0.0;
    double a_s_nm = 0.0;
    std::optional<double> c6;  // J m^6

    double mass() const { return mass_amu * codata2018.amu; }
    double scattering_length() const { return a_s_nm * 1e-9; }

    bool operator==(const Species&) const = default;
};

class SpeciesDatabase {
  public:
    static const SpeciesDatabase& builtin();
    static SpeciesDatabase parse(std::string_view text, std::string_view origin = "<species>");
    static SpeciesDatabase load(const std::string& path);

    const Species& lookup(std::string_view name) const;
    const std::vector<Species>& all() const { return species_; }
    std::string serialize() const;
    void add(Species s);

  private:
    std::vector<Species> species_;
};

inline const Species& lookup_species(std::string_view name) { return SpeciesDatabase::builtin().lookup(name); }

// Dimensionless prefactor gamma of the self-energy; printed closed forms use 1/(8 pi).
struct GammaParameter {
    double gamma = 1.0 / (8.0 * std::numbers::pi);

    static GammaParameter standard() { return {}; }
    static GammaParameter alternative() { return {8.0 * std::numbers::pi}; }
    // Multiplier applied to every E_G computed with gamma = 1/(8 pi).
    double factor() const { return 8.0 * std::numbers::pi * gamma; }
};

GammaParameter make_gamma(double gamma);

// T = hbar a / (2 pi kB c).
double unruh_temperature(double acceleration);

}  // namespace egrav
