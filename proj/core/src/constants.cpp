#include "egrav/constants.hpp"

#include <cmath>

#include "egrav/error.hpp"
#include "egrav/kvfile.hpp"

namespace egrav {

double c6_atomic_unit() {
    const double b = codata2018.bohr;
    return codata2018.hartree * b * b * b * b * b * b;
}

namespace {

// Scattering lengths: Cs 210 a0 (value at which the first Cs BEC was made),
// Na 52 a0, Rb 100.4 a0, H 1.23 a0, Li7 -27.6 a0. C6 in atomic units from
// standard tabulations, converted to SI when the table is built.
SpeciesDatabase make_builtin() {
    const double a0_nm = codata2018.bohr * 1e9;
    const double au = c6_atomic_unit();
    SpeciesDatabase db;
    db.add({"Cs133", 132.905451961, 210.0 * a0_nm, 6890.0 * au});
    db.add({"Na23", 22.9897692820, 52.0 * a0_nm, 1556.0 * au});
    db.add({"Rb87", 86.909180527, 100.4 * a0_nm, 4698.0 * au});
    db.add({"H1", 1.00782503223, 1.23 * a0_nm, 6.499 * au});
    db.add({"Li7", 7.0160034366, -27.6 * a0_nm, 1393.0 * au});
    return db;
}

}  // namespace

const SpeciesDatabase& SpeciesDatabase::builtin() {
    static const SpeciesDatabase db = make_builtin();
    return db;
}

void SpeciesDatabase::add(Species s) {
    if (s.name.empty()) throw ValidationError("species name must not be empty");
    if (!(s.mass_amu > 0.0)) throw ValidationError("species '" + s.name + "': mass must be positive");
    for (const auto& existing : species_) {
        if (existing.name == s.name) throw ValidationError("duplicate species '" + s.name + "'");
    }
    species_.push_back(std::move(s));
}

const Species& SpeciesDatabase::lookup(std::string_view name) const {
    for (const auto& s : species_) {
        if (s.name == name) return s;
    }
    std::string names;
    for (const auto& s : species_) {
        if (!names.empty()) names += ", ";
        names += s.name;
    }
    throw ValidationError("unknown species '" + std::string(name) + "'; available: " + names);
}

namespace {

SpeciesDatabase from_document(const KvDocument& doc, std::string_view origin) {
    SpeciesDatabase db;
    for (const auto& sec : doc.sections) {
        if (sec.name.empty()) {
            if (!sec.entries.empty()) throw ValidationError(std::string(origin) + ": keys outside a [species] section");
            continue;
        }
        sec.require_only({"mass_amu", "a_s_nm", "C6"});
        Species s;
        s.name = sec.name;
        s.mass_amu = sec.get_double("mass_amu");
        s.a_s_nm = sec.get_double("a_s_nm");
        s.c6 = sec.get_optional_double("C6");
        db.add(std::move(s));
    }
    return db;
}

}  // namespace

SpeciesDatabase SpeciesDatabase::parse(std::string_view text, std::string_view origin) {
    return from_document(KvDocument::parse(text, origin), origin);
}

SpeciesDatabase SpeciesDatabase::load(const std::string& path) {
    return from_document(KvDocument::load(path), path);
}

std::string SpeciesDatabase::serialize() const {
    std::string out = "# name, mass_amu (u), a_s_nm (nm), C6 (J m^6)\n";
    for (const auto& s : species_) {
        out += "\n[" + s.name + "]\n";
        out += "mass_amu = " + format_double(s.mass_amu) + "\n";
        out += "a_s_nm = " + format_double(s.a_s_nm) + "\n";
        if (s.c6) out += "C6 = " + format_double(*s.c6) + "\n";
    }
    return out;
}

GammaParameter make_gamma(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ValidationError("gamma must be a positive finite number");
    return GammaParameter{gamma};
}

double unruh_temperature(double acceleration) {
    if (acceleration < 0.0) throw ValidationError("acceleration must be non-negative");
    const auto& k = codata2018;
    return k.hbar * acceleration / (2.0 * std::numbers::pi * k.kB * k.c);
}

}  // namespace egrav
