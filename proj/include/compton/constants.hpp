#pragma once

#include <string_view>

#include "compton/error.hpp"

namespace compton {

// Atomic units: m_e = hbar = |e| = 1. The speed of light is the rounded
// value 137, and every number derived in this library follows from it.
namespace constants {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double c = 137.0;
inline constexpr double alpha = 1.0 / c;
inline constexpr double hartree_eV = 27.2114;
inline constexpr double au_to_cm2_per_eV_sr2 = 1.03e-18;
inline constexpr double barn_cm2 = 1e-24;

}  // namespace constants

/// Units accepted on input. Energies convert to hartree, angles to radians.
enum class Unit { au, eV, keV, rad, deg };

inline constexpr double unit_scale(Unit unit) {
    switch (unit) {
        case Unit::au: return 1.0;
        case Unit::eV: return 1.0 / constants::hartree_eV;
        case Unit::keV: return 1000.0 / constants::hartree_eV;
        case Unit::rad: return 1.0;
        case Unit::deg: return constants::pi / 180.0;
    }
    return 1.0;
}

inline constexpr bool is_energy(Unit unit) {
    return unit == Unit::au || unit == Unit::eV || unit == Unit::keV;
}

inline constexpr double to_au(double value, Unit unit) {
    if (unit == Unit::keV) return value * 1000.0 / constants::hartree_eV;
    if (unit == Unit::eV) return value / constants::hartree_eV;
    return value * unit_scale(unit);
}

inline constexpr double from_au(double value, Unit unit) {
    if (unit == Unit::keV) return value * constants::hartree_eV / 1000.0;
    if (unit == Unit::eV) return value * constants::hartree_eV;
    return value / unit_scale(unit);
}

/// Parses a unit suffix ("eV", "keV", "au", "deg", "rad"). Throws DomainError
/// on anything else.
inline Unit parse_unit(std::string_view name) {
    if (name == "au" || name == "hartree" || name == "Eh") return Unit::au;
    if (name == "eV") return Unit::eV;
    if (name == "keV") return Unit::keV;
    if (name == "rad") return Unit::rad;
    if (name == "deg") return Unit::deg;
    throw DomainError("unknown unit '" + std::string(name) + "'");
}

inline std::string_view unit_name(Unit unit) {
    switch (unit) {
        case Unit::au: return "au";
        case Unit::eV: return "eV";
        case Unit::keV: return "keV";
        case Unit::rad: return "rad";
        case Unit::deg: return "deg";
    }
    return "?";
}

}  // namespace compton
