#pragma once

#include <cmath>
#include <string_view>

#include "compton/amplitudes.hpp"
#include "compton/constants.hpp"
#include "compton/kinematics.hpp"

namespace compton {

enum class CrossSectionUnits { atomic, barn_per_eV_sr2, cm2_per_eV_sr2 };

/// FDCS is d^3 sigma / (dE_e dOmega_1 dOmega_f); DDCS is integrated over the
/// photon direction and differential in dE_e dphi1.
enum class Quantity { fdcs, ddcs };

struct CrossSectionSample {
    double value = 0.0;
    CrossSectionUnits units = CrossSectionUnits::atomic;
    Quantity quantity = Quantity::fdcs;
    KinematicInput kinematics;
    Target target;
};

inline std::string_view units_name(CrossSectionUnits u, Quantity q = Quantity::fdcs) {
    const bool f = q == Quantity::fdcs;
    switch (u) {
        case CrossSectionUnits::atomic: return "au";
        case CrossSectionUnits::barn_per_eV_sr2: return f ? "barn/(eV sr^2)" : "barn/(eV rad)";
        case CrossSectionUnits::cm2_per_eV_sr2: return f ? "cm^2/(eV sr^2)" : "cm^2/(eV rad)";
    }
    return "?";
}

inline CrossSectionUnits parse_cross_section_units(std::string_view name) {
    if (name == "au") return CrossSectionUnits::atomic;
    if (name == "barn") return CrossSectionUnits::barn_per_eV_sr2;
    if (name == "cm2") return CrossSectionUnits::cm2_per_eV_sr2;
    throw DomainError("unknown cross-section unit '" + std::string(name) + "'");
}

namespace detail {

// Size of one unit of `u` expressed in cm^2/(eV sr^2).
inline double cm2_per_unit(CrossSectionUnits u) {
    switch (u) {
        case CrossSectionUnits::atomic: return constants::au_to_cm2_per_eV_sr2;
        case CrossSectionUnits::barn_per_eV_sr2: return constants::barn_cm2;
        case CrossSectionUnits::cm2_per_eV_sr2: return 1.0;
    }
    return 1.0;
}

}  // namespace detail

/// Rescales a sample to other units; the angular measure is dimensionless, so
/// FDCS and DDCS share the factor.
inline CrossSectionSample convert_units(const CrossSectionSample& sample, CrossSectionUnits to) {
    CrossSectionSample out = sample;
    if (to == sample.units) return out;
    out.value = sample.value * (detail::cm2_per_unit(sample.units) / detail::cm2_per_unit(to));
    out.units = to;
    return out;
}

/// alpha^4 / (2 pi)^3, the kinematic prefactor of the FDCS.
inline constexpr double fdcs_prefactor() {
    constexpr double a2 = constants::alpha * constants::alpha;
    constexpr double tp = 2.0 * constants::pi;
    return a2 * a2 / (tp * tp * tp);
}

struct FdcsOptions {
    double epsilon = 0.0;  ///< Ps smoothing of mu; ignored for hydrogen
    HydrogenAngle hydrogen_angle = HydrogenAngle::q_p1;
};

/// FDCS in atomic units from an already resolved kinematic point.
inline double fdcs_value(const ResolvedKinematics& r, const FdcsOptions& opt = {}) {
    double p1_msq = 0.0;
    if (r.target.is_positronium()) {
        if (r.p1 == 0.0) return 0.0;
        p1_msq = r.p1 * msq_positronium(r, opt.epsilon).value;
    } else {
        p1_msq = p1_times_msq_hydrogen(r, opt.hydrogen_angle);
    }
    return fdcs_prefactor() * r.t * p1_msq;
}

/// FDCS = alpha^4/(2 pi)^3 p1 t sum|M|^2 in atomic units.
inline CrossSectionSample fdcs(const Target& target, const KinematicInput& input,
                               const FdcsOptions& opt = {}) {
    CrossSectionSample s;
    s.value = fdcs_value(resolve(target, input), opt);
    s.units = CrossSectionUnits::atomic;
    s.quantity = Quantity::fdcs;
    s.kinematics = input;
    s.target = target;
    return s;
}

inline CrossSectionSample fdcs(const Target& target, const KinematicInput& input, double epsilon) {
    return fdcs(target, input, FdcsOptions{epsilon, HydrogenAngle::q_p1});
}

}  // namespace compton
