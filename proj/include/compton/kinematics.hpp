#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "compton/constants.hpp"
#include "compton/error.hpp"
#include "compton/vec3.hpp"

namespace compton {

enum class TargetKind { positronium, hydrogen };

/// Bound system hit by the photon, reduced to a hydrogen-like problem with
/// effective charge Z and ground-state energy eps0 (both atomic units).
struct Target {
    TargetKind kind = TargetKind::positronium;
    double Z = 0.5;
    double eps0 = -0.125;

    static constexpr Target positronium() { return {TargetKind::positronium, 0.5, -0.125}; }
    static constexpr Target hydrogen() { return {TargetKind::hydrogen, 1.0, -0.5}; }

    constexpr bool is_positronium() const { return kind == TargetKind::positronium; }
};

inline std::string_view target_name(const Target& t) {
    return t.is_positronium() ? "ps" : "h";
}

inline Target parse_target(std::string_view name) {
    if (name == "ps" || name == "Ps" || name == "positronium") return Target::positronium();
    if (name == "h" || name == "H" || name == "hydrogen") return Target::hydrogen();
    throw DomainError("unknown target '" + std::string(name) + "'");
}

/// How the photon energy ratio t = omega_f / omega_i is fixed.
enum class TMode {
    fixed_unity,  ///< t = 1, the setting used for every figure
    full,         ///< t from energy conservation
};

/// One kinematic point. Angles in radians, energies in hartree.
///
/// The frame has k_i along +z and k_f in the xz-plane at polar angle theta.
/// The electron leaves at polar angle phi1 from k_i, and Phi is its azimuth
/// measured from the (k_i, k_f) plane, i.e. the angle between the two planes.
struct KinematicInput {
    double omega_i = 0.0;
    double E_e = 0.0;
    double theta = 0.0;
    double phi1 = 0.0;
    double Phi = 0.0;
    TMode t_mode = TMode::fixed_unity;
};

inline void validate(const KinematicInput& in) {
    const double pi = constants::pi;
    if (!(in.omega_i > 0.0) || !std::isfinite(in.omega_i))
        throw DomainError("photon energy must be positive");
    if (!(in.E_e >= 0.0) || !std::isfinite(in.E_e))
        throw DomainError("electron energy must be non-negative");
    if (!(in.theta >= 0.0 && in.theta <= pi)) throw DomainError("theta outside [0, pi]");
    if (!(in.phi1 >= 0.0 && in.phi1 <= pi)) throw DomainError("phi1 outside [0, pi]");
    if (!(in.Phi >= 0.0 && in.Phi < 2.0 * pi)) throw DomainError("Phi outside [0, 2 pi)");
}

/// Every derived scalar of a kinematic point.
struct ResolvedKinematics {
    Target target;
    KinematicInput input;

    double k_i = 0.0;       ///< incident photon momentum omega_i / c
    double p1 = 0.0;        ///< electron momentum sqrt(2 E_e)
    double t = 1.0;         ///< omega_f / omega_i
    double Q = 0.0;         ///< momentum transfer |k_i - k_f|
    double cos_chi = 1.0;   ///< angle between k_f and p1
    double q_dot_p1 = 0.0;  ///< (Q . p1)
    double q_dot_p_rho = 0.0;  ///< Q . (p1 - Q/2)
    double p_rho = 0.0;     ///< |p1 - Q/2|
    double mu = 0.0;        ///< relative momentum of the pair; equals p_rho
    double zeta = 0.0;      ///< Coulomb parameter, -Z/p_rho (Ps) or -Z/p1 (H)

    Vec3 q_vec;   ///< Q vector in the lab frame
    Vec3 p1_vec;  ///< electron momentum in the lab frame

    /// Angle between Q and p1. Throws when Q vanishes.
    double cos_beta() const {
        if (Q < 1e-14) throw DegenerateGeometryError("cos beta undefined for Q = 0");
        // k_i (cos phi1 - t cos chi) / Q stays defined at p1 = 0
        return std::clamp(k_i * (std::cos(input.phi1) - t * cos_chi) / Q, -1.0, 1.0);
    }

    /// Angle between Q and p_rho = p1 - Q/2. At p_rho -> 0 the direction is
    /// undefined and -1 is returned.
    double cos_gamma() const {
        if (Q < 1e-14) throw DegenerateGeometryError("cos gamma undefined for Q = 0");
        if (p_rho < 1e-12) return -1.0;
        return std::clamp(q_dot_p_rho / (Q * p_rho), -1.0, 1.0);
    }
};

/// Resolves a kinematic point into all derived quantities.
inline ResolvedKinematics resolve(const Target& target, const KinematicInput& in) {
    validate(in);
    ResolvedKinematics r;
    r.target = target;
    r.input = in;
    r.k_i = in.omega_i / constants::c;
    r.p1 = std::sqrt(2.0 * in.E_e);

    const double cos_phi1 = std::cos(in.phi1);
    if (in.t_mode == TMode::fixed_unity) {
        r.t = 1.0;
    } else if (target.is_positronium()) {
        // (k_i - p1)^2 / 2 is the kinetic energy left to the positron
        const double recoil_sq = r.k_i * r.k_i - 2.0 * r.k_i * r.p1 * cos_phi1 + r.p1 * r.p1;
        r.t = 1.0 - (r.p1 * r.p1 / 2.0 - target.eps0 + recoil_sq / 2.0) / in.omega_i;
    } else {
        r.t = 1.0 - (r.p1 * r.p1 / 2.0 - target.eps0) / in.omega_i;
    }
    if (!(r.t > 0.0)) throw DomainError("electron energy exceeds the available photon energy");

    const double cos_theta = std::cos(in.theta);
    const double half_sin = std::sin(in.theta / 2.0);
    r.Q = r.k_i * std::sqrt((1.0 - r.t) * (1.0 - r.t) + 4.0 * r.t * half_sin * half_sin);
    r.cos_chi = cos_theta * cos_phi1 + std::sin(in.theta) * std::sin(in.phi1) * std::cos(in.Phi);
    r.q_dot_p1 = r.k_i * r.p1 * (cos_phi1 - r.t * r.cos_chi);

    const Vec3 k_i_vec{0.0, 0.0, r.k_i};
    r.q_vec = k_i_vec - (r.t * r.k_i) * direction(in.theta, 0.0);
    r.p1_vec = r.p1 * direction(in.phi1, in.Phi);
    // |p1 - Q/2| from components; the scalar form cancels badly near mu = 0
    const Vec3 p_rho_vec = r.p1_vec - 0.5 * r.q_vec;
    r.p_rho = norm(p_rho_vec);
    r.q_dot_p_rho = dot(r.q_vec, p_rho_vec);
    r.mu = r.p_rho;

    const double inf = std::numeric_limits<double>::infinity();
    if (target.is_positronium()) {
        r.zeta = r.p_rho > 0.0 ? -target.Z / r.p_rho : -inf;
    } else {
        r.zeta = r.p1 > 0.0 ? -target.Z / r.p1 : -inf;
    }
    return r;
}

/// mu^2 written through the photon and electron angles, valid at t = 1
/// where Q = 2 k sin(theta/2).
inline double mu_squared_form_a(const ResolvedKinematics& r) {
    const double th = r.input.theta;
    const double half_s = std::sin(th / 2.0);
    const double half_c = std::cos(th / 2.0);
    const double bracket = std::cos(r.input.phi1) * half_s -
                           std::sin(r.input.phi1) * half_c * std::cos(r.input.Phi);
    return r.p1 * r.p1 - r.p1 * r.Q * bracket + r.Q * r.Q / 4.0;
}

/// The same mu^2 as a sum of three non-negative terms, gamma_ratio = p1 / k.
/// It vanishes only for gamma_ratio = sin(theta/2), phi1 = pi/2 - theta/2 and
/// Phi = pi simultaneously.
inline double mu_squared_form_b(double gamma_ratio, double theta, double phi1, double Phi,
                                double k) {
    const double s = std::sin(theta / 2.0);
    const double g = gamma_ratio;
    const double t1 = (g - s) * (g - s);
    const double h = std::sin((constants::pi / 2.0 - phi1 - theta / 2.0) / 2.0);
    const double c = std::cos(Phi / 2.0);
    const double t2 = 4.0 * g * s * h * h;
    const double t3 = 2.0 * g * std::sin(phi1) * std::sin(theta) * c * c;
    return k * k * (t1 + t2 + t3);
}

/// Electron energy (hartree) at which the pair can leave with zero relative
/// momentum for photon scattering angle theta (t = 1).
inline double resonance_energy(double omega_i, double theta) {
    const double k = omega_i / constants::c;
    const double s = std::sin(theta / 2.0);
    return 0.5 * k * k * s * s;
}

/// Electron direction (phi1, Phi) with p1 parallel to Q at t = 1.
struct BinaryDirection {
    double phi1;
    double Phi;
};

inline BinaryDirection binary_direction(double theta) {
    return {constants::pi / 2.0 - theta / 2.0, constants::pi};
}

/// Closest approach of Q/2 to a fixed electron momentum over all photon
/// directions at t = 1. Q/2 sweeps the sphere of radius k/2 centred at
/// k_i / 2, so the minimum of mu is a point-to-sphere distance reached at
/// Phi = pi.
struct ResonanceApproach {
    double theta;   ///< photon angle of the minimum
    double Phi;     ///< always pi
    double mu_min;  ///< smallest reachable mu
};

inline ResonanceApproach closest_resonance_approach(double p1, double phi1, double k) {
    const Vec3 rel = p1 * direction(phi1, 0.0) - Vec3{0.0, 0.0, k / 2.0};
    const double d = norm(rel);
    double theta = 0.0;
    if (d > 0.0) theta = std::acos(std::clamp(-rel.z / d, -1.0, 1.0));
    return {theta, constants::pi, std::abs(d - k / 2.0)};
}

}  // namespace compton
