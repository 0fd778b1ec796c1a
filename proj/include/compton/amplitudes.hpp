#pragma once

#include <cmath>
#include <complex>

#include "compton/constants.hpp"
#include "compton/error.hpp"
#include "compton/kinematics.hpp"
#include "compton/special_functions.hpp"
#include "compton/vec3.hpp"

namespace compton {

/// Polarization-summed squared amplitude, sum over e_i, e_f of |M|^2.
struct SquaredAmplitude {
    double value = 0.0;
    bool smoothed = false;
    double epsilon_used = 0.0;
};

/// Which angle enters the numerator Q - (p1 + iZ) cos(angle) of the hydrogen
/// amplitude.
enum class HydrogenAngle {
    q_p1,         ///< angle between Q and p1, the analogue of the Ps matrix element
    chi_literal,  ///< angle chi between k_f and p1, kept for comparison
};

/// Bound-free Coulomb matrix element <phi^-(p)| exp(i q.rho) |phi_0> for a
/// hydrogen-like ground state of charge Z and a continuum wave normalized to a
/// unit-amplitude plane wave:
///
///   J0 = -16 pi sqrt(Z^5/pi) e^{-pi zeta/2} Gamma(1 + i zeta)
///        [q^2 - (p + iZ)^2]^{-1 + i zeta} / [(q - p)^2 + Z^2]^{2 + i zeta}
///        * q [q - (p + iZ) (q.p)/(q p)],        zeta = -Z/p.
///
/// The zeta-dependent factors are combined in log space before the single
/// exponentiation. Throws SingularityError at p = 0.
inline Complex j0_coulomb(const Vec3& q_half, const Vec3& p_rho, double Z) {
    const double p = norm(p_rho);
    if (p == 0.0) throw SingularityError("j0_coulomb: zero relative momentum");
    const double q = norm(q_half);
    if (q == 0.0) return 0.0;

    const double zeta = -Z / p;
    const double cos_angle = dot(q_half, p_rho) / (q * p);
    const Complex p_iz(p, Z);
    const Complex a = q * q - p_iz * p_iz;
    const double b = norm_sq(q_half - p_rho) + Z * Z;

    const Complex log_mag = std::log(16.0 * constants::pi * std::sqrt(std::pow(Z, 5) / constants::pi)) +
                            log_sommerfeld_factor(zeta) + Complex(-1.0, zeta) * std::log(a) -
                            Complex(2.0, zeta) * std::log(b);
    return -std::exp(log_mag) * q * (q - p_iz * cos_angle);
}

namespace detail {

// |[base]^{-1 + i zeta}|^2 = |base|^{-2} e^{-2 zeta arg(base)} for the
// principal branch.
inline double pow_mod_sq(Complex base, double zeta) {
    return std::exp(-2.0 * zeta * std::arg(base)) / std::norm(base);
}

inline double angular_factor(double theta) {
    const double c = std::cos(theta);
    return 0.5 * (1.0 + c * c);
}

}  // namespace detail

/// Positronium squared amplitude: both J0 terms share the Sommerfeld factor
/// and the [Q^2/4 - (p + iZ)^2]^{-1 + i zeta} factor, so only their relative
/// phase exp(-i zeta ln(base1/base2)) is formed explicitly. That keeps the
/// evaluation exact as mu -> 0 where zeta diverges.
///
/// With epsilon > 0 the relative momentum p_rho is replaced by
/// sqrt(mu^2 + epsilon^2) everywhere it appears (zeta, cos gamma and the
/// numerators). Throws SingularityError for epsilon = 0 and mu < 1e-12.
inline SquaredAmplitude msq_positronium(const ResolvedKinematics& r, double epsilon = 0.0) {
    if (!(epsilon >= 0.0)) throw DomainError("smoothing epsilon must be non-negative");
    SquaredAmplitude out;
    out.smoothed = epsilon > 0.0;
    out.epsilon_used = epsilon;

    const double Z = r.target.Z;
    const double p_eff = out.smoothed ? std::hypot(r.mu, epsilon) : r.mu;
    if (!out.smoothed && r.mu < 1e-12)
        throw SingularityError("msq_positronium: mu = 0 without smoothing");
    if (r.Q == 0.0) return out;

    const double Q = r.Q;
    const double zeta = -Z / p_eff;
    const double cos_gamma = std::clamp(r.q_dot_p_rho / (Q * p_eff), -1.0, 1.0);
    const Complex p_iz(p_eff, Z);
    const Complex a = Q * Q / 4.0 - p_iz * p_iz;

    // |-Q/2 - p_rho|^2 = p1^2 and |Q/2 - p_rho|^2 = (p1 - Q)^2
    const double base2 = r.p1 * r.p1 + Z * Z;
    const double base1 = base2 - 2.0 * r.q_dot_p_rho;
    const double log_ratio = std::log1p(-2.0 * r.q_dot_p_rho / base2);

    const Complex n1 = Q / 2.0 - p_iz * cos_gamma;
    const Complex n2 = Q / 2.0 + p_iz * cos_gamma;
    const Complex term1 = n1 / (base1 * base1) * std::polar(1.0, -zeta * log_ratio);
    const Complex term2 = n2 / (base2 * base2);

    const double prefactor = 256.0 * constants::pi * std::pow(Z, 5) * sommerfeld_factor_sq(zeta) *
                             (Q * Q / 4.0) * detail::pow_mod_sq(a, zeta);
    out.value = detail::angular_factor(r.input.theta) * prefactor * std::norm(term1 + term2);
    return out;
}

/// p1 times the hydrogen squared amplitude. The 1/p1 pole of the Sommerfeld
/// factor is cancelled analytically, so the result is finite down to and
/// including p1 = 0.
inline double p1_times_msq_hydrogen(const ResolvedKinematics& r,
                                    HydrogenAngle angle = HydrogenAngle::q_p1) {
    if (r.Q == 0.0) return 0.0;
    const double Z = r.target.Z;
    const double Q = r.Q;
    const double p = r.p1;
    const double cos_angle = angle == HydrogenAngle::q_p1 ? r.cos_beta() : r.cos_chi;

    // p * 2 pi |zeta| / (1 - e^{-2 pi |zeta|}) with |zeta| = Z / p
    const double p_sommerfeld =
        p > 0.0 ? -2.0 * constants::pi * Z / std::expm1(-2.0 * constants::pi * Z / p)
                : 2.0 * constants::pi * Z;

    const Complex p_iz(p, Z);
    const Complex a = Q * Q - p_iz * p_iz;
    // -2 zeta arg(a) = 2 Z arg(a) / p, with arg(a) / p -> -2Z / (Q^2 + Z^2) at p = 0
    const double arg_over_p = p > 0.0 ? std::arg(a) / p : -2.0 * Z / (Q * Q + Z * Z);
    const double mod_a = std::exp(2.0 * Z * arg_over_p) / std::norm(a);

    const double base = p * p - 2.0 * r.q_dot_p1 + Q * Q + Z * Z;
    const Complex numerator = Q - p_iz * cos_angle;
    const double value = 256.0 * constants::pi * std::pow(Z, 5) * p_sommerfeld * Q * Q * mod_a *
                         std::norm(numerator) / std::pow(base, 4);
    return detail::angular_factor(r.input.theta) * value;
}

/// Hydrogen squared amplitude, |J0(Q, p1)|^2 with Z = 1 and the angular
/// factor. Throws SingularityError for p1 < 1e-12; use p1_times_msq_hydrogen
/// for the threshold limit.
inline SquaredAmplitude msq_hydrogen(const ResolvedKinematics& r,
                                     HydrogenAngle angle = HydrogenAngle::q_p1) {
    if (r.p1 < 1e-12) throw SingularityError("msq_hydrogen: pole at p1 = 0");
    return {p1_times_msq_hydrogen(r, angle) / r.p1, false, 0.0};
}

/// Leading 1/mu behaviour of the Ps squared amplitude along the binary
/// direction, in the closed form quoted with the model:
///   (1/mu)(1 + cos^2 theta) 32 pi^2 Z^5 Q^4 / (Q^2/4 + Z^2)^6
///   * exp(-2Z / (Q^2/4 + Z^2)).
inline double msq_resonance_limit(double theta, double Q, double Z, double mu) {
    if (!(mu > 0.0)) throw DomainError("msq_resonance_limit: mu must be positive");
    if (!(Q > 0.0)) throw DomainError("msq_resonance_limit: Q must be positive");
    const double c = std::cos(theta);
    const double d = Q * Q / 4.0 + Z * Z;
    return (1.0 + c * c) * 32.0 * constants::pi * constants::pi * std::pow(Z, 5) * std::pow(Q, 4) /
           std::pow(d, 6) * std::exp(-2.0 * Z / d) / mu;
}

}  // namespace compton
