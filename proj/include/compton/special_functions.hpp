#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "compton/constants.hpp"
#include "compton/error.hpp"

namespace compton {

using Complex = std::complex<double>;

namespace detail {

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Stirling series for log Gamma(z), |z| >= 16, Re z > 0.
inline Complex stirling_log_gamma(Complex z) {
    // B_2k / (2k (2k - 1)), k = 1..8
    static constexpr std::array<double, 8> coeff = {
        1.0 / 12.0,          -1.0 / 360.0,   1.0 / 1260.0,  -1.0 / 1680.0,
        1.0 / 1188.0,        -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    for (double c : coeff) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * constants::pi) + series;
}

}  // namespace detail

/// Principal branch of log Gamma(z): the analytic continuation from the
/// positive real axis, with the imaginary part not reduced modulo 2 pi.
///
/// For Re z >= 1/2 the argument is shifted by the recurrence until |z| >= 16
/// and the Stirling series is summed; for Re z < 1/2 the reflection formula is
/// used with the branch of log sin(pi z) tracked explicitly (Kolbig). Accurate
/// to about 1e-15 relative for all |Im z| since the shift never grows with
/// |Im z|. Throws PoleError at 0, -1, -2, ...
inline Complex log_gamma(Complex z) {
    if (!detail::is_finite(z)) throw DomainError("log_gamma: non-finite argument");
    const double x = z.real();
    const double y = z.imag();
    if (y == 0.0 && x <= 0.0 && x == std::nearbyint(x))
        throw PoleError("log_gamma: pole at non-positive integer");

    if (x >= 0.5) {
        Complex shift = 0.0;
        Complex w = z;
        while (std::abs(w) < 16.0) {
            shift += std::log(w);
            w += 1.0;
        }
        return detail::stirling_log_gamma(w) - shift;
    }

    if (y < 0.0) return std::conj(log_gamma(std::conj(z)));

    // z = n + eps with 0 <= Re eps < 1
    const double n = std::floor(x);
    const Complex eps = z - n;
    const Complex i_pi(0.0, constants::pi);
    Complex log_sin;
    if (y > 110.0) {
        log_sin = -i_pi * z + Complex(-std::log(2.0), constants::pi / 2.0);
    } else {
        log_sin = std::log(std::sin(constants::pi * eps)) - i_pi * n;
    }
    return std::log(constants::pi) - log_sin - log_gamma(1.0 - z);
}

/// exp(exponent * Log(base)) with the principal logarithm, Im Log in (-pi, pi].
/// A base on the negative real axis with a signed-zero imaginary part is put
/// on the upper lip of the cut. Throws DomainError for base == 0.
inline Complex complex_pow(Complex base, Complex exponent) {
    if (base == Complex(0.0, 0.0)) throw DomainError("complex_pow: zero base");
    Complex log_base = std::log(base);
    if (base.imag() == 0.0 && base.real() < 0.0) log_base.imag(constants::pi);
    return std::exp(exponent * log_base);
}

/// |Gamma(1 + iy)|^2 = pi y / sinh(pi y), equal to 1 at y = 0.
inline double gamma_mod_sq_one_plus_iy(double y) {
    const double x = constants::pi * std::abs(y);
    if (x < 1e-4) return 1.0 - x * x / 6.0;
    if (x > 700.0) return 2.0 * x * std::exp(-x);  // sinh overflows here
    return x / std::sinh(x);
}

/// log of the Sommerfeld factor e^{-pi zeta / 2} Gamma(1 + i zeta).
///
/// Each factor overflows or underflows separately once |zeta| is in the
/// thousands; the sum of logs stays O(log |zeta|).
inline Complex log_sommerfeld_factor(double zeta) {
    return Complex(-constants::pi * zeta / 2.0, 0.0) + log_gamma(Complex(1.0, zeta));
}

/// |e^{-pi zeta / 2} Gamma(1 + i zeta)|^2 = 2 pi zeta / (e^{2 pi zeta} - 1),
/// written with expm1 so it is exact for every sign and size of zeta.
inline double sommerfeld_factor_sq(double zeta) {
    const double x = 2.0 * constants::pi * zeta;
    if (x == 0.0) return 1.0;
    if (x < -700.0) return -x;
    return x / std::expm1(x);
}

}  // namespace compton
