#pragma once

// Brute-force partial-wave evaluation of the bound-free matrix element
// <phi^-(p)| exp(i q.r) |phi_0>, independent of the closed form in
// amplitudes.hpp. Slow; meant for tests and the acceptance suite.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "compton/constants.hpp"
#include "compton/error.hpp"
#include "compton/special_functions.hpp"

namespace compton::oracle {

struct OracleConfig {
    int l_max = 40;
    double radial_cutoff = 80.0;  ///< a.u.
    int radial_points = 16000;    ///< RK4 steps over [0, radial_cutoff]
    double tolerance = 1e-3;      ///< allowed relative size of the last partial waves
};

inline void validate(const OracleConfig& cfg) {
    if (cfg.l_max < 0 || cfg.l_max > 40) throw DomainError("oracle: l_max must lie in [0, 40]");
    if (!(cfg.radial_cutoff >= 50.0)) throw DomainError("oracle: radial_cutoff must be >= 50 a.u.");
    if (cfg.radial_points < 100) throw DomainError("oracle: too few radial points");
    if (!(cfg.tolerance > 0.0)) throw DomainError("oracle: tolerance must be positive");
}

/// Regular Coulomb function F_l(eta, rho) and its derivative from the power
/// series rho^{l+1} sum_k A_k rho^k, normalized by C_l(eta). Accurate while
/// rho stays below about max(2, l/2).
struct CoulombSeriesValue {
    double F;
    double dF;
};

inline double log_coulomb_normalization(int l, double eta) {
    return l * std::log(2.0) - constants::pi * eta / 2.0 + log_gamma(Complex(l + 1.0, eta)).real() -
           std::lgamma(2.0 * l + 2.0);
}

inline CoulombSeriesValue coulomb_f_series(int l, double eta, double rho) {
    double a_prev2 = 0.0, a_prev = 1.0;  // A_{-1}, A_0
    double sum = 1.0, dsum = 0.0, power = 1.0;
    for (int k = 1; k < 500; ++k) {
        const double a = (2.0 * eta * a_prev - a_prev2) / (k * (k + 2.0 * l + 1.0));
        dsum += k * a * power;  // d/drho of a rho^k, power = rho^{k-1}
        power *= rho;
        const double term = a * power;
        sum += term;
        a_prev2 = a_prev;
        a_prev = a;
        if (k > 4 && std::abs(term) < 1e-17 * std::abs(sum) && std::abs(a_prev2 * power) < 1e-17 * std::abs(sum))
            break;
    }
    const double log_c = log_coulomb_normalization(l, eta);
    const double scale = std::exp(log_c + l * std::log(rho));  // C_l rho^l
    return {scale * rho * sum, scale * ((l + 1.0) * sum + rho * dsum)};
}

/// Radial integrals I_l = int_0^R r F_l(eta, p r) j_l(q r) phi_0(r) dr with
/// phi_0 = sqrt(Z^3/pi) e^{-Z r}, for l = 0..l_max.
///
/// F_l starts from the series and is continued outward by classical RK4 on
/// u'' = (2 eta / rho + l(l+1)/rho^2 - 1) u; outward integration follows the
/// growing regular solution, so it is stable. The integral rides along as a
/// third component of the same RK4 system.
inline std::vector<double> radial_integrals(double q, double p, double Z, const OracleConfig& cfg) {
    validate(cfg);
    const double eta = -Z / p;
    const double norm0 = std::sqrt(Z * Z * Z / constants::pi);
    // at least 20 nodes per wavelength at momentum p + q
    const double wavelength = 2.0 * constants::pi / (p + q);
    const int min_points = static_cast<int>(std::ceil(20.0 * cfg.radial_cutoff / wavelength));
    const int steps = std::max(cfg.radial_points, min_points);
    const double h = cfg.radial_cutoff / steps;  // step in r

    std::vector<double> out(cfg.l_max + 1, 0.0);
    for (int l = 0; l <= cfg.l_max; ++l) {
        const double weight_l = l * (l + 1.0);
        const auto bound = [&](double r) {
            return r * std::sph_bessel(static_cast<unsigned>(l), q * r) * norm0 * std::exp(-Z * r);
        };

        // series part on [0, r_s] by 20-point Gauss-Legendre panels
        const double rho_s = std::max(2.0, 0.5 * l);
        const double r_s = std::min(rho_s / p, cfg.radial_cutoff);
        static constexpr double gl_x[10] = {
            0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
            0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
            0.9639719272779138, 0.9931285991850949};
        static constexpr double gl_w[10] = {
            0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
            0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
            0.0406014298003869, 0.0176140071391521};
        const int panels = std::max(4, static_cast<int>(std::ceil(r_s / 0.5)));
        const double pw = r_s / panels;
        double series_part = 0.0;
        for (int k = 0; k < panels; ++k) {
            const double c = (k + 0.5) * pw;
            for (int i = 0; i < 10; ++i) {
                for (int sgn : {-1, 1}) {
                    const double r = c + sgn * 0.5 * pw * gl_x[i];
                    series_part += 0.5 * pw * gl_w[i] * coulomb_f_series(l, eta, p * r).F * bound(r);
                }
            }
        }

        // RK4 in r: u' = v, v' = p^2 (2 eta/(p r) + l(l+1)/(p r)^2 - 1) u, I' = bound(r) u
        const CoulombSeriesValue start = coulomb_f_series(l, eta, p * r_s);
        double u = start.F, v = p * start.dF, integral = 0.0;
        const auto accel = [&](double r, double uu) {
            const double rho = p * r;
            return p * p * (2.0 * eta / rho + weight_l / (rho * rho) - 1.0) * uu;
        };
        const int n_steps = static_cast<int>(std::ceil((cfg.radial_cutoff - r_s) / h));
        const double hh = n_steps > 0 ? (cfg.radial_cutoff - r_s) / n_steps : 0.0;
        double r = r_s;
        double g0 = bound(r);
        for (int s = 0; s < n_steps; ++s) {
            const double gm = bound(r + 0.5 * hh);
            const double g1 = bound(r + hh);
            const double k1u = v, k1v = accel(r, u), k1i = g0 * u;
            const double u2 = u + 0.5 * hh * k1u, v2 = v + 0.5 * hh * k1v;
            const double k2u = v2, k2v = accel(r + 0.5 * hh, u2), k2i = gm * u2;
            const double u3 = u + 0.5 * hh * k2u, v3 = v + 0.5 * hh * k2v;
            const double k3u = v3, k3v = accel(r + 0.5 * hh, u3), k3i = gm * u3;
            const double u4 = u + hh * k3u, v4 = v + hh * k3v;
            const double k4u = v4, k4v = accel(r + hh, u4), k4i = g1 * u4;
            u += hh / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            v += hh / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
            integral += hh / 6.0 * (k1i + 2.0 * k2i + 2.0 * k3i + k4i);
            r += hh;
            g0 = g1;
        }
        out[l] = series_part + integral;
    }
    return out;
}

/// Coulomb phase shift sigma_l = arg Gamma(l + 1 + i eta).
inline double coulomb_phase(int l, double eta) {
    return log_gamma(Complex(l + 1.0, eta)).imag();
}

/// Sums the partial waves,
///   J = (4 pi / p) sum_l (2l + 1) e^{i sigma_l} P_l(cos) I_l,
/// and reports the size of the last two terms relative to |J| as the tail.
struct PartialWaveSum {
    Complex value;
    double tail;
};

inline PartialWaveSum sum_partial_waves(const std::vector<double>& radial, double p, double cos_angle,
                                        double Z) {
    const double eta = -Z / p;
    Complex total = 0.0;
    double tail = 0.0;
    const int l_max = static_cast<int>(radial.size()) - 1;
    double p_prev = 1.0, p_cur = cos_angle;  // Legendre recurrence
    for (int l = 0; l <= l_max; ++l) {
        double pl = 1.0;
        if (l == 1) pl = cos_angle;
        if (l >= 2) {
            pl = ((2.0 * l - 1.0) * cos_angle * p_cur - (l - 1.0) * p_prev) / l;
            p_prev = p_cur;
            p_cur = pl;
        }
        const Complex term = (2.0 * l + 1.0) * std::polar(1.0, coulomb_phase(l, eta)) * pl * radial[l];
        total += term;
        if (l >= l_max - 1) tail += std::abs(term);
    }
    const double scale = 4.0 * constants::pi / p;
    total *= scale;
    const double rel_tail = std::abs(total) > 0.0 ? tail * scale / std::abs(total) : 0.0;
    return {total, rel_tail};
}

/// Partial-wave value of <phi^-(p)| exp(i q.r) |phi_0> for |q| = q_half_mag,
/// |p| = p_mag and angle cosine cos_angle between them. The continuum wave is
/// normalized to a unit-amplitude plane wave with Sommerfeld parameter
/// eta = -Z/p. Throws ConvergenceError if the tail exceeds cfg.tolerance.
inline Complex j0_numeric(double q_half_mag, double p_mag, double cos_angle, double Z,
                          const OracleConfig& cfg = {}) {
    if (!(p_mag > 0.05)) throw DomainError("oracle: p below the accuracy domain (0.05 a.u.)");
    if (!(q_half_mag > 0.0)) throw DomainError("oracle: q must be positive");
    if (!(cos_angle >= -1.0 && cos_angle <= 1.0)) throw DomainError("oracle: |cos| > 1");
    const auto radial = radial_integrals(q_half_mag, p_mag, Z, cfg);
    const auto sum = sum_partial_waves(radial, p_mag, cos_angle, Z);
    if (sum.tail > cfg.tolerance)
        throw ConvergenceError("oracle: partial-wave tail " + std::to_string(sum.tail) +
                               " exceeds tolerance");
    return sum.value;
}

}  // namespace compton::oracle
