#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "compton/constants.hpp"
#include "compton/cross_sections.hpp"
#include "compton/error.hpp"
#include "compton/kinematics.hpp"
#include "compton/quadrature.hpp"

namespace compton {

struct Axis {
    std::string name;
    std::string unit;  ///< unit of `values` ("rad" or "au")
    std::vector<double> values;
};

/// A rectangular grid. Records are laid out axis-major: axis1 outer, axis2
/// inner.
struct ScanGrid {
    Axis axis1;
    std::optional<Axis> axis2;
    std::vector<std::pair<std::string, std::string>> fixed;  ///< name, "value unit"

    std::size_t size() const { return axis1.values.size() * (axis2 ? axis2->values.size() : 1); }
};

struct ScanRecord {
    std::vector<double> coordinates;
    double value = 0.0;
    std::string units;
    std::optional<double> error_estimate;
    bool failed = false;  ///< value then holds the partial estimate
    std::string failure;
};

struct ScanResult {
    ScanGrid grid;
    std::vector<ScanRecord> records;
};

/// n points from lo to hi inclusive, with both ends exact.
inline std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
    if (n < 2) throw DomainError("grid needs at least 2 points");
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    v.back() = hi;
    return v;
}

inline void validate(const Axis& axis) {
    if (axis.values.empty()) throw DomainError("axis '" + axis.name + "' is empty");
    for (double x : axis.values)
        if (!std::isfinite(x)) throw DomainError("axis '" + axis.name + "' has a non-finite value");
    for (std::size_t i = 1; i < axis.values.size(); ++i) {
        if (!(axis.values[i] > axis.values[i - 1]))
            throw DomainError("axis '" + axis.name + "' is not strictly increasing");
    }
}

/// Worker count from COMPTON_XSEC_THREADS, else the machine's parallelism.
inline unsigned scan_threads() {
    if (const char* env = std::getenv("COMPTON_XSEC_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(std::min<long>(n, 1024));
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(i) for i in [0, n) on a bounded pool and returns the results
/// by index. If any call throws, the exception of the lowest index is
/// rethrown after all workers finish.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn, unsigned threads = scan_threads()) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const unsigned count = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), n));
    if (count <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// FDCS on a uniform phi1 grid over [0, pi].
inline ScanResult scan_fdcs_vs_phi1(const Target& target, double omega_i, double E_e, double theta, double Phi,
                                    std::size_t n_points, const FdcsOptions& opt = {},
                                    TMode t_mode = TMode::fixed_unity) {
    ScanResult res;
    res.grid.axis1 = {"phi1", "rad", uniform_grid(0.0, constants::pi, n_points)};
    res.grid.fixed = {{"omega_i", std::to_string(omega_i) + " au"},
                      {"E_e", std::to_string(E_e) + " au"},
                      {"theta", std::to_string(theta) + " rad"},
                      {"Phi", std::to_string(Phi) + " rad"}};
    const auto& phi = res.grid.axis1.values;
    res.records = parallel_map<ScanRecord>(phi.size(), [&](std::size_t i) {
        KinematicInput in{omega_i, E_e, theta, phi[i], Phi, t_mode};
        return ScanRecord{{phi[i]}, fdcs_value(resolve(target, in), opt), "au", std::nullopt, false, {}};
    });
    return res;
}

/// FDCS over (theta, E_e) with the electron along Q (binary geometry,
/// phi1 = pi/2 - theta/2, Phi = pi). Default epsilon is 0.01.
inline ScanResult scan_fdcs_surface(const Target& target, double omega_i, const std::vector<double>& theta_grid,
                                    const std::vector<double>& Ee_grid, double epsilon = 0.01) {
    ScanResult res;
    res.grid.axis1 = {"theta", "rad", theta_grid};
    res.grid.axis2 = Axis{"E_e", "au", Ee_grid};
    validate(res.grid.axis1);
    validate(*res.grid.axis2);
    res.grid.fixed = {{"omega_i", std::to_string(omega_i) + " au"},
                      {"epsilon", std::to_string(epsilon) + " au"},
                      {"geometry", "binary"}};
    const std::size_t ne = Ee_grid.size();
    const FdcsOptions opt{epsilon, HydrogenAngle::q_p1};
    res.records = parallel_map<ScanRecord>(res.grid.size(), [&](std::size_t idx) {
        const double theta = theta_grid[idx / ne];
        const double E_e = Ee_grid[idx % ne];
        const BinaryDirection dir = binary_direction(theta);
        KinematicInput in{omega_i, E_e, theta, dir.phi1, dir.Phi, TMode::fixed_unity};
        return ScanRecord{{theta, E_e}, fdcs_value(resolve(target, in), opt), "au", std::nullopt, false, {}};
    });
    return res;
}

/// DDCS over (phi1, E_e). A point whose integration fails keeps its partial
/// estimate, is marked failed, and the scan carries on.
inline ScanResult scan_ddcs(const Target& target, double omega_i, const std::vector<double>& phi1_grid,
                            const std::vector<double>& Ee_grid, const DdcsOptions& opt = {}) {
    ScanResult res;
    res.grid.axis1 = {"phi1", "rad", phi1_grid};
    res.grid.axis2 = Axis{"E_e", "au", Ee_grid};
    validate(res.grid.axis1);
    validate(*res.grid.axis2);
    res.grid.fixed = {{"omega_i", std::to_string(omega_i) + " au"},
                      {"rel_tol", std::to_string(opt.rel_tol)},
                      {"epsilon", std::to_string(opt.epsilon) + " au"}};
    const std::size_t ne = Ee_grid.size();
    res.records = parallel_map<ScanRecord>(res.grid.size(), [&](std::size_t idx) {
        const double phi1 = phi1_grid[idx / ne];
        const double E_e = Ee_grid[idx % ne];
        ScanRecord rec{{phi1, E_e}, 0.0, "au", std::nullopt, false, {}};
        try {
            const DdcsResult r = ddcs_phi1(target, omega_i, E_e, phi1, opt);
            rec.value = r.integration.value;
            rec.error_estimate = r.integration.error_estimate;
        } catch (const QuadratureConvergenceError& e) {
            rec.value = e.partial().value;
            rec.error_estimate = e.partial().error_estimate;
            rec.failed = true;
            rec.failure = e.what();
        } catch (const Error& e) {
            rec.failed = true;
            rec.failure = e.what();
        }
        return rec;
    });
    return res;
}

/// Resonance energy along a theta grid in (0, pi]; values are in hartree.
inline ScanResult trace_resonance_line(double omega_i, const std::vector<double>& theta_grid) {
    ScanResult res;
    res.grid.axis1 = {"theta", "rad", theta_grid};
    validate(res.grid.axis1);
    for (double th : theta_grid)
        if (!(th > 0.0 && th <= constants::pi)) throw DomainError("resonance line: theta outside (0, pi]");
    res.grid.fixed = {{"omega_i", std::to_string(omega_i) + " au"}};
    for (double th : theta_grid)
        res.records.push_back({{th}, resonance_energy(omega_i, th), "au", std::nullopt, false, {}});
    return res;
}

}  // namespace compton
