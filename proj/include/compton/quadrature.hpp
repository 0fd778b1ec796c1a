#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "compton/constants.hpp"
#include "compton/cross_sections.hpp"
#include "compton/error.hpp"
#include "compton/kinematics.hpp"

namespace compton {

struct Interval {
    double lo;
    double hi;
};

struct Point2 {
    double x;
    double y;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = false;
};

/// Thrown when the evaluation budget runs out; carries the partial result.
class QuadratureConvergenceError : public ConvergenceError {
public:
    QuadratureConvergenceError(const std::string& what, IntegrationResult partial)
        : ConvergenceError(what), partial_(partial) {}
    const IntegrationResult& partial() const noexcept { return partial_; }

private:
    IntegrationResult partial_;
};

struct IntegrationOptions {
    double rel_tol = 1e-4;
    double abs_tol = 0.0;
    std::size_t max_evaluations = 5'000'000;
    /// Point where the integrand may blow up like 1/r. The domain is cut at
    /// this point and every piece touching it is integrated in Duffy
    /// (collapsed polar) coordinates, whose Jacobian r cancels the 1/r.
    std::optional<Point2> singular_hint;
};

namespace detail {

// 15-point Kronrod rule with the embedded 7-point Gauss rule on [-1, 1].
// Nodes are listed for x >= 0; index 7 is the centre.
struct GaussKronrod15 {
    static constexpr std::array<double, 8> x = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr std::array<double, 8> wk = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    // Gauss weights at x[1], x[3], x[5], x[7]; zero elsewhere
    static constexpr std::array<double, 8> wg = {
        0.0, 0.129484966168869693270611432679082, 0.0, 0.279705391489276667901467771423780,
        0.0, 0.381830050505118944950369775488975, 0.0, 0.417959183673469387755102040816327};

    // Expanded to the 15 nodes on [-1, 1] in ascending order.
    static constexpr std::size_t n = 15;
    static constexpr double node(std::size_t i) { return i < 7 ? -x[i] : x[14 - i]; }
    static constexpr double kronrod_weight(std::size_t i) { return i < 7 ? wk[i] : wk[14 - i]; }
    static constexpr double gauss_weight(std::size_t i) { return i < 7 ? wg[i] : wg[14 - i]; }
};

// Maps the unit square onto a piece of the integration domain.
struct Region {
    enum class Kind { affine, duffy } kind = Kind::affine;
    Point2 origin{};  // affine: lower-left corner; duffy: the singular vertex
    Point2 a{};       // affine: (width, height); duffy: second vertex
    Point2 b{};       // duffy: third vertex

    // Returns the domain point for (u, v) and writes the Jacobian.
    Point2 map(double u, double v, double& jac) const {
        if (kind == Kind::affine) {
            jac = a.x * a.y;
            return {origin.x + u * a.x, origin.y + v * a.y};
        }
        const double ex = a.x - origin.x + v * (b.x - a.x);
        const double ey = a.y - origin.y + v * (b.y - a.y);
        const double cross = (a.x - origin.x) * (b.y - a.y) - (a.y - origin.y) * (b.x - a.x);
        jac = u * std::abs(cross);
        return {origin.x + u * ex, origin.y + u * ey};
    }
};

struct Panel {
    std::size_t region = 0;
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;
    double value = 0.0;
    double error = 0.0;
    double error_u = 0.0;
    double error_v = 0.0;
};

struct PanelOrder {
    bool operator()(const Panel& l, const Panel& r) const { return l.error < r.error; }
};

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

template <class F>
void evaluate_panel(F& f, const Region& region, Panel& p) {
    using GK = GaussKronrod15;
    const double hu = 0.5 * (p.u1 - p.u0), cu = 0.5 * (p.u1 + p.u0);
    const double hv = 0.5 * (p.v1 - p.v0), cv = 0.5 * (p.v1 + p.v0);

    std::array<std::array<double, GK::n>, GK::n> values{};
    for (std::size_t i = 0; i < GK::n; ++i) {
        const double u = cu + hu * GK::node(i);
        for (std::size_t j = 0; j < GK::n; ++j) {
            const double v = cv + hv * GK::node(j);
            double jac = 0.0;
            const Point2 x = region.map(u, v, jac);
            values[i][j] = jac == 0.0 ? 0.0 : f(x.x, x.y) * jac;
        }
    }

    double kk = 0.0, gk_u = 0.0, kg_v = 0.0;
    for (std::size_t i = 0; i < GK::n; ++i) {
        double row_k = 0.0, row_g = 0.0;
        for (std::size_t j = 0; j < GK::n; ++j) {
            row_k += GK::kronrod_weight(j) * values[i][j];
            row_g += GK::gauss_weight(j) * values[i][j];
        }
        kk += GK::kronrod_weight(i) * row_k;
        gk_u += GK::gauss_weight(i) * row_k;  // Gauss in u, Kronrod in v
        kg_v += GK::kronrod_weight(i) * row_g;  // Kronrod in u, Gauss in v
    }
    const double scale = hu * hv;
    p.value = kk * scale;
    p.error_u = std::abs(kk - gk_u) * scale;
    p.error_v = std::abs(kk - kg_v) * scale;
    p.error = p.error_u + p.error_v;
}

// Splits [x] x [y] at `hint` and covers each piece touching it with two
// Duffy triangles.
inline std::vector<Region> build_regions(Interval xr, Interval yr, const std::optional<Point2>& hint) {
    std::vector<Region> regions;
    const auto affine = [&](double x0, double x1, double y0, double y1) {
        Region r;
        r.kind = Region::Kind::affine;
        r.origin = {x0, y0};
        r.a = {x1 - x0, y1 - y0};
        regions.push_back(r);
    };
    const bool inside = hint && hint->x >= xr.lo && hint->x <= xr.hi && hint->y >= yr.lo &&
                        hint->y <= yr.hi;
    if (!inside) {
        affine(xr.lo, xr.hi, yr.lo, yr.hi);
        return regions;
    }
    const Point2 p = *hint;
    const double tiny = 1e-14 * std::max(xr.hi - xr.lo, yr.hi - yr.lo);
    const std::array<Interval, 2> xs = {Interval{xr.lo, p.x}, Interval{p.x, xr.hi}};
    const std::array<Interval, 2> ys = {Interval{yr.lo, p.y}, Interval{p.y, yr.hi}};
    for (const Interval& xi : xs) {
        if (xi.hi - xi.lo <= tiny) continue;
        for (const Interval& yi : ys) {
            if (yi.hi - yi.lo <= tiny) continue;
            // corners other than p: along x, along y, opposite
            const double ox = xi.lo == p.x ? xi.hi : xi.lo;
            const double oy = yi.lo == p.y ? yi.hi : yi.lo;
            const Point2 along_x{ox, p.y}, along_y{p.x, oy}, opposite{ox, oy};
            Region t1;
            t1.kind = Region::Kind::duffy;
            t1.origin = p;
            t1.a = along_x;
            t1.b = opposite;
            Region t2 = t1;
            t2.a = opposite;
            t2.b = along_y;
            regions.push_back(t1);
            regions.push_back(t2);
        }
    }
    return regions;
}

}  // namespace detail

/// Globally adaptive integral of f(x, y) dx dy over a rectangle.
///
/// Each panel uses the tensor 15-point Kronrod rule; replacing the rule by the
/// embedded 7-point Gauss rule in one direction gives that direction's error
/// indicator. The panel with the largest error is bisected along its worse
/// direction until the summed error meets max(rel_tol |I|, abs_tol). Panels
/// are processed in a fixed order, so results are bit-reproducible.
///
/// Throws QuadratureConvergenceError once max_evaluations is exhausted.
template <class F>
IntegrationResult integrate_2d_adaptive(F&& f, Interval x_range, Interval y_range,
                                        const IntegrationOptions& opt = {}) {
    if (!(opt.rel_tol > 0.0) && !(opt.abs_tol > 0.0))
        throw DomainError("integrate_2d_adaptive: tolerance must be positive");
    if (!(x_range.hi > x_range.lo) || !(y_range.hi > y_range.lo))
        throw DomainError("integrate_2d_adaptive: empty integration range");

    using GK = detail::GaussKronrod15;
    constexpr std::size_t per_panel = GK::n * GK::n;
    const std::vector<detail::Region> regions = detail::build_regions(x_range, y_range, opt.singular_hint);

    std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelOrder> queue;
    std::vector<detail::Panel> finished;  // panels too small to split
    IntegrationResult res;
    double total = 0.0, total_err = 0.0;

    for (std::size_t r = 0; r < regions.size(); ++r) {
        detail::Panel p;
        p.region = r;
        detail::evaluate_panel(f, regions[r], p);
        res.evaluations += per_panel;
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }

    const auto target = [&](double value) { return std::max(opt.rel_tol * std::abs(value), opt.abs_tol); };
    const auto resum = [&] {
        detail::CompensatedSum v, e;
        std::vector<detail::Panel> all;
        all.reserve(queue.size() + finished.size());
        auto copy = queue;
        while (!copy.empty()) {
            all.push_back(copy.top());
            copy.pop();
        }
        all.insert(all.end(), finished.begin(), finished.end());
        for (const auto& p : all) {
            v.add(p.value);
            e.add(p.error);
        }
        total = v.value();
        total_err = e.value();
    };

    std::size_t iterations = 0;
    while (!queue.empty()) {
        if (total_err <= target(total)) {
            resum();
            if (total_err <= target(total)) break;
        }
        if (res.evaluations + 2 * per_panel > opt.max_evaluations) break;

        detail::Panel worst = queue.top();
        queue.pop();
        const bool split_u = worst.error_u >= worst.error_v;
        const double width = split_u ? worst.u1 - worst.u0 : worst.v1 - worst.v0;
        if (width < 1e-13) {
            finished.push_back(worst);
            continue;
        }
        detail::Panel lo = worst, hi = worst;
        if (split_u) {
            const double mid = 0.5 * (worst.u0 + worst.u1);
            lo.u1 = mid;
            hi.u0 = mid;
        } else {
            const double mid = 0.5 * (worst.v0 + worst.v1);
            lo.v1 = mid;
            hi.v0 = mid;
        }
        detail::evaluate_panel(f, regions[worst.region], lo);
        detail::evaluate_panel(f, regions[worst.region], hi);
        res.evaluations += 2 * per_panel;
        total += lo.value + hi.value - worst.value;
        total_err += lo.error + hi.error - worst.error;
        queue.push(lo);
        queue.push(hi);
        if (++iterations % 256 == 0) resum();
    }

    resum();
    res.value = total;
    res.error_estimate = total_err;
    res.converged = total_err <= target(total);
    if (!res.converged) {
        throw QuadratureConvergenceError(
            "integrate_2d_adaptive: evaluation budget exhausted (error " + std::to_string(total_err) +
                ", value " + std::to_string(total) + ")",
            res);
    }
    return res;
}

struct DdcsOptions {
    double rel_tol = 1e-4;
    double epsilon = 0.0;  ///< Ps smoothing; 0 integrates the bare 1/mu line
    TMode t_mode = TMode::fixed_unity;
    HydrogenAngle hydrogen_angle = HydrogenAngle::q_p1;
    std::size_t max_evaluations = 5'000'000;
};

struct DdcsResult {
    CrossSectionSample sample;
    IntegrationResult integration;
};

/// d^2 sigma / (dE_e dphi1) = 2 pi int_0^pi sin(theta) dtheta int_0^{2 pi} dPhi FDCS.
///
/// The FDCS is even under Phi -> 2 pi - Phi, so the Phi integral runs over
/// [0, pi] and is doubled. For Ps the domain is cut at the photon direction
/// that brings mu closest to zero (theta*, Phi = pi); when the electron
/// energy lies on the resonance line this is exactly the 1/mu point.
inline DdcsResult ddcs_phi1(const Target& target, double omega_i, double E_e, double phi1,
                            const DdcsOptions& opt = {}) {
    KinematicInput base;
    base.omega_i = omega_i;
    base.E_e = E_e;
    base.phi1 = phi1;
    base.theta = 0.0;
    base.Phi = 0.0;
    base.t_mode = opt.t_mode;
    validate(base);

    const FdcsOptions fopt{opt.epsilon, opt.hydrogen_angle};
    auto integrand = [&](double theta, double Phi) {
        KinematicInput in = base;
        in.theta = theta;
        in.Phi = Phi;
        return 2.0 * std::sin(theta) * fdcs_value(resolve(target, in), fopt);
    };

    IntegrationOptions iopt;
    iopt.rel_tol = opt.rel_tol;
    iopt.max_evaluations = opt.max_evaluations;
    if (target.is_positronium()) {
        const auto approach = closest_resonance_approach(std::sqrt(2.0 * E_e), phi1, omega_i / constants::c);
        iopt.singular_hint = Point2{approach.theta, approach.Phi};
    }

    const double pi = constants::pi;
    DdcsResult out;
    try {
        out.integration = integrate_2d_adaptive(integrand, {0.0, pi}, {0.0, pi}, iopt);
    } catch (const QuadratureConvergenceError& e) {
        IntegrationResult partial = e.partial();
        partial.value *= 2.0 * pi;
        partial.error_estimate *= 2.0 * pi;
        throw QuadratureConvergenceError(e.what(), partial);
    }
    out.integration.value *= 2.0 * pi;
    out.integration.error_estimate *= 2.0 * pi;
    out.sample.value = out.integration.value;
    out.sample.units = CrossSectionUnits::atomic;
    out.sample.quantity = Quantity::ddcs;
    out.sample.kinematics = base;
    out.sample.target = target;
    return out;
}

}  // namespace compton
