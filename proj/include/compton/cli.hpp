#pragma once

// Command-line frontend: compton_xsec <command> [flags].

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "compton/amplitudes.hpp"
#include "compton/constants.hpp"
#include "compton/cross_sections.hpp"
#include "compton/error.hpp"
#include "compton/kinematics.hpp"
#include "compton/oracle.hpp"
#include "compton/quadrature.hpp"
#include "compton/scans.hpp"
#include "compton/table.hpp"

namespace compton::cli {

inline constexpr const char* engine_version = "1.0.0";

enum ExitCode : int { ok = 0, bad_parameter = 2, no_convergence = 3, io_failure = 4 };

class IoError : public Error {
public:
    using Error::Error;
};

enum class Dimension { energy, angle };

/// Parses "27.2eV", "5keV", "1.0au", "60deg", "1.047rad" or a bare number
/// (hartree for energies, radians for angles) into atomic units / radians.
inline double parse_quantity(const std::string& text, Dimension dim) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double value = std::strtod(begin, &end);
    if (end == begin) throw DomainError("cannot parse number in '" + text + "'");
    std::string suffix(end);
    while (!suffix.empty() && suffix.front() == ' ') suffix.erase(suffix.begin());
    if (suffix.empty()) return value;
    const Unit unit = parse_unit(suffix);
    if (is_energy(unit) != (dim == Dimension::energy)) {
        throw DomainError("unit '" + suffix + "' does not fit " +
                          (dim == Dimension::energy ? "an energy" : "an angle"));
    }
    if (!std::isfinite(value)) throw DomainError("non-finite value '" + text + "'");
    return to_au(value, unit);
}

/// Every flag of every command; each command reads the ones it declares.
struct RunConfig {
    std::string command;
    std::string target = "ps";
    std::string omega = "5keV";
    std::string E_e = "27.2eV";
    std::string theta = "60deg";
    std::string phi1 = "60deg";
    std::string Phi = "180deg";
    std::string Ee_max;
    double epsilon = 0.0;
    double rel_tol = 1e-4;
    std::size_t max_evaluations = 5'000'000;
    std::string t_mode = "unity";
    std::string units = "au";
    std::string output = "-";
    std::string format = "csv";
    std::size_t points = 181;
    std::size_t energies = 200;
    unsigned long long seed = 20240501;
    std::string hydrogen_angle = "q-p1";
};

namespace detail {

inline TMode parse_t_mode(const std::string& s) {
    if (s == "unity") return TMode::fixed_unity;
    if (s == "full") return TMode::full;
    throw DomainError("unknown t mode '" + s + "'");
}

inline HydrogenAngle parse_hydrogen_angle(const std::string& s) {
    if (s == "q-p1") return HydrogenAngle::q_p1;
    if (s == "chi") return HydrogenAngle::chi_literal;
    throw DomainError("unknown hydrogen angle '" + s + "'");
}

inline std::string num(double x) { return format_number(x); }

// Converts an atomic-unit cross section to the requested units.
inline double scale_to(CrossSectionUnits units) {
    CrossSectionSample s;
    s.value = 1.0;
    return convert_units(s, units).value;
}

struct Context {
    const RunConfig& cfg;
    CrossSectionUnits units;
    double unit_scale;
    TMode t_mode;
    Table table;

    explicit Context(const RunConfig& c)
        : cfg(c),
          units(parse_cross_section_units(c.units)),
          unit_scale(scale_to(units)),
          t_mode(parse_t_mode(c.t_mode)) {
        if (c.format != "csv" && c.format != "json") throw DomainError("unknown format '" + c.format + "'");
        table.add_meta("engine", std::string("compton_xsec ") + engine_version);
        table.add_meta("command", c.command);
    }

    void meta_energy(const std::string& key, const std::string& input, double au) {
        table.add_meta(key, input + " (" + num(au) + " au)");
    }
    void meta_angle(const std::string& key, const std::string& input, double rad) {
        table.add_meta(key, input + " (" + num(rad) + " rad)");
    }
    void meta_common(Quantity q) {
        table.add_meta("t_mode", cfg.t_mode);
        table.add_meta("units", std::string(units_name(units, q)));
        table.add_meta("hartree_eV", num(constants::hartree_eV));
        table.add_meta("c", num(constants::c));
    }
};

inline double eV(double au) { return from_au(au, Unit::eV); }

inline void run_fdcs(Context& ctx) {
    const auto& c = ctx.cfg;
    const Target target = parse_target(c.target);
    KinematicInput in{parse_quantity(c.omega, Dimension::energy), parse_quantity(c.E_e, Dimension::energy),
                      parse_quantity(c.theta, Dimension::angle),  parse_quantity(c.phi1, Dimension::angle),
                      parse_quantity(c.Phi, Dimension::angle),    ctx.t_mode};
    const FdcsOptions opt{c.epsilon, parse_hydrogen_angle(c.hydrogen_angle)};
    const ResolvedKinematics r = resolve(target, in);
    const double value = fdcs_value(r, opt);

    ctx.table.add_meta("target", std::string(target_name(target)));
    ctx.meta_energy("omega_i", c.omega, in.omega_i);
    ctx.meta_energy("E_e", c.E_e, in.E_e);
    ctx.meta_angle("theta", c.theta, in.theta);
    ctx.meta_angle("phi1", c.phi1, in.phi1);
    ctx.meta_angle("Phi", c.Phi, in.Phi);
    ctx.table.add_meta("epsilon", num(c.epsilon));
    ctx.meta_common(Quantity::fdcs);
    ctx.table.columns = {"target", "omega_au", "E_e_au", "E_e_eV", "theta_rad", "phi1_rad",
                         "Phi_rad", "t",        "Q_au",   "mu_au",  "fdcs"};
    ctx.table.rows.push_back({std::string(target_name(target)), in.omega_i, in.E_e, eV(in.E_e), in.theta, in.phi1,
                              in.Phi, r.t, r.Q, r.mu, value * ctx.unit_scale});
}

inline DdcsOptions ddcs_options(const Context& ctx) {
    DdcsOptions opt;
    opt.rel_tol = ctx.cfg.rel_tol;
    opt.max_evaluations = ctx.cfg.max_evaluations;
    opt.epsilon = ctx.cfg.epsilon;
    opt.t_mode = ctx.t_mode;
    opt.hydrogen_angle = parse_hydrogen_angle(ctx.cfg.hydrogen_angle);
    return opt;
}

inline void run_ddcs(Context& ctx) {
    const auto& c = ctx.cfg;
    const Target target = parse_target(c.target);
    const double omega = parse_quantity(c.omega, Dimension::energy);
    const double E_e = parse_quantity(c.E_e, Dimension::energy);
    const double phi1 = parse_quantity(c.phi1, Dimension::angle);
    const DdcsResult r = ddcs_phi1(target, omega, E_e, phi1, ddcs_options(ctx));

    ctx.table.add_meta("target", std::string(target_name(target)));
    ctx.meta_energy("omega_i", c.omega, omega);
    ctx.meta_energy("E_e", c.E_e, E_e);
    ctx.meta_angle("phi1", c.phi1, phi1);
    ctx.table.add_meta("rel_tol", num(c.rel_tol));
    ctx.table.add_meta("epsilon", num(c.epsilon));
    ctx.meta_common(Quantity::ddcs);
    ctx.table.columns = {"target", "omega_au", "E_e_au", "E_e_eV", "phi1_rad", "ddcs", "error_estimate", "evaluations"};
    ctx.table.rows.push_back({std::string(target_name(target)), omega, E_e, eV(E_e), phi1,
                              r.integration.value * ctx.unit_scale, r.integration.error_estimate * ctx.unit_scale,
                              static_cast<long long>(r.integration.evaluations)});
}

// scan-fig1..3: FDCS vs phi1, both targets, Phi in {0, pi}.
inline void run_fig_phi1(Context& ctx, double theta) {
    const auto& c = ctx.cfg;
    const double omega = parse_quantity(c.omega, Dimension::energy);
    const double E_e = parse_quantity(c.E_e, Dimension::energy);
    const FdcsOptions opt{c.epsilon, parse_hydrogen_angle(c.hydrogen_angle)};
    ctx.meta_energy("omega_i", c.omega, omega);
    ctx.meta_energy("E_e", c.E_e, E_e);
    ctx.table.add_meta("theta", num(theta) + " rad");
    ctx.table.add_meta("points", std::to_string(c.points));
    ctx.table.add_meta("epsilon", num(c.epsilon));
    ctx.meta_common(Quantity::fdcs);
    ctx.table.columns = {"target", "Phi_rad", "phi1_rad", "phi1_deg", "fdcs"};
    for (const Target target : {Target::positronium(), Target::hydrogen()}) {
        for (const double Phi : {0.0, constants::pi}) {
            const ScanResult s = scan_fdcs_vs_phi1(target, omega, E_e, theta, Phi, c.points, opt, ctx.t_mode);
            for (const auto& rec : s.records) {
                const double phi1 = rec.coordinates[0];
                ctx.table.rows.push_back({std::string(target_name(target)), Phi, phi1,
                                          from_au(phi1, Unit::deg), rec.value * ctx.unit_scale});
            }
        }
    }
}

inline double energy_max(const RunConfig& c, double fallback_eV) {
    return c.Ee_max.empty() ? to_au(fallback_eV, Unit::eV) : parse_quantity(c.Ee_max, Dimension::energy);
}

// scan-fig4: smoothed FDCS surface over (theta, E_e) in binary geometry.
inline void run_fig4(Context& ctx) {
    const auto& c = ctx.cfg;
    const Target target = parse_target(c.target);
    const double omega = parse_quantity(c.omega, Dimension::energy);
    const double e_max = energy_max(c, 30.0);
    const double epsilon = c.epsilon > 0.0 ? c.epsilon : 0.01;
    const ScanResult s = scan_fdcs_surface(target, omega, uniform_grid(0.0, constants::pi, c.points),
                                           uniform_grid(0.0, e_max, c.energies), epsilon);
    ctx.table.add_meta("target", std::string(target_name(target)));
    ctx.meta_energy("omega_i", c.omega, omega);
    ctx.table.add_meta("geometry", "binary (phi1 = pi/2 - theta/2, Phi = pi)");
    ctx.table.add_meta("epsilon", num(epsilon));
    ctx.table.add_meta("grid", std::to_string(c.points) + " theta x " + std::to_string(c.energies) + " E_e");
    ctx.meta_common(Quantity::fdcs);
    ctx.table.columns = {"theta_rad", "E_e_au", "E_e_eV", "fdcs"};
    for (const auto& rec : s.records) {
        ctx.table.rows.push_back({rec.coordinates[0], rec.coordinates[1], eV(rec.coordinates[1]),
                                  rec.value * ctx.unit_scale});
    }
}

inline bool emit_ddcs_rows(Context& ctx, const ScanResult& s, const std::string& label, bool with_phi1) {
    bool all_ok = true;
    for (const auto& rec : s.records) {
        std::vector<Cell> row;
        if (!label.empty()) row.emplace_back(label);
        if (with_phi1) row.emplace_back(rec.coordinates[0]);
        row.emplace_back(rec.coordinates[1]);
        row.emplace_back(eV(rec.coordinates[1]));
        row.emplace_back(rec.value * ctx.unit_scale);
        row.emplace_back(rec.error_estimate.value_or(0.0) * ctx.unit_scale);
        row.emplace_back(std::string(rec.failed ? "failed" : "ok"));
        ctx.table.rows.push_back(std::move(row));
        all_ok = all_ok && !rec.failed;
    }
    return all_ok;
}

// scan-fig5: DDCS over (phi1, E_e).
inline bool run_fig5(Context& ctx) {
    const auto& c = ctx.cfg;
    const Target target = parse_target(c.target);
    const double omega = parse_quantity(c.omega, Dimension::energy);
    const double e_max = energy_max(c, 100.0);
    const ScanResult s = scan_ddcs(target, omega, uniform_grid(0.0, constants::pi, c.points),
                                   uniform_grid(0.0, e_max, c.energies), ddcs_options(ctx));
    ctx.table.add_meta("target", std::string(target_name(target)));
    ctx.meta_energy("omega_i", c.omega, omega);
    ctx.table.add_meta("rel_tol", num(c.rel_tol));
    ctx.table.add_meta("epsilon", num(c.epsilon));
    ctx.table.add_meta("grid", std::to_string(c.points) + " phi1 x " + std::to_string(c.energies) + " E_e");
    ctx.meta_common(Quantity::ddcs);
    ctx.table.columns = {"phi1_rad", "E_e_au", "E_e_eV", "ddcs", "error_estimate", "status"};
    return emit_ddcs_rows(ctx, s, "", true);
}

// scan-fig6..8: DDCS at phi1 = 0 for both targets.
inline bool run_fig_slice(Context& ctx) {
    const auto& c = ctx.cfg;
    const double omega = parse_quantity(c.omega, Dimension::energy);
    const double e_max = energy_max(c, 150.0);
    const std::vector<double> energies = uniform_grid(0.0, e_max, c.energies);
    ctx.meta_energy("omega_i", c.omega, omega);
    ctx.table.add_meta("phi1", "0 rad");
    ctx.table.add_meta("rel_tol", num(c.rel_tol));
    ctx.table.add_meta("epsilon", num(c.epsilon));
    ctx.table.add_meta("energies", std::to_string(c.energies));
    ctx.meta_common(Quantity::ddcs);
    ctx.table.columns = {"target", "E_e_au", "E_e_eV", "ddcs", "error_estimate", "status"};
    bool all_ok = true;
    for (const Target target : {Target::positronium(), Target::hydrogen()}) {
        const ScanResult s = scan_ddcs(target, omega, {0.0}, energies, ddcs_options(ctx));
        all_ok = emit_ddcs_rows(ctx, s, std::string(target_name(target)), false) && all_ok;
    }
    return all_ok;
}

inline void run_resonance_line(Context& ctx) {
    const auto& c = ctx.cfg;
    const double omega = parse_quantity(c.omega, Dimension::energy);
    std::vector<double> thetas;
    for (std::size_t i = 1; i <= c.points; ++i)
        thetas.push_back(constants::pi * static_cast<double>(i) / static_cast<double>(c.points));
    const ScanResult s = trace_resonance_line(omega, thetas);
    ctx.meta_energy("omega_i", c.omega, omega);
    ctx.table.add_meta("points", std::to_string(c.points));
    ctx.table.columns = {"theta_rad", "theta_deg", "E_e_au", "E_e_eV"};
    for (const auto& rec : s.records) {
        ctx.table.rows.push_back(
            {rec.coordinates[0], from_au(rec.coordinates[0], Unit::deg), rec.value, eV(rec.value)});
    }
}

// Closed form against the partial-wave sum at random points; compares |J|^2
// and the relative phase of J(+q) and J(-q).
inline bool run_oracle_check(Context& ctx) {
    const auto& c = ctx.cfg;
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> mom(0.3, 1.5), cosine(-1.0, 1.0);
    const std::size_t n = c.points;
    ctx.table.add_meta("seed", std::to_string(c.seed));
    ctx.table.add_meta("tolerance", "1e-4 relative");
    ctx.table.columns = {"Z", "q", "p", "cos", "msq_closed", "msq_oracle", "rel_diff", "phase_diff", "status"};
    bool all_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const double Z = (i % 2 == 0) ? 0.5 : 1.0;
        const double q = mom(rng), p = mom(rng), cs = cosine(rng);
        const Vec3 qv{0.0, 0.0, q};
        const Vec3 pv{p * std::sqrt(1.0 - cs * cs), 0.0, p * cs};
        const Complex closed_plus = j0_coulomb(qv, pv, Z), closed_minus = j0_coulomb(-1.0 * qv, pv, Z);
        const auto radial = oracle::radial_integrals(q, p, Z, oracle::OracleConfig{});
        const auto plus = oracle::sum_partial_waves(radial, p, cs, Z);
        const auto minus = oracle::sum_partial_waves(radial, p, -cs, Z);
        const double rel = std::abs(std::norm(closed_plus) / std::norm(plus.value) - 1.0);
        const double phase =
            std::abs(std::arg((closed_plus / closed_minus) / (plus.value / minus.value)));
        const bool good = rel <= 1e-4 && phase <= 1e-4;
        all_ok = all_ok && good;
        ctx.table.rows.push_back({Z, q, p, cs, std::norm(closed_plus), std::norm(plus.value), rel, phase,
                                  std::string(good ? "ok" : "mismatch")});
    }
    return all_ok;
}

inline void write_table(const RunConfig& cfg, const Table& table, std::ostream& out) {
    std::ostringstream buf;
    if (cfg.format == "json") {
        write_json(buf, table);
    } else {
        write_csv(buf, table);
    }
    if (cfg.output == "-") {
        out << buf.str();
        return;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw IoError("cannot open '" + cfg.output + "' for writing");
    file << buf.str();
    file.flush();
    if (!file) throw IoError("write to '" + cfg.output + "' failed");
}

}  // namespace detail

/// Executes one parsed command. Returns the process exit status.
inline int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        detail::Context ctx(cfg);
        bool converged = true;
        const std::string& cmd = cfg.command;
        if (cmd == "fdcs") {
            detail::run_fdcs(ctx);
        } else if (cmd == "ddcs") {
            detail::run_ddcs(ctx);
        } else if (cmd == "scan-fig1") {
            detail::run_fig_phi1(ctx, constants::pi / 3.0);
        } else if (cmd == "scan-fig2") {
            detail::run_fig_phi1(ctx, constants::pi / 2.0);
        } else if (cmd == "scan-fig3") {
            detail::run_fig_phi1(ctx, constants::pi);
        } else if (cmd == "scan-fig4") {
            detail::run_fig4(ctx);
        } else if (cmd == "scan-fig5") {
            converged = detail::run_fig5(ctx);
        } else if (cmd == "scan-fig6" || cmd == "scan-fig7" || cmd == "scan-fig8") {
            converged = detail::run_fig_slice(ctx);
        } else if (cmd == "resonance-line") {
            detail::run_resonance_line(ctx);
        } else if (cmd == "oracle-check") {
            converged = detail::run_oracle_check(ctx);
        } else {
            err << "error: unknown command '" << cmd << "'\n";
            return bad_parameter;
        }
        detail::write_table(cfg, ctx.table, out);
        if (!converged) {
            err << "error: some points did not converge (marked in the output)\n";
            return no_convergence;
        }
        return ok;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_failure;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return no_convergence;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return bad_parameter;
    }
}

/// Parses argv and runs. Unknown flags and malformed values exit with 2.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Compton ionization of hydrogen and disintegration of positronium", "compton_xsec"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto output_flags = [&](CLI::App* sub) {
        sub->add_option("--units", cfg.units, "cross-section units: au, barn, cm2")->check(CLI::IsMember({"au", "barn", "cm2"}));
        sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("-o,--output", cfg.output, "output file, '-' for stdout");
    };
    const auto physics_flags = [&](CLI::App* sub) {
        sub->add_option("--t-mode", cfg.t_mode, "unity or full")->check(CLI::IsMember({"unity", "full"}));
        sub->add_option("--epsilon", cfg.epsilon, "Ps smoothing of mu (au)")->check(CLI::NonNegativeNumber);
        sub->add_option("--hydrogen-angle", cfg.hydrogen_angle, "q-p1 or chi")->check(CLI::IsMember({"q-p1", "chi"}));
    };
    const auto budget_flags = [&](CLI::App* sub) {
        sub->add_option("--rel-tol", cfg.rel_tol, "relative tolerance")->check(CLI::PositiveNumber);
        sub->add_option("--max-evaluations", cfg.max_evaluations, "integrand evaluations per DDCS value")
            ->check(CLI::Range(std::size_t{1}, std::size_t{1'000'000'000}));
    };
    const auto target_flag = [&](CLI::App* sub) {
        sub->add_option("--target", cfg.target, "ps or h")->check(CLI::IsMember({"ps", "h"}));
    };

    auto* fdcs = app.add_subcommand("fdcs", "fully differential cross section at one point");
    target_flag(fdcs);
    fdcs->add_option("--omega", cfg.omega, "photon energy, e.g. 5keV");
    fdcs->add_option("--Ee", cfg.E_e, "electron energy, e.g. 27.2eV");
    fdcs->add_option("--theta", cfg.theta, "photon scattering angle, e.g. 60deg");
    fdcs->add_option("--phi1", cfg.phi1, "electron polar angle");
    fdcs->add_option("--Phi", cfg.Phi, "angle between the photon and electron planes");
    physics_flags(fdcs);
    output_flags(fdcs);

    auto* ddcs = app.add_subcommand("ddcs", "FDCS integrated over the photon direction");
    target_flag(ddcs);
    ddcs->add_option("--omega", cfg.omega, "photon energy");
    ddcs->add_option("--Ee", cfg.E_e, "electron energy");
    ddcs->add_option("--phi1", cfg.phi1, "electron polar angle");
    budget_flags(ddcs);
    physics_flags(ddcs);
    output_flags(ddcs);

    std::vector<CLI::App*> figs;
    for (int f = 1; f <= 3; ++f) {
        auto* sub = app.add_subcommand("scan-fig" + std::to_string(f), "FDCS vs phi1, both targets");
        sub->add_option("--omega", cfg.omega, "photon energy");
        sub->add_option("--Ee", cfg.E_e, "electron energy");
        sub->add_option("--points", cfg.points, "phi1 points")->check(CLI::Range(2, 100000));
        physics_flags(sub);
        output_flags(sub);
        figs.push_back(sub);
    }
    auto* fig4 = app.add_subcommand("scan-fig4", "smoothed FDCS over (theta, E_e) in binary geometry");
    target_flag(fig4);
    fig4->add_option("--omega", cfg.omega, "photon energy");
    fig4->add_option("--Ee-max", cfg.Ee_max, "upper electron energy (default 30eV)");
    fig4->add_option("--points", cfg.points, "theta points")->check(CLI::Range(2, 100000));
    fig4->add_option("--energies", cfg.energies, "energy points")->check(CLI::Range(2, 100000));
    fig4->add_option("--epsilon", cfg.epsilon, "smoothing (default 0.01)")->check(CLI::NonNegativeNumber);
    output_flags(fig4);

    auto* fig5 = app.add_subcommand("scan-fig5", "DDCS over (phi1, E_e)");
    target_flag(fig5);
    fig5->add_option("--omega", cfg.omega, "photon energy (default 3keV)");
    fig5->add_option("--Ee-max", cfg.Ee_max, "upper electron energy (default 100eV)");
    fig5->add_option("--points", cfg.points, "phi1 points")->check(CLI::Range(2, 100000));
    fig5->add_option("--energies", cfg.energies, "energy points")->check(CLI::Range(2, 100000));
    budget_flags(fig5);
    physics_flags(fig5);
    output_flags(fig5);

    std::vector<CLI::App*> slices;
    for (int f = 6; f <= 8; ++f) {
        auto* sub = app.add_subcommand("scan-fig" + std::to_string(f), "DDCS at phi1 = 0, both targets");
        sub->add_option("--omega", cfg.omega, "photon energy");
        sub->add_option("--Ee-max", cfg.Ee_max, "upper electron energy (default 150eV)");
        sub->add_option("--energies", cfg.energies, "energy points")->check(CLI::Range(2, 100000));
        budget_flags(sub);
        physics_flags(sub);
        output_flags(sub);
        slices.push_back(sub);
    }

    auto* line = app.add_subcommand("resonance-line", "resonance energy against theta");
    line->add_option("--omega", cfg.omega, "photon energy");
    line->add_option("--points", cfg.points, "theta points on (0, pi]")->check(CLI::Range(1, 100000));
    output_flags(line);

    auto* check = app.add_subcommand("oracle-check", "closed-form matrix element against partial waves");
    check->add_option("--seed", cfg.seed, "random seed");
    check->add_option("--points", cfg.points, "number of random points (default 5)")->check(CLI::Range(1, 1000));
    output_flags(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return bad_parameter;
    }

    for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
    if (cfg.command == "scan-fig5" && fig5->count("--omega") == 0) cfg.omega = "3keV";
    if (cfg.command == "scan-fig7" && slices[1]->count("--omega") == 0) cfg.omega = "3.75keV";
    if (cfg.command == "scan-fig8" && slices[2]->count("--omega") == 0) cfg.omega = "3keV";
    if (cfg.command == "oracle-check" && check->count("--points") == 0) cfg.points = 5;
    return execute(cfg, out, err);
}

}  // namespace compton::cli
