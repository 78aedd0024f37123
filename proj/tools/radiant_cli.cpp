// radiant: angular windows, spectra and energy rates of the radiation
// emitted by a traveling-wave deformation of a perfectly reflecting plate.
//
// Subcommands: classify, window, spectrum, energy, regime-map,
// general-spectrum. All quantities are in natural units (c = 1) unless
// --si is given. Exit codes: 0 ok, 2 validation, 3 quadrature tolerance,
// 4 conservation failure.

#include "radiant/kinematics.hpp"
#include "radiant/mc_oracle.hpp"
#include "radiant/output.hpp"
#include "radiant/radiance.hpp"
#include "radiant/spectrum.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
using namespace radiant;

constexpr double kSpeedOfLight = 299792458.0;  // m/s
constexpr int kExitValidation = 2;
constexpr int kExitTolerance = 3;
constexpr int kExitConservation = 4;

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ToleranceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DriveFlags {
    double omega0 = 0.0;
    double k0 = 0.0;
    double d = 1.0;
    bool si = false;

    /// Converts SI inputs (omega0 in rad/s, k0 in rad/m, d in m) to the
    /// second-based natural units used internally, then validates.
    MirrorDrive to_drive() const {
        double w = omega0, k = k0, amp = d;
        if (si) {
            k *= kSpeedOfLight;
            amp /= kSpeedOfLight;
        }
        if (!(w > 0.0)) throw ValidationError("--omega0 must be > 0");
        if (!(k >= 0.0)) throw ValidationError("--k0 must be >= 0");
        if (!(amp > 0.0)) throw ValidationError("--d must be > 0");
        const MirrorDrive drive{w, k, amp};
        if (!drive.perturbative())
            std::cerr << "warning: d*omega0 = " << format_double(amp * w)
                      << " is not small; second-order results may be unreliable\n";
        return drive;
    }

    json echo() const {
        return json{{"omega0", omega0}, {"k0", k0}, {"d", d}, {"si", si}};
    }
};

void add_drive_flags(CLI::App* cmd, DriveFlags& f, bool need_d) {
    cmd->add_option("--omega0", f.omega0, "drive angular frequency")->required();
    cmd->add_option("--k0", f.k0, "drive in-plane wavenumber")->required();
    auto* d = cmd->add_option("-d,--d", f.d, "deformation amplitude");
    if (need_d) d->required();
    cmd->add_flag("--si", f.si, "inputs in SI units (rad/s, rad/m, m)");
}

struct QuadFlags {
    double rel_tol = 1e-6;
    double abs_tol = 1e-14;
    int max_subdiv = 2000;
    bool boundary_layer = true;

    QuadratureConfig to_config() const {
        QuadratureConfig cfg;
        cfg.rel_tol = rel_tol;
        cfg.abs_tol = abs_tol;
        cfg.max_subdivisions = max_subdiv;
        cfg.boundary_layer = boundary_layer;
        try {
            cfg.validate();
        } catch (const std::invalid_argument&) {
            throw ValidationError("--rel-tol/--abs-tol must be > 0 and --max-subdiv >= 10");
        }
        return cfg;
    }
};

void add_quad_flags(CLI::App* cmd, QuadFlags& f) {
    cmd->add_option("--rel-tol", f.rel_tol, "relative quadrature tolerance");
    cmd->add_option("--abs-tol", f.abs_tol, "absolute quadrature floor");
    cmd->add_option("--max-subdiv", f.max_subdiv, "subdivision budget per axis");
    cmd->add_flag("--boundary-layer,!--no-boundary-layer", f.boundary_layer,
                  "endpoint substitution at window edges");
}

/// One P(Omega) point kept within the requested diagnostics. Factor 2:
/// the reported estimate combines the outer and inner passes.
void require_within_tolerance(const DensityResult& res, const QuadratureConfig& cfg,
                              double Omega) {
    if (res.exact_zero) return;
    if (!res.converged)
        throw ToleranceError("subdivision budget exhausted at Omega = " +
                             format_double(Omega));
    if (res.error > std::max(cfg.abs_tol, 2.0 * cfg.rel_tol * std::abs(res.value)))
        throw ToleranceError("error estimate " + format_double(res.error) +
                             " exceeds tolerance at Omega = " + format_double(Omega));
}

// ---------------------------------------------------------------------------
// config file: JSON object mirroring the long flag names; command-line
// flags override file values; unknown keys are validation errors.

bool flag_on_cmdline(const std::vector<std::string>& args, const std::string& key) {
    const std::string longflag = "--" + key;
    for (const auto& a : args) {
        if (a == longflag || a.rfind(longflag + "=", 0) == 0) return true;
        if (key == "d" && (a == "-d" || a.rfind("-d=", 0) == 0)) return true;
    }
    return false;
}

std::vector<std::string> merge_config(const CLI::App& cmd,
                                      const std::vector<std::string>& args,
                                      const std::string& config_path) {
    std::ifstream in(config_path);
    if (!in) throw ValidationError("--config: cannot open " + config_path);
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("--config: ") + e.what());
    }
    if (!cfg.is_object()) throw ValidationError("--config: top level must be an object");

    std::vector<std::string> merged = args;
    for (const auto& [key, value] : cfg.items()) {
        if (cmd.get_option_no_throw("--" + key) == nullptr)
            throw ValidationError("--config: unknown key '" + key + "'");
        if (flag_on_cmdline(args, key)) continue;
        std::string text;
        if (value.is_number_float())
            text = format_double(value.get<double>());
        else if (value.is_number_integer())
            text = std::to_string(value.get<long long>());
        else if (value.is_boolean())
            text = value.get<bool>() ? "true" : "false";
        else if (value.is_string())
            text = value.get<std::string>();
        else
            throw ValidationError("--config: key '" + key + "' must be a scalar");
        merged.push_back("--" + key + "=" + text);
    }
    return merged;
}

// ---------------------------------------------------------------------------
// subcommand payloads

json window_scalars(const AngularWindow& w) {
    json payload{{"regime", std::string(to_string(w.regime))}};
    if (w.phi_c) payload["phi_c"] = *w.phi_c;
    if (w.phi_half_width) payload["phi_max"] = *w.phi_half_width;
    if (w.theta_beam) payload["theta_beam"] = *w.theta_beam;
    return payload;
}

std::string run_classify(const MirrorDrive& drive, const DriveFlags& flags, double Omega) {
    if (!(Omega > 0.0)) throw ValidationError("--Omega must be > 0");
    json inputs = flags.echo();
    inputs["Omega"] = Omega;
    json payload;
    const auto p = reduce(drive, Omega);
    if (!p) {
        payload = json{{"regime", std::string(to_string(RegimeId::NoEmission))}};
    } else {
        payload = window_scalars(window(*p));
        payload["r"] = p->r;
        payload["kappa"] = p->kappa;
    }
    return dump_record(make_record(inputs, payload));
}

std::string run_window(const MirrorDrive& drive, const DriveFlags& flags, double Omega,
                       int phi_grid) {
    if (!(Omega > 0.0)) throw ValidationError("--Omega must be > 0");
    if (phi_grid < 2) throw ValidationError("--phi-grid must be >= 2");

    CsvWriter csv;
    csv.comment(std::string(kToolVersion) + " schema=" + std::to_string(kSchemaVersion));
    csv.comment("subcommand=window omega0=" + format_double(flags.omega0) +
                " k0=" + format_double(flags.k0) + " Omega=" + format_double(Omega) +
                " phi_grid=" + std::to_string(phi_grid) +
                (flags.si ? " si=true" : ""));

    const auto p = reduce(drive, Omega);
    const AngularWindow w = p ? window(*p) : AngularWindow{};
    {
        std::string line = "regime=" + std::string(to_string(w.regime));
        if (w.phi_c) line += " phi_c=" + format_double(*w.phi_c);
        if (w.phi_half_width) line += " phi_max=" + format_double(*w.phi_half_width);
        if (w.theta_beam) line += " theta_beam=" + format_double(*w.theta_beam);
        csv.comment(line);
    }
    csv.row({"phi", "theta_lo", "theta_hi"});
    for (int i = 0; i < phi_grid; ++i) {
        const double phi =
            -std::numbers::pi + 2.0 * std::numbers::pi * i / (phi_grid - 1.0);
        if (const auto b = w.bounds(phi))
            csv.row({phi, b->lo, b->hi});
    }
    return csv.str();
}

struct SpectrumFlags {
    int points = 101;
    std::string format = "csv";
    long long oracle_samples = 0;
    std::uint64_t seed = 0;
};

std::string run_spectrum(const MirrorDrive& drive, const DriveFlags& flags,
                         const SpectrumFlags& sf, const QuadFlags& qf) {
    if (sf.points < 3) throw ValidationError("--points must be >= 3");
    if (sf.format != "csv" && sf.format != "json")
        throw ValidationError("--format must be csv or json");
    if (sf.oracle_samples != 0 && sf.oracle_samples < 10000)
        throw ValidationError("--oracle-samples must be 0 or >= 10000");

    const QuadratureConfig cfg = qf.to_config();
    const SpectrumCurve curve = spectrum_sweep(drive, sf.points, cfg);

    std::vector<McEstimate> oracle;
    if (sf.oracle_samples > 0) {
        McConfig mc;
        mc.sample_count = sf.oracle_samples;
        mc.seed = sf.seed;
        oracle.reserve(curve.samples.size());
        for (const auto& s : curve.samples) oracle.push_back(mc_oracle(drive, s.Omega, mc));
    }

    for (const auto& s : curve.samples)
        require_within_tolerance(
            DensityResult{s.P, s.error, s.converged, s.P == 0.0 && s.error == 0.0}, cfg,
            s.Omega);

    const double dimless = drive.d * drive.d * drive.omega0 * drive.omega0 *
                           drive.omega0 * drive.omega0;

    if (sf.format == "json") {
        json inputs = flags.echo();
        inputs["points"] = sf.points;
        inputs["rel_tol"] = qf.rel_tol;
        inputs["abs_tol"] = qf.abs_tol;
        if (sf.oracle_samples > 0) {
            inputs["oracle_samples"] = sf.oracle_samples;
            inputs["seed"] = sf.seed;
        }
        json samples = json::array();
        for (std::size_t i = 0; i < curve.samples.size(); ++i) {
            const auto& s = curve.samples[i];
            json row{{"Omega", s.Omega},
                     {"Omega_over_omega0", s.Omega / drive.omega0},
                     {"P", s.P},
                     {"P_dimless", s.P / dimless},
                     {"regime", std::string(to_string(s.regime))},
                     {"err_estimate", s.error}};
            if (!oracle.empty()) {
                row["mc_estimate"] = oracle[i].estimate;
                row["mc_std_error"] = oracle[i].std_error;
            }
            samples.push_back(std::move(row));
        }
        return dump_record(make_record(inputs, json{{"samples", samples}}));
    }

    CsvWriter csv;
    csv.comment(std::string(kToolVersion) + " schema=" + std::to_string(kSchemaVersion));
    csv.comment("subcommand=spectrum omega0=" + format_double(flags.omega0) +
                " k0=" + format_double(flags.k0) + " d=" + format_double(flags.d) +
                " points=" + std::to_string(sf.points) +
                " rel_tol=" + format_double(qf.rel_tol) +
                " abs_tol=" + format_double(qf.abs_tol) + (flags.si ? " si=true" : ""));
    if (oracle.empty()) {
        csv.row({"Omega", "Omega_over_omega0", "P", "P_dimless", "regime", "err_estimate"});
    } else {
        csv.comment("oracle_samples=" + std::to_string(sf.oracle_samples) +
                    " seed=" + std::to_string(sf.seed));
        csv.row({"Omega", "Omega_over_omega0", "P", "P_dimless", "regime", "err_estimate",
                 "mc_estimate", "mc_std_error"});
    }
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const auto& s = curve.samples[i];
        if (oracle.empty())
            csv.row({s.Omega, s.Omega / drive.omega0, s.P, s.P / dimless,
                     to_string(s.regime), s.error});
        else
            csv.row({s.Omega, s.Omega / drive.omega0, s.P, s.P / dimless,
                     to_string(s.regime), s.error, oracle[i].estimate,
                     oracle[i].std_error});
    }
    return csv.str();
}

std::string run_energy(const MirrorDrive& drive, const DriveFlags& flags,
                       const QuadFlags& qf, int& exit_code) {
    const EnergyReport rep = energy_report(drive, qf.to_config());
    json inputs = flags.echo();
    inputs["rel_tol"] = qf.rel_tol;
    inputs["abs_tol"] = qf.abs_tol;
    const json payload{{"R_numeric", rep.R_numeric},
                       {"R_closed", rep.R_closed},
                       {"N_numeric", rep.N_numeric},
                       {"N_rate", rep.N_rate},
                       {"mean_frequency", rep.mean_frequency},
                       {"relative_mismatch", rep.relative_mismatch},
                       {"err_R", rep.err_R},
                       {"err_N", rep.err_N},
                       {"converged", rep.converged}};
    if (!rep.converged || rep.relative_mismatch > 5e-3) exit_code = kExitConservation;
    return dump_record(make_record(inputs, payload));
}

std::string run_regime_map(double r_max, double kappa_max, int grid, int traj_points) {
    if (!(r_max > 0.0)) throw ValidationError("--r-max must be > 0");
    if (!(kappa_max > 0.0)) throw ValidationError("--kappa-max must be > 0");
    if (grid < 2) throw ValidationError("--grid must be >= 2");
    if (traj_points < 2) throw ValidationError("--traj-points must be >= 2");

    CsvWriter csv;
    csv.comment(std::string(kToolVersion) + " schema=" + std::to_string(kSchemaVersion));
    csv.comment("subcommand=regime-map r_max=" + format_double(r_max) +
                " kappa_max=" + format_double(kappa_max) + " grid=" +
                std::to_string(grid) + " traj_points=" + std::to_string(traj_points));
    csv.row({"record", "class", "Omega", "kappa", "r", "regime"});

    // Grid nodes spanning [0, max] on both axes, row-major in r then kappa.
    for (int j = 0; j < grid; ++j) {
        const double r = j * r_max / (grid - 1.0);
        for (int i = 0; i < grid; ++i) {
            const double kappa = i * kappa_max / (grid - 1.0);
            csv.row({"cell", "", "", kappa, r, to_string(classify({r, kappa}))});
        }
    }

    // Overlay: one drive per trajectory class, omega0 = 1.
    const struct {
        const char* label;
        double k0;
    } classes[] = {{"I", 0.6}, {"II", 0.4}, {"III", 0.2}};
    for (const auto& c : classes) {
        const auto traj = trajectory(MirrorDrive{1.0, c.k0, 1.0}, traj_points);
        for (const auto& v : traj.polyline)
            csv.row({"trajectory", c.label, v.omega, v.kappa, v.r, to_string(v.regime)});
    }
    return csv.str();
}

DeformationSpectrum load_spectrum_file(const std::string& input_path,
                                       const std::string& modes_path) {
    if (input_path.empty() == modes_path.empty())
        throw ValidationError("exactly one of --input or --modes is required");
    const std::string& path = input_path.empty() ? modes_path : input_path;
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }

    try {
        if (!input_path.empty()) {
            return TabulatedDensity{doc.at("q1_axis").get<std::vector<double>>(),
                                    doc.at("q2_axis").get<std::vector<double>>(),
                                    doc.at("omega_axis").get<std::vector<double>>(),
                                    doc.at("density").get<std::vector<double>>()};
        }
        std::vector<DiscreteMode> modes;
        for (const auto& m : doc.at("modes")) {
            modes.push_back(DiscreteMode{
                m.at("amplitude").get<double>(),
                {m.at("q").at(0).get<double>(), m.at("q").at(1).get<double>()},
                m.at("omega").get<double>()});
        }
        return modes;
    } catch (const json::exception& e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

std::string run_general_spectrum(const DeformationSpectrum& spec, const std::string& source,
                                 double Omega, double theta, double phi) {
    if (!(Omega > 0.0)) throw ValidationError("--Omega must be > 0");
    if (!(theta >= 0.0 && theta <= 0.5 * std::numbers::pi))
        throw ValidationError("--theta must lie in [0, pi/2]");
    const double P = angular_power_general(spec, EmissionQuery{Omega, theta, phi});
    const json inputs{{"source", source}, {"Omega", Omega}, {"theta", theta}, {"phi", phi}};
    return dump_record(make_record(inputs, json{{"P", P}}));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"motion-induced radiation from a traveling-wave mirror deformation"};
    app.require_subcommand(1);

    // classify
    DriveFlags cl_drive;
    double cl_Omega = 0.0;
    std::string cl_out, cl_config;
    auto* classify_cmd = app.add_subcommand("classify", "regime of one (drive, Omega)");
    add_drive_flags(classify_cmd, cl_drive, false);
    classify_cmd->add_option("--Omega", cl_Omega, "detected frequency")->required();
    classify_cmd->add_option("--out", cl_out, "output path (default stdout)");
    classify_cmd->add_option("--config", cl_config, "JSON config mirroring the flags");

    // window
    DriveFlags win_drive;
    double win_Omega = 0.0;
    int win_grid = 181;
    std::string win_out, win_config;
    auto* window_cmd = app.add_subcommand("window", "tabulate theta bounds over phi");
    add_drive_flags(window_cmd, win_drive, false);
    window_cmd->add_option("--Omega", win_Omega, "detected frequency")->required();
    window_cmd->add_option("--phi-grid", win_grid, "azimuthal grid size");
    window_cmd->add_option("--out", win_out, "output path (default stdout)");
    window_cmd->add_option("--config", win_config, "JSON config mirroring the flags");

    // spectrum
    DriveFlags sp_drive;
    SpectrumFlags sp_flags;
    QuadFlags sp_quad;
    std::string sp_out, sp_config;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "P(Omega) sweep over (0, omega0)");
    add_drive_flags(spectrum_cmd, sp_drive, true);
    spectrum_cmd->add_option("--points", sp_flags.points, "grid size");
    spectrum_cmd->add_option("--format", sp_flags.format, "csv or json");
    spectrum_cmd->add_option("--oracle-samples", sp_flags.oracle_samples,
                             "per-point Monte Carlo cross-check (0 = off)");
    spectrum_cmd->add_option("--seed", sp_flags.seed, "oracle stream seed");
    add_quad_flags(spectrum_cmd, sp_quad);
    spectrum_cmd->add_option("--out", sp_out, "output path (default stdout)");
    spectrum_cmd->add_option("--config", sp_config, "JSON config mirroring the flags");

    // energy
    DriveFlags en_drive;
    QuadFlags en_quad;
    std::string en_out, en_config;
    auto* energy_cmd = app.add_subcommand("energy", "radiated energy vs the closed form");
    add_drive_flags(energy_cmd, en_drive, true);
    add_quad_flags(energy_cmd, en_quad);
    energy_cmd->add_option("--out", en_out, "output path (default stdout)");
    energy_cmd->add_option("--config", en_config, "JSON config mirroring the flags");

    // regime-map
    double rm_rmax = 3.0, rm_kmax = 3.0;
    int rm_grid = 200, rm_traj = 16;
    std::string rm_out, rm_config;
    auto* map_cmd = app.add_subcommand("regime-map", "regime partition of the (kappa, r) plane");
    map_cmd->add_option("--r-max", rm_rmax, "r extent");
    map_cmd->add_option("--kappa-max", rm_kmax, "kappa extent");
    map_cmd->add_option("--grid", rm_grid, "cells per axis");
    map_cmd->add_option("--traj-points", rm_traj, "polyline samples per segment");
    map_cmd->add_option("--out", rm_out, "output path (default stdout)");
    map_cmd->add_option("--config", rm_config, "JSON config mirroring the flags");

    // general-spectrum
    std::string gs_input, gs_modes, gs_out, gs_config;
    double gs_Omega = 0.0, gs_theta = 0.0, gs_phi = 0.0;
    auto* general_cmd =
        app.add_subcommand("general-spectrum", "pointwise power for a deformation spectrum");
    general_cmd->add_option("--input", gs_input, "tabulated density JSON file");
    general_cmd->add_option("--modes", gs_modes, "discrete modes JSON file");
    general_cmd->add_option("--Omega", gs_Omega, "detected frequency")->required();
    general_cmd->add_option("--theta", gs_theta, "polar angle");
    general_cmd->add_option("--phi", gs_phi, "azimuth");
    general_cmd->add_option("--out", gs_out, "output path (default stdout)");
    general_cmd->add_option("--config", gs_config, "JSON config mirroring the flags");

    // Pre-scan for the subcommand name and a --config path so the file
    // contents can be appended as flags (command line wins) before the
    // one real parse; required() flags may then be satisfied from the file.
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        std::string config_path;
        std::string sub_name;
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (sub_name.empty() && !args[i].empty() && args[i][0] != '-')
                sub_name = args[i];
            if (args[i] == "--config" && i + 1 < args.size())
                config_path = args[i + 1];
            else if (args[i].rfind("--config=", 0) == 0)
                config_path = args[i].substr(9);
        }
        if (!config_path.empty() && !sub_name.empty()) {
            if (CLI::App* sub = app.get_subcommand_no_throw(sub_name)) {
                std::vector<std::string> sub_args(args.begin() + 1, args.end());
                args = merge_config(*sub, sub_args, config_path);
                args.insert(args.begin(), sub_name);
            }
        }

        try {
            std::vector<std::string> reversed(args.rbegin(), args.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e);  // --help
            std::cerr << "error: " << e.what() << "\n";
            return kExitValidation;
        }
        CLI::App* active = app.get_subcommands().front();

        int exit_code = 0;
        std::string out_text, out_path;
        if (active == classify_cmd) {
            out_text = run_classify(cl_drive.to_drive(), cl_drive, cl_Omega);
            out_path = cl_out;
        } else if (active == window_cmd) {
            out_text = run_window(win_drive.to_drive(), win_drive, win_Omega, win_grid);
            out_path = win_out;
        } else if (active == spectrum_cmd) {
            out_text = run_spectrum(sp_drive.to_drive(), sp_drive, sp_flags, sp_quad);
            out_path = sp_out;
        } else if (active == energy_cmd) {
            out_text = run_energy(en_drive.to_drive(), en_drive, en_quad, exit_code);
            out_path = en_out;
        } else if (active == map_cmd) {
            out_text = run_regime_map(rm_rmax, rm_kmax, rm_grid, rm_traj);
            out_path = rm_out;
        } else if (active == general_cmd) {
            const auto spec = load_spectrum_file(gs_input, gs_modes);
            out_text = run_general_spectrum(
                spec, gs_input.empty() ? "modes" : "tabulated", gs_Omega, gs_theta, gs_phi);
            out_path = gs_out;
        }
        try {
            write_output(out_path, out_text);
        } catch (const std::runtime_error& e) {
            throw ValidationError(e.what());
        }
        return exit_code;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ToleranceError& e) {
        std::cerr << "tolerance error: " << e.what() << "\n";
        return kExitTolerance;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
