// Command-line verifier: single-instance checks, decomposition extraction,
// fuzz campaigns, Theta-class calculus, and grid checks, all speaking JSON.
//
// Exit codes: 0 = verdict true / zero failures, 1 = verdict false /
// failures present, 2 = input error. Reports are byte-identical for
// identical configs and seeds; timing goes to the human digest on stderr.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "heyde/engine.hpp"
#include "heyde/json_io.hpp"
#include "heyde/polyfd.hpp"
#include "heyde/version.hpp"

namespace {

using heyde::io::json;

json base_report(const std::string& command, const json& cfg = json::object()) {
    return json{{"schema", heyde::io::kSchemaVersion},
                {"version", heyde::kVersion},
                {"command", command},
                {"config", cfg}};
}

int emit(const json& report, const std::string& out_path, const std::string& digest,
         int exit_code) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report to " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    std::cerr << digest << "\n";
    return exit_code;
}

bool is_input_error(const heyde::Error& e) {
    using namespace heyde;
    return dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const InvalidGroupSpec*>(&e) ||
           dynamic_cast<const NotAHomomorphism*>(&e) ||
           dynamic_cast<const NotAnAutomorphism*>(&e) ||
           dynamic_cast<const NotAProbability*>(&e) ||
           dynamic_cast<const GroupMismatch*>(&e) ||
           dynamic_cast<const SupportViolation*>(&e) ||
           dynamic_cast<const InvalidThetaInput*>(&e) ||
           dynamic_cast<const GridEmpty*>(&e);
}

heyde::Endomorphism coeff_or(const heyde::FiniteAbelianGroup& g, const json& cfg,
                             const char* section, const char* name,
                             const heyde::Endomorphism& fallback) {
    if (cfg.contains(section) && cfg[section].contains(name)) {
        return heyde::io::endo_from_json(g, cfg[section][name]);
    }
    return fallback;
}

std::vector<heyde::RealVector> grid_from_config(const json& cfg, std::size_t dim) {
    if (!cfg.contains("grid")) return heyde::default_grid(dim);
    const json& gj = cfg["grid"];
    if (gj.contains("points")) {
        std::vector<heyde::RealVector> grid;
        for (const auto& p : gj["points"]) {
            heyde::RealVector point;
            for (const auto& v : p) point.push_back(heyde::io::number_from_json(v));
            if (point.size() != dim) throw heyde::ConfigError("grid point dimension mismatch");
            grid.push_back(std::move(point));
        }
        return grid;
    }
    const double lo = heyde::io::number_from_json(gj.value("min", json(-2.0)));
    const double hi = heyde::io::number_from_json(gj.value("max", json(2.0)));
    const double step = heyde::io::number_from_json(gj.value("step", json(0.5)));
    if (step <= 0 || hi < lo) throw heyde::ConfigError("bad grid range");
    std::vector<double> base;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-12)) + 1;
    for (std::size_t k = 0; k < count; ++k) base.push_back(lo + step * static_cast<double>(k));
    std::vector<heyde::RealVector> grid{{}};
    for (std::size_t d = 0; d < dim; ++d) {
        std::vector<heyde::RealVector> next;
        for (const auto& prefix : grid) {
            for (double v : base) {
                auto point = prefix;
                point.push_back(v);
                next.push_back(std::move(point));
            }
        }
        grid = std::move(next);
    }
    return grid;
}

int run_group_info(const json& cfg, const std::string& out) {
    json report = base_report("group-info", cfg);
    const heyde::FiniteAbelianGroup g = heyde::io::group_from_json(
        cfg.contains("group") ? cfg["group"] : cfg);
    const auto doubling = heyde::Endomorphism::scalar(g, 2);
    report["factors"] = g.factors();
    report["order"] = g.order();
    report["order2_free"] = g.is_order2_free();
    report["two_torsion_count"] = doubling.kernel().size();
    report["verdict"] = g.is_order2_free();
    return emit(report, out,
                "group of order " + std::to_string(g.order()) +
                    (g.is_order2_free() ? ", no elements of order 2"
                                        : ", has elements of order 2"),
                g.is_order2_free() ? 0 : 1);
}

int run_check(const json& cfg, const std::string& which, double tol_cf,
              const std::string& out) {
    json report = base_report("check", cfg);
    report["which"] = which;
    const heyde::HeydeInstance inst = heyde::io::instance_from_json(cfg);
    const auto& g = inst.group;
    const auto identity = heyde::Endomorphism::identity(g);
    const auto one_plus = identity.add(inst.alpha);
    const auto twice_alpha = inst.alpha.scaled(2);
    const auto twice = heyde::Endomorphism::scalar(g, 2);

    bool verdict = false;
    if (which == "symmetry") {
        verdict = heyde::check_conditional_symmetry(inst);
    } else if (which == "heyde-eq") {
        const auto res = heyde::check_heyde_equation(inst, tol_cf);
        verdict = res.holds;
        report["residual"] = res.max_residual;
        if (!res.holds) {
            report["witness"] = {{"u", heyde::to_coord_string(g.element_at(res.worst_u))},
                                 {"v", heyde::to_coord_string(g.element_at(res.worst_v))}};
        }
    } else if (which == "sd-eq") {
        const auto a1 = coeff_or(g, cfg, "coeffs", "a1", one_plus);
        const auto a2 = coeff_or(g, cfg, "coeffs", "a2", twice_alpha);
        const auto b1 = coeff_or(g, cfg, "coeffs", "b1", twice);
        const auto b2 = coeff_or(g, cfg, "coeffs", "b2", one_plus);
        const auto res = heyde::check_sd_equation(inst.mu1, inst.mu2, a1, a2, b1, b2, tol_cf);
        verdict = res.holds;
        report["residual"] = res.max_residual;
        if (!res.holds) {
            report["witness"] = {{"u", heyde::to_coord_string(g.element_at(res.worst_u))},
                                 {"v", heyde::to_coord_string(g.element_at(res.worst_v))}};
        }
    } else if (which == "independence") {
        const auto b1 = coeff_or(g, cfg, "forms", "b1", one_plus);
        const auto b2 = coeff_or(g, cfg, "forms", "b2", twice_alpha);
        const auto g1 = coeff_or(g, cfg, "forms", "g1", twice);
        const auto g2 = coeff_or(g, cfg, "forms", "g2", one_plus);
        verdict = heyde::check_independence(inst.mu1, inst.mu2, b1, b2, g1, g2);
    } else {
        throw heyde::ConfigError("unknown check: " + which);
    }
    report["verdict"] = verdict;
    return emit(report, out, which + ": " + (verdict ? "holds" : "fails"), verdict ? 0 : 1);
}

int run_decompose(const json& cfg, double tol_cf, const std::string& out) {
    json report = base_report("decompose", cfg);
    const heyde::HeydeInstance inst = heyde::io::instance_from_json(cfg);
    try {
        const heyde::Decomposition dec = heyde::decompose_symmetric_instance(inst, tol_cf);
        report.update(heyde::io::decomposition_to_json(dec));
        return emit(report, out,
                    "decomposed: |supp(omega)| = " +
                        std::to_string(dec.omega.support().size()) +
                        ", |K| = " + std::to_string(dec.kernel.size()),
                    0);
    } catch (const heyde::Error& e) {
        if (is_input_error(e)) throw;
        report["verdict"] = heyde::error_kind(e);
        report["message"] = e.what();
        return emit(report, out, std::string("decomposition rejected: ") + e.what(), 1);
    }
}

int run_replay(const json& cfg, double tol_cf, const std::string& out) {
    json report = base_report("replay", cfg);
    const heyde::HeydeInstance inst = heyde::io::instance_from_json(cfg);
    try {
        const auto rep = heyde::replay_reduction(inst.mu1, inst.mu2, inst.alpha, tol_cf);
        report.update(heyde::io::reduction_report_to_json(rep, inst.group));
        const bool verdict = rep.identities_hold && rep.a_b_vanish_on_h;
        report["verdict"] = verdict;
        return emit(report, out,
                    std::string("reduction identities ") + (verdict ? "hold" : "fail"),
                    verdict ? 0 : 1);
    } catch (const heyde::Error& e) {
        if (is_input_error(e)) throw;
        report["verdict"] = heyde::error_kind(e);
        report["message"] = e.what();
        return emit(report, out, std::string("replay rejected: ") + e.what(), 1);
    }
}

int run_fuzz(const json& cfg, std::uint64_t seed, std::uint64_t trials,
             std::uint64_t max_order, const std::string& out) {
    json report = base_report("fuzz", cfg);
    try {
        const heyde::FuzzReport rep = heyde::fuzz_decomposition(seed, trials, max_order);
        report.update(heyde::io::fuzz_report_to_json(rep));
        const bool ok = rep.failures.empty();
        return emit(report, out,
                    "fuzz: " + std::to_string(rep.round_trip_passes) + " round trips, " +
                        std::to_string(rep.negative_passes) + " negative checks, " +
                        std::to_string(rep.failures.size()) + " failures",
                    ok ? 0 : 1);
    } catch (const heyde::GenerationExhausted& e) {
        report["verdict"] = heyde::error_kind(e);
        report["message"] = e.what();
        return emit(report, out, std::string("fuzz aborted: ") + e.what(), 1);
    }
}

int run_theta(const json& cfg, const std::string& which, const std::string& out) {
    json report = base_report("theta", cfg);
    report["which"] = which;
    const heyde::ThetaParams p = heyde::io::theta_from_json(
        cfg.contains("p") ? cfg["p"] : cfg);
    if (which == "validate") {
        const bool verdict = heyde::theta_validate(p);
        report["params"] = heyde::io::theta_to_json(p);
        report["verdict"] = verdict;
        return emit(report, out, std::string("theta membership: ") + (verdict ? "yes" : "no"),
                    verdict ? 0 : 1);
    }
    if (which == "convolve") {
        if (!cfg.contains("q")) throw heyde::ConfigError("convolve needs \"q\"");
        const heyde::ThetaParams q = heyde::io::theta_from_json(cfg["q"]);
        const heyde::ThetaParams r = heyde::theta_convolve(p, q);
        const bool verdict = heyde::theta_validate(r);
        report["result"] = heyde::io::theta_to_json(r);
        report["verdict"] = verdict;
        return emit(report, out,
                    std::string("convolution parameters ") +
                        (verdict ? "stay in the class" : "leave the class"),
                    verdict ? 0 : 1);
    }
    if (which == "probe") {
        const double cutoff =
            cfg.contains("cutoff") ? heyde::io::number_from_json(cfg["cutoff"]) : 1e-6;
        const auto res = heyde::theta_pd_probe(p, {}, cutoff);
        report["params"] = heyde::io::theta_to_json(p);
        report["min_density"] = res.min_density;
        report["arg_t"] = res.arg_t;
        report["arg_m"] = res.arg_m;
        report["verdict"] = res.nonnegative;
        return emit(report, out,
                    "min density " + std::to_string(res.min_density),
                    res.nonnegative ? 0 : 1);
    }
    throw heyde::ConfigError("unknown theta operation: " + which);
}

int run_continuum_check(const json& cfg, double tol_grid, const std::string& out) {
    json report = base_report("continuum-check", cfg);
    const heyde::FiniteAbelianGroup g =
        heyde::io::group_from_json(heyde::io::json(cfg.at("group")));
    const heyde::StructuredDistribution sd1 = heyde::io::structured_from_json(g, cfg.at("sd1"));
    const heyde::StructuredDistribution sd2 = heyde::io::structured_from_json(g, cfg.at("sd2"));
    if (!cfg.contains("alpha")) throw heyde::ConfigError("missing \"alpha\"");
    const json& aj = cfg["alpha"];
    heyde::RealMatrix areal;
    for (const auto& row : aj.at("a")) {
        heyde::RealVector r;
        for (const auto& v : row) r.push_back(heyde::io::number_from_json(v));
        areal.push_back(std::move(r));
    }
    const heyde::Endomorphism ag = heyde::io::endo_from_json(g, aj.at("g"));
    const auto grid = grid_from_config(cfg, sd1.gaussian.dim());
    const auto res = heyde::check_heyde_equation_grid(sd1, sd2, areal, ag, grid);
    const bool verdict = res.max_residual <= tol_grid;
    report["max_residual"] = res.max_residual;
    report["tolerance"] = tol_grid;
    report["argmax"] = {{"s1", res.worst_s1},
                        {"s2", res.worst_s2},
                        {"h1", heyde::to_coord_string(res.worst_h1)},
                        {"h2", heyde::to_coord_string(res.worst_h2)}};
    report["verdict"] = verdict;
    return emit(report, out, "max residual " + std::to_string(res.max_residual),
                verdict ? 0 : 1);
}

int run_main(int argc, char** argv) {
    CLI::App app{"verifier for conditional-symmetry characterizations on finite Abelian groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", heyde::kVersion);

    std::string config_path, out_path, which;
    double tol_cf = 1e-9, tol_grid = 1e-9;
    std::uint64_t seed = 0, trials = 0, max_order = 0;
    bool seed_set = false, trials_set = false, max_order_set = false;

    auto add_common = [&](CLI::App* cmd, bool config_required = true) {
        auto* opt = cmd->add_option("--config", config_path, "JSON config file");
        if (config_required) opt->required();
        cmd->add_option("--out", out_path, "write the JSON report here instead of stdout");
    };

    auto* cmd_group = app.add_subcommand("group-info", "order, torsion and duality facts");
    add_common(cmd_group);

    auto* cmd_check = app.add_subcommand("check", "single-instance predicate checks");
    add_common(cmd_check);
    cmd_check->add_option("--which", which, "symmetry|heyde-eq|sd-eq|independence")
        ->required();
    cmd_check->add_option("--tol-cf", tol_cf, "tolerance for cf equations");

    auto* cmd_dec = app.add_subcommand("decompose", "extract omega, shifts and kernel");
    add_common(cmd_dec);
    cmd_dec->add_option("--tol-cf", tol_cf, "nonvanishing threshold");

    auto* cmd_replay = app.add_subcommand("replay", "finite-difference reduction replay");
    add_common(cmd_replay);
    cmd_replay->add_option("--tol-cf", tol_cf, "residual tolerance");

    auto* cmd_fuzz = app.add_subcommand("fuzz", "seeded round-trip campaign");
    add_common(cmd_fuzz, /*config_required=*/false);
    cmd_fuzz->add_option("--seed", seed, "campaign seed")->each([&](const std::string&) {
        seed_set = true;
    });
    cmd_fuzz->add_option("--trials", trials, "number of trials")->each([&](const std::string&) {
        trials_set = true;
    });
    cmd_fuzz->add_option("--max-order", max_order, "largest group order")
        ->each([&](const std::string&) { max_order_set = true; });

    auto* cmd_theta = app.add_subcommand("theta", "class membership and calculus on R x Z(2)");
    add_common(cmd_theta);
    cmd_theta->add_option("--which", which, "validate|convolve|probe")->required();

    auto* cmd_cont = app.add_subcommand("continuum-check", "grid check on R^n x G");
    add_common(cmd_cont);
    cmd_cont->add_option("--tol-grid", tol_grid, "residual tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        // Usage problems are input errors; --help and --version stay 0.
        return code == 0 ? 0 : 2;
    }

    const auto started = std::chrono::steady_clock::now();
    std::string command;
    int code = 2;
    try {
        json cfg = json::object();
        if (!config_path.empty()) cfg = heyde::io::load_config(config_path);

        if (cmd_group->parsed()) {
            command = "group-info";
            code = run_group_info(cfg, out_path);
        } else if (cmd_check->parsed()) {
            command = "check";
            code = run_check(cfg, which, tol_cf, out_path);
        } else if (cmd_dec->parsed()) {
            command = "decompose";
            code = run_decompose(cfg, tol_cf, out_path);
        } else if (cmd_replay->parsed()) {
            command = "replay";
            code = run_replay(cfg, tol_cf, out_path);
        } else if (cmd_fuzz->parsed()) {
            command = "fuzz";
            if (!seed_set) {
                if (!cfg.contains("seed")) throw heyde::ConfigError("fuzz needs a seed");
                seed = cfg["seed"].get<std::uint64_t>();
            }
            if (!trials_set) {
                if (!cfg.contains("trials")) throw heyde::ConfigError("fuzz needs trials");
                trials = cfg["trials"].get<std::uint64_t>();
            }
            if (!max_order_set) {
                if (!cfg.contains("max_order")) throw heyde::ConfigError("fuzz needs max_order");
                max_order = cfg["max_order"].get<std::uint64_t>();
            }
            if (max_order < 3) throw heyde::ConfigError("max_order must be >= 3");
            code = run_fuzz(cfg, seed, trials, max_order, out_path);
        } else if (cmd_theta->parsed()) {
            command = "theta";
            code = run_theta(cfg, which, out_path);
        } else if (cmd_cont->parsed()) {
            command = "continuum-check";
            code = run_continuum_check(cfg, tol_grid, out_path);
        }
    } catch (const heyde::Error& e) {
        json report = base_report(command.empty() ? "error" : command);
        report["error"] = heyde::error_kind(e);
        report["message"] = e.what();
        return emit(report, out_path, std::string("error: ") + e.what(),
                    is_input_error(e) ? 2 : 1);
    } catch (const json::exception& e) {
        json report = base_report(command.empty() ? "error" : command);
        report["error"] = "ConfigError";
        report["message"] = e.what();
        return emit(report, out_path, std::string("error: ") + e.what(), 2);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cerr << "elapsed " << elapsed << " ms\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_main(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << "\n";
        return 2;
    } catch (...) {
        std::cerr << "fatal: unknown error\n";
        return 2;
    }
}
