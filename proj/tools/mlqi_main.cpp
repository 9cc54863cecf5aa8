#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mlqi/commands.hpp"

namespace {

int run(const CLI::App& app, const std::string& format, const std::string& out_file,
        const mlqi::OutputRecord& rec) {
    (void)app;
    const std::string text = format == "json" ? mlqi::to_json(rec) : mlqi::to_csv(rec);
    if (out_file.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_file, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file: " << out_file << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mlqi: multilevel Gaussian quasi-interpolation of periodic functions"};
    app.require_subcommand(1);
    // global options (--format, --out, evaluation controls) may follow the subcommand
    app.fallthrough();

    std::string format = "csv";
    std::string out_file;
    mlqi::EvalSpec spec;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", out_file, "write output to a file instead of stdout");
    app.add_option("--window", spec.window_R, "kernel cutoff radius in grid spacings");
    app.add_option("--eta", spec.eta, "spectral weight cutoff");
    app.add_option("--grid", spec.eval_points, "sup-norm sample count");
    app.add_option("--max-freq", spec.max_freq, "output frequency cap");

    CLI::App* table1 = app.add_subcommand("table1", "per-level errors for the built-in targets");

    CLI::App* single = app.add_subcommand("single", "multilevel run on one target");
    int m = -1, l0 = 0, levels = 0;
    std::string mode_name = "spectral", target_name, target_file;
    bool early_stop = false;
    single->add_option("--m", m, "cosine target frequency");
    single->add_option("--target", target_name, "named target: c<m> or expcos");
    single->add_option("--target-file", target_file, "cosine-series CSV file");
    single->add_option("--l0", l0, "level-one grid exponent (h = 1/2^l0)");
    single->add_option("--levels", levels, "refinement levels")->required();
    single->add_option("--mode", mode_name, "spectral or sampled")
        ->check(CLI::IsMember({"spectral", "sampled"}));
    single->add_flag("--early-stop", early_stop, "stop once sup_error < 1e-14");

    CLI::App* coeffs = app.add_subcommand("coeffs", "truncation coefficient tables");
    int cm = 0, cell = 0, clevels = 0;
    coeffs->add_option("--m", cm, "cosine target frequency")->required();
    coeffs->add_option("--ell", cell, "level-one grid exponent")->required();
    coeffs->add_option("--levels", clevels, "refinement levels")->required();

    CLI::App* bounds = app.add_subcommand("bounds", "constants and inequality scans");
    int pmax = 0;
    bounds->add_option("--pmax", pmax, "deepest level to scan")->required();

    CLI::App* theta = app.add_subcommand("theta", "theta function evaluation");
    double z = 0.0, q = 0.0;
    theta->add_option("--z", z, "argument")->required();
    theta->add_option("--q", q, "nome, |q| < 1")->required();

    CLI::App* bound = app.add_subcommand("bound", "convergence bound evaluation");
    double bs = 0.0, bt = 0.0, bigB = 10.0;
    int bp = 0;
    bound->add_option("--s", bs, "target smoothness order")->required();
    bound->add_option("--t", bt, "tail split order, 1/2 < t < s")->required();
    bound->add_option("--p", bp, "level")->required();
    bound->add_option("--big-b", bigB, "envelope constant B");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table1) return run(app, format, out_file, mlqi::cmd_table1(spec));
        if (*single) {
            mlqi::Target target;
            if (!target_file.empty()) {
                target = mlqi::make_file_target(target_file);
            } else if (!target_name.empty()) {
                if (target_name == "expcos")
                    target = mlqi::make_expcos_target();
                else if (target_name.size() > 1 && target_name[0] == 'c')
                    target = mlqi::make_cosine_target(std::stoi(target_name.substr(1)));
                else
                    throw std::invalid_argument("unknown target: " + target_name);
            } else if (m >= 0) {
                target = mlqi::make_cosine_target(m);
            } else {
                throw std::invalid_argument("requires --m, --target or --target-file");
            }
            const auto mode =
                mode_name == "sampled" ? mlqi::RunMode::sampled : mlqi::RunMode::spectral;
            return run(app, format, out_file,
                       mlqi::cmd_single(target, l0, levels, mode, spec, early_stop));
        }
        if (*coeffs) return run(app, format, out_file, mlqi::cmd_coeffs(cm, cell, clevels, spec));
        if (*bounds) return run(app, format, out_file, mlqi::cmd_bounds(pmax));
        if (*theta) return run(app, format, out_file, mlqi::cmd_theta(z, q));
        if (*bound) return run(app, format, out_file, mlqi::cmd_bound_eval(bs, bt, bp, bigB));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
