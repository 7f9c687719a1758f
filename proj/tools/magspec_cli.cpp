// Batch front-end: reads a TOML/JSON config and writes reproducible
// CSV/JSON experiment outputs. Exit codes: 0 success, 2 config error,
// 3 numeric failure. stdout carries only the written file paths.

#include <CLI11.hpp>
#include <complex>
#include <iostream>
#include <string>
#include <vector>

#include "magspec/analysis.hpp"
#include "magspec/config.hpp"
#include "magspec/errors.hpp"
#include "magspec/io.hpp"
#include "magspec/operators.hpp"
#include "magspec/spectral.hpp"

namespace {

using namespace magspec;

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    double b = 0.0;
    bool b_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int workers = 0;
};

RunConfig load(const CliOptions& opt) {
    RunConfig cfg = load_config(opt.config_path);
    if (!opt.out_dir.empty()) cfg.out_dir = opt.out_dir;
    if (opt.seed_set) cfg.seed = opt.seed;
    if (opt.workers > 0) cfg.workers = opt.workers;
    return cfg;
}

RunStamp stamp_of(const RunConfig& cfg) {
    return {cfg.hash(), cfg.seed, ""};
}

void check_b_window(const RunConfig& cfg, double b) {
    const double lo = PartitionOfUnity::min_b(*cfg.model_spec().grid);
    if (b != 0.0 && (b < lo || b > 1.0))
        throw ConfigError("b = " + std::to_string(b) +
                          " outside admissible window [" + std::to_string(lo) +
                          ", 1] (or 0)");
}

// Hamiltonian plus b-family phase for any model kind.
struct BuiltModel {
    KernelOperator H;
    PhaseFunction phi;
};

BuiltModel build_model(const RunConfig& cfg, double b) {
    const ModelSpec spec = cfg.model_spec();
    if (cfg.kind == "mag_schrodinger") {
        // b enters the field directly: B = B0 + b * frak_b.
        const MagneticField B0 = cfg.magnetic_field();
        const MagneticField db = cfg.perturbation_field();
        MagneticField B;
        B.dim = 2;
        B.sup_norm = B0.sup_norm + b * db.sup_norm;
        auto base = B0.component;
        auto pert = db.component;
        B.component = [base, pert, b](int j, int k, const Point& x) {
            return base(j, k, x) + b * pert(j, k, x);
        };
        return {build_mag_schrodinger(spec, B, cfg.a_shift), cfg.phase()};
    }
    const HarperModel model = build_harper(spec, cfg.phase());
    return {b == 0.0 ? model.H : twist(model.H, model.phi, b), model.phi};
}

int cmd_spectrum(const CliOptions& opt) {
    const RunConfig cfg = load(opt);
    const double b = opt.b_set ? opt.b : 0.0;
    check_b_window(cfg, b);
    const Spectrum S = eigvalsh(build_model(cfg, b).H);
    const std::string path =
        cfg.out_dir + "/spectrum_b" + format_number(b) + ".json";
    write_file(path, spectrum_to_json(S, stamp_of(cfg), b));
    std::cout << path << "\n";
    return 0;
}

int cmd_sweep(const CliOptions& opt) {
    const RunConfig cfg = load(opt);
    const ModelSpec spec = cfg.model_spec();
    const PhaseFunction phi = cfg.phase();
    const RunStamp stamp = stamp_of(cfg);
    const std::vector<double> b_grid =
        default_b_grid(*spec.grid, cfg.sweep.b_min, cfg.sweep.b_max,
                       cfg.sweep.points_per_decade);

    const auto emit = [&](const SweepTable& table, const std::string& name,
                          double beta_ref) {
        const std::string csv_path = cfg.out_dir + "/sweep_" + name + ".csv";
        write_file(csv_path, sweep_to_csv(table, stamp));
        std::cout << csv_path << "\n";
        const std::string fit_path = cfg.out_dir + "/fit_" + name + ".json";
        write_file(fit_path, fit_to_json(fit_holder(table, beta_ref), stamp));
        std::cout << fit_path << "\n";
    };

    if (cfg.sweep.quantity == "hausdorff") {
        const SweepTable table =
            sweep_hausdorff(spec, phi, b_grid, 0.0, cfg.workers);
        emit(table, "hausdorff", std::min(0.5, spec.alpha_model() / 2.0));
    } else if (cfg.sweep.quantity == "defect") {
        Complex z;
        if (!cfg.sweep.z.empty()) {
            z = cfg.sweep.z.front();
        } else {
            const Spectrum S = eigvalsh(build_harper(spec, phi).H);
            z = Complex(S.min() - 1.0, 0.0);
        }
        const SweepTable table =
            sweep_defect(spec, phi, z, b_grid, cfg.workers);
        emit(table, "defect", spec.alpha_model() / 2.0);
    } else if (cfg.sweep.quantity == "theorem2") {
        const Theorem2Tables tables =
            theorem2_compare(spec, cfg.magnetic_field(),
                             cfg.perturbation_field(), cfg.a_shift, b_grid,
                             cfg.workers);
        emit(tables.resolvent_gap, "resolvent_gap", 0.5);
        emit(tables.rb_gap, "rb_gap", 1.0);
    } else if (cfg.sweep.quantity == "alpha0") {
        std::vector<double> M_grid = cfg.sweep.M;
        if (M_grid.empty()) {
            const double D = spec.grid->diameter();
            M_grid = {D / 16.0, D / 8.0, D / 4.0, D / 2.0};
        }
        const Alpha0Report report =
            alpha0_pipeline(spec, phi, b_grid, M_grid, cfg.workers);
        const std::string path = cfg.out_dir + "/alpha0.csv";
        write_file(path, alpha0_to_csv(report, stamp));
        std::cout << path << "\n";
    } else {
        throw ConfigError("sweep.quantity must be hausdorff|defect|theorem2|"
                          "alpha0, got " + cfg.sweep.quantity);
    }
    return 0;
}

int cmd_certify(const CliOptions& opt) {
    const RunConfig cfg = load(opt);
    const ModelSpec spec = cfg.model_spec();
    const PhaseFunction phi = cfg.phase();
    if (!opt.b_set) throw ConfigError("certify requires --b");
    check_b_window(cfg, opt.b);

    const HarperModel model = build_harper(spec, phi);
    const Spectrum S = eigvalsh(model.H);
    std::vector<Complex> zs = cfg.sweep.z;
    if (zs.empty()) zs = cfg.default_z(S.min());

    const PartitionOfUnity P = build_partition(spec.grid, opt.b);
    std::vector<DefectReport> rows;
    std::vector<std::string> status;
    for (const Complex& z : zs) {
        DefectReport r;
        std::string st = "ok";
        try {
            r = defect(model.H, phi, opt.b, z, P, spec.alpha_model());
        } catch (const std::exception& e) {
            r.b = opt.b;
            r.z = z;
            st = std::string("error: ") + e.what();
            for (char& ch : st)
                if (ch == ',' || ch == '\n') ch = ';';
        }
        rows.push_back(r);
        status.push_back(st);
    }
    const std::string path = cfg.out_dir + "/certify.csv";
    write_file(path, defect_reports_to_csv(rows, status, stamp_of(cfg)));
    std::cout << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"magspec: spectra of Harper-like and magnetic Schrodinger "
                 "operators"};
    app.require_subcommand(1);

    CliOptions opt;
    const auto add_common = [&](CLI::App* sub, bool with_b) {
        sub->add_option("--config", opt.config_path, "TOML or JSON config")
            ->required();
        sub->add_option("--out", opt.out_dir, "output directory override");
        sub->add_option("--seed", opt.seed, "seed override")
            ->each([&](const std::string&) { opt.seed_set = true; });
        sub->add_option("--workers", opt.workers, "sweep worker count");
        if (with_b)
            sub->add_option("--b", opt.b, "field intensity")
                ->each([&](const std::string&) { opt.b_set = true; });
    };

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "eigenvalues of the model at one b");
    add_common(spectrum, true);
    CLI::App* sweep = app.add_subcommand(
        "sweep", "b-sweep of the configured quantity, with a Hoelder fit");
    add_common(sweep, false);
    CLI::App* certify = app.add_subcommand(
        "certify", "resolvent-set defect certificates at one b");
    add_common(certify, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) return cmd_spectrum(opt);
        if (sweep->parsed()) return cmd_sweep(opt);
        if (certify->parsed()) return cmd_certify(opt);
    } catch (const magspec::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const magspec::NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
