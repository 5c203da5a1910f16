#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ilat/analysis.hpp"
#include "ilat/dense.hpp"
#include "ilat/fock.hpp"
#include "ilat/gaussian.hpp"
#include "ilat/io.hpp"
#include "ilat/lattice.hpp"
#include "ilat/models.hpp"
#include "ilat/stabilizer.hpp"
#include "ilat/run.hpp"
#include "ilat/toric.hpp"

namespace fs = std::filesystem;
using namespace ilat;

namespace {

constexpr int kExitCompute = 1;
constexpr int kExitConfig = 2;
constexpr int kExitOracle = 3;

void apply_threads(const Config* cfg, int cli_threads) {
#ifdef _OPENMP
    int threads = 0;
    if (const char* env = std::getenv("ILAT_THREADS")) threads = std::atoi(env);
    if (cfg && cfg->has("compute", "threads"))
        threads = int(cfg->get_int("compute", "threads"));
    if (cli_threads > 0) threads = cli_threads;
    if (threads > 0) omp_set_num_threads(threads);
#else
    (void)cfg;
    (void)cli_threads;
#endif
}

Axis parse_axis(const std::string& s) {
    if (s == "x") return Axis::X;
    if (s == "y") return Axis::Y;
    throw ConfigError("axis must be 'x' or 'y', got '" + s + "'");
}

int cmd_compute(const std::string& config_path, const std::string& out_dir,
                std::optional<std::uint64_t> seed, const std::string& table_path,
                int threads) {
    Config cfg = Config::parse_file(config_path);
    apply_threads(&cfg, threads);
    ModelBundle model = build_model(cfg, seed);

    const fs::path out = out_dir.empty()
                             ? fs::path(cfg.get_string("output", "dir", "."))
                             : fs::path(out_dir);
    fs::create_directories(out);

    BuildOptions opts;
    opts.parallel = cfg.get_bool("compute", "parallel", true);
    opts.stencil_tol = cfg.get_double("compute", "stencil_tol", 1e-10);

    const auto t0 = std::chrono::steady_clock::now();
    BuildResult result;
    // reuse a cached entropy table when its fingerprint matches the state
    fs::path cache = table_path.empty() ? out / "table.tsv" : fs::path(table_path);
    bool cache_used = false;
    if (fs::exists(cache)) {
        std::ifstream in(cache);
        int gx = 0, gy = 0;
        try {
            InformationTable cached = read_table_tsv(in, gx, gy);
            if (cached.fingerprint() == model.backend->fingerprint() &&
                gx == model.geometry.grid_nx && gy == model.geometry.grid_ny) {
                result.table = std::move(cached);
                cache_used = true;
            }
        } catch (const std::exception& e) {
            std::cerr << "note: ignoring unreadable table cache " << cache << ": "
                      << e.what() << "\n";
        }
    }
    result = cache_used ? build_lattice(*model.backend, model.geometry, model.plan,
                                        opts, std::move(result.table))
                        : build_lattice(*model.backend, model.geometry, model.plan, opts);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (cfg.get_bool("analysis", "decomposition_check", false)) {
        const double residual = decomposition_check(result.lattice, result.table);
        std::cout << "decomposition residual " << format_value(residual) << "\n";
    }

    {
        std::ofstream f(out / "lattice.tsv");
        write_lattice_tsv(f, result.lattice);
    }
    {
        std::ofstream f(out / "table.tsv");
        write_table_tsv(f, result.table, model.geometry.grid_nx, model.geometry.grid_ny);
    }
    {
        std::ofstream f(out / "manifest");
        char hash[32], fp[32];
        std::snprintf(hash, sizeof(hash), "%016llx",
                      static_cast<unsigned long long>(cfg.hash()));
        std::snprintf(fp, sizeof(fp), "%016llx",
                      static_cast<unsigned long long>(model.backend->fingerprint()));
        f << "ilat-version 1\n";
        f << "config " << config_path << "\n";
        f << "config-hash " << hash << "\n";
        f << "model " << model.kind << "\n";
        f << "backend " << model.backend->name() << "\n";
        f << "state-fingerprint " << fp << "\n";
        f << "subsystems " << result.lattice.entries.size() << "\n";
        f << "cache-hit " << (cache_used ? 1 : 0) << "\n";
        f << "seconds " << format_value(seconds) << "\n";
    }
    std::cout << "wrote " << (out / "lattice.tsv").string() << " ("
              << result.lattice.entries.size() << " subsystems, total "
              << format_value(result.lattice.total()) << " bits)\n";
    return 0;
}

int cmd_reduce(const std::string& lattice_path, const std::string& kind,
               const std::string& region_str, const std::string& axis_str,
               const std::string& out_dir) {
    std::ifstream in(lattice_path);
    if (!in) throw ConfigError(lattice_path + ": cannot open");
    InformationLattice lat = read_lattice_tsv(in);
    SubsystemIndex region(0, 0, lat.grid_nx - 1, lat.grid_ny - 1);
    if (lat.plan.kind != PlanKind::FullFamily) region = lat.plan.region;
    if (!region_str.empty()) region = parse_region(region_str, "--region");
    const Axis axis = parse_axis(axis_str);
    const fs::path out = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
    fs::create_directories(out);
    if (kind == "multiscale") {
        std::ofstream f(out / "multiscale.tsv");
        write_multiscale_tsv(f, info_per_multiscale(lat, region));
        std::cout << "wrote " << (out / "multiscale.tsv").string() << "\n";
    } else if (kind == "quasi1d") {
        std::ofstream f(out / "quasi1d.tsv");
        write_chain_tsv(f, quasi1d_from_lattice(lat, region, axis));
        std::cout << "wrote " << (out / "quasi1d.tsv").string() << "\n";
    } else if (kind == "per-scale") {
        std::ofstream f(out / "per_scale.tsv");
        write_per_scale_tsv(f, quasi1d_per_scale(quasi1d_from_lattice(lat, region, axis)));
        std::cout << "wrote " << (out / "per_scale.tsv").string() << "\n";
    } else if (kind == "tee") {
        TeeResult tee = tee_extract(lat);
        std::cout << "gamma_top " << format_value(tee.gamma_top) << "\n";
        std::cout << "gamma_sum " << format_value(tee.gamma_sum) << "\n";
    } else {
        throw ConfigError("unknown reduce kind '" + kind + "'");
    }
    return 0;
}

int cmd_fit(const std::string& input_path, const std::string& kind, int window_lo,
            int window_hi, const std::string& out_path) {
    std::ifstream in(input_path);
    if (!in) throw ConfigError(input_path + ": cannot open");
    FitResult fit;
    std::string label = kind;
    if (kind == "decay") {
        fit = fit_decay_length(read_per_scale_tsv(in), window_lo, window_hi);
    } else if (kind == "power") {
        fit = fit_power_law(read_per_scale_tsv(in), window_lo, window_hi);
    } else if (kind == "alpha") {
        fit = edge_alpha(read_per_scale_tsv(in), window_lo, window_hi);
    } else if (kind == "direction") {
        Direction d = propagation_direction(read_multiscale_tsv(in));
        fit.estimate = d.v(0);
        fit.intercept = d.v(1);
        fit.flagged = d.degenerate;
        if (d.degenerate) fit.note = "degenerate principal axes";
    } else {
        throw ConfigError("unknown fit kind '" + kind + "'");
    }
    std::ofstream f(out_path);
    write_fit_tsv(f, label, fit);
    std::cout << label << " estimate " << format_value(fit.estimate) << " companion "
              << format_value(fit.intercept)
              << (fit.flagged ? " FLAGGED " + fit.note : "") << "\n";
    return 0;
}

int cmd_oracle(const std::string& config_path, double tol) {
    Config cfg = Config::parse_file(config_path);
    ModelBundle model = build_model(cfg, std::nullopt);

    std::unique_ptr<EntropyBackend> reference = build_dense_reference(cfg);

    auto indices =
        enumerate_rectangles(model.geometry.grid_nx, model.geometry.grid_ny, model.plan);
    double worst = 0;
    SubsystemIndex worst_idx;
    for (const auto& idx : indices) {
        const SiteSet sites = model.geometry.sites(idx);
        const double fast = model.backend->information(sites);
        const double dense = reference->information(sites);
        if (std::abs(fast - dense) > worst) {
            worst = std::abs(fast - dense);
            worst_idx = idx;
        }
    }
    std::cout << "oracle " << model.backend->name() << " vs " << reference->name()
              << ": " << indices.size() << " subsystems, max |delta| = "
              << format_value(worst) << " at " << worst_idx.to_string() << "\n";
    if (worst >= tol) {
        std::cerr << "oracle mismatch: " << format_value(worst) << " >= "
                  << format_value(tol) << "\n";
        return kExitOracle;
    }
    return 0;
}

int cmd_export_plot(const std::string& lattice_path, const std::string& out_path) {
    std::ifstream in(lattice_path);
    if (!in) throw ConfigError(lattice_path + ": cannot open");
    InformationLattice lat = read_lattice_tsv(in);
    std::ofstream f(out_path);
    f << "# ilat v1\n# kind plot\n# columns x y lx ly weight\n";
    for (const auto& [idx, v] : lat.entries)
        f << format_value(idx.nx + idx.lx / 2.0) << "\t"
          << format_value(idx.ny + idx.ly / 2.0) << "\t" << idx.lx << "\t" << idx.ly
          << "\t" << format_value(v) << "\n";
    std::cout << "wrote " << out_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"information lattice toolkit"};
    app.require_subcommand(1);

    std::string config_path, out_dir, table_path;
    std::uint64_t seed_value = 0;
    int threads = 0;
    auto* compute = app.add_subcommand("compute", "build a lattice from a config");
    compute->add_option("config", config_path, "run config file")->required();
    compute->add_option("--out", out_dir, "output directory (default: output.dir)");
    auto* seed_opt = compute->add_option("--seed", seed_value, "override model seed");
    compute->add_option("--table", table_path, "entropy table cache to reuse");
    compute->add_option("--threads", threads, "OpenMP thread count");

    std::string lattice_path, reduce_kind, region_str, axis_str = "x";
    auto* reduce = app.add_subcommand("reduce", "reduce a lattice file");
    reduce->add_option("lattice", lattice_path, "lattice.tsv input")->required();
    reduce->add_option("--kind", reduce_kind, "multiscale|quasi1d|per-scale|tee")
        ->required();
    reduce->add_option("--region", region_str, "'nx ny lx ly' restriction");
    reduce->add_option("--axis", axis_str, "x|y (quasi-1D reductions)");
    reduce->add_option("--out", out_dir, "output directory");

    std::string fit_input, fit_kind, fit_out = "fit.tsv";
    int window_lo = 0, window_hi = 1 << 20;
    auto* fit = app.add_subcommand("fit", "fit a reduced table");
    fit->add_option("input", fit_input, "per_scale.tsv or multiscale.tsv")->required();
    fit->add_option("--kind", fit_kind, "decay|power|alpha|direction")->required();
    fit->add_option("--window-lo", window_lo, "smallest scale included");
    fit->add_option("--window-hi", window_hi, "largest scale included");
    fit->add_option("--out", fit_out, "fit report path");

    double oracle_tol = 1e-9;
    auto* oracle = app.add_subcommand("oracle", "compare a backend against dense");
    oracle->add_option("config", config_path, "run config file")->required();
    oracle->add_option("--tol", oracle_tol, "max allowed |delta|");

    std::string plot_out = "plot.tsv";
    auto* plot = app.add_subcommand("export-plot", "x/y/weight columns for plotting");
    plot->add_option("lattice", lattice_path, "lattice.tsv input")->required();
    plot->add_option("--out", plot_out, "plot data path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : 0;
    }

    try {
        if (compute->parsed()) {
            std::optional<std::uint64_t> seed;
            if (seed_opt->count()) seed = seed_value;
            return cmd_compute(config_path, out_dir, seed, table_path, threads);
        }
        if (reduce->parsed())
            return cmd_reduce(lattice_path, reduce_kind, region_str, axis_str, out_dir);
        if (fit->parsed())
            return cmd_fit(fit_input, fit_kind, window_lo, window_hi, fit_out);
        if (oracle->parsed()) return cmd_oracle(config_path, oracle_tol);
        if (plot->parsed()) return cmd_export_plot(lattice_path, plot_out);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitCompute;
    }
    return 0;
}
