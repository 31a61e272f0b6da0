// Command-line front end: preset runs, custom sweeps, dispersion surfaces and
// the combined comparison report.
//
// Exit codes: 0 success (and reference pass), 1 usage or runtime error,
// 2 reference-comparison failure.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/dispersion.hpp"
#include "casimir/experiments.hpp"
#include "casimir/summation.hpp"

namespace fs = std::filesystem;
using namespace casimir;

namespace {

std::string sig6(double v) {
    std::ostringstream ss;
    ss << std::setprecision(6) << v;
    return ss.str();
}

fs::path ensure_dir(const std::string& out) {
    fs::path dir = out.empty() ? fs::current_path() : fs::path(out);
    fs::create_directories(dir);
    return dir;
}

void write_result_files(const ExperimentResult& result, const fs::path& dir) {
    const std::string base = result.preset.name;
    persist_result(result, dir / (base + ".result.json"));

    std::ofstream csv(dir / (base + ".curve.csv"));
    write_curve_csv(csv, result.curve);

    std::ofstream meta(dir / (base + ".curve.meta.json"));
    auto sidecar = curve_metadata(result.curve);
    sidecar["preset"] = result.preset.name;
    sidecar["threads"] = worker_threads();
    meta << sidecar.dump(2) << '\n';
}

void print_fit_line(const ExperimentResult& result) {
    std::cout << result.preset.name << ": A=" << sig6(result.fit.A)
              << " b=" << sig6(result.fit.b);
    if (result.pass) {
        const auto& ref = *result.preset.reference;
        std::cout << " pass=" << (*result.pass ? "yes" : "no");
        if (ref.check_A) std::cout << " (ref A=" << sig6(ref.A_ref);
        else std::cout << " (ref A=-";
        std::cout << ", b=" << sig6(ref.b_ref) << ")";
    } else {
        std::cout << " pass=-";
    }
    std::cout << "  [" << sig6(result.wall_time_seconds) << " s, "
              << result.curve.samples.size() << " samples]\n";
}

int cmd_list() {
    std::cout << std::left << std::setw(18) << "name" << std::setw(18) << "family"
              << std::right << std::setw(8) << "Nx" << std::setw(8) << "Ny" << std::setw(14)
              << "n range" << std::setw(8) << "chop" << std::setw(10) << "A_ref"
              << std::setw(8) << "b_ref" << '\n';
    for (const auto& p : catalog()) {
        std::ostringstream range;
        range << p.n_start << ".." << p.n_end << "/" << p.step;
        const auto& ref = p.reference;
        std::cout << std::left << std::setw(18) << p.name << std::setw(18)
                  << family_name(p.geom.family()) << std::right << std::setw(8)
                  << p.geom.nx() << std::setw(8) << p.geom.ny() << std::setw(14)
                  << range.str() << std::setw(8) << sig6(p.chop.fraction) << std::setw(10)
                  << (ref && ref->check_A ? sig6(ref->A_ref) : "-") << std::setw(8)
                  << (ref ? sig6(ref->b_ref) : "-") << '\n';
    }
    return 0;
}

int cmd_run(const std::string& name, const std::string& out) {
    const ExperimentResult result = run_preset(name);
    write_result_files(result, ensure_dir(out));
    print_fit_line(result);
    return result.pass && !*result.pass ? 2 : 0;
}

int cmd_sweep(const std::string& family_str, int nx, int ny, int n_start, int n_end,
              int step, double chop_fraction, const std::string& name,
              const std::string& out) {
    const LatticeFamily family = family_from_name(family_str);
    ExperimentPreset preset;
    preset.name = name.empty() ? "sweep-" + std::string(family_name(family)) : name;
    preset.geom = LatticeGeometry::make(family, nx, ny);
    preset.n_start = n_start;
    preset.n_end = n_end;
    preset.step = step;
    if (chop_fraction > 0.0) {
        preset.chop = ChopSpec::top_fraction(
            chop_fraction,
            preset.geom.is_two_d() ? ChopAxis::barrier : ChopAxis::perpendicular);
    }
    preset.convention = preset.geom.is_two_d() ? FitConvention::two_d_per_length
                                               : FitConvention::one_d_with_pi;
    preset.magnitude_fit = preset.geom.family() == LatticeFamily::spacetime_square;

    const ExperimentResult result = run_custom(preset);
    write_result_files(result, ensure_dir(out));
    print_fit_line(result);
    return 0;
}

int cmd_surface(const std::string& family_str, int resolution, const std::string& out) {
    const LatticeFamily family = family_from_name(family_str);
    const auto grid = dispersion_grid(family, resolution);
    fs::path path(out);
    if (out.empty() || fs::is_directory(path)) {
        path = ensure_dir(out) / ("surface-" + std::string(family_name(family)) + ".csv");
    }
    std::ofstream os(path);
    if (!os) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    write_grid_csv(os, grid);
    std::cout << "wrote " << grid.size() << " rows to " << path.string() << '\n';
    return 0;
}

int cmd_compare(const std::string& catalog_file, const std::string& out) {
    std::vector<ExperimentPreset> presets;
    if (catalog_file.empty()) {
        presets = catalog();
    } else {
        presets = load_catalog(catalog_file);
    }
    std::vector<ExperimentResult> results;
    results.reserve(presets.size());
    bool all_pass = true;
    for (const auto& preset : presets) {
        results.push_back(run_custom(preset));
        if (results.back().pass && !*results.back().pass) all_pass = false;
    }
    std::cout << report_table(results);
    if (!out.empty()) {
        const fs::path dir = ensure_dir(out);
        std::ofstream csv(dir / "report.csv");
        csv << report_csv(results);
        for (const auto& result : results) write_result_files(result, dir);
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Casimir force pipeline for discrete scalar-field lattices"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file");

    unsigned threads = 0;
    std::string out;
    std::string preset_name;
    std::string family = "square";
    std::string sweep_name;
    std::string catalog_file;
    int nx = 2, ny = 2, n_start = 1, n_end = 2, step = 1, resolution = 100;
    double chop_fraction = 0.0;
    bool all = false;

    auto* list = app.add_subcommand("list", "List the preset catalog");

    auto* run = app.add_subcommand("run", "Run a named preset and write JSON+CSV results");
    run->add_option("name", preset_name, "Preset name (see `list`)")->required();
    run->add_option("--out", out, "Output directory")->envname("CASIMIR_OUTPUT_DIR");
    run->add_option("--threads", threads, "Worker threads (0 = hardware)");

    auto* sweep = app.add_subcommand("sweep", "Run a custom energy sweep and force fit");
    sweep->add_option("--family", family,
                      "chain|square|square-diagonal|triangular|spacetime-chain|spacetime-square")
        ->required();
    sweep->add_option("--Nx", nx, "Periodic steps along the barrier (2D families)");
    sweep->add_option("--Ny", ny, "Steps between the end barriers")->required();
    sweep->add_option("--n-start", n_start, "First gap width")->required();
    sweep->add_option("--n-end", n_end, "Last gap width")->required();
    sweep->add_option("--step", step, "Gap increment")->required();
    sweep->add_option("--chop", chop_fraction, "Fraction of top modes to remove");
    sweep->add_option("--name", sweep_name, "Result base name");
    sweep->add_option("--out", out, "Output directory")->envname("CASIMIR_OUTPUT_DIR");
    sweep->add_option("--threads", threads, "Worker threads (0 = hardware)");

    auto* surface = app.add_subcommand("surface", "Export a dispersion/group-velocity grid");
    surface->add_option("--family", family, "Lattice family")->required();
    surface->add_option("--resolution", resolution, "Samples per zone axis")->required();
    surface->add_option("--out", out, "Output file or directory")
        ->envname("CASIMIR_OUTPUT_DIR");

    auto* compare = app.add_subcommand("compare", "Run presets and print the report table");
    compare->add_flag("--all", all, "Run the full catalog (default)");
    compare->add_option("--catalog", catalog_file, "JSON preset catalog to run instead");
    compare->add_option("--out", out, "Output directory for report.csv and results")
        ->envname("CASIMIR_OUTPUT_DIR");
    compare->add_option("--threads", threads, "Worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    set_worker_threads(threads);
    try {
        if (list->parsed()) return cmd_list();
        if (run->parsed()) return cmd_run(preset_name, out);
        if (sweep->parsed()) {
            return cmd_sweep(family, nx, ny, n_start, n_end, step, chop_fraction,
                             sweep_name, out);
        }
        if (surface->parsed()) return cmd_surface(family, resolution, out);
        if (compare->parsed()) return cmd_compare(catalog_file, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
