#include "casimir/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace casimir {

namespace {

constexpr int kSchemaVersion = 1;

Reference band(double a_ref, double b_ref, double a_rel_tol, double b_abs_tol) {
    Reference r;
    r.A_ref = a_ref;
    r.b_ref = b_ref;
    r.A_min = a_ref * (1.0 - a_rel_tol);
    r.A_max = a_ref * (1.0 + a_rel_tol);
    r.b_min = b_ref - b_abs_tol;
    r.b_max = b_ref + b_abs_tol;
    return r;
}

std::vector<ExperimentPreset> build_catalog() {
    std::vector<ExperimentPreset> presets;

    const auto chain_preset = [](std::string name, int total, double chop_fraction,
                                 Reference ref) {
        ExperimentPreset p;
        p.name = std::move(name);
        p.geom = LatticeGeometry::chain(total);
        p.n_start = 600;
        p.n_end = 705;
        p.step = 5;
        if (chop_fraction > 0.0) {
            p.chop = ChopSpec::top_fraction(chop_fraction, ChopAxis::perpendicular);
        }
        p.convention = FitConvention::one_d_with_pi;
        p.reference = ref;
        return p;
    };

    // Unchopped runs hold the published values to 2% on A and 0.01 on b.
    presets.push_back(chain_preset("1d-base", 17620, 0.0, band(24.11, 2.00, 0.02, 0.01)));

    // Chopped fits are hyper-sensitive to the truncation bookkeeping; the
    // windows are correspondingly loose (A within [0.7, 1.4] of the
    // published value or order-of-magnitude only, b within wider bands).
    {
        Reference ref = band(33.53, 1.945, 0.0, 0.05);
        ref.A_min = 0.7 * 33.53;
        ref.A_max = 1.4 * 33.53;
        presets.push_back(chain_preset("1d-chop2", 17620, 0.002, ref));
    }
    {
        Reference ref;
        ref.A_ref = 759.0;
        ref.b_ref = 1.42;
        ref.A_min = 75.9;
        ref.A_max = 7590.0;
        ref.b_min = 1.30;
        ref.b_max = 1.55;
        presets.push_back(chain_preset("1d-chop5", 17620, 0.005, ref));
    }

    presets.push_back(chain_preset("1d-large", 90000, 0.0, band(24.54, 1.997, 0.02, 0.01)));

    const auto plane_preset = [](std::string name, LatticeGeometry geom, Reference ref) {
        ExperimentPreset p;
        p.name = std::move(name);
        p.geom = geom;
        p.n_start = 150;
        p.n_end = 190;
        p.step = 5;
        p.convention = FitConvention::two_d_per_length;
        p.reference = ref;
        return p;
    };

    presets.push_back(plane_preset("2d-diagonal", LatticeGeometry::square_diagonal(860, 860),
                                   band(20.90, 3.00, 0.02, 0.01)));

    {
        // The fully discrete spacetime cannot reproduce the Casimir scaling:
        // pass iff the fitted exponent differs from 3 by more than 0.5. The
        // energy alternates with barrier parity, so the magnitude of the
        // slope is fitted.
        ExperimentPreset p;
        p.name = "2d-spacetime";
        p.geom = LatticeGeometry::spacetime_square(860, 860);
        p.n_start = 150;
        p.n_end = 190;
        p.step = 5;
        p.convention = FitConvention::two_d_per_length;
        p.truncation = SpacetimeTruncation{4.001, 2.0};
        p.magnitude_fit = true;
        Reference ref;
        ref.A_ref = 0.0;
        ref.b_ref = 3.00;
        ref.check_A = false;
        ref.b_min = 2.5;
        ref.b_max = 3.5;
        ref.b_outside = true;
        p.reference = ref;
        presets.push_back(p);
    }

    presets.push_back(plane_preset("2d-square", LatticeGeometry::square(860, 860),
                                   band(20.89, 3.00, 0.02, 0.01)));

    {
        ExperimentPreset p = plane_preset("2d-square-chop2", LatticeGeometry::square(860, 860),
                                          band(0.13, 4.22, 0.0, 0.0));
        p.chop = ChopSpec::top_fraction(0.002, ChopAxis::barrier);
        Reference& ref = *p.reference;
        ref.check_A = false;
        ref.b_min = 3.9;
        ref.b_max = 4.5;
        presets.push_back(p);
    }

    presets.push_back(plane_preset("2d-triangular", LatticeGeometry::triangular(967, 967),
                                   band(20.91, 3.00, 0.02, 0.01)));
    return presets;
}

}  // namespace

bool Reference::passes(const PowerLawFit& fit) const {
    bool ok = true;
    if (check_A) ok = ok && fit.A >= A_min && fit.A <= A_max;
    if (b_outside) {
        ok = ok && (fit.b < b_min || fit.b > b_max);
    } else {
        ok = ok && fit.b >= b_min && fit.b <= b_max;
    }
    return ok;
}

const std::vector<ExperimentPreset>& catalog() {
    static const std::vector<ExperimentPreset> presets = build_catalog();
    return presets;
}

const ExperimentPreset& find_preset(const std::string& name) {
    for (const auto& preset : catalog()) {
        if (preset.name == name) return preset;
    }
    throw std::invalid_argument("unknown preset: " + name);
}

ExperimentResult run_preset(const std::string& name) {
    return run_custom(find_preset(name));
}

ExperimentResult run_custom(const ExperimentPreset& preset) {
    const auto start = std::chrono::steady_clock::now();

    ExperimentResult result;
    result.preset = preset;
    result.curve = energy_curve(preset.geom, preset.n_start, preset.n_end, preset.step,
                                preset.chop, preset.truncation);
    const auto derivs = spline_derivative(result.curve);
    result.fit =
        fit_power_law(derivs, preset.geom, preset.convention, preset.magnitude_fit);

    const auto stop = std::chrono::steady_clock::now();
    result.wall_time_seconds = std::chrono::duration<double>(stop - start).count();
    if (preset.reference) result.pass = preset.reference->passes(result.fit);
    return result;
}

namespace {

nlohmann::json reference_to_json(const Reference& ref) {
    return {{"A_ref", ref.A_ref},   {"b_ref", ref.b_ref}, {"A_min", ref.A_min},
            {"A_max", ref.A_max},   {"b_min", ref.b_min}, {"b_max", ref.b_max},
            {"check_A", ref.check_A}, {"b_outside", ref.b_outside}};
}

Reference reference_from_json(const nlohmann::json& j) {
    Reference ref;
    ref.A_ref = j.at("A_ref").get<double>();
    ref.b_ref = j.at("b_ref").get<double>();
    ref.A_min = j.at("A_min").get<double>();
    ref.A_max = j.at("A_max").get<double>();
    ref.b_min = j.at("b_min").get<double>();
    ref.b_max = j.at("b_max").get<double>();
    ref.check_A = j.at("check_A").get<bool>();
    ref.b_outside = j.at("b_outside").get<bool>();
    return ref;
}

}  // namespace

nlohmann::json preset_to_json(const ExperimentPreset& preset) {
    nlohmann::json j{
        {"name", preset.name},
        {"family", family_name(preset.geom.family())},
        {"Nx", preset.geom.nx()},
        {"Ny", preset.geom.ny()},
        {"n_start", preset.n_start},
        {"n_end", preset.n_end},
        {"step", preset.step},
        {"chop",
         {{"fraction", preset.chop.fraction},
          {"applies_to", chop_axis_name(preset.chop.applies_to)}}},
        {"convention", fit_convention_name(preset.convention)},
        {"truncation",
         {{"barrier_divisor", preset.truncation.barrier_divisor},
          {"perp_divisor", preset.truncation.perp_divisor}}},
        {"magnitude_fit", preset.magnitude_fit},
    };
    if (preset.reference) {
        j["reference"] = reference_to_json(*preset.reference);
    } else {
        j["reference"] = nullptr;
    }
    return j;
}

ExperimentPreset preset_from_json(const nlohmann::json& j) {
    ExperimentPreset preset;
    preset.name = j.at("name").get<std::string>();
    preset.geom = LatticeGeometry::make(family_from_name(j.at("family").get<std::string>()),
                                        j.at("Nx").get<int>(), j.at("Ny").get<int>());
    preset.n_start = j.at("n_start").get<int>();
    preset.n_end = j.at("n_end").get<int>();
    preset.step = j.at("step").get<int>();
    const auto& chop = j.at("chop");
    const double fraction = chop.at("fraction").get<double>();
    const ChopAxis axis = chop_axis_from_name(chop.at("applies_to").get<std::string>());
    if (fraction > 0.0) preset.chop = ChopSpec::top_fraction(fraction, axis);
    preset.convention = fit_convention_from_name(j.at("convention").get<std::string>());
    const auto& trunc = j.at("truncation");
    preset.truncation.barrier_divisor = trunc.at("barrier_divisor").get<double>();
    preset.truncation.perp_divisor = trunc.at("perp_divisor").get<double>();
    preset.magnitude_fit = j.at("magnitude_fit").get<bool>();
    if (!j.at("reference").is_null()) {
        preset.reference = reference_from_json(j.at("reference"));
    }
    return preset;
}

nlohmann::json result_to_json(const ExperimentResult& result) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : result.curve.samples) {
        samples.push_back({s.n, s.energy});
    }
    nlohmann::json j{
        {"schema_version", kSchemaVersion},
        {"preset", preset_to_json(result.preset)},
        {"fit", fit_to_json(result.fit, result.preset.geom)},
        {"samples", samples},
        {"wall_time_seconds", result.wall_time_seconds},
    };
    if (result.pass) {
        j["pass"] = *result.pass;
    } else {
        j["pass"] = nullptr;
    }
    return j;
}

ExperimentResult result_from_json(const nlohmann::json& j) {
    const int version = j.at("schema_version").get<int>();
    if (version != kSchemaVersion) {
        throw std::runtime_error("result schema version mismatch: file has " +
                                 std::to_string(version) + ", expected " +
                                 std::to_string(kSchemaVersion));
    }
    ExperimentResult result;
    result.preset = preset_from_json(j.at("preset"));

    const auto& fit = j.at("fit");
    result.fit.A = fit.at("A").get<double>();
    result.fit.b = fit.at("b").get<double>();
    result.fit.intercept = fit.at("intercept").get<double>();
    result.fit.slope = fit.at("slope").get<double>();
    result.fit.max_abs_residual = fit.at("max_abs_residual").get<double>();
    result.fit.convention = fit_convention_from_name(fit.at("convention").get<std::string>());
    result.fit.magnitude_fit = fit.at("magnitude_fit").get<bool>();

    result.curve.geom = result.preset.geom;
    result.curve.chop = result.preset.chop;
    result.curve.truncation = result.preset.truncation;
    for (const auto& s : j.at("samples")) {
        result.curve.samples.push_back({s.at(0).get<int>(), s.at(1).get<double>()});
    }
    result.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    if (!j.at("pass").is_null()) result.pass = j.at("pass").get<bool>();
    return result;
}

void persist_result(const ExperimentResult& result, const std::filesystem::path& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << result_to_json(result).dump(2) << '\n';
    if (!os) throw std::runtime_error("write failed: " + path.string());
}

ExperimentResult load_result(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open result file: " + path.string());
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed result file " + path.string() + ": " + e.what());
    }
    return result_from_json(j);
}

void save_catalog(std::span<const ExperimentPreset> presets,
                  const std::filesystem::path& path) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& preset : presets) j.push_back(preset_to_json(preset));
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path.string());
    os << j.dump(2) << '\n';
}

std::vector<ExperimentPreset> load_catalog(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open catalog file: " + path.string());
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed catalog file " + path.string() + ": " + e.what());
    }
    std::vector<ExperimentPreset> presets;
    for (const auto& entry : j) presets.push_back(preset_from_json(entry));
    return presets;
}

namespace {

std::string format_sig(double v, int digits = 6) {
    std::ostringstream ss;
    ss << std::setprecision(digits) << v;
    return ss.str();
}

}  // namespace

std::string report_csv(std::span<const ExperimentResult> results) {
    std::string out = "preset,A,b,A_ref,b_ref,pass,wall_time\n";
    for (const auto& r : results) {
        out += r.preset.name;
        out += ',' + format_sig(r.fit.A, 10);
        out += ',' + format_sig(r.fit.b, 10);
        const auto& ref = r.preset.reference;
        out += ',';
        out += ref && ref->check_A ? format_sig(ref->A_ref) : "-";
        out += ',';
        out += ref ? format_sig(ref->b_ref) : "-";
        out += ',';
        out += r.pass ? (*r.pass ? "yes" : "no") : "-";
        out += ',' + format_sig(r.wall_time_seconds, 3);
        out += '\n';
    }
    return out;
}

std::string report_table(std::span<const ExperimentResult> results) {
    std::ostringstream ss;
    ss << std::left << std::setw(18) << "preset" << std::right << std::setw(12) << "A"
       << std::setw(10) << "b" << std::setw(10) << "A_ref" << std::setw(8) << "b_ref"
       << std::setw(6) << "pass" << std::setw(12) << "wall_time" << '\n';
    for (const auto& r : results) {
        const auto& ref = r.preset.reference;
        ss << std::left << std::setw(18) << r.preset.name << std::right << std::setw(12)
           << format_sig(r.fit.A) << std::setw(10) << format_sig(r.fit.b) << std::setw(10)
           << (ref && ref->check_A ? format_sig(ref->A_ref) : "-") << std::setw(8)
           << (ref ? format_sig(ref->b_ref) : "-") << std::setw(6)
           << (r.pass ? (*r.pass ? "yes" : "no") : "-") << std::setw(12)
           << format_sig(r.wall_time_seconds, 3) << '\n';
    }
    return ss.str();
}

}  // namespace casimir
