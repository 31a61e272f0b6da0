#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "casimir/force.hpp"
#include "casimir/geometry.hpp"
#include "casimir/zero_point.hpp"

namespace casimir {

/// Pass window against the published values. A passes inside
/// [A_min, A_max] (when check_A); b passes inside [b_min, b_max] unless
/// b_outside is set, in which case it must fall OUTSIDE the window (used by
/// the discrete-spacetime preset, whose point is that no cubic force law
/// emerges).
struct Reference {
    double A_ref = 0.0;
    double b_ref = 0.0;
    double A_min = 0.0;
    double A_max = 0.0;
    double b_min = 0.0;
    double b_max = 0.0;
    bool check_A = true;
    bool b_outside = false;

    bool passes(const PowerLawFit& fit) const;
};

struct ExperimentPreset {
    std::string name;
    LatticeGeometry geom = LatticeGeometry::chain(2);
    int n_start = 1;
    int n_end = 2;
    int step = 1;
    ChopSpec chop;
    FitConvention convention = FitConvention::two_d_per_length;
    SpacetimeTruncation truncation;
    bool magnitude_fit = false;
    std::optional<Reference> reference;
};

struct ExperimentResult {
    ExperimentPreset preset;
    EnergyCurve curve;
    PowerLawFit fit;
    double wall_time_seconds = 0.0;
    std::optional<bool> pass;  // set only when the preset carries a reference
};

/// The paper-matching presets, ordered by name:
///   1d-base, 1d-chop2, 1d-chop5, 1d-large, 2d-diagonal, 2d-spacetime,
///   2d-square, 2d-square-chop2, 2d-triangular.
const std::vector<ExperimentPreset>& catalog();

/// Throws std::invalid_argument for names not in the catalog.
const ExperimentPreset& find_preset(const std::string& name);

ExperimentResult run_preset(const std::string& name);
ExperimentResult run_custom(const ExperimentPreset& preset);

/// Schema-versioned JSON persistence. Doubles survive the round trip
/// bit-exactly. load_result throws std::runtime_error on missing files and
/// schema mismatches.
void persist_result(const ExperimentResult& result, const std::filesystem::path& path);
ExperimentResult load_result(const std::filesystem::path& path);

/// Preset catalogs as JSON arrays (same schema as the preset block of a
/// persisted result).
void save_catalog(std::span<const ExperimentPreset> presets,
                  const std::filesystem::path& path);
std::vector<ExperimentPreset> load_catalog(const std::filesystem::path& path);

/// `preset,A,b,A_ref,b_ref,pass,wall_time` rows.
std::string report_csv(std::span<const ExperimentResult> results);
/// Human-readable aligned table of the same report.
std::string report_table(std::span<const ExperimentResult> results);

nlohmann::json preset_to_json(const ExperimentPreset& preset);
ExperimentPreset preset_from_json(const nlohmann::json& j);
nlohmann::json result_to_json(const ExperimentResult& result);
ExperimentResult result_from_json(const nlohmann::json& j);

}  // namespace casimir
