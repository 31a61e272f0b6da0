#pragma once

#include <vector>

#include "casimir/geometry.hpp"

namespace casimir {

/// Finite set of allowed frequencies for a bounded region, in units c/d.
/// Frequencies are stored in lexicographic order: barrier-direction index r
/// outer (1..r_max), perpendicular index s inner (1..s_max). The chain has a
/// single index (s_max = 1).
struct ModeSpectrum {
    LatticeFamily family = LatticeFamily::chain;
    std::vector<double> frequencies;
    int r_max = 0;
    int s_max = 0;
};

/// Full unchopped spectrum of a region spanning gap_steps perpendicular
/// steps. Spacetime families have dedicated energy operations and are
/// rejected here.
ModeSpectrum mode_spectrum(const LatticeGeometry& geom, int gap_steps);

}  // namespace casimir
