#include "casimir/spectrum.hpp"

#include <stdexcept>

#include "mode_tables.hpp"

namespace casimir {

ModeSpectrum mode_spectrum(const LatticeGeometry& geom, int gap_steps) {
    if (gap_steps < 1) {
        throw std::invalid_argument("mode_spectrum: gap_steps must be >= 1");
    }
    const auto table = detail::make_mode_table(geom, gap_steps);
    ModeSpectrum spectrum;
    spectrum.family = geom.family();
    spectrum.r_max = table.r_count;
    spectrum.s_max = table.s_count;
    spectrum.frequencies.resize(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) {
        spectrum.frequencies[i] = 2.0 * table.half_omega(i);
    }
    return spectrum;
}

}  // namespace casimir
