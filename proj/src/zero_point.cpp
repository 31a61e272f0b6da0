#include "casimir/zero_point.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "casimir/summation.hpp"
#include "mode_tables.hpp"

namespace casimir {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sum_table(const detail::ModeTable& table) {
    return deterministic_sum(table.size(),
                             [&table](std::size_t i) { return table.half_omega(i); });
}

int chopped_barrier_limit(int nx, const ChopSpec& chop) {
    const int limit = static_cast<int>(std::floor((1.0 - chop.fraction) * nx));
    if (limit < 1) {
        throw std::invalid_argument("chop removes the entire barrier-direction range");
    }
    return limit;
}

void validate_chop(const LatticeGeometry& geom, const ChopSpec& chop) {
    if (!chop.active()) return;
    if (geom.is_spacetime()) {
        throw std::invalid_argument("chopping is not defined for spacetime families");
    }
    const ChopAxis expected = geom.is_two_d() ? ChopAxis::barrier : ChopAxis::perpendicular;
    if (chop.applies_to != expected) {
        throw std::invalid_argument(
            std::string("chop axis does not match the family: ") +
            std::string(family_name(geom.family())) + " truncates the " +
            std::string(chop_axis_name(expected)) + " index");
    }
}

}  // namespace

std::string_view chop_axis_name(ChopAxis axis) {
    return axis == ChopAxis::perpendicular ? "perpendicular" : "barrier";
}

ChopAxis chop_axis_from_name(std::string_view name) {
    if (name == "perpendicular") return ChopAxis::perpendicular;
    if (name == "barrier") return ChopAxis::barrier;
    throw std::invalid_argument("unknown chop axis: " + std::string(name));
}

ChopSpec ChopSpec::top_fraction(double fraction, ChopAxis axis) {
    if (!(fraction >= 0.0) || fraction >= 1.0) {
        throw std::invalid_argument("chop fraction must lie in [0, 1)");
    }
    ChopSpec spec;
    spec.fraction = fraction;
    spec.applies_to = axis;
    return spec;
}

double gap_energy(const LatticeGeometry& geom, int n, const ChopSpec& chop) {
    if (n < 1) throw std::invalid_argument("gap_energy: n must be >= 1");
    validate_chop(geom, chop);
    if (geom.is_spacetime()) {
        throw std::invalid_argument("spacetime families have dedicated energy operations");
    }
    if (geom.family() == LatticeFamily::chain) {
        if (chop.active()) {
            throw std::invalid_argument(
                "the 1D chop acts on the environment term of system_energy; "
                "a single gap region is never chopped");
        }
        return sum_table(detail::make_mode_table(geom, n));
    }
    const int r_limit = chop.active() ? chopped_barrier_limit(geom.nx(), chop) : -1;
    return sum_table(detail::make_mode_table(geom, n, r_limit));
}

double system_energy(const LatticeGeometry& geom, int n, const ChopSpec& chop) {
    if (n < 1 || n > geom.ny() - 1) {
        throw std::invalid_argument("system_energy: need 1 <= n <= Ny - 1");
    }
    validate_chop(geom, chop);
    if (geom.is_spacetime()) {
        throw std::invalid_argument("spacetime families have dedicated energy operations");
    }
    if (geom.family() == LatticeFamily::chain) {
        const int env_steps = geom.ny() - n;
        int env_limit = env_steps;
        if (chop.active()) {
            env_limit -= static_cast<int>(std::floor(chop.fraction * geom.ny()));
            if (env_limit < 1) {
                throw std::invalid_argument("chop removes the entire environment spectrum");
            }
        }
        const double gap = sum_table(detail::make_mode_table(geom, n));
        const double env = sum_table(detail::make_mode_table(geom, env_steps, env_limit));
        return gap + env;
    }
    return gap_energy(geom, n, chop) + gap_energy(geom, geom.ny() - n, chop);
}

double lagrange_gap_sum(int n) {
    if (n < 1) throw std::invalid_argument("lagrange_gap_sum: n must be >= 1");
    const double eps = kPi / (4.0 * (n + 1.0));
    return std::sin(n * eps) * std::sin(kPi / 4.0) / std::sin(eps);
}

double lagrange_gap_sum_asymptotic(int n) {
    if (n < 1) throw std::invalid_argument("lagrange_gap_sum_asymptotic: n must be >= 1");
    const double eps = kPi / (4.0 * (n + 1.0));
    return 0.5 * std::cos(eps) / std::sin(eps);
}

double system_energy_chain_closed(int n, int total_steps) {
    if (n < 1 || n > total_steps - 1) {
        throw std::invalid_argument("system_energy_chain_closed: need 1 <= n <= N - 1");
    }
    return lagrange_gap_sum(n) + lagrange_gap_sum(total_steps - n);
}

double spacetime_chain_system_energy(int n, int total_steps) {
    if (n < 1 || n > total_steps - 1) {
        throw std::invalid_argument("spacetime_chain_system_energy: need 1 <= n <= N - 1");
    }
    // Independent of the barrier position: the arithmetic series
    // sum_r r pi/(2(m+1)) over r = 1..m equals pi m / 4 for both regions.
    return 0.25 * kPi * total_steps;
}

double spacetime_square_system_energy(int n, int nx, int ny, double barrier_divisor,
                                      double perp_divisor) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("need Nx >= 2 and Ny >= 2");
    if (n < 1 || n > ny - 1) {
        throw std::invalid_argument("spacetime_square_system_energy: need 1 <= n <= Ny - 1");
    }
    if (!(barrier_divisor > 0.0) || !(perp_divisor > 0.0)) {
        throw std::invalid_argument("truncation divisors must be positive");
    }
    const int barrier_limit = static_cast<int>(std::floor(nx / barrier_divisor));
    const auto region = [&](int gap_steps) {
        const int perp_limit = static_cast<int>(std::floor(gap_steps / perp_divisor));
        if (perp_limit < 1 || barrier_limit < 1) return 0.0;
        return sum_table(detail::make_spacetime_table(nx, gap_steps, perp_limit, barrier_limit));
    };
    return (region(n) + region(ny - n)) / nx;
}

EnergyCurve energy_curve(const LatticeGeometry& geom, int n_start, int n_end, int step,
                         const ChopSpec& chop, const SpacetimeTruncation& truncation) {
    if (step < 1) throw std::invalid_argument("energy_curve: step must be >= 1");
    if (n_start < 1 || n_start >= n_end) {
        throw std::invalid_argument("energy_curve: need 1 <= n_start < n_end");
    }
    if (n_end > geom.ny() - 1) {
        throw std::invalid_argument("energy_curve: n_end must be <= Ny - 1");
    }
    validate_chop(geom, chop);

    std::vector<int> ns;
    for (int n = n_start; n <= n_end; n += step) ns.push_back(n);
    if (ns.size() < 4) {
        throw std::invalid_argument("energy_curve: at least 4 samples are required "
                                    "(got " + std::to_string(ns.size()) + ")");
    }

    EnergyCurve curve;
    curve.geom = geom;
    curve.chop = chop;
    curve.truncation = truncation;
    curve.samples.resize(ns.size());

    detail::run_tasks(ns.size(), [&](std::size_t i) {
        const int n = ns[i];
        double u = 0.0;
        switch (geom.family()) {
            case LatticeFamily::chain:
                u = system_energy(geom, n, chop);
                break;
            case LatticeFamily::spacetime_chain:
                u = spacetime_chain_system_energy(n, geom.ny());
                break;
            case LatticeFamily::spacetime_square:
                u = spacetime_square_system_energy(n, geom.nx(), geom.ny(),
                                                   truncation.barrier_divisor,
                                                   truncation.perp_divisor);
                break;
            default:
                u = system_energy(geom, n, chop) / geom.nx();
                break;
        }
        curve.samples[i] = EnergySample{n, u};
    });
    return curve;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    out.append(buf, res.ptr);
}

}  // namespace

void write_curve_csv(std::ostream& os, const EnergyCurve& curve) {
    os << "n,energy\n";
    std::string line;
    for (const auto& sample : curve.samples) {
        line.clear();
        line += std::to_string(sample.n);
        line.push_back(',');
        append_double(line, sample.energy);
        line.push_back('\n');
        os << line;
    }
}

nlohmann::json curve_metadata(const EnergyCurve& curve) {
    nlohmann::json j{
        {"schema_version", 1},
        {"geometry",
         {{"family", family_name(curve.geom.family())},
          {"Nx", curve.geom.nx()},
          {"Ny", curve.geom.ny()},
          {"step_perp", curve.geom.step_perp()},
          {"barrier_length", curve.geom.barrier_length()},
          {"mode_overcount", curve.geom.mode_overcount()}}},
        {"chop",
         {{"fraction", curve.chop.fraction},
          {"applies_to", chop_axis_name(curve.chop.applies_to)}}},
        {"normalization", curve.geom.is_two_d() ? "per_barrier_step" : "total"},
        {"energy_unit", "hbar*c/d"},
        {"abscissa", "gap steps n"},
    };
    if (curve.geom.family() == LatticeFamily::spacetime_square) {
        j["truncation"] = {{"barrier_divisor", curve.truncation.barrier_divisor},
                           {"perp_divisor", curve.truncation.perp_divisor}};
    }
    return j;
}

}  // namespace casimir
