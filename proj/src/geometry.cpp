#include "casimir/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace casimir {

std::string_view family_name(LatticeFamily family) {
    switch (family) {
        case LatticeFamily::chain: return "chain";
        case LatticeFamily::square: return "square";
        case LatticeFamily::square_diagonal: return "square-diagonal";
        case LatticeFamily::triangular: return "triangular";
        case LatticeFamily::spacetime_chain: return "spacetime-chain";
        case LatticeFamily::spacetime_square: return "spacetime-square";
    }
    throw std::logic_error("unreachable lattice family");
}

LatticeFamily family_from_name(std::string_view name) {
    if (name == "chain") return LatticeFamily::chain;
    if (name == "square") return LatticeFamily::square;
    if (name == "square-diagonal") return LatticeFamily::square_diagonal;
    if (name == "triangular") return LatticeFamily::triangular;
    if (name == "spacetime-chain") return LatticeFamily::spacetime_chain;
    if (name == "spacetime-square") return LatticeFamily::spacetime_square;
    throw std::invalid_argument("unknown lattice family: " + std::string(name));
}

bool family_is_spacetime(LatticeFamily family) {
    return family == LatticeFamily::spacetime_chain ||
           family == LatticeFamily::spacetime_square;
}

bool family_is_two_d(LatticeFamily family) {
    return family == LatticeFamily::square ||
           family == LatticeFamily::square_diagonal ||
           family == LatticeFamily::triangular ||
           family == LatticeFamily::spacetime_square;
}

LatticeGeometry::LatticeGeometry(LatticeFamily family, int nx, int ny)
    : family_(family), nx_(nx), ny_(ny) {
    if (nx_ < 2 || ny_ < 2) {
        throw std::invalid_argument("lattice geometry requires Nx >= 2 and Ny >= 2");
    }
    switch (family_) {
        case LatticeFamily::chain:
        case LatticeFamily::spacetime_chain:
            step_perp_ = 1.0;
            barrier_length_ = 1.0;
            mode_overcount_ = 1.0;
            break;
        case LatticeFamily::square:
        case LatticeFamily::spacetime_square:
            step_perp_ = 1.0;
            barrier_length_ = static_cast<double>(nx_);
            mode_overcount_ = 1.0;
            break;
        case LatticeFamily::square_diagonal:
            // Diagonal barriers halve both step lengths and double the mode
            // density (two field points per original cell).
            step_perp_ = std::sqrt(2.0) / 2.0;
            barrier_length_ = std::sqrt(2.0) / 2.0 * static_cast<double>(nx_);
            mode_overcount_ = 2.0;
            break;
        case LatticeFamily::triangular:
            step_perp_ = std::sqrt(3.0) / 2.0;
            barrier_length_ = static_cast<double>(nx_);
            mode_overcount_ = 1.0;
            break;
    }
}

LatticeGeometry LatticeGeometry::chain(int n_steps) {
    // Nx is meaningless for the chain; keep the minimal valid value.
    return LatticeGeometry(LatticeFamily::chain, 2, n_steps);
}

LatticeGeometry LatticeGeometry::square(int nx, int ny) {
    return LatticeGeometry(LatticeFamily::square, nx, ny);
}

LatticeGeometry LatticeGeometry::square_diagonal(int n1, int n2) {
    return LatticeGeometry(LatticeFamily::square_diagonal, n1, n2);
}

LatticeGeometry LatticeGeometry::triangular(int nx, int ny) {
    return LatticeGeometry(LatticeFamily::triangular, nx, ny);
}

LatticeGeometry LatticeGeometry::spacetime_chain(int n_steps) {
    return LatticeGeometry(LatticeFamily::spacetime_chain, 2, n_steps);
}

LatticeGeometry LatticeGeometry::spacetime_square(int nx, int ny) {
    return LatticeGeometry(LatticeFamily::spacetime_square, nx, ny);
}

LatticeGeometry LatticeGeometry::make(LatticeFamily family, int nx, int ny) {
    switch (family) {
        case LatticeFamily::chain: return chain(ny);
        case LatticeFamily::spacetime_chain: return spacetime_chain(ny);
        default: return LatticeGeometry(family, nx, ny);
    }
}

}  // namespace casimir
