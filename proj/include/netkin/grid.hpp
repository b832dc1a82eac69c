#pragma once

#include <stdexcept>
#include <vector>

namespace netkin {

/// Uniform cell-centered grid on [0, length].
struct EdgeGrid {
    int cells = 0;
    double length = 0.0;
    double dx = 0.0;

    double center(int i) const { return (i + 0.5) * dx; }

    std::vector<double> centers() const {
        std::vector<double> x(static_cast<std::size_t>(cells));
        for (int i = 0; i < cells; ++i) x[static_cast<std::size_t>(i)] = center(i);
        return x;
    }
};

inline EdgeGrid build_grid(double length, int cells) {
    if (cells < 2) throw std::invalid_argument("build_grid: cells must be >= 2");
    if (!(length > 0.0)) throw std::invalid_argument("build_grid: length must be > 0");
    return EdgeGrid{cells, length, length / cells};
}

} // namespace netkin
