#include "pm/accel/cell_grid.hpp"

#include <cmath>
#include <string>

namespace pm::accel {

namespace detail {

std::int64_t cell_of(const CellGrid& grid, double x) {
    const auto cell = static_cast<std::int64_t>(std::floor(x / grid.cell_width));
    if (grid.domain) {
        // positions are validated to [0, D) at build time; clamp the last
        // sliver where x / cell_width rounds up to num_cells
        return std::min(cell, grid.num_cells - 1);
    }
    return cell;
}

} // namespace detail

CellGrid build_grid(const std::vector<double>& positions, double cutoff,
                    std::optional<double> domain) {
    if (!(cutoff > 0.0)) {
        throw Error(ErrorKind::invalid_cutoff,
                    "build_grid: cutoff must be positive, got " + std::to_string(cutoff));
    }

    CellGrid grid;
    grid.domain = domain;
    if (domain) {
        const double d = *domain;
        if (!(d > 0.0) || !(cutoff <= d / 2.0)) {
            throw Error(ErrorKind::invalid_cutoff,
                        "build_grid: periodic domain requires 0 < cutoff <= domain/2");
        }
        auto cells = static_cast<std::int64_t>(std::floor(d / cutoff));
        while (cells > 1 && d / static_cast<double>(cells) < cutoff) {
            --cells; // keep cell_width >= cutoff under rounding
        }
        grid.num_cells = std::max<std::int64_t>(cells, 1);
        grid.cell_width = d / static_cast<double>(grid.num_cells);
    } else {
        grid.cell_width = cutoff;
    }

    for (std::size_t i = 0; i < positions.size(); ++i) {
        const double x = positions[i];
        if (domain && !(x >= 0.0 && x < *domain)) {
            throw Error(ErrorKind::position_out_of_domain,
                        "build_grid: position " + std::to_string(x) +
                            " outside periodic domain [0, " + std::to_string(*domain) + ")");
        }
        grid.bins[detail::cell_of(grid, x)].push_back(i);
    }
    return grid;
}

} // namespace pm::accel
