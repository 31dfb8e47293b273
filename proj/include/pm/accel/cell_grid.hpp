#pragma once

// 1-D cell list for cut-off bounded neighborhoods. Semantically equivalent
// to a brute-force predicate scan over all particles; the grid only prunes
// candidates, the predicate does the exact filtering.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pm/errors.hpp"
#include "pm/tuples.hpp"

namespace pm::accel {

struct CellGrid {
    double cell_width = 0.0;            // >= the cutoff the grid was built for
    std::optional<double> domain;       // periodic length, when wrapping
    std::int64_t num_cells = 0;         // periodic grids only
    std::unordered_map<std::int64_t, IndexTuple> bins; // cell -> ascending positions
};

// Bin particle positions into cells of width >= cutoff. With a periodic
// domain D, positions must lie in [0, D) and cutoff <= D/2 so that the
// minimum image of any in-range pair spans at most one cell boundary.
CellGrid build_grid(const std::vector<double>& positions, double cutoff,
                    std::optional<double> domain = std::nullopt);

namespace detail {

std::int64_t cell_of(const CellGrid& grid, double x);

} // namespace detail

// Ascending positions k != j with predicate(x_j, x_k) true. The predicate
// must depend on the two coordinates only and be false beyond the cutoff
// the grid was built with; then the result equals the brute-force
// index_tuple over all particles.
template <class Pred>
IndexTuple range_neighbors(const CellGrid& grid, const std::vector<double>& positions,
                           std::size_t j, Pred&& predicate) {
    if (j >= positions.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "range_neighbors: position " + std::to_string(j) + " out of range");
    }
    const std::int64_t center = detail::cell_of(grid, positions[j]);

    std::int64_t cells[3];
    std::size_t num_cells = 0;
    for (std::int64_t offset = -1; offset <= 1; ++offset) {
        std::int64_t cell = center + offset;
        if (grid.domain) {
            cell = ((cell % grid.num_cells) + grid.num_cells) % grid.num_cells;
        }
        bool seen = false;
        for (std::size_t i = 0; i < num_cells; ++i) {
            seen = seen || cells[i] == cell;
        }
        if (!seen) {
            cells[num_cells++] = cell;
        }
    }

    IndexTuple out;
    for (std::size_t i = 0; i < num_cells; ++i) {
        auto it = grid.bins.find(cells[i]);
        if (it == grid.bins.end()) {
            continue;
        }
        for (std::size_t k : it->second) {
            if (k != j && predicate(positions[j], positions[k])) {
                out.push_back(k);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Memoized grid for use inside neighborhood hooks: rebuilt whenever the
// positions, cutoff or domain differ from the last query, so the hook
// stays a pure function of its inputs. Copies are independent.
class CachedGrid {
public:
    const CellGrid& refresh(const std::vector<double>& positions, double cutoff,
                            std::optional<double> domain) {
        if (positions != positions_ || cutoff != cutoff_ || domain != domain_) {
            grid_ = build_grid(positions, cutoff, domain);
            positions_ = positions;
            cutoff_ = cutoff;
            domain_ = domain;
        }
        return grid_;
    }

private:
    std::vector<double> positions_;
    double cutoff_ = -1.0;
    std::optional<double> domain_;
    CellGrid grid_;
};

} // namespace pm::accel
