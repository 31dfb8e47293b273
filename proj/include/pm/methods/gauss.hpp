#pragma once

// Gaussian elimination without pivoting, one particle per row of the
// augmented system. The global tracks the current column m and row n
// (1-based, as in the written algorithm); only the current row has
// neighbors. Forward sweep (m <= N) eliminates below the pivot and
// normalizes the pivot row to a leading 1; the backward sweep (m > N)
// clears the leading-1 columns above. Zero tests are exact binary64
// comparisons; numerical robustness is out of scope.

#include <cstdint>
#include <vector>

#include "pm/kernel.hpp"

namespace pm::gauss {

struct Particle {
    std::vector<double> a; // row coefficients, length N
    double b;              // right-hand side
    double mu;             // column of this row's leading 1 (1-based, set on normalization)

    bool operator==(const Particle&) const = default;
};

struct Global {
    std::int64_t N; // matrix dimension
    std::int64_t m; // current column; m > N during the backward sweep
    std::int64_t n; // current row

    bool operator==(const Global&) const = default;
};

MethodDefinition<Particle, Global> method(std::int64_t N);

} // namespace pm::gauss
