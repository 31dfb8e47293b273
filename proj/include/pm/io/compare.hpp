#pragma once

// Validation of a diffusion run against the closed-form solution.

#include <cstdint>

#include "pm/io/config.hpp"

namespace pm::io {

struct AnalyticReport {
    double at_time = 0.0;        // requested stopping time
    double state_time = 0.0;     // accumulated simulation time actually reached
    std::uint64_t transitions = 0;
    double l_inf = 0.0;          // max |w_j - w(x_j, state_time)|
    double l2_rms = 0.0;         // RMS pointwise error
    double mass_drift_rel = 0.0; // |sum w - sum w0| / |sum w0|
};

// Run a pse_diffusion instance until its time reaches at_time (or its own
// stopping condition fires) and compare particle concentrations with the
// analytic heat-kernel solution at the reached time.
AnalyticReport compare_analytic(const LoadedInstance& loaded, double at_time);

} // namespace pm::io
