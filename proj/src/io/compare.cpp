#include "pm/io/compare.hpp"

#include <cmath>

namespace pm::io {

AnalyticReport compare_analytic(const LoadedInstance& loaded, double at_time) {
    const auto* inst = std::get_if<Instance<pse::Particle, pse::Global>>(&loaded.instance);
    if (inst == nullptr) {
        throw Error(ErrorKind::invariant_violation,
                    "compare: method must be pse_diffusion, got `" + loaded.method + "`");
    }

    double mass0 = 0.0;
    for (const pse::Particle& p : inst->initial.particles) {
        mass0 += p.w;
    }

    AnalyticReport report;
    report.at_time = at_time;

    State<pse::Particle, pse::Global> state = inst->initial;
    while (!inst->def.stop(state.global) && state.global.t < at_time) {
        if (loaded.options.max_steps && report.transitions >= *loaded.options.max_steps) {
            throw Error(ErrorKind::step_limit_exceeded,
                        "compare: step limit reached before at_time");
        }
        state = *step(inst->def, state);
        ++report.transitions;
    }

    report.state_time = state.global.t;
    double sq_sum = 0.0;
    double mass = 0.0;
    for (const pse::Particle& p : state.particles) {
        const double err = std::abs(p.w - pse::analytic_diffusion(p.x, state.global.t, state.global.D));
        report.l_inf = std::max(report.l_inf, err);
        sq_sum += err * err;
        mass += p.w;
    }
    if (!state.particles.empty()) {
        report.l2_rms = std::sqrt(sq_sum / static_cast<double>(state.particles.size()));
    }
    report.mass_drift_rel = mass0 == 0.0 ? std::abs(mass - mass0) : std::abs(mass - mass0) / std::abs(mass0);
    return report;
}

} // namespace pm::io
