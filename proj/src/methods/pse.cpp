#include "pm/methods/pse.hpp"

#include <cmath>
#include <numbers>

#include "pm/accel/cell_grid.hpp"

namespace pm::pse {

double kernel_weight(double xj, double xk, double eps) {
    const double r = xk - xj;
    return std::exp(-(r * r) / (4.0 * eps * eps));
}

double analytic_diffusion(double x, double t, double D) {
    const double s = 4.0 * D * (1.0 + t);
    return std::exp(-(x * x) / s) / std::sqrt(std::numbers::pi * s);
}

MethodDefinition<Particle, Global> method(NeighborSearch search) {
    MethodDefinition<Particle, Global> def;

    if (search == NeighborSearch::brute_force) {
        def.neighborhood = [](const State<Particle, Global>& state, std::size_t j) {
            const auto& ps = state.particles;
            const double xj = ps[j].x;
            const double rc = state.global.rc;
            return index_tuple(ps.size(), [&](std::size_t k) {
                const double dist = std::abs(ps[k].x - xj);
                return 0.0 < dist && dist <= rc;
            });
        };
    } else {
        def.neighborhood = [cache = accel::CachedGrid{}](const State<Particle, Global>& state,
                                                         std::size_t j) mutable {
            std::vector<double> xs;
            xs.reserve(state.particles.size());
            for (const Particle& p : state.particles) {
                xs.push_back(p.x);
            }
            const double rc = state.global.rc;
            const auto& grid = cache.refresh(xs, rc, std::nullopt);
            return accel::range_neighbors(grid, xs, j, [rc](double xj, double xk) {
                const double dist = std::abs(xk - xj);
                return 0.0 < dist && dist <= rc;
            });
        };
    }

    def.stop = [](const Global& g) { return g.t >= g.T; };

    // asymmetric interact: only p_j's accumulator collects the exchange
    def.interact = [](const Global& g, const Particle& pj, const Particle& pk) {
        const double exchange = (pk.w - pj.w) * kernel_weight(pj.x, pk.x, g.eps);
        return std::pair{Particle{pj.x, pj.w, pj.dw + exchange}, pk};
    };

    // Euler update w += dt * D h / (2 eps^3 sqrt(pi)) * dw, accumulator reset
    def.evolve = [](const Global& g, const Particle& p, std::size_t) {
        const double factor =
            (g.D * g.h) / (2.0 * g.eps * g.eps * g.eps * std::sqrt(std::numbers::pi));
        return std::pair{g, std::vector<Particle>{{p.x, p.w + g.dt * factor * p.dw, 0.0}}};
    };

    def.evolve_global = [](const Global& g) {
        return Global{g.D, g.h, g.eps, g.rc, g.dt, g.T, g.t + g.dt};
    };

    return def;
}

} // namespace pm::pse
