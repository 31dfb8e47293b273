#include "pm/methods/dem.hpp"

#include "pm/accel/cell_grid.hpp"

namespace pm::dem {

namespace {

std::vector<double> positions_of(const State<Particle, Global>& state) {
    std::vector<double> xs;
    xs.reserve(state.particles.size());
    for (const Particle& p : state.particles) {
        xs.push_back(p.x);
    }
    return xs;
}

} // namespace

MethodDefinition<Particle, Global> method(NeighborSearch search) {
    MethodDefinition<Particle, Global> def;

    if (search == NeighborSearch::brute_force) {
        def.neighborhood = [](const State<Particle, Global>& state, std::size_t j) {
            const auto& ps = state.particles;
            const double xj = ps[j].x;
            const double d = state.global.d;
            return index_tuple(ps.size(), [&](std::size_t k) {
                const double gap = ps[k].x - xj;
                return 0.0 < gap && gap <= d;
            });
        };
    } else {
        def.neighborhood = [cache = accel::CachedGrid{}](const State<Particle, Global>& state,
                                                         std::size_t j) mutable {
            const std::vector<double> xs = positions_of(state);
            const double d = state.global.d;
            const auto& grid = cache.refresh(xs, d, std::nullopt);
            return accel::range_neighbors(grid, xs, j, [d](double xj, double xk) {
                const double gap = xk - xj;
                return 0.0 < gap && gap <= d;
            });
        };
    }

    def.stop = [](const Global& g) { return g.t >= g.T; };

    // perfectly elastic collision: positions kept, velocities swapped
    def.interact = [](const Global&, const Particle& pj, const Particle& pk) {
        return std::pair{Particle{pj.x, pk.v}, Particle{pk.x, pj.v}};
    };

    // explicit Euler drift; velocity and global unchanged
    def.evolve = [](const Global& g, const Particle& p, std::size_t) {
        return std::pair{g, std::vector<Particle>{{p.x + g.dt * p.v, p.v}}};
    };

    def.evolve_global = [](const Global& g) {
        return Global{g.d, g.t + g.dt, g.dt, g.T};
    };

    return def;
}

} // namespace pm::dem
