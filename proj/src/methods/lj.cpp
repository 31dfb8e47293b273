#include "pm/methods/lj.hpp"

#include <cmath>

#include "pm/accel/cell_grid.hpp"

namespace pm::lj {

double directed_distance(double x, double y, double D) {
    const double dy = y - x;
    if (dy > 0.5 * D) {
        return dy - D;
    }
    if (dy <= -0.5 * D) {
        return dy + D;
    }
    return dy;
}

double real_mod(double a, double b) {
    if (b == 0.0) {
        throw Error(ErrorKind::zero_modulus, "real_mod: modulus must be nonzero");
    }
    const double m = std::abs(b);
    double r = std::fmod(a, m);
    if (r < 0.0) {
        r += m;
    }
    if (r >= m) {
        r = 0.0; // r + m can round up to m when r is a tiny negative
    }
    return r;
}

double acceleration(double r) {
    if (r == 0.0) {
        throw Error(ErrorKind::zero_distance,
                    "lj::acceleration: coincident particles under the minimum image");
    }
    const double r2 = r * r;
    const double r6 = (r2 * r2) * r2;
    const double r7 = r6 * r;
    const double r13 = (r6 * r6) * r;
    return 24.0 / r7 - 48.0 / r13;
}

namespace {

double pair_potential(double r) {
    if (r == 0.0) {
        throw Error(ErrorKind::zero_distance,
                    "lj::total_energy: coincident particles under the minimum image");
    }
    const double r2 = r * r;
    const double r6 = (r2 * r2) * r2;
    const double r12 = r6 * r6;
    return 4.0 * (1.0 / r12 - 1.0 / r6);
}

} // namespace

MethodDefinition<Particle, Global> method(NeighborSearch search) {
    MethodDefinition<Particle, Global> def;

    // asymmetric half-neighborhood: partners ahead of j under the minimum
    // image, so each unordered pair interacts exactly once
    if (search == NeighborSearch::brute_force) {
        def.neighborhood = [](const State<Particle, Global>& state, std::size_t j) {
            const auto& ps = state.particles;
            const double xj = ps[j].x;
            const Global& g = state.global;
            return index_tuple(ps.size(), [&](std::size_t k) {
                const double d = directed_distance(xj, ps[k].x, g.D);
                return 0.0 < d && d <= g.rc;
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
            const Global& g = state.global;
            const auto& grid = cache.refresh(xs, g.rc, g.D);
            return accel::range_neighbors(grid, xs, j, [&g](double xj, double xk) {
                const double d = directed_distance(xj, xk, g.D);
                return 0.0 < d && d <= g.rc;
            });
        };
    }

    def.stop = [](const Global& g) { return g.t >= g.T; };

    // symmetric interaction: both partners accumulate the pair acceleration
    def.interact = [](const Global& g, const Particle& pj, const Particle& pk) {
        const double ajk = acceleration(directed_distance(pj.x, pk.x, g.D));
        const double akj = acceleration(directed_distance(pk.x, pj.x, g.D));
        return std::pair{Particle{pj.x, pj.v, pj.a + ajk}, Particle{pk.x, pk.v, pk.a + akj}};
    };

    // v += dt a, then x += dt v wrapped into [0, D); accumulator reset
    def.evolve = [](const Global& g, const Particle& p, std::size_t) {
        const double v = p.v + g.dt * p.a;
        const double x = real_mod(p.x + g.dt * v, g.D);
        return std::pair{g, std::vector<Particle>{{x, v, 0.0}}};
    };

    def.evolve_global = [](const Global& g) {
        return Global{g.rc, g.D, g.dt, g.T, g.t + g.dt};
    };

    return def;
}

double total_energy(const State<Particle, Global>& state) {
    const auto& ps = state.particles;
    const Global& g = state.global;
    double e = 0.0;
    for (const Particle& p : ps) {
        e += 0.5 * p.v * p.v;
    }
    // the one-sided 0 < d covers each unordered pair exactly once
    for (std::size_t j = 0; j < ps.size(); ++j) {
        for (std::size_t k = 0; k < ps.size(); ++k) {
            if (k == j) {
                continue;
            }
            const double d = directed_distance(ps[j].x, ps[k].x, g.D);
            if (0.0 < d && d <= g.rc) {
                e += pair_potential(d);
            }
        }
    }
    return e;
}

} // namespace pm::lj
