#include "pm/methods/gauss.hpp"

#include <string>

namespace pm::gauss {

namespace {

// entries are addressed with the paper's 1-based column index l
double& col(Particle& p, std::int64_t l) { return p.a[static_cast<std::size_t>(l - 1)]; }
double col(const Particle& p, std::int64_t l) { return p.a[static_cast<std::size_t>(l - 1)]; }

} // namespace

MethodDefinition<Particle, Global> method(std::int64_t N) {
    if (N < 1) {
        throw Error(ErrorKind::invariant_violation,
                    "gauss::method: dimension must be at least 1, got " + std::to_string(N));
    }

    MethodDefinition<Particle, Global> def;

    // only the current row has neighbors: the rows below in reverse order
    // while eliminating (so zero rows sort to the end through swaps), the
    // rows above while back-substituting
    def.neighborhood = [](const State<Particle, Global>& state, std::size_t j) {
        const Global& g = state.global;
        IndexTuple out;
        if (static_cast<std::int64_t>(j) + 1 != g.n) {
            return out;
        }
        if (g.m <= g.N) {
            for (std::int64_t row = g.N; row >= g.n + 1; --row) {
                out.push_back(static_cast<std::size_t>(row - 1));
            }
        } else {
            for (std::int64_t row = 1; row <= g.n - 1; ++row) {
                out.push_back(static_cast<std::size_t>(row - 1));
            }
        }
        return out;
    };

    def.stop = [](const Global& g) { return g.n == 1 && g.m > g.N; };

    def.interact = [](const Global& g, const Particle& pj, const Particle& pk) {
        if (g.m <= g.N) {
            if (col(pj, g.m) != 0.0) {
                // eliminate column m of the neighbor row
                const double ratio = col(pk, g.m) / col(pj, g.m);
                Particle next = pk;
                for (std::int64_t l = g.m; l <= g.N; ++l) {
                    col(next, l) = col(pk, l) - col(pj, l) * ratio;
                }
                next.b = pk.b - pj.b * ratio;
                return std::pair{pj, next};
            }
            if (col(pk, g.m) != 0.0) {
                return std::pair{pk, pj}; // swap in a usable pivot row
            }
            return std::pair{pj, pk};
        }
        // backward sweep: clear the neighbor's entry in j's leading-1 column
        const auto mu = static_cast<std::int64_t>(pj.mu);
        if (mu < 1 || mu > g.N) {
            throw Error(ErrorKind::index_out_of_range,
                        "gauss::interact: leading-one column " + std::to_string(mu) +
                            " outside 1.." + std::to_string(g.N));
        }
        const double factor = col(pk, mu);
        Particle next = pk;
        for (std::int64_t l = mu; l <= g.N; ++l) {
            col(next, l) = col(pk, l) - factor * col(pj, l);
        }
        next.b = pk.b - factor * pj.b;
        return std::pair{pj, next};
    };

    def.evolve = [](const Global& g, const Particle& p, std::size_t j) {
        const bool current = static_cast<std::int64_t>(j) + 1 == g.n;
        Global next_g = g;
        if (current && g.m < g.N && col(p, g.m) != 0.0) {
            next_g.n = g.n + 1;
        } else if (current && g.m == g.N && col(p, g.m) == 0.0) {
            next_g.n = g.n - 1; // fully zero row, move on upward early
        }
        if (current && g.m <= g.N && col(p, g.m) != 0.0) {
            // normalize the pivot row to a leading 1 and record its column
            Particle next = p;
            const double pivot = col(p, g.m);
            for (std::int64_t l = g.m; l <= g.N; ++l) {
                col(next, l) = col(p, l) / pivot;
            }
            next.b = p.b / pivot;
            next.mu = static_cast<double>(g.m);
            return std::pair{next_g, std::vector<Particle>{std::move(next)}};
        }
        return std::pair{next_g, std::vector<Particle>{p}};
    };

    def.evolve_global = [](const Global& g) {
        return Global{g.N, g.m + 1, g.m > g.N ? g.n - 1 : g.n};
    };

    return def;
}

} // namespace pm::gauss
