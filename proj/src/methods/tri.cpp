#include "pm/methods/tri.hpp"

#include <string>

namespace pm::tri {

namespace {

Vec2 midpoint(const Vec2& a, const Vec2& b) {
    return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
}

int slot_of(const std::array<std::int64_t, 3>& betas, std::int64_t id) {
    for (int r = 0; r < 3; ++r) {
        if (betas[r] == id) {
            return r;
        }
    }
    return -1;
}

} // namespace

MethodDefinition<Particle, Global> method() {
    MethodDefinition<Particle, Global> def;

    // the beta slots in order, open edges (-1) filtered out
    def.neighborhood = [](const State<Particle, Global>& state, std::size_t j) {
        IndexTuple out;
        for (std::int64_t b : state.particles[j].beta) {
            if (b != no_neighbor) {
                out.push_back(static_cast<std::size_t>(b));
            }
        }
        return out;
    };

    def.stop = [](const Global& g) { return g.t >= g.T; };

    // record in gamma_j which slot j occupies in k's neighbor list, at the
    // slot where j lists k; the neighbor is left unchanged
    def.interact = [](const Global&, const Particle& pj, const Particle& pk) {
        const int slot_j = slot_of(pj.beta, pk.iota);
        const int slot_k = slot_of(pk.beta, pj.iota);
        if (slot_j < 0 || slot_k < 0) {
            throw Error(ErrorKind::malformed_topology,
                        "tri::interact: triangles " + std::to_string(pj.iota) + " and " +
                            std::to_string(pk.iota) + " do not list each other as neighbors");
        }
        Particle next = pj;
        next.gamma[static_cast<std::size_t>(slot_j)] = slot_k;
        return std::pair{next, pk};
    };

    // replace the triangle with four children: one per corner plus the
    // central triangle of the three edge midpoints
    def.evolve = [](const Global& g, const Particle& p, std::size_t) {
        const std::int64_t id = p.iota;
        const Vec2 m01 = midpoint(p.verts[0], p.verts[1]);
        const Vec2 m12 = midpoint(p.verts[1], p.verts[2]);
        const Vec2 m02 = midpoint(p.verts[0], p.verts[2]);

        // child c keeps corner c; its outer edges attach to the children of
        // the old neighbors, addressed through the exchanged reverse indices
        const auto outer_next = [&](int r) {
            return p.beta[r] == no_neighbor ? no_neighbor : 4 * p.beta[r] + (p.gamma[r] + 1) % 3;
        };
        const auto outer_prev = [&](int r) {
            return p.beta[r] == no_neighbor ? no_neighbor : 4 * p.beta[r] + p.gamma[r];
        };

        std::vector<Particle> children;
        children.reserve(4);
        children.push_back({4 * id,
                            {p.verts[0], m01, m02},
                            {outer_next(0), 4 * id + 3, outer_prev(2)},
                            {0, 0, 0}});
        children.push_back({4 * id + 1,
                            {p.verts[1], m12, m01},
                            {outer_next(1), 4 * id + 3, outer_prev(0)},
                            {0, 0, 0}});
        children.push_back({4 * id + 2,
                            {p.verts[2], m02, m12},
                            {outer_next(2), 4 * id + 3, outer_prev(1)},
                            {0, 0, 0}});
        children.push_back({4 * id + 3,
                            {m01, m12, m02},
                            {4 * id + 1, 4 * id + 2, 4 * id},
                            {0, 0, 0}});
        return std::pair{g, std::move(children)};
    };

    def.evolve_global = [](const Global& g) { return Global{g.T, g.t + 1}; };

    return def;
}

} // namespace pm::tri
