#include <doctest.h>

#include "pm/kernel.hpp"
#include "pm/methods/dem.hpp"

#include "helpers.hpp"

using namespace pm;
using pmtest::near;

namespace {

State<dem::Particle, dem::Global> paper_instance() {
    return {{0.5, 0.0, 0.1, 10.0}, {{0.0, 2.0}, {0.49, -1.0}, {2.0, 1.0}}};
}

} // namespace

TEST_SUITE("dem") {

TEST_CASE("interact swaps velocities and keeps positions") {
    const auto def = dem::method();
    const dem::Global g{0.5, 0.0, 0.1, 10.0};
    const auto [pj, pk] = def.interact(g, {0.0, 2.0}, {0.49, -1.0});
    CHECK(pj == dem::Particle{0.0, -1.0});
    CHECK(pk == dem::Particle{0.49, 2.0});
}

TEST_CASE("interact is an involution on each pair") {
    const auto def = dem::method();
    const dem::Global g{0.5, 0.0, 0.1, 10.0};
    for (int trial = 0; trial < 100; ++trial) {
        const dem::Particle a{pmtest::uniform(-5, 5), pmtest::uniform(-3, 3)};
        const dem::Particle b{pmtest::uniform(-5, 5), pmtest::uniform(-3, 3)};
        const auto [a1, b1] = def.interact(g, a, b);
        const auto [a2, b2] = def.interact(g, a1, b1);
        CHECK(a2 == a);
        CHECK(b2 == b);
    }
}

TEST_CASE("evolve is explicit Euler drift") {
    const auto def = dem::method();
    const dem::Global g{0.5, 0.0, 0.1, 10.0};
    const auto [g2, created] = def.evolve(g, {0.0, -1.0}, 0);
    CHECK(g2 == g);
    REQUIRE(created.size() == 1);
    CHECK(near(created[0].x, -0.1, 1e-12));
    CHECK(created[0].v == -1.0);
}

TEST_CASE("evolve_global only advances the time") {
    const auto def = dem::method();
    const auto g2 = def.evolve_global({0.5, 0.3, 0.1, 10.0});
    CHECK(g2.d == 0.5);
    CHECK(near(g2.t, 0.4, 1e-12));
    CHECK(g2.dt == 0.1);
    CHECK(g2.T == 10.0);
}

TEST_CASE("neighborhood is the asymmetric collision set") {
    const auto def = dem::method();
    const auto state = paper_instance();
    CHECK(def.neighborhood(state, 0) == IndexTuple{1});
    CHECK(def.neighborhood(state, 1).empty());
    CHECK(def.neighborhood(state, 2).empty());
}

TEST_CASE("brute force and cell list neighborhoods agree") {
    const auto brute = dem::method(NeighborSearch::brute_force);
    const auto cells = dem::method(NeighborSearch::cell_list);
    for (int trial = 0; trial < 50; ++trial) {
        State<dem::Particle, dem::Global> s{{pmtest::uniform(0.1, 1.5), 0.0, 0.1, 1.0}, {}};
        const auto n = static_cast<std::size_t>(pmtest::uniform_int(0, 40));
        for (std::size_t i = 0; i < n; ++i) {
            s.particles.push_back({pmtest::uniform(-10, 10), pmtest::uniform(-2, 2)});
        }
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(brute.neighborhood(s, j) == cells.neighborhood(s, j));
        }
    }
}

TEST_CASE("momentum and kinetic energy are invariant over a full run") {
    const auto def = dem::method();
    const auto state = paper_instance();
    const double momentum0 = 2.0 - 1.0 + 1.0;
    const double kinetic0 = 4.0 + 1.0 + 1.0;
    bool ok = true;
    const auto result =
        pm::run(def, state, std::nullopt,
                std::function<void(const State<dem::Particle, dem::Global>&, std::uint64_t)>(
                    [&](const auto& s, std::uint64_t) {
                        double momentum = 0.0;
                        double kinetic = 0.0;
                        for (const auto& p : s.particles) {
                            momentum += p.v;
                            kinetic += p.v * p.v;
                        }
                        ok = ok && near(momentum, momentum0, 1e-12) && near(kinetic, kinetic0, 1e-12);
                    }));
    CHECK(result.transitions == 101);
    CHECK(ok);
}

} // TEST_SUITE
