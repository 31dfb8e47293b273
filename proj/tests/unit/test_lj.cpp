#include <doctest.h>

#include <cmath>

#include "pm/io/config.hpp"
#include "pm/kernel.hpp"
#include "pm/methods/lj.hpp"

#include "helpers.hpp"

using namespace pm;
using pmtest::near;

namespace {

State<lj::Particle, lj::Global> paper_instance() {
    const auto loaded = io::builtin_example("lj");
    return std::get<io::Instance<lj::Particle, lj::Global>>(loaded.instance).initial;
}

} // namespace

TEST_SUITE("lj") {

TEST_CASE("directed_distance") {
    CHECK(lj::directed_distance(1.0, 18.0, 19.0) == -2.0);
    CHECK(lj::directed_distance(18.0, 1.0, 19.0) == 2.0);
    CHECK(lj::directed_distance(3.0, 5.0, 19.0) == 2.0);
    CHECK(lj::directed_distance(5.0, 3.0, 19.0) == -2.0);

    // antisymmetric whenever the wrapped separation is not exactly D/2
    for (int trial = 0; trial < 200; ++trial) {
        const double D = pmtest::uniform(1, 30);
        const double x = pmtest::uniform(0, D);
        const double y = pmtest::uniform(0, D);
        const double d = lj::directed_distance(x, y, D);
        if (std::abs(d) != D / 2.0) {
            CHECK(lj::directed_distance(y, x, D) == -d);
        }
        CHECK(std::abs(d) <= D / 2.0 + 1e-12);
    }
}

TEST_CASE("real_mod") {
    CHECK(lj::real_mod(-0.5, 19.0) == 18.5);
    CHECK(lj::real_mod(3.0, 19.0) == 3.0);
    CHECK(lj::real_mod(19.0, 19.0) == 0.0);
    CHECK(lj::real_mod(38.5, 19.0) == 0.5);
    CHECK(lj::real_mod(-1e-18, 19.0) < 19.0); // wrap may not round up to D
    CHECK(lj::real_mod(-1e-18, 19.0) >= 0.0);
    try {
        static_cast<void>(lj::real_mod(1.0, 0.0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::zero_modulus);
    }
    for (int trial = 0; trial < 100; ++trial) {
        const double b = pmtest::uniform(0.5, 25);
        const double a = pmtest::uniform(-100, 100);
        const double r = lj::real_mod(a, b);
        CHECK(r >= 0.0);
        CHECK(r < b);
        CHECK(near(std::remainder(a - r, b), 0.0, 1e-9));
    }
}

TEST_CASE("acceleration") {
    CHECK(lj::acceleration(1.0) == -24.0);
    CHECK(near(lj::acceleration(std::pow(2.0, 1.0 / 6.0)), 0.0, 1e-12));
    for (int trial = 0; trial < 100; ++trial) {
        const double r = pmtest::uniform(0.5, 4.0);
        CHECK(lj::acceleration(-r) == -lj::acceleration(r));
    }
    try {
        static_cast<void>(lj::acceleration(0.0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::zero_distance);
    }
}

TEST_CASE("interact adds antisymmetric pair accelerations") {
    const auto def = lj::method();
    const lj::Global g{3.0, 19.0, 1e-4, 10.0, 0.0};
    const auto [pj, pk] = def.interact(g, {2.0, 0.5, 0.0}, {3.0, -0.5, 1.0});
    CHECK(pj.a == -24.0);
    CHECK(pk.a == 1.0 + 24.0);
    CHECK(pj.x == 2.0);
    CHECK(pj.v == 0.5);
    CHECK(pk.x == 3.0);
    CHECK(pk.v == -0.5);
}

TEST_CASE("evolve with zero acceleration is pure drift") {
    const auto def = lj::method();
    const lj::Global g{3.0, 19.0, 0.5, 10.0, 0.0};
    const auto [g2, created] = def.evolve(g, {18.9, 1.0, 0.0}, 0);
    CHECK(g2 == g);
    REQUIRE(created.size() == 1);
    CHECK(near(created[0].x, lj::real_mod(18.9 + 0.5, 19.0), 1e-12));
    CHECK(created[0].v == 1.0);
    CHECK(created[0].a == 0.0);
}

TEST_CASE("evolve keeps positions inside the domain") {
    const auto def = lj::method();
    const lj::Global g{3.0, 19.0, 0.1, 10.0, 0.0};
    for (int trial = 0; trial < 100; ++trial) {
        const lj::Particle p{pmtest::uniform(0, 19), pmtest::uniform(-500, 500),
                             pmtest::uniform(-50, 50)};
        const auto [g2, created] = def.evolve(g, p, 0);
        REQUIRE(created.size() == 1);
        CHECK(created[0].x >= 0.0);
        CHECK(created[0].x < 19.0);
    }
}

TEST_CASE("total_energy") {
    const lj::Global g{3.0, 19.0, 1e-4, 10.0, 0.0};

    SUBCASE("far-apart resting particles have zero energy") {
        const State<lj::Particle, lj::Global> s{g, {{0.0, 0.0, 0.0}, {9.0, 0.0, 0.0}}};
        CHECK(lj::total_energy(s) == 0.0);
    }

    SUBCASE("single moving particle is kinetic only") {
        const State<lj::Particle, lj::Global> s{g, {{4.0, 2.0, 0.0}}};
        CHECK(lj::total_energy(s) == 2.0);
    }

    SUBCASE("pair at the potential minimum") {
        const double r0 = std::pow(2.0, 1.0 / 6.0);
        const State<lj::Particle, lj::Global> s{g, {{1.0, 0.0, 0.0}, {1.0 + r0, 0.0, 0.0}}};
        CHECK(near(lj::total_energy(s), -1.0, 1e-12));
    }

    SUBCASE("paper instance initial energy matches the reference value") {
        CHECK(near(lj::total_energy(paper_instance()), -1.8897554125621143, 1e-12));
    }
}

TEST_CASE("momentum is conserved over one step of the paper instance") {
    const auto def = lj::method();
    const auto state = paper_instance();
    const auto next = pm::step(def, state);
    REQUIRE(next.has_value());
    double momentum = 0.0;
    for (const auto& p : next->particles) {
        momentum += p.v;
    }
    CHECK(std::abs(momentum) < 1e-9);
}

TEST_CASE("neighborhood uses the minimum image half-plane") {
    const auto def = lj::method();
    const auto state = paper_instance();
    // the wrap pair: last particle at 17.01 sees the first at distance 1.99
    const auto last = state.particles.size() - 1;
    const auto neighbors = def.neighborhood(state, last);
    CHECK(std::find(neighbors.begin(), neighbors.end(), 0) != neighbors.end());
    // each unordered pair within the cut-off appears exactly once
    std::size_t count = 0;
    for (std::size_t j = 0; j < state.particles.size(); ++j) {
        for (std::size_t k : def.neighborhood(state, j)) {
            const auto back = def.neighborhood(state, k);
            CHECK(std::find(back.begin(), back.end(), j) == back.end());
            ++count;
        }
    }
    CHECK(count > 0);
}

TEST_CASE("cell list backend matches brute force on the paper instance") {
    const auto brute = lj::method(NeighborSearch::brute_force);
    const auto cells = lj::method(NeighborSearch::cell_list);
    const auto state = paper_instance();
    for (std::size_t j = 0; j < state.particles.size(); ++j) {
        CHECK(brute.neighborhood(state, j) == cells.neighborhood(state, j));
    }
}

} // TEST_SUITE
