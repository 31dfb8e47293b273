#include <doctest.h>

#include <array>
#include <cmath>

#include "pm/kernel.hpp"
#include "pm/methods/gauss.hpp"

#include "gauss_oracle.hpp"
#include "helpers.hpp"

using namespace pm;
using pmtest::near;

namespace {

State<gauss::Particle, gauss::Global> paper_instance() {
    return {{3, 1, 1},
            {{{1.0, 2.0, 5.0}, 2.0, 0.0},
             {{1.0, -1.0, -4.0}, -4.0, 0.0},
             {{2.0, 6.0, 16.0}, 8.0, 0.0}}};
}

State<gauss::Particle, gauss::Global> system_state(const std::vector<std::vector<double>>& A,
                                                   const std::vector<double>& b) {
    State<gauss::Particle, gauss::Global> s{{static_cast<std::int64_t>(A.size()), 1, 1}, {}};
    for (std::size_t i = 0; i < A.size(); ++i) {
        s.particles.push_back({A[i], b[i], 0.0});
    }
    return s;
}

// random integer system whose no-pivoting elimination path stays exactly
// representable in binary64: A = L * U with unit lower-triangular integer L
// and integer U whose diagonal entries are powers of two. Elimination
// multipliers are then integers and pivot divisions exact, so the method's
// exact-zero tests behave as in rational arithmetic.
State<gauss::Particle, gauss::Global> random_lu_system(std::mt19937& rng, std::size_t n,
                                                       std::vector<std::vector<double>>& A,
                                                       std::vector<double>& b) {
    std::uniform_int_distribution<int> small(-3, 3);
    std::uniform_int_distribution<int> upper(-4, 4);
    std::uniform_int_distribution<int> pick(0, 5);
    const std::array<double, 6> diag{1.0, 2.0, 4.0, -1.0, -2.0, -4.0};

    std::vector<std::vector<double>> L(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<double>> U(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        L[i][i] = 1.0;
        for (std::size_t j = 0; j < i; ++j) {
            L[i][j] = small(rng);
        }
        U[i][i] = diag[static_cast<std::size_t>(pick(rng))];
        for (std::size_t j = i + 1; j < n; ++j) {
            U[i][j] = upper(rng);
        }
    }
    A.assign(n, std::vector<double>(n, 0.0));
    b.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                A[i][j] += L[i][k] * U[k][j];
            }
        }
        b[i] = small(rng) * 3 + upper(rng);
    }
    return system_state(A, b);
}

} // namespace

TEST_SUITE("gauss") {

TEST_CASE("interact cases") {
    const auto def = gauss::method(3);

    SUBCASE("elimination below a nonzero pivot") {
        const gauss::Global g{3, 1, 1};
        const gauss::Particle pj{{1.0, 2.0, 5.0}, 2.0, 0.0};
        const gauss::Particle pk{{1.0, -1.0, -4.0}, -4.0, 0.0};
        const auto [qj, qk] = def.interact(g, pj, pk);
        CHECK(qj == pj);
        CHECK(qk.a == std::vector<double>{0.0, -3.0, -9.0});
        CHECK(qk.b == -6.0);
    }

    SUBCASE("swap on zero pivot against a nonzero candidate") {
        const gauss::Global g{3, 2, 2};
        const gauss::Particle pj{{0.0, 0.0, 2.5}, 1.5, 0.0};
        const gauss::Particle pk{{0.0, -5.0, -1.5}, 1.5, 0.0};
        const auto [qj, qk] = def.interact(g, pj, pk);
        CHECK(qj == pk);
        CHECK(qk == pj);
    }

    SUBCASE("no-op on a doubly zero column") {
        const gauss::Global g{3, 2, 2};
        const gauss::Particle pj{{0.0, 0.0, 2.5}, 1.5, 0.0};
        const gauss::Particle pk{{0.0, 0.0, -1.5}, 0.5, 0.0};
        const auto [qj, qk] = def.interact(g, pj, pk);
        CHECK(qj == pj);
        CHECK(qk == pk);
    }

    SUBCASE("back-substitution through the leading-one column") {
        const gauss::Global g{3, 4, 2};
        const gauss::Particle pj{{0.0, 1.0, 3.0}, 2.0, 2.0};
        const gauss::Particle pk{{1.0, 2.0, 5.0}, 2.0, 1.0};
        const auto [qj, qk] = def.interact(g, pj, pk);
        CHECK(qj == pj);
        CHECK(qk.a == std::vector<double>{1.0, 0.0, -1.0});
        CHECK(qk.b == -2.0);
        CHECK(qk.mu == 1.0);
    }

    SUBCASE("coefficients left of the active column are untouched") {
        const gauss::Global g{3, 2, 1};
        const gauss::Particle pj{{7.0, 1.0, 3.0}, 2.0, 0.0};
        const gauss::Particle pk{{9.0, 2.0, 5.0}, 2.0, 0.0};
        const auto [qj, qk] = def.interact(g, pj, pk);
        CHECK(qk.a[0] == 9.0);
    }
}

TEST_CASE("neighborhood shape") {
    const auto def = gauss::method(4);
    State<gauss::Particle, gauss::Global> s{{4, 1, 2},
                                            {{{1, 0, 0, 0}, 0, 0},
                                             {{0, 1, 0, 0}, 0, 0},
                                             {{0, 0, 1, 0}, 0, 0},
                                             {{0, 0, 0, 1}, 0, 0}}};
    SUBCASE("rows below in reverse order while eliminating") {
        CHECK(def.neighborhood(s, 1) == IndexTuple{3, 2});
        CHECK(def.neighborhood(s, 0).empty());
        CHECK(def.neighborhood(s, 3).empty());
    }
    SUBCASE("empty when the current row is the last") {
        s.global.n = 4;
        CHECK(def.neighborhood(s, 3).empty());
    }
    SUBCASE("rows above in ascending order while back-substituting") {
        s.global.m = 5;
        s.global.n = 3;
        CHECK(def.neighborhood(s, 2) == IndexTuple{0, 1});
        CHECK(def.neighborhood(s, 0).empty());
    }
    SUBCASE("top row has no neighbors in the backward sweep") {
        s.global.m = 5;
        s.global.n = 1;
        CHECK(def.neighborhood(s, 0).empty());
    }
}

TEST_CASE("evolve normalizes the current row and steers n") {
    const auto def = gauss::method(3);

    SUBCASE("pivot row gains a leading one and mu") {
        const gauss::Global g{3, 2, 2};
        const auto [g2, rows] = def.evolve(g, {{0.0, -3.0, -9.0}, -6.0, 0.0}, 1);
        CHECK(g2.n == 3);
        REQUIRE(rows.size() == 1);
        CHECK(rows[0].a == std::vector<double>{0.0, 1.0, 3.0});
        CHECK(rows[0].b == 2.0);
        CHECK(rows[0].mu == 2.0);
    }

    SUBCASE("last column with a zero entry moves upward early") {
        const gauss::Global g{3, 3, 3};
        const auto [g2, rows] = def.evolve(g, {{0.0, 0.0, 0.0}, 0.0, 0.0}, 2);
        CHECK(g2.n == 2);
        CHECK(rows[0].a == std::vector<double>{0.0, 0.0, 0.0});
    }

    SUBCASE("other rows pass through unchanged") {
        const gauss::Global g{3, 2, 2};
        const gauss::Particle p{{1.0, 2.0, 5.0}, 2.0, 1.0};
        const auto [g2, rows] = def.evolve(g, p, 0);
        CHECK(g2 == g);
        CHECK(rows[0] == p);
    }
}

TEST_CASE("paper 3x3 instance: full state sequence") {
    const auto def = gauss::method(3);
    const auto initial = paper_instance();

    using Row = std::array<double, 4>;
    using Snapshot = std::array<Row, 3>;
    const Snapshot s0{{{1, 2, 5, 2}, {1, -1, -4, -4}, {2, 6, 16, 8}}};
    const Snapshot s1{{{1, 2, 5, 2}, {0, -3, -9, -6}, {0, 2, 6, 4}}};
    // elimination of column 2 and normalization of row 2 are one transition
    const Snapshot s2{{{1, 2, 5, 2}, {0, 1, 3, 2}, {0, 0, 0, 0}}};
    const Snapshot s4{{{1, 0, -1, -2}, {0, 1, 3, 2}, {0, 0, 0, 0}}};
    const std::array<Snapshot, 5> expected{s0, s1, s2, s2, s4};
    const std::array<std::array<std::int64_t, 3>, 5> globals{
        {{3, 1, 1}, {3, 2, 2}, {3, 3, 3}, {3, 4, 2}, {3, 5, 1}}};

    std::vector<State<gauss::Particle, gauss::Global>> states{initial};
    while (auto next = pm::step(def, states.back())) {
        states.push_back(std::move(*next));
        REQUIRE(states.size() <= 6);
    }
    REQUIRE(states.size() == 5);
    for (std::size_t s = 0; s < 5; ++s) {
        CHECK(states[s].global.N == globals[s][0]);
        CHECK(states[s].global.m == globals[s][1]);
        CHECK(states[s].global.n == globals[s][2]);
        for (std::size_t r = 0; r < 3; ++r) {
            for (std::size_t c = 0; c < 3; ++c) {
                CHECK(near(states[s].particles[r].a[c], expected[s][r][c], 1e-9));
            }
            CHECK(near(states[s].particles[r].b, expected[s][r][3], 1e-9));
        }
    }
    CHECK(states.back().global.n == 1);
    CHECK(states.back().global.m > states.back().global.N);
}

TEST_CASE("swap path: singular leading minor with exact eliminations") {
    const auto def = gauss::method(3);
    const std::vector<std::vector<double>> A{{2, 4, 1}, {1, 2, 3}, {3, 1, 0}};
    const std::vector<double> b{1, 2, 3};
    const auto result = pm::run(def, system_state(A, b), 100);
    const auto oracle = pmtest::rref_exact(A, b);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(near(result.final_state.particles[r].a[c], oracle[r][c].to_double(), 1e-12));
        }
        CHECK(near(result.final_state.particles[r].b, oracle[r][3].to_double(), 1e-12));
    }
}

TEST_CASE("singular system: zero row sorts to the bottom") {
    const auto def = gauss::method(3);
    // row 3 = row 1 + row 2 makes the system consistent with a free variable
    const std::vector<std::vector<double>> A{{1, 2, 1}, {2, 2, 2}, {3, 4, 3}};
    const std::vector<double> b{1, 2, 3};
    const auto result = pm::run(def, system_state(A, b), 100);
    const auto oracle = pmtest::rref_exact(A, b);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            CHECK(near(result.final_state.particles[r].a[c], oracle[r][c].to_double(), 1e-12));
        }
        CHECK(near(result.final_state.particles[r].b, oracle[r][3].to_double(), 1e-12));
    }
    CHECK(result.final_state.particles[2].a == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("random exactly-representable systems match the fraction oracle") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<std::size_t> dim(3, 5);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = dim(rng);
        std::vector<std::vector<double>> A;
        std::vector<double> b;
        const auto s = random_lu_system(rng, n, A, b);
        const auto def = gauss::method(static_cast<std::int64_t>(n));
        const auto result = pm::run(def, s, 10 * n + 10);
        const auto oracle = pmtest::rref_exact(A, b);

        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                CHECK(near(result.final_state.particles[r].a[c], oracle[r][c].to_double(), 1e-9));
            }
            CHECK(near(result.final_state.particles[r].b, oracle[r][n].to_double(), 1e-9));
        }
        // the read-off solution solves the original system
        for (std::size_t r = 0; r < n; ++r) {
            double lhs = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                lhs += A[r][c] * result.final_state.particles[c].b;
            }
            CHECK(near(lhs, b[r], 1e-9));
        }
        CHECK(result.final_state.global.n == 1);
        CHECK(result.final_state.global.m > result.final_state.global.N);
    }
}

TEST_CASE("method dimension must be positive") {
    try {
        static_cast<void>(gauss::method(0));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invariant_violation);
    }
}

} // TEST_SUITE
