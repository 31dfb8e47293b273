#include "pm/io/verify.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "pm/accel/cell_grid.hpp"
#include "pm/io/compare.hpp"
#include "pm/io/config.hpp"
#include "pm/io/number_format.hpp"

namespace pm::io {

namespace {

// Frozen expectations. Time-accumulation counts follow from adding dt in
// binary64 until t >= T; thresholds were derived from independent
// direct-summation reference implementations of the same instances.
constexpr std::uint64_t dem_expected_transitions = 101;
constexpr std::uint64_t pse_expected_transitions = 101;
constexpr std::uint64_t lj_expected_transitions = 100001;
constexpr double pse_linf_threshold = 4.5e-2;
constexpr double lj_energy_drift_threshold = 2.5e-2;

bool near(double value, double expected, double tol) {
    return std::abs(value - expected) <= tol * std::max(1.0, std::abs(expected));
}

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }

    void note(const std::string& what) {
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what;
    }
};

double triangle_area(const tri::Particle& p) {
    const double ax = p.verts[1].x - p.verts[0].x;
    const double ay = p.verts[1].y - p.verts[0].y;
    const double bx = p.verts[2].x - p.verts[0].x;
    const double by = p.verts[2].y - p.verts[0].y;
    return std::abs(ax * by - ay * bx) / 2.0;
}

CaseResult case_notation_calculus() {
    Check c;
    const auto sub = [](int a, int b) { return a - b; };
    c.expect(compose(sub, 9, std::vector<int>{}) == 9, "9 *_- () != 9");
    c.expect(compose(sub, 13, std::vector<int>{3, 4, 1}) == 5, "13 *_- (3,4,1) != 5");
    c.expect(concat(std::vector<int>{1, 2}, {3}) == std::vector<int>({1, 2, 3}),
             "(1,2) o (3) != (1,2,3)");
    const std::vector<int> a{4, 1, 1, 5, 66, 3, 4, 30};
    const auto below5 = subtuple(a, [](const std::vector<int>& t, std::size_t j) {
        return t[j] < 5;
    });
    c.expect(below5 == std::vector<int>({4, 1, 1, 3, 4}), "subtuple under <5 mismatch");
    return {"notation-calculus", c.ok, c.detail};
}

CaseResult case_dem_step() {
    Check c;
    const auto loaded = builtin_example("dem");
    const auto& inst = std::get<Instance<dem::Particle, dem::Global>>(loaded.instance);
    const auto next = step(inst.def, inst.initial);
    c.expect(next.has_value(), "transition unexpectedly halted");
    if (next) {
        const auto& g = next->global;
        c.expect(near(g.d, 0.5, 1e-12) && near(g.t, 0.1, 1e-12) && near(g.dt, 0.1, 1e-12) &&
                     near(g.T, 10.0, 1e-12),
                 "global after one transition != (0.5, 0.1, 0.1, 10)");
        const std::array<std::array<double, 2>, 3> expected{{{-0.1, -1.0}, {0.69, 2.0}, {2.1, 1.0}}};
        c.expect(next->particles.size() == 3, "particle count changed");
        for (std::size_t i = 0; i < expected.size() && i < next->particles.size(); ++i) {
            c.expect(near(next->particles[i].x, expected[i][0], 1e-12) &&
                         near(next->particles[i].v, expected[i][1], 1e-12),
                     "particle " + std::to_string(i) + " mismatch");
        }
    }
    return {"dem-step", c.ok, c.detail};
}

CaseResult case_dem_run() {
    Check c;
    const auto loaded = builtin_example("dem");
    const auto& inst = std::get<Instance<dem::Particle, dem::Global>>(loaded.instance);

    double momentum0 = 0.0;
    double kinetic0 = 0.0;
    for (const auto& p : inst.initial.particles) {
        momentum0 += p.v;
        kinetic0 += p.v * p.v;
    }
    bool conserved = true;
    const auto result = run(inst.def, inst.initial, std::nullopt,
                            std::function<void(const State<dem::Particle, dem::Global>&,
                                               std::uint64_t)>([&](const auto& s, std::uint64_t) {
                                double momentum = 0.0;
                                double kinetic = 0.0;
                                for (const auto& p : s.particles) {
                                    momentum += p.v;
                                    kinetic += p.v * p.v;
                                }
                                conserved = conserved && near(momentum, momentum0, 1e-12) &&
                                            near(kinetic, kinetic0, 1e-12);
                            }));
    c.expect(result.transitions == dem_expected_transitions,
             "expected " + std::to_string(dem_expected_transitions) + " transitions, got " +
                 std::to_string(result.transitions));
    c.expect(conserved, "momentum or kinetic energy drifted beyond 1e-12");
    c.expect(result.final_state.global.t >= result.final_state.global.T, "halted before T");
    return {"dem-run", c.ok, c.detail};
}

CaseResult case_gauss_paper() {
    Check c;
    const auto loaded = builtin_example("gauss");
    const auto& inst = std::get<Instance<gauss::Particle, gauss::Global>>(loaded.instance);

    // State sequence produced by the transition semantics. The elimination
    // of a column and the normalization of its pivot row land in the same
    // transition, so the third state already carries the normalized row 2.
    using Row = std::array<double, 4>;
    using Snapshot = std::array<Row, 3>;
    const Snapshot s0{{{1, 2, 5, 2}, {1, -1, -4, -4}, {2, 6, 16, 8}}};
    const Snapshot s1{{{1, 2, 5, 2}, {0, -3, -9, -6}, {0, 2, 6, 4}}};
    const Snapshot s2{{{1, 2, 5, 2}, {0, 1, 3, 2}, {0, 0, 0, 0}}};
    const Snapshot s4{{{1, 0, -1, -2}, {0, 1, 3, 2}, {0, 0, 0, 0}}};
    const std::array<Snapshot, 5> expected{s0, s1, s2, s2, s4};
    const std::array<std::array<std::int64_t, 3>, 5> expected_globals{
        {{3, 1, 1}, {3, 2, 2}, {3, 3, 3}, {3, 4, 2}, {3, 5, 1}}};

    std::vector<State<gauss::Particle, gauss::Global>> states;
    const auto result =
        run(inst.def, inst.initial, std::nullopt,
            std::function<void(const State<gauss::Particle, gauss::Global>&, std::uint64_t)>(
                [&](const auto& s, std::uint64_t) { states.push_back(s); }));

    c.expect(result.transitions == 4,
             "expected 4 transitions, got " + std::to_string(result.transitions));
    c.expect(states.size() == 5, "expected 5 states");
    for (std::size_t s = 0; s < states.size() && s < 5; ++s) {
        const auto& g = states[s].global;
        c.expect(g.N == expected_globals[s][0] && g.m == expected_globals[s][1] &&
                     g.n == expected_globals[s][2],
                 "global mismatch at state " + std::to_string(s));
        for (std::size_t r = 0; r < 3; ++r) {
            const auto& row = states[s].particles[r];
            for (std::size_t l = 0; l < 3; ++l) {
                c.expect(near(row.a[l], expected[s][r][l], 1e-9),
                         "state " + std::to_string(s) + " row " + std::to_string(r) + " col " +
                             std::to_string(l) + " mismatch");
            }
            c.expect(near(row.b, expected[s][r][3], 1e-9),
                     "state " + std::to_string(s) + " row " + std::to_string(r) + " rhs mismatch");
        }
    }
    const auto& gf = result.final_state.global;
    c.expect(gf.n == 1 && gf.m > gf.N, "did not halt with n = 1 and m > N");
    return {"gauss-paper", c.ok, c.detail};
}

CaseResult case_tri_refine() {
    Check c;
    const auto loaded = builtin_example("tri");
    const auto& inst = std::get<Instance<tri::Particle, tri::Global>>(loaded.instance);

    const auto next = step(inst.def, inst.initial);
    c.expect(next.has_value(), "transition unexpectedly halted");
    if (next) {
        c.expect(next->particles.size() == 4, "expected 4 children");
        struct ExpectedChild {
            std::array<std::array<double, 2>, 3> verts;
            std::array<std::int64_t, 3> beta;
        };
        const std::array<ExpectedChild, 4> expected{{
            {{{{0, 0}, {2, 0}, {1, 2}}}, {-1, 3, -1}},
            {{{{4, 0}, {3, 2}, {2, 0}}}, {-1, 3, -1}},
            {{{{2, 4}, {1, 2}, {3, 2}}}, {-1, 3, -1}},
            {{{{2, 0}, {3, 2}, {1, 2}}}, {1, 2, 0}},
        }};
        for (std::size_t i = 0; i < 4 && i < next->particles.size(); ++i) {
            const auto& p = next->particles[i];
            c.expect(p.iota == static_cast<std::int64_t>(i),
                     "child " + std::to_string(i) + " identifier mismatch");
            c.expect(p.beta == expected[i].beta, "child " + std::to_string(i) + " neighbors mismatch");
            c.expect(p.gamma == std::array<std::int64_t, 3>{0, 0, 0},
                     "child " + std::to_string(i) + " reverse indices not reset");
            for (std::size_t r = 0; r < 3; ++r) {
                c.expect(near(p.verts[r].x, expected[i].verts[r][0], 1e-12) &&
                             near(p.verts[r].y, expected[i].verts[r][1], 1e-12),
                         "child " + std::to_string(i) + " vertex " + std::to_string(r) +
                             " mismatch");
            }
        }
    }

    // three refinements: 64 triangles, conserved area, identifier == position
    auto deep = inst.initial;
    deep.global.T = 3;
    const double area0 = triangle_area(deep.particles[0]);
    bool ids_ok = true;
    bool area_ok = true;
    const auto result =
        run(inst.def, deep, std::nullopt,
            std::function<void(const State<tri::Particle, tri::Global>&, std::uint64_t)>(
                [&](const auto& s, std::uint64_t) {
                    double area = 0.0;
                    for (std::size_t i = 0; i < s.particles.size(); ++i) {
                        ids_ok = ids_ok && s.particles[i].iota == static_cast<std::int64_t>(i);
                        area += triangle_area(s.particles[i]);
                    }
                    area_ok = area_ok && near(area, area0, 1e-12);
                }));
    c.expect(result.final_state.particles.size() == 64, "expected 64 triangles after 3 steps");
    c.expect(ids_ok, "identifier != position at some state");
    c.expect(area_ok, "total area drifted beyond 1e-12");
    return {"tri-refine", c.ok, c.detail};
}

CaseResult case_pse_diffusion() {
    Check c;
    const auto loaded = builtin_example("pse");
    const auto report = compare_analytic(loaded, 10.0);
    c.expect(report.transitions == pse_expected_transitions,
             "expected " + std::to_string(pse_expected_transitions) + " transitions, got " +
                 std::to_string(report.transitions));
    c.expect(report.mass_drift_rel < 1e-10, "mass drift " + format_number(report.mass_drift_rel) +
                                                " exceeds 1e-10");
    c.expect(report.l_inf < pse_linf_threshold,
             "L-inf error " + format_number(report.l_inf) + " exceeds frozen threshold " +
                 format_number(pse_linf_threshold));
    c.note("Linf=" + format_number(report.l_inf) + " mass_drift=" +
           format_number(report.mass_drift_rel));
    return {"pse-diffusion", c.ok, c.detail};
}

CaseResult case_lj_energy() {
    Check c;
    const auto loaded = builtin_example("lj");
    const auto& inst = std::get<Instance<lj::Particle, lj::Global>>(loaded.instance);

    const double e0 = lj::total_energy(inst.initial);
    double max_drift = 0.0;
    double max_momentum = 0.0;
    bool in_domain = true;
    const auto result =
        run(inst.def, inst.initial, std::nullopt,
            std::function<void(const State<lj::Particle, lj::Global>&, std::uint64_t)>(
                [&](const auto& s, std::uint64_t) {
                    double momentum = 0.0;
                    for (const auto& p : s.particles) {
                        in_domain = in_domain && p.x >= 0.0 && p.x < s.global.D;
                        momentum += p.v;
                    }
                    max_momentum = std::max(max_momentum, std::abs(momentum));
                    max_drift =
                        std::max(max_drift, std::abs(lj::total_energy(s) - e0) / std::abs(e0));
                }));
    c.expect(result.transitions == lj_expected_transitions,
             "expected " + std::to_string(lj_expected_transitions) + " transitions, got " +
                 std::to_string(result.transitions));
    c.expect(in_domain, "a position left [0, D)");
    c.expect(max_momentum < 1e-9,
             "momentum drift " + format_number(max_momentum) + " exceeds 1e-9");
    c.expect(max_drift < lj_energy_drift_threshold,
             "energy drift " + format_number(max_drift) + " exceeds frozen threshold " +
                 format_number(lj_energy_drift_threshold));
    c.note("energy_drift=" + format_number(max_drift) + " momentum_drift=" +
           format_number(max_momentum));
    return {"lj-energy", c.ok, c.detail};
}

CaseResult case_accel_equivalence() {
    Check c;
    std::mt19937 rng(271828);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> count(0, 60);

    std::size_t checked = 0;
    for (int trial = 0; trial < 1000 && c.ok; ++trial) {
        const bool periodic = trial % 2 == 1;
        const double domain = 1.0 + 9.0 * unit(rng);
        const double cutoff = periodic ? (0.05 + 0.45 * unit(rng)) * domain : 0.05 + unit(rng);
        const int n = count(rng);
        std::vector<double> xs;
        xs.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            xs.push_back(periodic ? unit(rng) * domain : (unit(rng) - 0.5) * 2.0 * domain);
        }
        const auto grid =
            accel::build_grid(xs, cutoff, periodic ? std::optional<double>(domain) : std::nullopt);

        const bool symmetric = trial % 3 == 0;
        const auto predicate = [&](double xj, double xk) {
            const double d = periodic ? lj::directed_distance(xj, xk, domain) : xk - xj;
            return symmetric ? (0.0 < std::abs(d) && std::abs(d) <= cutoff)
                             : (0.0 < d && d <= cutoff);
        };
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const auto fast = accel::range_neighbors(grid, xs, j, predicate);
            const auto brute = index_tuple(xs.size(), [&](std::size_t k) {
                return k != j && predicate(xs[j], xs[k]);
            });
            ++checked;
            if (fast != brute) {
                c.expect(false, "mismatch at trial " + std::to_string(trial) + " particle " +
                                    std::to_string(j));
                break;
            }
        }
    }
    c.note(std::to_string(checked) + " neighborhoods compared");
    return {"accel-equivalence", c.ok, c.detail};
}

} // namespace

std::vector<std::string> verify_case_names() {
    return {"notation-calculus", "dem-step",      "dem-run",   "gauss-paper",
            "tri-refine",        "pse-diffusion", "lj-energy", "accel-equivalence"};
}

CaseResult verify_builtin(const std::string& name) {
    if (name == "notation-calculus") {
        return case_notation_calculus();
    }
    if (name == "dem-step") {
        return case_dem_step();
    }
    if (name == "dem-run") {
        return case_dem_run();
    }
    if (name == "gauss-paper") {
        return case_gauss_paper();
    }
    if (name == "tri-refine") {
        return case_tri_refine();
    }
    if (name == "pse-diffusion") {
        return case_pse_diffusion();
    }
    if (name == "lj-energy") {
        return case_lj_energy();
    }
    if (name == "accel-equivalence") {
        return case_accel_equivalence();
    }
    throw Error(ErrorKind::unknown_case, "unknown verification case `" + name + "`");
}

} // namespace pm::io
