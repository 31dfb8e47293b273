#pragma once

// Lennard-Jones molecular dynamics in one periodic dimension with
// eps = sigma = m = 1. Interactions accumulate pair accelerations under
// the minimum image; evolve advances velocity then position and wraps
// back into [0, D).

#include "pm/kernel.hpp"
#include "pm/methods/neighbor_search.hpp"

namespace pm::lj {

struct Particle {
    double x; // position in [0, D)
    double v; // velocity
    double a; // acceleration accumulator, zero at the start of every interaction phase

    bool operator==(const Particle&) const = default;
};

struct Global {
    double rc; // interaction cut-off radius, 0 < rc <= D/2
    double D;  // periodic domain length
    double dt; // time-step size
    double T;  // end time
    double t;  // current time

    bool operator==(const Global&) const = default;
};

// Signed minimum-image separation from x to y on a ring of length D:
// y-x-D when y-x > D/2, y-x+D when y-x <= -D/2, plain y-x otherwise.
double directed_distance(double x, double y, double D);

// Remainder r of a = b*c + r with integer c and r in [0, |b|).
double real_mod(double a, double b);

// 24 r^-7 - 48 r^-13 (odd in r); throws on r == 0.
double acceleration(double r);

MethodDefinition<Particle, Global> method(NeighborSearch search = NeighborSearch::brute_force);

// Kinetic plus truncated pair potential,
//   sum_j v_j^2/2 + sum_pairs 4 (r^-12 - r^-6),
// each unordered pair within the cut-off counted once.
double total_energy(const State<Particle, Global>& state);

} // namespace pm::lj
