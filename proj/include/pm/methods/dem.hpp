#pragma once

// Elastic collisions of 1-D spheres of uniform diameter and unit mass.
// Collision partners swap velocities; positions advance by explicit Euler.

#include "pm/kernel.hpp"
#include "pm/methods/neighbor_search.hpp"

namespace pm::dem {

struct Particle {
    double x; // position
    double v; // velocity

    bool operator==(const Particle&) const = default;
};

struct Global {
    double d;  // sphere diameter
    double t;  // current time
    double dt; // time-step size
    double T;  // stopping time

    bool operator==(const Global&) const = default;
};

// Neighborhood: ascending k with 0 < x_k - x_j <= d (asymmetric, so each
// colliding pair interacts once). Stop: t >= T.
MethodDefinition<Particle, Global> method(NeighborSearch search = NeighborSearch::brute_force);

} // namespace pm::dem
