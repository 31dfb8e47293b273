#pragma once

// Midpoint refinement of a 2-D triangulation, one particle per triangle.
// Interactions exchange reverse indices (which neighbor slot this triangle
// occupies from its neighbor's point of view); evolve replaces every
// triangle with its four children.
//
// The engine relies on the identifier invariant iota == tuple position:
// children of the particle at position j are 4j..4j+3 and land exactly
// there, so neighbor identifiers double as positions.

#include <array>
#include <cstdint>

#include "pm/kernel.hpp"

namespace pm::tri {

struct Vec2 {
    double x;
    double y;

    bool operator==(const Vec2&) const = default;
};

constexpr std::int64_t no_neighbor = -1;

struct Particle {
    std::int64_t iota;                 // triangle identifier, == tuple position
    std::array<Vec2, 3> verts;         // corner vertices
    std::array<std::int64_t, 3> beta;  // face-neighbor identifiers, -1 when open
    std::array<std::int64_t, 3> gamma; // reverse indices, each in {0,1,2}

    bool operator==(const Particle&) const = default;
};

struct Global {
    std::int64_t T; // refinement steps to perform
    std::int64_t t; // current refinement step

    bool operator==(const Global&) const = default;
};

MethodDefinition<Particle, Global> method();

} // namespace pm::tri
