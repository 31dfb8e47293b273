#pragma once

// Particle Strength Exchange discretization of 1-D diffusion
// dw/dt = D d2w/dx2 on equispaced free-space particles, explicit Euler in
// time. Interactions collect the exchange sum into the accumulator dw;
// evolve applies the Euler update and clears the accumulator.

#include "pm/kernel.hpp"
#include "pm/methods/neighbor_search.hpp"

namespace pm::pse {

struct Particle {
    double x;  // position
    double w;  // concentration
    double dw; // exchange accumulator, zero at the start of every interaction phase

    bool operator==(const Particle&) const = default;
};

struct Global {
    double D;   // diffusion constant
    double h;   // inter-particle spacing
    double eps; // kernel width (overlap condition: h/eps <= 1)
    double rc;  // interaction cut-off radius
    double dt;  // time-step size
    double T;   // end time
    double t;   // current time

    bool operator==(const Global&) const = default;
};

// exp(-(xk-xj)^2 / (4 eps^2)); symmetric in its arguments, in (0, 1].
double kernel_weight(double xj, double xk, double eps);

// Exact solution of the diffusion equation for the bundled initial
// condition (the heat kernel at unit time):
//   w(x, t) = (4 pi D (1+t))^(-1/2) exp(-x^2 / (4 D (1+t)))
double analytic_diffusion(double x, double t, double D);

MethodDefinition<Particle, Global> method(NeighborSearch search = NeighborSearch::brute_force);

} // namespace pm::pse
