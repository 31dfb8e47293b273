#pragma once

// Generic particle-method execution engine.
//
// A method is a set of five hooks over a particle type P and a global type
// G. A state is one global value plus an ordered particle tuple. One
// transition applies, in order:
//
//   1. interact_all  — every particle interacts pairwise with the
//      neighbors its neighborhood hook names, as a sequential fold; each
//      pair result is written back before the next pair is evaluated.
//   2. evolve_all    — every particle from the post-interaction tuple is
//      evolved exactly once; the evolve hook may create or destroy
//      particles and may change the global, which threads through the fold.
//   3. evolve_global — one final update of the global value.
//
// A transition is only defined while stop(g) is false; step() reports the
// halted case instead of computing one.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "pm/errors.hpp"
#include "pm/tuples.hpp"

namespace pm {

template <class P, class G>
struct State {
    G global;
    std::vector<P> particles;

    bool operator==(const State&) const = default;
};

// The five hooks. All must be pure: equal inputs give equal outputs, and
// a definition carries no mutable state of its own, so values can be
// copied and moved freely between threads (one run per thread).
//
// evolve additionally receives the particle's position in the tuple it is
// read from; methods that do not need it ignore it.
template <class P, class G>
struct MethodDefinition {
    std::function<IndexTuple(const State<P, G>&, std::size_t)> neighborhood;
    std::function<bool(const G&)> stop;
    std::function<std::pair<P, P>(const G&, const P&, const P&)> interact;
    std::function<std::pair<G, std::vector<P>>(const G&, const P&, std::size_t)> evolve;
    std::function<G(const G&)> evolve_global;
};

// Outcome of one transition attempt: the next state, or nothing when the
// stopping condition already held on the input.
template <class P, class G>
using StepOutcome = std::optional<State<P, G>>;

namespace detail {

template <class P, class G>
void check_position(const State<P, G>& state, std::size_t j, const char* who) {
    if (j >= state.particles.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    std::string(who) + ": position " + std::to_string(j) +
                        " out of range (particle count " +
                        std::to_string(state.particles.size()) + ")");
    }
}

} // namespace detail

// Interaction of the particles at positions j and k: the pair returned by
// the interact hook replaces slots j and k, every other slot is untouched.
template <class P, class G>
std::vector<P> interact_pair(const MethodDefinition<P, G>& def, const State<P, G>& state,
                             std::size_t j, std::size_t k) {
    if (j == k) {
        throw Error(ErrorKind::self_interaction,
                    "interact_pair: particle " + std::to_string(j) +
                        " cannot interact with itself");
    }
    detail::check_position(state, j, "interact_pair");
    detail::check_position(state, k, "interact_pair");

    std::vector<P> out = state.particles;
    auto [pj, pk] = def.interact(state.global, out[j], out[k]);
    out[j] = std::move(pj);
    out[k] = std::move(pk);
    return out;
}

// Interaction of particle j with all its neighbors. The neighborhood is
// evaluated exactly once, on the state as it stands when j's turn begins;
// the particle tuple then threads through the pairwise fold.
template <class P, class G>
std::vector<P> interact_neighbors(const MethodDefinition<P, G>& def, const State<P, G>& state,
                                  std::size_t j) {
    detail::check_position(state, j, "interact_neighbors");
    const IndexTuple neighbors = def.neighborhood(state, j);
    return compose(
        [&](std::vector<P> ps, std::size_t k) {
            return interact_pair(def, State<P, G>{state.global, std::move(ps)}, j, k);
        },
        state.particles, neighbors);
}

// Interactions of all particles with all their neighbors, j ascending.
// Interact preserves the particle count, so positions stay stable for the
// whole phase.
template <class P, class G>
std::vector<P> interact_all(const MethodDefinition<P, G>& def, const State<P, G>& state) {
    IndexTuple all(state.particles.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return compose(
        [&](std::vector<P> ps, std::size_t j) {
            return interact_neighbors(def, State<P, G>{state.global, std::move(ps)}, j);
        },
        state.particles, all);
}

// Evolution of the particle at position j of the fixed tuple `source`; the
// created particles are appended to `acc` and the global is passed along.
template <class P, class G>
std::pair<G, std::vector<P>> evolve_one(const MethodDefinition<P, G>& def, const G& g,
                                        const std::vector<P>& source, std::vector<P> acc,
                                        std::size_t j) {
    if (j >= source.size()) {
        throw Error(ErrorKind::index_out_of_range,
                    "evolve_one: position " + std::to_string(j) + " out of range (source size " +
                        std::to_string(source.size()) + ")");
    }
    auto [g_next, created] = def.evolve(g, source[j], j);
    return {std::move(g_next), concat(std::move(acc), created)};
}

// Evolution of all particles: fold evolve_one over j ascending, reading
// particles from the input tuple and accumulating from (g, ()).
template <class P, class G>
State<P, G> evolve_all(const MethodDefinition<P, G>& def, const State<P, G>& state) {
    State<P, G> out{state.global, {}};
    for (std::size_t j = 0; j < state.particles.size(); ++j) {
        std::tie(out.global, out.particles) =
            evolve_one(def, out.global, state.particles, std::move(out.particles), j);
    }
    return out;
}

// One state transition, or nullopt when stop(g) holds on the input state.
template <class P, class G>
StepOutcome<P, G> step(const MethodDefinition<P, G>& def, const State<P, G>& state) {
    if (def.stop(state.global)) {
        return std::nullopt;
    }
    State<P, G> interacted{state.global, interact_all(def, state)};
    State<P, G> next = evolve_all(def, interacted);
    next.global = def.evolve_global(next.global);
    return next;
}

template <class P, class G>
struct RunResult {
    State<P, G> final_state;      // the state on which stop(g) was true
    std::uint64_t transitions = 0;
};

// Iterate step() until the stopping condition holds. The observer, when
// given, sees every state of the sequence including the initial one,
// together with its transition index.
//
// max_steps is an engine safety guard, not part of the transition
// semantics: reaching it with the stopping condition still false throws.
template <class P, class G>
RunResult<P, G> run(const MethodDefinition<P, G>& def, State<P, G> initial,
                    std::optional<std::uint64_t> max_steps = std::nullopt,
                    const std::function<void(const State<P, G>&, std::uint64_t)>& observer = {}) {
    State<P, G> current = std::move(initial);
    std::uint64_t transitions = 0;
    if (observer) {
        observer(current, transitions);
    }
    while (!def.stop(current.global)) {
        if (max_steps && transitions >= *max_steps) {
            throw Error(ErrorKind::step_limit_exceeded,
                        "run: " + std::to_string(*max_steps) +
                            " transitions performed without reaching the stopping condition");
        }
        StepOutcome<P, G> next = step(def, current);
        current = std::move(*next);
        ++transitions;
        if (observer) {
            observer(current, transitions);
        }
    }
    return {std::move(current), transitions};
}

} // namespace pm
