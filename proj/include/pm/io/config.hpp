#pragma once

// Instance configuration: a JSON document with top-level keys `method`,
// `global` (named fields), `particles` (arrays in the method's field
// order), `trace_every` and optional `max_steps`.
//
//   dem_collision   particle [x, v]
//   pse_diffusion   particle [x, w, dw]
//   lj_md           particle [x, v, a]
//   triangulation   particle [iota, [[x,y],[x,y],[x,y]], [b0,b1,b2], [g0,g1,g2]]
//   gauss_elim      particle [[a1..aN], b, mu]

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pm/kernel.hpp"
#include "pm/methods/dem.hpp"
#include "pm/methods/gauss.hpp"
#include "pm/methods/lj.hpp"
#include "pm/methods/neighbor_search.hpp"
#include "pm/methods/pse.hpp"
#include "pm/methods/tri.hpp"

namespace pm::io {

struct TraceOptions {
    std::uint64_t trace_every = 1; // emit every Nth state; 0 = final state only
    std::optional<std::uint64_t> max_steps;
};

template <class P, class G>
struct Instance {
    MethodDefinition<P, G> def;
    State<P, G> initial;
};

using AnyInstance = std::variant<Instance<dem::Particle, dem::Global>,
                                 Instance<pse::Particle, pse::Global>,
                                 Instance<lj::Particle, lj::Global>,
                                 Instance<tri::Particle, tri::Global>,
                                 Instance<gauss::Particle, gauss::Global>>;

struct LoadedInstance {
    std::string method; // canonical method name
    TraceOptions options;
    AnyInstance instance;
};

// Parse and validate a config document, construct the selected method and
// its initial state. Violated load-time invariants are reported with the
// offending field named.
LoadedInstance load_instance(const std::string& text,
                             NeighborSearch search = NeighborSearch::brute_force);

// Canonical config document for an instance; load_instance of the result
// reproduces the instance field for field.
std::string serialize_config(const LoadedInstance& loaded);

// The bundled example instances: dem, pse, lj, tri, gauss.
LoadedInstance builtin_example(const std::string& name,
                               NeighborSearch search = NeighborSearch::brute_force);
std::vector<std::string> builtin_example_names();

} // namespace pm::io
