#pragma once

// JSON Lines state traces: one state per line,
//   {"step":N,"global":[...],"particles":[[...],...]}
// with globals in the method's tuple order. Output is byte-deterministic
// for a given run.

#include <cstdint>
#include <ostream>
#include <string>

#include "pm/io/config.hpp"
#include "pm/io/number_format.hpp"

namespace pm::io {

void append_global_array(std::string& out, const dem::Global& g);
void append_global_array(std::string& out, const pse::Global& g);
void append_global_array(std::string& out, const lj::Global& g);
void append_global_array(std::string& out, const tri::Global& g);
void append_global_array(std::string& out, const gauss::Global& g);

void append_particle(std::string& out, const dem::Particle& p);
void append_particle(std::string& out, const pse::Particle& p);
void append_particle(std::string& out, const lj::Particle& p);
void append_particle(std::string& out, const tri::Particle& p);
void append_particle(std::string& out, const gauss::Particle& p);

template <class P, class G>
void append_trace_record(std::string& out, std::uint64_t step, const State<P, G>& state) {
    out += "{\"step\":";
    append_number(out, static_cast<std::int64_t>(step));
    out += ",\"global\":[";
    append_global_array(out, state.global);
    out += "],\"particles\":[";
    for (std::size_t i = 0; i < state.particles.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        append_particle(out, state.particles[i]);
    }
    out += "]}\n";
}

struct RunSummary {
    std::string method;
    std::uint64_t transitions = 0;
    std::size_t final_particle_count = 0;
};

// Run a loaded instance to its stopping condition, writing every
// trace_every-th state (always including the final one) to the sink.
RunSummary run_with_trace(const LoadedInstance& loaded, std::ostream& sink);

} // namespace pm::io
