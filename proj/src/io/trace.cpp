#include "pm/io/trace.hpp"

#include <optional>

namespace pm::io {

void append_global_array(std::string& out, const dem::Global& g) {
    append_number(out, g.d);
    out += ',';
    append_number(out, g.t);
    out += ',';
    append_number(out, g.dt);
    out += ',';
    append_number(out, g.T);
}

void append_global_array(std::string& out, const pse::Global& g) {
    append_number(out, g.D);
    out += ',';
    append_number(out, g.h);
    out += ',';
    append_number(out, g.eps);
    out += ',';
    append_number(out, g.rc);
    out += ',';
    append_number(out, g.dt);
    out += ',';
    append_number(out, g.T);
    out += ',';
    append_number(out, g.t);
}

void append_global_array(std::string& out, const lj::Global& g) {
    append_number(out, g.rc);
    out += ',';
    append_number(out, g.D);
    out += ',';
    append_number(out, g.dt);
    out += ',';
    append_number(out, g.T);
    out += ',';
    append_number(out, g.t);
}

void append_global_array(std::string& out, const tri::Global& g) {
    append_number(out, g.T);
    out += ',';
    append_number(out, g.t);
}

void append_global_array(std::string& out, const gauss::Global& g) {
    append_number(out, g.N);
    out += ',';
    append_number(out, g.m);
    out += ',';
    append_number(out, g.n);
}

void append_particle(std::string& out, const dem::Particle& p) {
    out += '[';
    append_number(out, p.x);
    out += ',';
    append_number(out, p.v);
    out += ']';
}

void append_particle(std::string& out, const pse::Particle& p) {
    out += '[';
    append_number(out, p.x);
    out += ',';
    append_number(out, p.w);
    out += ',';
    append_number(out, p.dw);
    out += ']';
}

void append_particle(std::string& out, const lj::Particle& p) {
    out += '[';
    append_number(out, p.x);
    out += ',';
    append_number(out, p.v);
    out += ',';
    append_number(out, p.a);
    out += ']';
}

void append_particle(std::string& out, const tri::Particle& p) {
    out += '[';
    append_number(out, p.iota);
    out += ",[";
    for (std::size_t r = 0; r < 3; ++r) {
        if (r > 0) {
            out += ',';
        }
        out += '[';
        append_number(out, p.verts[r].x);
        out += ',';
        append_number(out, p.verts[r].y);
        out += ']';
    }
    out += "],[";
    for (std::size_t r = 0; r < 3; ++r) {
        if (r > 0) {
            out += ',';
        }
        append_number(out, p.beta[r]);
    }
    out += "],[";
    for (std::size_t r = 0; r < 3; ++r) {
        if (r > 0) {
            out += ',';
        }
        append_number(out, p.gamma[r]);
    }
    out += "]]";
}

void append_particle(std::string& out, const gauss::Particle& p) {
    out += "[[";
    for (std::size_t l = 0; l < p.a.size(); ++l) {
        if (l > 0) {
            out += ',';
        }
        append_number(out, p.a[l]);
    }
    out += "],";
    append_number(out, p.b);
    out += ',';
    append_number(out, p.mu);
    out += ']';
}

RunSummary run_with_trace(const LoadedInstance& loaded, std::ostream& sink) {
    RunSummary summary;
    summary.method = loaded.method;
    const std::uint64_t every = loaded.options.trace_every;

    std::visit(
        [&](const auto& inst) {
            std::optional<std::uint64_t> last_written;
            std::string line;
            const auto emit = [&](const auto& state, std::uint64_t s) {
                line.clear();
                append_trace_record(line, s, state);
                sink.write(line.data(), static_cast<std::streamsize>(line.size()));
                if (!sink.good()) {
                    throw Error(ErrorKind::io_error, "trace sink write failed");
                }
                last_written = s;
            };
            const auto result = pm::run(
                inst.def, inst.initial, loaded.options.max_steps,
                std::function<void(const decltype(inst.initial)&, std::uint64_t)>(
                    [&](const auto& state, std::uint64_t s) {
                        if (every > 0 && s % every == 0) {
                            emit(state, s);
                        }
                    }));
            if (!last_written || *last_written != result.transitions) {
                emit(result.final_state, result.transitions);
            }
            sink.flush();
            if (!sink.good()) {
                throw Error(ErrorKind::io_error, "trace sink flush failed");
            }
            summary.transitions = result.transitions;
            summary.final_particle_count = result.final_state.particles.size();
        },
        loaded.instance);
    return summary;
}

} // namespace pm::io
