#include "pm/io/config.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "pm/io/number_format.hpp"
#include "pm/io/trace.hpp"

namespace pm::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

const json& require(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) {
        fail(ErrorKind::parse_error, std::string("config: missing field `") + key + "`");
    }
    return obj.at(key);
}

double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) {
        fail(ErrorKind::parse_error, "config: " + where + " must be a number");
    }
    return v.get<double>();
}

double num_field(const json& obj, const char* key, const std::string& where) {
    const double x = as_number(require(obj, key), where + "." + key);
    if (!std::isfinite(x)) {
        fail(ErrorKind::invariant_violation, "config: " + where + "." + key + " must be finite");
    }
    return x;
}

std::int64_t as_integer(const json& v, const std::string& where) {
    const double x = as_number(v, where);
    if (!std::isfinite(x) || x != std::floor(x) || std::abs(x) > 9.0e18) {
        fail(ErrorKind::parse_error, "config: " + where + " must be an integer");
    }
    return static_cast<std::int64_t>(x);
}

std::int64_t int_field(const json& obj, const char* key, const std::string& where) {
    return as_integer(require(obj, key), where + "." + key);
}

const json& particle_array(const json& p, std::size_t expected, const std::string& where) {
    if (!p.is_array() || p.size() != expected) {
        fail(ErrorKind::parse_error,
             "config: " + where + " must be an array of " + std::to_string(expected) + " entries");
    }
    return p;
}

void check(bool ok, const std::string& field, const std::string& what) {
    if (!ok) {
        fail(ErrorKind::invariant_violation, "config: " + field + ": " + what);
    }
}

// --- per-method decoding ---------------------------------------------------

Instance<dem::Particle, dem::Global> load_dem(const json& global, const json& particles,
                                              NeighborSearch search) {
    dem::Global g{num_field(global, "d", "global"), num_field(global, "t", "global"),
                  num_field(global, "dt", "global"), num_field(global, "T", "global")};
    check(g.d > 0.0, "global.d", "sphere diameter must be positive");
    check(g.dt > 0.0, "global.dt", "time step must be positive");
    check(g.T >= 0.0, "global.T", "stopping time must be nonnegative");

    std::vector<dem::Particle> ps;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const std::string where = "particles[" + std::to_string(i) + "]";
        const json& p = particle_array(particles.at(i), 2, where);
        dem::Particle particle{as_number(p.at(0), where + "[0]"), as_number(p.at(1), where + "[1]")};
        check(std::isfinite(particle.x) && std::isfinite(particle.v), where, "must be finite");
        ps.push_back(particle);
    }
    return {dem::method(search), {g, std::move(ps)}};
}

Instance<pse::Particle, pse::Global> load_pse(const json& global, const json& particles,
                                              NeighborSearch search) {
    pse::Global g{num_field(global, "D", "global"),  num_field(global, "h", "global"),
                  num_field(global, "eps", "global"), num_field(global, "rc", "global"),
                  num_field(global, "dt", "global"),  num_field(global, "T", "global"),
                  num_field(global, "t", "global")};
    check(g.D > 0.0, "global.D", "diffusion constant must be positive");
    check(g.h > 0.0, "global.h", "particle spacing must be positive");
    check(g.eps > 0.0, "global.eps", "kernel width must be positive");
    check(g.rc > 0.0, "global.rc", "cut-off radius must be positive");
    check(g.dt > 0.0, "global.dt", "time step must be positive");
    check(g.h / g.eps <= 1.0, "global.eps",
          "overlap condition violated (h/eps = " + format_number(g.h / g.eps) + " > 1)");

    std::vector<pse::Particle> ps;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const std::string where = "particles[" + std::to_string(i) + "]";
        const json& p = particle_array(particles.at(i), 3, where);
        pse::Particle particle{as_number(p.at(0), where + "[0]"), as_number(p.at(1), where + "[1]"),
                               as_number(p.at(2), where + "[2]")};
        check(std::isfinite(particle.x) && std::isfinite(particle.w) && std::isfinite(particle.dw),
              where, "must be finite");
        ps.push_back(particle);
    }
    return {pse::method(search), {g, std::move(ps)}};
}

Instance<lj::Particle, lj::Global> load_lj(const json& global, const json& particles,
                                           NeighborSearch search) {
    lj::Global g{num_field(global, "rc", "global"), num_field(global, "D", "global"),
                 num_field(global, "dt", "global"), num_field(global, "T", "global"),
                 num_field(global, "t", "global")};
    check(g.D > 0.0, "global.D", "domain length must be positive");
    check(g.rc > 0.0 && g.rc <= g.D / 2.0, "global.rc",
          "cut-off must satisfy 0 < rc <= D/2 for an unambiguous minimum image");
    check(g.dt > 0.0, "global.dt", "time step must be positive");

    std::vector<lj::Particle> ps;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const std::string where = "particles[" + std::to_string(i) + "]";
        const json& p = particle_array(particles.at(i), 3, where);
        lj::Particle particle{as_number(p.at(0), where + "[0]"), as_number(p.at(1), where + "[1]"),
                              as_number(p.at(2), where + "[2]")};
        check(std::isfinite(particle.x) && std::isfinite(particle.v) && std::isfinite(particle.a),
              where, "must be finite");
        ps.push_back(particle);
    }
    return {lj::method(search), {g, std::move(ps)}};
}

Instance<tri::Particle, tri::Global> load_tri(const json& global, const json& particles) {
    tri::Global g{int_field(global, "T", "global"), int_field(global, "t", "global")};
    check(g.T >= 0, "global.T", "refinement step count must be nonnegative");
    check(g.t >= 0, "global.t", "current refinement step must be nonnegative");

    std::vector<tri::Particle> ps;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const std::string where = "particles[" + std::to_string(i) + "]";
        const json& p = particle_array(particles.at(i), 4, where);
        tri::Particle particle{};
        particle.iota = as_integer(p.at(0), where + "[0]");
        check(particle.iota == static_cast<std::int64_t>(i), where + "[0]",
              "triangle identifier must equal its position in the particle list");
        const json& verts = particle_array(p.at(1), 3, where + "[1]");
        for (std::size_t r = 0; r < 3; ++r) {
            const json& v = particle_array(verts.at(r), 2, where + "[1]");
            particle.verts[r] = {as_number(v.at(0), where + "[1]"), as_number(v.at(1), where + "[1]")};
            check(std::isfinite(particle.verts[r].x) && std::isfinite(particle.verts[r].y),
                  where + "[1]", "vertices must be finite");
        }
        const json& beta = particle_array(p.at(2), 3, where + "[2]");
        const json& gamma = particle_array(p.at(3), 3, where + "[3]");
        for (std::size_t r = 0; r < 3; ++r) {
            particle.beta[r] = as_integer(beta.at(r), where + "[2]");
            particle.gamma[r] = as_integer(gamma.at(r), where + "[3]");
            check(particle.beta[r] >= -1, where + "[2]", "neighbor identifiers must be >= -1");
            check(particle.gamma[r] >= 0 && particle.gamma[r] <= 2, where + "[3]",
                  "reverse indices must lie in {0,1,2}");
        }
        ps.push_back(particle);
    }
    return {tri::method(), {g, std::move(ps)}};
}

Instance<gauss::Particle, gauss::Global> load_gauss(const json& global, const json& particles) {
    gauss::Global g{int_field(global, "N", "global"), int_field(global, "m", "global"),
                    int_field(global, "n", "global")};
    check(g.N >= 1, "global.N", "matrix dimension must be at least 1");
    check(g.m >= 1, "global.m", "current column must be at least 1");
    check(g.n >= 1 && g.n <= g.N, "global.n", "current row must lie in 1..N");
    check(static_cast<std::int64_t>(particles.size()) == g.N, "particles",
          "expected exactly N rows");

    std::vector<gauss::Particle> ps;
    for (std::size_t i = 0; i < particles.size(); ++i) {
        const std::string where = "particles[" + std::to_string(i) + "]";
        const json& p = particle_array(particles.at(i), 3, where);
        const json& coeffs = p.at(0);
        if (!coeffs.is_array() || static_cast<std::int64_t>(coeffs.size()) != g.N) {
            fail(ErrorKind::invariant_violation,
                 "config: " + where + "[0]: coefficient row must have exactly N entries");
        }
        gauss::Particle particle;
        for (std::size_t l = 0; l < coeffs.size(); ++l) {
            particle.a.push_back(as_number(coeffs.at(l), where + "[0]"));
            check(std::isfinite(particle.a.back()), where + "[0]", "must be finite");
        }
        particle.b = as_number(p.at(1), where + "[1]");
        particle.mu = as_number(p.at(2), where + "[2]");
        check(std::isfinite(particle.b) && std::isfinite(particle.mu), where, "must be finite");
        ps.push_back(std::move(particle));
    }
    return {gauss::method(g.N), {g, std::move(ps)}};
}

// --- per-method encoding ---------------------------------------------------

void append_pair(std::string& out, const char* key, double v, bool first = false) {
    if (!first) {
        out += ", ";
    }
    out += '"';
    out += key;
    out += "\": ";
    append_number(out, v);
}

void append_pair(std::string& out, const char* key, std::int64_t v, bool first = false) {
    if (!first) {
        out += ", ";
    }
    out += '"';
    out += key;
    out += "\": ";
    append_number(out, v);
}

void append_global_fields(std::string& out, const dem::Global& g) {
    append_pair(out, "d", g.d, true);
    append_pair(out, "t", g.t);
    append_pair(out, "dt", g.dt);
    append_pair(out, "T", g.T);
}

void append_global_fields(std::string& out, const pse::Global& g) {
    append_pair(out, "D", g.D, true);
    append_pair(out, "h", g.h);
    append_pair(out, "eps", g.eps);
    append_pair(out, "rc", g.rc);
    append_pair(out, "dt", g.dt);
    append_pair(out, "T", g.T);
    append_pair(out, "t", g.t);
}

void append_global_fields(std::string& out, const lj::Global& g) {
    append_pair(out, "rc", g.rc, true);
    append_pair(out, "D", g.D);
    append_pair(out, "dt", g.dt);
    append_pair(out, "T", g.T);
    append_pair(out, "t", g.t);
}

void append_global_fields(std::string& out, const tri::Global& g) {
    append_pair(out, "T", g.T, true);
    append_pair(out, "t", g.t);
}

void append_global_fields(std::string& out, const gauss::Global& g) {
    append_pair(out, "N", g.N, true);
    append_pair(out, "m", g.m);
    append_pair(out, "n", g.n);
}

} // namespace

LoadedInstance load_instance(const std::string& text, NeighborSearch search) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::parse_error, std::string("config: ") + e.what());
    }
    if (!doc.is_object()) {
        fail(ErrorKind::parse_error, "config: document must be a JSON object");
    }

    const json& method_name = require(doc, "method");
    if (!method_name.is_string()) {
        fail(ErrorKind::parse_error, "config: method must be a string");
    }
    const json& global = require(doc, "global");
    const json& particles = require(doc, "particles");
    if (!particles.is_array()) {
        fail(ErrorKind::parse_error, "config: particles must be an array");
    }

    LoadedInstance out;
    out.method = method_name.get<std::string>();

    if (doc.contains("trace_every") && !doc.at("trace_every").is_null()) {
        const std::int64_t n = as_integer(doc.at("trace_every"), "trace_every");
        check(n >= 0, "trace_every", "must be nonnegative");
        out.options.trace_every = static_cast<std::uint64_t>(n);
    }
    if (doc.contains("max_steps") && !doc.at("max_steps").is_null()) {
        const std::int64_t n = as_integer(doc.at("max_steps"), "max_steps");
        check(n >= 0, "max_steps", "must be nonnegative");
        out.options.max_steps = static_cast<std::uint64_t>(n);
    }

    if (out.method == "dem_collision") {
        out.instance = load_dem(global, particles, search);
    } else if (out.method == "pse_diffusion") {
        out.instance = load_pse(global, particles, search);
    } else if (out.method == "lj_md") {
        out.instance = load_lj(global, particles, search);
    } else if (out.method == "triangulation") {
        out.instance = load_tri(global, particles);
    } else if (out.method == "gauss_elim") {
        out.instance = load_gauss(global, particles);
    } else {
        fail(ErrorKind::unknown_method, "config: unknown method `" + out.method + "`");
    }
    return out;
}

std::string serialize_config(const LoadedInstance& loaded) {
    std::string out = "{\n  \"method\": \"" + loaded.method + "\",\n  \"global\": {";
    std::visit([&](const auto& inst) { append_global_fields(out, inst.initial.global); },
               loaded.instance);
    out += "},\n  \"particles\": [\n";
    std::visit(
        [&](const auto& inst) {
            const auto& ps = inst.initial.particles;
            for (std::size_t i = 0; i < ps.size(); ++i) {
                out += "    ";
                append_particle(out, ps[i]);
                if (i + 1 < ps.size()) {
                    out += ',';
                }
                out += '\n';
            }
        },
        loaded.instance);
    out += "  ],\n  \"trace_every\": ";
    append_number(out, static_cast<std::int64_t>(loaded.options.trace_every));
    if (loaded.options.max_steps) {
        out += ",\n  \"max_steps\": ";
        append_number(out, static_cast<std::int64_t>(*loaded.options.max_steps));
    }
    out += "\n}\n";
    return out;
}

LoadedInstance builtin_example(const std::string& name, NeighborSearch search) {
    LoadedInstance out;
    if (name == "dem") {
        out.method = "dem_collision";
        out.options.trace_every = 1;
        out.instance = Instance<dem::Particle, dem::Global>{
            dem::method(search),
            {{0.5, 0.0, 0.1, 10.0}, {{0.0, 2.0}, {0.49, -1.0}, {2.0, 1.0}}}};
    } else if (name == "pse") {
        out.method = "pse_diffusion";
        out.options.trace_every = 10;
        pse::Global g{0.01, 0.1, 0.1, 0.4, 0.1, 10.0, 0.0};
        std::vector<pse::Particle> ps;
        for (int j = 0; j < 31; ++j) {
            const double x = static_cast<double>(j) * g.h - 1.5;
            const double w = std::exp(-(x * x) / (4.0 * g.D)) /
                             std::sqrt(4.0 * std::numbers::pi * g.D);
            ps.push_back({x, w, 0.0});
        }
        out.instance = Instance<pse::Particle, pse::Global>{pse::method(search), {g, std::move(ps)}};
    } else if (name == "lj") {
        out.method = "lj_md";
        out.options.trace_every = 1000;
        lj::Global g{3.0, 19.0, 0.0001, 10.0, 0.0};
        std::vector<lj::Particle> ps;
        for (int j = 0; j < 10; ++j) {
            const double x = static_cast<double>(j) * (0.9 + 0.11 * static_cast<double>(j));
            ps.push_back({x, 0.0, 0.0});
        }
        out.instance = Instance<lj::Particle, lj::Global>{lj::method(search), {g, std::move(ps)}};
    } else if (name == "tri") {
        out.method = "triangulation";
        out.options.trace_every = 1;
        tri::Particle p{0,
                        {{{0.0, 0.0}, {4.0, 0.0}, {2.0, 4.0}}},
                        {-1, -1, -1},
                        {0, 0, 0}};
        out.instance = Instance<tri::Particle, tri::Global>{tri::method(), {{1, 0}, {p}}};
    } else if (name == "gauss") {
        out.method = "gauss_elim";
        out.options.trace_every = 1;
        std::vector<gauss::Particle> rows = {{{1.0, 2.0, 5.0}, 2.0, 0.0},
                                             {{1.0, -1.0, -4.0}, -4.0, 0.0},
                                             {{2.0, 6.0, 16.0}, 8.0, 0.0}};
        out.instance =
            Instance<gauss::Particle, gauss::Global>{gauss::method(3), {{3, 1, 1}, std::move(rows)}};
    } else {
        fail(ErrorKind::unknown_case, "unknown example `" + name + "` (expected dem|pse|lj|tri|gauss)");
    }
    return out;
}

std::vector<std::string> builtin_example_names() { return {"dem", "pse", "lj", "tri", "gauss"}; }

} // namespace pm::io
