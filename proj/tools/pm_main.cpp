// pm — run, verify and inspect particle-method instances.
//
// Exit codes: 0 success, 1 verification/comparison failure,
// 2 usage or configuration error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pm/io/compare.hpp"
#include "pm/io/config.hpp"
#include "pm/io/number_format.hpp"
#include "pm/io/trace.hpp"
#include "pm/io/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw pm::Error(pm::ErrorKind::io_error, "cannot open config file `" + path + "`");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

pm::NeighborSearch parse_search(const std::string& name) {
    if (name == "brute-force") {
        return pm::NeighborSearch::brute_force;
    }
    if (name == "cell-list") {
        return pm::NeighborSearch::cell_list;
    }
    throw pm::Error(pm::ErrorKind::parse_error,
                    "unknown neighborhood backend `" + name + "` (brute-force|cell-list)");
}

int cmd_run(const std::string& config_path, const std::string& out_path,
            std::optional<std::uint64_t> trace_every, std::optional<std::uint64_t> max_steps,
            const std::string& search) {
    pm::io::LoadedInstance loaded = pm::io::load_instance(read_file(config_path),
                                                          parse_search(search));
    if (trace_every) {
        loaded.options.trace_every = *trace_every;
    }
    if (max_steps) {
        loaded.options.max_steps = *max_steps;
    }
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw pm::Error(pm::ErrorKind::io_error, "cannot open output file `" + out_path + "`");
    }
    const auto summary = pm::io::run_with_trace(loaded, out);
    std::cout << summary.method << ": " << summary.transitions << " transitions, "
              << summary.final_particle_count << " final particles, trace written to " << out_path
              << "\n";
    return 0;
}

int cmd_verify(const std::string& case_name) {
    std::vector<std::string> names =
        case_name.empty() ? pm::io::verify_case_names() : std::vector<std::string>{case_name};
    bool all_passed = true;
    for (const auto& name : names) {
        const auto result = pm::io::verify_builtin(name);
        all_passed = all_passed && result.passed;
        std::cout << (result.passed ? "PASS" : "FAIL") << "  " << result.name;
        if (!result.detail.empty()) {
            std::cout << "  (" << result.detail << ")";
        }
        std::cout << "\n";
    }
    return all_passed ? 0 : 1;
}

int cmd_compare(const std::string& config_path, double at_time,
                std::optional<std::uint64_t> max_steps) {
    pm::io::LoadedInstance loaded = pm::io::load_instance(read_file(config_path));
    if (max_steps) {
        loaded.options.max_steps = *max_steps;
    }
    const auto report = pm::io::compare_analytic(loaded, at_time);
    std::string out = "{\"at_time\":";
    pm::io::append_number(out, report.at_time);
    out += ",\"state_time\":";
    pm::io::append_number(out, report.state_time);
    out += ",\"transitions\":";
    pm::io::append_number(out, static_cast<std::int64_t>(report.transitions));
    out += ",\"l_inf\":";
    pm::io::append_number(out, report.l_inf);
    out += ",\"l2_rms\":";
    pm::io::append_number(out, report.l2_rms);
    out += ",\"mass_drift_rel\":";
    pm::io::append_number(out, report.mass_drift_rel);
    out += "}\n";
    std::cout << out;
    return 0;
}

int cmd_gen(const std::string& example) {
    std::cout << pm::io::serialize_config(pm::io::builtin_example(example));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"particle-method execution engine"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string search = "brute-force";
    std::optional<std::uint64_t> trace_every;
    std::optional<std::uint64_t> max_steps;
    std::string case_name;
    std::string example;
    double at_time = 0.0;

    auto* run_cmd = app.add_subcommand("run", "run an instance and write a JSONL state trace");
    run_cmd->add_option("--config", config_path, "instance config file")->required();
    run_cmd->add_option("--out", out_path, "trace output file")->required();
    run_cmd->add_option("--trace-every", trace_every,
                        "emit every Nth state (0 = final state only; default from config)");
    run_cmd->add_option("--max-steps", max_steps, "transition ceiling (default from config)");
    run_cmd->add_option("--neighborhood", search, "brute-force|cell-list");

    auto* verify_cmd = app.add_subcommand("verify", "run built-in verification cases");
    verify_cmd->add_option("--case", case_name, "single case to run (all when omitted)");

    auto* compare_cmd =
        app.add_subcommand("compare", "compare a diffusion run against the analytic solution");
    compare_cmd->add_option("--config", config_path, "instance config file")->required();
    compare_cmd->add_option("--at-time", at_time, "simulation time to run to")->required();
    compare_cmd->add_option("--max-steps", max_steps, "transition ceiling");

    auto* gen_cmd = app.add_subcommand("gen", "print a bundled example config");
    gen_cmd->add_option("--example", example, "dem|pse|lj|tri|gauss")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(config_path, out_path, trace_every, max_steps, search);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(case_name);
        }
        if (compare_cmd->parsed()) {
            return cmd_compare(config_path, at_time, max_steps);
        }
        if (gen_cmd->parsed()) {
            return cmd_gen(example);
        }
    } catch (const pm::Error& e) {
        std::cerr << "error (" << pm::to_string(e.kind()) << "): " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
