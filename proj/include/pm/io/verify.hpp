#pragma once

// Built-in verification cases with embedded expectations, runnable from
// the CLI. Each case replays a bundled instance (or exercises a module
// directly) and compares against frozen values.

#include <string>
#include <vector>

namespace pm::io {

struct CaseResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<std::string> verify_case_names();

// Runs one case; throws ErrorKind::unknown_case for unknown names.
CaseResult verify_builtin(const std::string& name);

} // namespace pm::io
