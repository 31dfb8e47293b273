#pragma once

#include <stdexcept>
#include <string>

namespace pm {

enum class ErrorKind {
    self_interaction,
    index_out_of_range,
    step_limit_exceeded,
    zero_modulus,
    zero_distance,
    malformed_topology,
    invalid_cutoff,
    position_out_of_domain,
    parse_error,
    unknown_method,
    invariant_violation,
    io_error,
    unknown_case,
};

// Single exception type for the whole library; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::self_interaction:       return "self_interaction";
    case ErrorKind::index_out_of_range:     return "index_out_of_range";
    case ErrorKind::step_limit_exceeded:    return "step_limit_exceeded";
    case ErrorKind::zero_modulus:           return "zero_modulus";
    case ErrorKind::zero_distance:          return "zero_distance";
    case ErrorKind::malformed_topology:     return "malformed_topology";
    case ErrorKind::invalid_cutoff:         return "invalid_cutoff";
    case ErrorKind::position_out_of_domain: return "position_out_of_domain";
    case ErrorKind::parse_error:            return "parse_error";
    case ErrorKind::unknown_method:         return "unknown_method";
    case ErrorKind::invariant_violation:    return "invariant_violation";
    case ErrorKind::io_error:               return "io_error";
    case ErrorKind::unknown_case:           return "unknown_case";
    }
    return "unknown";
}

} // namespace pm
