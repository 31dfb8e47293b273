#pragma once

#include <cstdint>
#include <string>

namespace pm::io {

// Shortest decimal that round-trips to the same binary64 value, so equal
// states always serialize to identical bytes.
void append_number(std::string& out, double value);
void append_number(std::string& out, std::int64_t value);

std::string format_number(double value);

} // namespace pm::io
