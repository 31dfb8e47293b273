#include "pm/io/number_format.hpp"

#include <charconv>
#include <cmath>

#include "pm/errors.hpp"

namespace pm::io {

void append_number(std::string& out, double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::io_error, "cannot serialize a non-finite number");
    }
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, res.ptr);
}

void append_number(std::string& out, std::int64_t value) {
    char buf[24];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    out.append(buf, res.ptr);
}

std::string format_number(double value) {
    std::string out;
    append_number(out, value);
    return out;
}

} // namespace pm::io
