#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace scl {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error carrying a byte offset into the input.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace scl
