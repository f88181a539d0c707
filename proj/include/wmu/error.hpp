#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wmu {

/// A caller-supplied argument violates a documented precondition.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive routine refused an instance larger than its enumeration guard.
class guard_exceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A component code failed the property a construction relies on.
class certification_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Branch-and-bound search ran out of its node budget before finishing.
class search_limit_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed codebook or generator-matrix file. line() is 1-based, 0 when unknown.
class format_error : public std::runtime_error {
public:
    format_error(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition) throw precondition_error(message);
}

}  // namespace detail
}  // namespace wmu
