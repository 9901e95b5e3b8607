#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homvec {

/// Precondition violated by caller-supplied data (bad vertex index, n = 0, ...).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `offset` is the byte position of the first bad byte.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A desk-scale size guard was exceeded; `guard()` names it.
class GuardError : public std::length_error {
public:
    GuardError(std::string guard, std::size_t requested, std::size_t limit)
        : std::length_error("guard '" + guard + "' exceeded: " + std::to_string(requested) + " > " +
                            std::to_string(limit)),
          guard_(std::move(guard)) {}

    const std::string& guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

/// An internal consistency check failed; always a bug in a counting path.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace homvec
