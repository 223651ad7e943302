#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcb {

/// Malformed element text or ring file. `position` is a byte offset into the
/// element text, or a 1-based line number for ring files.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Out-of-range parameters, unknown generators, composite moduli and similar.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two elements (or an element and a presentation) over different algebras.
class MismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Machine-word coefficient arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A sampled precondition of a path formula failed.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tcb
