#ifndef RESIDUA_ERRORS_HPP
#define RESIDUA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace residua {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (polynomial expressions, system files).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what), position_(position) {}

    /// Byte offset into the parsed text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// A mathematical precondition failed (non-square system, basis that cannot
/// be verified, singular input where a regular one is required, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal invariant was violated; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void internal_check(bool ok, const char* what) {
    if (!ok) throw InternalError(what);
}

} // namespace residua

#endif
