#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Caller violated an operation's precondition (bad arguments, mixed
// truncation bounds, unnormalized input).
class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

// An internal consistency check failed: a mathematical invariant the
// algorithms rely on did not hold for the given input.
class InvariantError : public std::logic_error {
public:
    explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

// The fermionic oracle needed an index at or below its cutoff floor.
// Never recovered from silently: the caller must rerun with a deeper cutoff.
class CutoffError : public std::runtime_error {
public:
    explicit CutoffError(const std::string& what)
        : std::runtime_error(what + " (increase cutoff depth)") {}
};

}  // namespace fusion
