#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spinmcg {

// Base of every error raised by the library. Precondition failures,
// malformed input and exhausted search budgets all derive from it so a
// front end can map them to a single exit code.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class GenusMismatch : public Error {
public:
    GenusMismatch(int a, int b)
        : Error("genus mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::uint64_t partial)
        : Error(what + " (partial count " + std::to_string(partial) + ")"), partial_(partial) {}
    std::uint64_t partial() const noexcept { return partial_; }

private:
    std::uint64_t partial_;
};

}  // namespace spinmcg
