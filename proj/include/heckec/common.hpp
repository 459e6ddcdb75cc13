#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace heckec {

// Hard cap on the rank of any Weyl group handled by the kernel.
inline constexpr int kMaxRank = 8;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: rank mismatch, index out of range, kind not available.
struct ArgumentError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// Product exceeded the configured total-degree guard.
struct DegreeCapError : Error {
    using Error::Error;
};

// An internal invariant failed; never raised by valid input.
struct InternalError : Error {
    using Error::Error;
};

struct ParseError : Error {
    size_t offset;
    ParseError(const std::string& msg, size_t off)
        : Error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

inline void hashCombine(size_t& seed, size_t v) {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace heckec
