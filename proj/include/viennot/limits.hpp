#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace viennot {

// Hard caps on the exhaustive computations.  Every cap can be raised by the
// caller; the defaults keep any single call at desk scale.
struct Limits {
    int enumeration_n = 9;                     // S_n enumerations (n! work)
    std::int64_t slice_monomials = 2'000'000;  // degree-slice width guard
    int evaluation_matrix_n = 6;               // n! x n! integer determinant
    int character_table_n = 12;
    int trace_n = 6;                           // graded-character trace route
    int conjecture_n = 8;                      // equivariant check (10 behind --deep)
};

// Thrown when a computation would exceed a Limits cap.  Distinct from domain
// errors so the CLI can map it to its own exit code.
class ResourceLimitError : public std::runtime_error {
  public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with the byte offset of the offending token.
class ParseError : public std::invalid_argument {
  public:
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument("at position " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

}  // namespace viennot
