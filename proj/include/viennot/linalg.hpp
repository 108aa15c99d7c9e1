#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace viennot {

// Incremental row-echelon basis over the rationals.  Rows are normalized to
// unit pivots and fully reduced against each other.
class EchelonBasis {
  public:
    explicit EchelonBasis(int width) : width_(width) {}

    int width() const { return width_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Reduces v against the basis in place; returns true when v becomes zero.
    bool reduce(std::vector<mpq_class>& v) const;
    // Reduce-then-insert; returns true when v enlarged the basis.
    bool insert(std::vector<mpq_class> v);

  private:
    int width_;
    std::vector<std::vector<mpq_class>> rows_;
    std::vector<int> pivots_;  // pivot column per row, strictly increasing order not required
};

// Rank of an integer matrix reduced mod p (p an odd prime < 2^31).
// The input is consumed.
int rank_mod_p(std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p);

// Rank over F_2 of a 0/1 matrix given as packed 64-bit rows.
int rank_mod_2(std::vector<std::vector<std::uint64_t>>& rows, int width);

// Exact determinant of an integer matrix (Bareiss fraction-free elimination).
mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m);

// Exact solution of A x = b over the rationals, where A has full column
// rank.  Returns the unique least-constrained candidate obtained from an
// invertible row subsystem; the caller is responsible for checking the
// remaining rows.  Entries of A are small integers.
struct RationalSolve {
    bool pivot_rank_ok = false;       // column rank equals column count
    std::vector<mpq_class> candidate; // solution of the pivot subsystem
    std::vector<int> pivot_rows;
};

RationalSolve solve_full_column_rank(const std::vector<std::vector<long>>& matrix,
                                     const std::vector<mpq_class>& rhs);

// Solution of A x = b mod p; empty when the subsystem is singular mod p.
std::optional<std::vector<std::uint64_t>> solve_mod_p(
    std::vector<std::vector<std::uint64_t>> rows, std::vector<std::uint64_t> rhs,
    std::uint64_t p);

// Rational reconstruction of x mod m into p/q with |p|, q <= sqrt(m/2).
std::optional<mpq_class> rational_reconstruct(const mpz_class& x, const mpz_class& m);

// Deterministic stream of 31-bit primes, largest first.
std::vector<std::uint64_t> solver_primes(int count);

}  // namespace viennot
