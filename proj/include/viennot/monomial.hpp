#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "viennot/rook.hpp"

namespace viennot {

// The Toeplitz variable chain on the n x n grid: x_{a,b} beats x_{c,d} when
// a+b < c+d, ties broken by larger first index.  Monomials compare by pure
// lexicographic order with respect to this chain.
class ToeplitzOrder {
  public:
    explicit ToeplitzOrder(int n);

    int n() const { return n_; }
    int variable_count() const { return n_ * n_; }
    // Rank 0 is the largest variable x_{1,1}.
    int rank_of(Cell c) const;
    Cell variable_at(int rank) const;

  private:
    int n_;
};

// Sparse exponent vector over the grid variables.  Factors are stored by
// ascending Toeplitz rank (largest variable first) with positive exponents;
// the empty product is the monomial 1.
class GridMonomial {
  public:
    explicit GridMonomial(int n) : n_(n) {}
    GridMonomial(int n, const std::vector<std::pair<Cell, int>>& factors);
    static GridMonomial variable(int n, Cell c) { return GridMonomial(n, {{c, 1}}); }
    static GridMonomial of_placement(const RookPlacement& r);

    int n() const { return n_; }
    const std::vector<std::pair<Cell, int>>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent(Cell c) const;

    bool is_squarefree() const;
    // Squarefree with support a valid rook placement.
    bool is_rook_monomial() const;
    RookPlacement support_placement() const;
    // Two variables in one row or column, or a squared variable; such a
    // monomial is a multiple of a quadratic ideal generator.
    bool has_colliding_support() const { return !is_rook_monomial(); }

    GridMonomial times(const GridMonomial& other) const;
    GridMonomial transpose() const;

    bool operator==(const GridMonomial& other) const {
        return n_ == other.n_ && factors_ == other.factors_;
    }

  private:
    int n_;
    std::vector<std::pair<Cell, int>> factors_;
};

// <0 when a is Toeplitz-smaller than b, 0 on equality, >0 otherwise.
int toeplitz_compare(const GridMonomial& a, const GridMonomial& b);

// Strict "greater" comparator; std::map with this comparator iterates from
// the leading monomial downward.
struct ToeplitzGreater {
    bool operator()(const GridMonomial& a, const GridMonomial& b) const {
        return toeplitz_compare(a, b) > 0;
    }
};

// "x[2,4]*x[5,5]^2" with "1" for the empty product.
std::string format_monomial(const GridMonomial& m);

}  // namespace viennot
