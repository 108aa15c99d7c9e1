#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "viennot/ideal.hpp"
#include "viennot/limits.hpp"
#include "viennot/schensted.hpp"

namespace viennot {

// (w, s(w)) for all w in S_n, in lexicographic order of w.
std::vector<std::pair<Permutation, GridMonomial>> standard_monomial_basis(
    int n, const Limits& limits = {});

// Coefficient of q^d counts permutations with lis = n - d.
std::vector<std::uint64_t> hilbert_series(int n, const Limits& limits = {});

// E[w][v] = 1 exactly when v extends the shadow set of w, rows and columns
// in lexicographic order.
std::vector<std::vector<int>> evaluation_matrix(int n, const Limits& limits = {});
mpz_class evaluation_matrix_determinant(int n, const Limits& limits = {});

// Membership oracle for homogeneous polynomials, independent of the marching
// rewrite: the degree-d slice of I_n is spanned by generator-times-monomial
// products, and the quadratic generators span exactly the non-rook
// coordinates, so only the linear generators need echelonization.
class DegreeSliceOracle {
  public:
    DegreeSliceOracle(int n, int degree, Field field = Field::rationals(),
                      const Limits& limits = {});

    int n() const { return n_; }
    int degree() const { return degree_; }
    // Dimension of the degree-d slice of I_n.
    std::int64_t slice_rank() const;
    // Dimension of the degree-d part of the quotient ring.
    std::int64_t quotient_dimension() const;
    bool contains(const Polynomial& f) const;

  private:
    int n_;
    int degree_;
    Field field_;
    std::vector<GridMonomial> rook_monomials_;   // coordinates of the projected slice
    std::map<std::string, int> column_of_;       // text form -> coordinate index
    std::vector<std::vector<Scalar>> basis_;     // echelonized projected rows
    std::vector<int> pivots_;
    std::int64_t nonrook_count_ = 0;
    std::vector<Scalar> project(const Polynomial& f) const;
    bool reduce_to_zero(std::vector<Scalar> v) const;
};

// One-shot convenience wrapper; f must be homogeneous.
bool ideal_membership(const Polynomial& f, int n, const Limits& limits = {});

// All degree-d monomials in the n*n grid variables (no field attached).
std::vector<GridMonomial> monomials_of_degree(int n, int degree, const Limits& limits = {});

// All rook placements of a given size, ordered by Toeplitz order of their
// monomials (descending).
std::vector<RookPlacement> rook_placements_of_size(int n, int size);

}  // namespace viennot
