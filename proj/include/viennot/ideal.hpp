#pragma once

#include <vector>

#include "viennot/polynomial.hpp"

namespace viennot {

// Generators of I_n: same-row quadratics (squares included), same-column
// quadratics, row sums, column sums.  Exact duplicates are removed, so
// n = 1 yields {x[1,1]^2, x[1,1]}.
std::vector<Polynomial> ideal_generators(int n, Field field);

// Generators of the vanishing ideal of the permutation-matrix locus:
// x^2 - x for every variable, off-diagonal same-column and same-row
// products, and row/column sums minus one.
std::vector<Polynomial> point_ideal_generators(int n, Field field);

// a_{S,T} = sum over injections f: S -> T of prod_{i in S} x_{i,f(i)};
// b_{S,T} is its transpose.  Zero when |S| > |T|.
Polynomial injection_sum_a(const std::vector<int>& S, const std::vector<int>& T, int n,
                           Field field);
Polynomial injection_sum_b(const std::vector<int>& S, const std::vector<int>& T, int n,
                           Field field);

// One step of the spanning rewrite.  For a rook placement R that fails the
// ballot criterion, produces g in I_n with leading term m(R), coefficient 1,
// and all other terms Toeplitz-smaller rook monomials.
struct MarchingRewrite {
    Polynomial polynomial;
    std::vector<Cell> visited;   // cells collected marching southwest
    RookPlacement remainder;     // R minus the visited cells
    std::vector<int> row_set;    // T: rows the injection maps into
    std::vector<int> column_set; // S: columns of the visited cells
    bool used_transpose = false; // y-sequence case handled by transposition
};

MarchingRewrite marching_rewrite(const RookPlacement& r, Field field);

// Parses the subset-pair text form "S=2,4; T=1,3,4".
std::pair<std::vector<int>, std::vector<int>> parse_subset_pair(std::string_view text);

// Canonical representative supported on shadow monomials; the difference
// f - normal_form(f) lies in I_n.
Polynomial normal_form(const Polynomial& f);

}  // namespace viennot
