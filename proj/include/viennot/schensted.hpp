#pragma once

#include <cstdint>
#include <vector>

#include "viennot/limits.hpp"
#include "viennot/shadow.hpp"
#include "viennot/tableau.hpp"

namespace viennot {

// Classical row insertion with recording tableau.
TableauPair insertion_schensted(const Permutation& w);

// Geometric avatar: row k of P collects the horizontal-ray y-coordinates of
// the k-th iterated shadow diagram, row k of Q the vertical-ray x-coordinates.
TableauPair viennot_schensted(const Permutation& w);

// Unique w with insertion_schensted(w) == pair; both tableaux must be
// standard with equal shape.
Permutation inverse_schensted(const TableauPair& pair);

// Length of the longest increasing subsequence, read off the common shape of
// the tableau pair and cross-checked against direct dynamic programming.
int lis(const Permutation& w);
int lis_dp(const Permutation& w);

// a_{n,k} for k = 1..n by exhaustive enumeration of S_n.
std::vector<std::uint64_t> lis_histogram(int n, const Limits& limits = {}, int threads = 1);

}  // namespace viennot
