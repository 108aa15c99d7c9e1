#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "viennot/permutation.hpp"

namespace viennot {

// Grid point.  The first coordinate i is plotted as x and indexes rows of the
// variable matrix; the second coordinate j is plotted as y and indexes
// columns.  This is the single conversion point between pictures and
// variables x_{i,j}: no other module re-interprets coordinates.
struct Cell {
    int i = 0;
    int j = 0;
    auto operator<=>(const Cell&) const = default;
};

// At most one cell in any row and in any column (a partial permutation).
// Cells are kept sorted by first coordinate.
class RookPlacement {
  public:
    RookPlacement(int n, std::vector<Cell> cells);
    static RookPlacement empty(int n) { return RookPlacement(n, {}); }
    static RookPlacement graph_of(const Permutation& w);

    int n() const { return n_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool is_empty() const { return cells_.empty(); }
    const std::vector<Cell>& cells() const { return cells_; }

    bool contains(Cell c) const;
    // True when the graph of w contains every cell (w "extends" the placement).
    bool extended_by(const Permutation& w) const;
    RookPlacement transpose() const;

    bool operator==(const RookPlacement&) const = default;
    auto operator<=>(const RookPlacement&) const = default;

  private:
    int n_;
    std::vector<Cell> cells_;
};

// Visits all rook placements on the n x n grid (all sizes 0..n).
void for_each_rook_placement(int n, const std::function<void(const RookPlacement&)>& visit);

// Text form "n; (i,j) (i,j) ..." with the empty placement printed as "n;".
std::string format_rook_placement(const RookPlacement& r);
RookPlacement parse_rook_placement(std::string_view text);

}  // namespace viennot
