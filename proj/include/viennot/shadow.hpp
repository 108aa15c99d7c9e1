#pragma once

#include <vector>

#include "viennot/rook.hpp"

namespace viennot {

// One shadow line: the boundary staircase of the union of northeast shadows
// cast by its cells.  Cells are ordered by increasing first coordinate (so
// second coordinates strictly decrease).  The corners are the turning points
// between consecutive cells; all semantics are derived from the cells, the
// lattice path is kept for rendering and debugging.
struct ShadowLine {
    std::vector<Cell> cells;
    int vertical_ray_x = 0;    // x of the infinite upward ray (first cell's i)
    int horizontal_ray_y = 0;  // y of the infinite eastward ray (last cell's j)
    std::vector<Cell> corners; // northeast corners, one fewer than cells
    std::vector<Cell> path;    // staircase vertices from (x, n+1) to (n+1, y)
};

// All shadow lines of a placement, ordered southwest to northeast.
struct ShadowDiagram {
    int n = 0;
    std::vector<ShadowLine> lines;

    std::vector<int> vertical_ray_xs() const;
    std::vector<int> horizontal_ray_ys() const;
    // Union of the per-line corner sets; always a valid rook placement.
    RookPlacement corner_set() const;
};

ShadowDiagram shadow_lines(const RookPlacement& r);

RookPlacement shadow_set(const RookPlacement& r);
RookPlacement shadow_set(const Permutation& w);

// S(w), S(S(w)), ... ending with the first empty placement.
std::vector<RookPlacement> iterated_shadow_sets(const Permutation& w);

// The two {+1,0,-1} sequences of the ballot criterion, and their verdict.
struct BallotResult {
    bool is_shadow_set = false;
    std::vector<int> x_seq;
    std::vector<int> y_seq;
};

BallotResult ballot_check(const RookPlacement& r);

// Inverse of w -> S(w) on ballot-valid placements; rejects all others.
Permutation shadow_set_to_permutation(const RookPlacement& r);

}  // namespace viennot
