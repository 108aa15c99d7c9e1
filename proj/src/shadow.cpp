#include "viennot/shadow.hpp"

#include <algorithm>
#include <stdexcept>

namespace viennot {

std::vector<int> ShadowDiagram::vertical_ray_xs() const {
    std::vector<int> xs;
    xs.reserve(lines.size());
    for (const ShadowLine& l : lines) xs.push_back(l.vertical_ray_x);
    return xs;
}

std::vector<int> ShadowDiagram::horizontal_ray_ys() const {
    std::vector<int> ys;
    ys.reserve(lines.size());
    for (const ShadowLine& l : lines) ys.push_back(l.horizontal_ray_y);
    return ys;
}

RookPlacement ShadowDiagram::corner_set() const {
    std::vector<Cell> cells;
    for (const ShadowLine& l : lines) cells.insert(cells.end(), l.corners.begin(), l.corners.end());
    return RookPlacement(n, std::move(cells));
}

ShadowDiagram shadow_lines(const RookPlacement& r) {
    // Sweeping the cells by increasing x, a cell joins the southwest-most line
    // whose current lowest y still clears it; otherwise it opens a new line to
    // the northeast.  The current lowest y values increase along the line
    // sequence, so the scan is a binary search (patience piles).
    ShadowDiagram diagram;
    diagram.n = r.n();
    std::vector<int> lowest_y;  // per line, strictly increasing
    for (const Cell& c : r.cells()) {
        const auto it = std::upper_bound(lowest_y.begin(), lowest_y.end(), c.j);
        const auto idx = static_cast<std::size_t>(it - lowest_y.begin());
        if (it == lowest_y.end()) {
            lowest_y.push_back(c.j);
            diagram.lines.emplace_back();
            diagram.lines.back().cells.push_back(c);
        } else {
            *it = c.j;
            diagram.lines[idx].cells.push_back(c);
        }
    }
    for (ShadowLine& line : diagram.lines) {
        line.vertical_ray_x = line.cells.front().i;
        line.horizontal_ray_y = line.cells.back().j;
        line.path.push_back({line.vertical_ray_x, r.n() + 1});
        for (std::size_t k = 0; k < line.cells.size(); ++k) {
            line.path.push_back(line.cells[k]);
            if (k + 1 < line.cells.size()) {
                const Cell corner{line.cells[k + 1].i, line.cells[k].j};
                line.corners.push_back(corner);
                line.path.push_back(corner);
            }
        }
        line.path.push_back({r.n() + 1, line.horizontal_ray_y});
    }
    return diagram;
}

RookPlacement shadow_set(const RookPlacement& r) { return shadow_lines(r).corner_set(); }

RookPlacement shadow_set(const Permutation& w) { return shadow_set(RookPlacement::graph_of(w)); }

std::vector<RookPlacement> iterated_shadow_sets(const Permutation& w) {
    std::vector<RookPlacement> sets;
    RookPlacement current = shadow_set(w);
    sets.push_back(current);
    while (!sets.back().is_empty()) {
        current = shadow_set(current);
        sets.push_back(current);
    }
    return sets;
}

BallotResult ballot_check(const RookPlacement& r) {
    const ShadowDiagram diagram = shadow_lines(r);
    const int n = r.n();
    BallotResult result;
    result.x_seq.assign(static_cast<std::size_t>(n), -1);
    result.y_seq.assign(static_cast<std::size_t>(n), -1);
    // Rays score +1, rows/columns missing the placement score -1, and the
    // remaining rows/columns (they meet a cell, hence a non-ray segment of
    // some line) score 0.
    for (const Cell& c : r.cells()) {
        result.x_seq[static_cast<std::size_t>(c.i - 1)] = 0;
        result.y_seq[static_cast<std::size_t>(c.j - 1)] = 0;
    }
    for (const ShadowLine& line : diagram.lines) {
        result.x_seq[static_cast<std::size_t>(line.vertical_ray_x - 1)] = 1;
        result.y_seq[static_cast<std::size_t>(line.horizontal_ray_y - 1)] = 1;
    }
    auto prefixes_nonpositive = [](const std::vector<int>& seq) {
        int sum = 0;
        for (int v : seq) {
            sum += v;
            if (sum > 0) return false;
        }
        return true;
    };
    result.is_shadow_set = prefixes_nonpositive(result.x_seq) && prefixes_nonpositive(result.y_seq);
    return result;
}

}  // namespace viennot
