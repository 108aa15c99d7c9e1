#include "viennot/rook.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "viennot/text.hpp"

namespace viennot {

RookPlacement::RookPlacement(int n, std::vector<Cell> cells) : n_(n), cells_(std::move(cells)) {
    if (n_ < 1) throw std::invalid_argument("rook placement: grid size must be positive");
    std::sort(cells_.begin(), cells_.end());
    std::set<int> rows, cols;
    for (const Cell& c : cells_) {
        if (c.i < 1 || c.i > n_ || c.j < 1 || c.j > n_)
            throw std::invalid_argument("rook placement: cell out of grid");
        if (!rows.insert(c.i).second)
            throw std::invalid_argument("rook placement: two cells in one row");
        if (!cols.insert(c.j).second)
            throw std::invalid_argument("rook placement: two cells in one column");
    }
}

RookPlacement RookPlacement::graph_of(const Permutation& w) {
    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(w.n()));
    for (int i = 1; i <= w.n(); ++i) cells.push_back({i, w(i)});
    return RookPlacement(w.n(), std::move(cells));
}

bool RookPlacement::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool RookPlacement::extended_by(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("extended_by: size mismatch");
    for (const Cell& c : cells_)
        if (w(c.i) != c.j) return false;
    return true;
}

RookPlacement RookPlacement::transpose() const {
    std::vector<Cell> cells;
    cells.reserve(cells_.size());
    for (const Cell& c : cells_) cells.push_back({c.j, c.i});
    return RookPlacement(n_, std::move(cells));
}

void for_each_rook_placement(int n, const std::function<void(const RookPlacement&)>& visit) {
    if (n < 1) throw std::invalid_argument("for_each_rook_placement: n must be positive");
    // Row-by-row backtracking: each row either stays empty or takes a free column.
    std::vector<Cell> chosen;
    std::vector<char> col_used(static_cast<std::size_t>(n) + 1, 0);
    auto recurse = [&](auto&& self, int row) -> void {
        if (row > n) {
            visit(RookPlacement(n, chosen));
            return;
        }
        self(self, row + 1);
        for (int j = 1; j <= n; ++j) {
            if (col_used[static_cast<std::size_t>(j)]) continue;
            col_used[static_cast<std::size_t>(j)] = 1;
            chosen.push_back({row, j});
            self(self, row + 1);
            chosen.pop_back();
            col_used[static_cast<std::size_t>(j)] = 0;
        }
    };
    recurse(recurse, 1);
}

std::string format_rook_placement(const RookPlacement& r) {
    std::string out = std::to_string(r.n()) + ";";
    for (const Cell& c : r.cells())
        out += " (" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
    return out;
}

RookPlacement parse_rook_placement(std::string_view text) {
    TextCursor cur(text);
    const int n = cur.read_positive_int("grid size");
    cur.skip_ws();
    cur.expect(';', "after grid size");
    std::vector<Cell> cells;
    while (true) {
        cur.skip_ws();
        if (cur.at_end()) break;
        cur.expect('(', "cell");
        const int i = cur.read_positive_int("cell row");
        cur.skip_ws();
        cur.expect(',', "cell");
        const int j = cur.read_positive_int("cell column");
        cur.skip_ws();
        cur.expect(')', "cell");
        cells.push_back({i, j});
    }
    try {
        return RookPlacement(n, std::move(cells));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

}  // namespace viennot
