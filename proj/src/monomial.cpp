#include "viennot/monomial.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace viennot {

ToeplitzOrder::ToeplitzOrder(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("toeplitz order: n must be positive");
}

int ToeplitzOrder::rank_of(Cell c) const {
    if (c.i < 1 || c.i > n_ || c.j < 1 || c.j > n_)
        throw std::invalid_argument("toeplitz order: cell out of grid");
    // Count variables on earlier antidiagonals, then those on the same
    // antidiagonal with a larger first index.
    const int s = c.i + c.j;
    int before = 0;
    for (int d = 2; d < s; ++d) {
        const int lo = std::max(1, d - n_);
        const int hi = std::min(n_, d - 1);
        before += hi - lo + 1;
    }
    const int hi = std::min(n_, s - 1);
    return before + (hi - c.i);
}

Cell ToeplitzOrder::variable_at(int rank) const {
    if (rank < 0 || rank >= variable_count())
        throw std::invalid_argument("toeplitz order: rank out of range");
    for (int s = 2; s <= 2 * n_; ++s) {
        const int lo = std::max(1, s - n_);
        const int hi = std::min(n_, s - 1);
        const int count = hi - lo + 1;
        if (rank < count) return Cell{hi - rank, s - (hi - rank)};
        rank -= count;
    }
    throw std::logic_error("toeplitz order: unreachable");
}

GridMonomial::GridMonomial(int n, const std::vector<std::pair<Cell, int>>& factors) : n_(n) {
    const ToeplitzOrder order(n);
    std::map<int, std::pair<Cell, int>> by_rank;
    for (const auto& [cell, exp] : factors) {
        if (exp < 0) throw std::invalid_argument("monomial: negative exponent");
        if (exp == 0) continue;
        const int rank = order.rank_of(cell);
        auto [it, inserted] = by_rank.try_emplace(rank, std::make_pair(cell, exp));
        if (!inserted) it->second.second += exp;
    }
    factors_.reserve(by_rank.size());
    for (const auto& [rank, entry] : by_rank) factors_.push_back(entry);
}

GridMonomial GridMonomial::of_placement(const RookPlacement& r) {
    std::vector<std::pair<Cell, int>> factors;
    factors.reserve(static_cast<std::size_t>(r.size()));
    for (const Cell& c : r.cells()) factors.emplace_back(c, 1);
    return GridMonomial(r.n(), factors);
}

int GridMonomial::degree() const {
    int d = 0;
    for (const auto& [cell, exp] : factors_) d += exp;
    return d;
}

int GridMonomial::exponent(Cell c) const {
    for (const auto& [cell, exp] : factors_)
        if (cell == c) return exp;
    return 0;
}

bool GridMonomial::is_squarefree() const {
    for (const auto& [cell, exp] : factors_)
        if (exp > 1) return false;
    return true;
}

bool GridMonomial::is_rook_monomial() const {
    if (!is_squarefree()) return false;
    std::vector<int> rows, cols;
    for (const auto& [cell, exp] : factors_) {
        rows.push_back(cell.i);
        cols.push_back(cell.j);
    }
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(rows.begin(), rows.end()) == rows.end() &&
           std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

RookPlacement GridMonomial::support_placement() const {
    if (!is_rook_monomial())
        throw std::invalid_argument("monomial: support is not a rook placement");
    std::vector<Cell> cells;
    cells.reserve(factors_.size());
    for (const auto& [cell, exp] : factors_) cells.push_back(cell);
    return RookPlacement(n_, std::move(cells));
}

GridMonomial GridMonomial::times(const GridMonomial& other) const {
    if (n_ != other.n_) throw std::invalid_argument("monomial: grid size mismatch");
    std::vector<std::pair<Cell, int>> merged = factors_;
    merged.insert(merged.end(), other.factors_.begin(), other.factors_.end());
    return GridMonomial(n_, merged);
}

GridMonomial GridMonomial::transpose() const {
    std::vector<std::pair<Cell, int>> flipped;
    flipped.reserve(factors_.size());
    for (const auto& [cell, exp] : factors_) flipped.emplace_back(Cell{cell.j, cell.i}, exp);
    return GridMonomial(n_, flipped);
}

int toeplitz_compare(const GridMonomial& a, const GridMonomial& b) {
    if (a.n() != b.n()) throw std::invalid_argument("toeplitz_compare: grid size mismatch");
    const ToeplitzOrder order(a.n());
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t ia = 0, ib = 0;
    // Walk the exponent vectors from the largest variable down; the first
    // position with different exponents decides.
    while (ia < fa.size() || ib < fb.size()) {
        const int ra = ia < fa.size() ? order.rank_of(fa[ia].first) : order.variable_count();
        const int rb = ib < fb.size() ? order.rank_of(fb[ib].first) : order.variable_count();
        if (ra < rb) return 1;   // a has a larger variable with positive exponent
        if (rb < ra) return -1;
        if (fa[ia].second != fb[ib].second) return fa[ia].second > fb[ib].second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

std::string format_monomial(const GridMonomial& m) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [cell, exp] : m.factors()) {
        if (!out.empty()) out += '*';
        out += "x[" + std::to_string(cell.i) + "," + std::to_string(cell.j) + "]";
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out;
}

}  // namespace viennot
