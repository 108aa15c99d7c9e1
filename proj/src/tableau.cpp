#include "viennot/tableau.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace viennot {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    std::set<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        if (row.empty()) throw std::invalid_argument("tableau: empty row");
        if (r > 0 && row.size() > rows_[r - 1].size())
            throw std::invalid_argument("tableau: row lengths must weakly decrease");
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1) throw std::invalid_argument("tableau: entries must be positive");
            if (!seen.insert(row[c]).second)
                throw std::invalid_argument("tableau: repeated entry");
            if (c > 0 && row[c] <= row[c - 1])
                throw std::invalid_argument("tableau: rows must strictly increase");
            if (r > 0 && row[c] <= rows_[r - 1][c])
                throw std::invalid_argument("tableau: columns must strictly increase");
        }
    }
}

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows_.size());
    for (const auto& row : rows_) s.push_back(static_cast<int>(row.size()));
    return s;
}

int Tableau::box_count() const {
    int total = 0;
    for (const auto& row : rows_) total += static_cast<int>(row.size());
    return total;
}

bool Tableau::is_standard() const {
    const int n = box_count();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& row : rows_)
        for (int v : row) {
            if (v > n) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
    for (int v = 1; v <= n; ++v)
        if (!seen[static_cast<std::size_t>(v)]) return false;
    return true;
}

std::vector<Tableau> standard_tableaux(const std::vector<int>& shape) {
    for (std::size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] < 1) throw std::invalid_argument("standard_tableaux: parts must be positive");
        if (r > 0 && shape[r] > shape[r - 1])
            throw std::invalid_argument("standard_tableaux: shape must weakly decrease");
    }
    int n = 0;
    for (int part : shape) n += part;
    std::vector<std::vector<int>> rows(shape.size());
    std::vector<int> filled(shape.size(), 0);
    std::vector<Tableau> out;
    // Place 1..n in order; each value goes at the end of any row that is
    // shorter than the row above it.
    auto recurse = [&](auto&& self, int value) -> void {
        if (value > n) {
            out.emplace_back(rows);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (filled[r] >= shape[r]) continue;
            if (r > 0 && filled[r] >= filled[r - 1]) continue;
            rows[r].push_back(value);
            ++filled[r];
            self(self, value + 1);
            --filled[r];
            rows[r].pop_back();
        }
    };
    recurse(recurse, 1);
    return out;
}

std::string format_tableau(const Tableau& t) {
    std::string out;
    for (std::size_t r = 0; r < t.rows().size(); ++r) {
        if (r > 0) out += " / ";
        for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
            if (c > 0) out += ',';
            out += std::to_string(t.rows()[r][c]);
        }
    }
    return out;
}

}  // namespace viennot
