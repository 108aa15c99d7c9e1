#pragma once

#include <string>
#include <vector>

namespace viennot {

// A partial standard tableau: distinct positive entries, rows strictly
// increasing left to right, columns strictly increasing top to bottom, row
// lengths weakly decreasing.  Shape is always derived from the rows.
class Tableau {
  public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    std::vector<int> shape() const;
    int box_count() const;
    // True when the entries are exactly 1..n for n = box_count().
    bool is_standard() const;

    bool operator==(const Tableau&) const = default;

  private:
    std::vector<std::vector<int>> rows_;
};

struct TableauPair {
    Tableau P;
    Tableau Q;
    bool operator==(const TableauPair&) const = default;
};

// All standard Young tableaux of the given shape (weakly decreasing parts).
std::vector<Tableau> standard_tableaux(const std::vector<int>& shape);

std::string format_tableau(const Tableau& t);

}  // namespace viennot
