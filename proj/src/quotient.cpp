#include "viennot/quotient.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "viennot/linalg.hpp"

namespace viennot {

std::vector<std::pair<Permutation, GridMonomial>> standard_monomial_basis(int n,
                                                                          const Limits& limits) {
    std::vector<std::pair<Permutation, GridMonomial>> basis;
    for_each_permutation(
        n,
        [&](const Permutation& w) {
            basis.emplace_back(w, GridMonomial::of_placement(shadow_set(w)));
        },
        limits);
    return basis;
}

std::vector<std::uint64_t> hilbert_series(int n, const Limits& limits) {
    std::vector<std::uint64_t> coefficients(static_cast<std::size_t>(n), 0);
    for_each_permutation(
        n, [&](const Permutation& w) { ++coefficients[static_cast<std::size_t>(shadow_set(w).size())]; },
        limits);
    while (coefficients.size() > 1 && coefficients.back() == 0) coefficients.pop_back();
    return coefficients;
}

std::vector<std::vector<int>> evaluation_matrix(int n, const Limits& limits) {
    if (n > limits.evaluation_matrix_n)
        throw ResourceLimitError("evaluation_matrix: n=" + std::to_string(n) +
                                 " exceeds guard " + std::to_string(limits.evaluation_matrix_n));
    std::vector<RookPlacement> shadows;
    std::vector<Permutation> perms;
    for_each_permutation(n, [&](const Permutation& w) {
        shadows.push_back(shadow_set(w));
        perms.push_back(w);
    });
    const std::size_t size = perms.size();
    std::vector<std::vector<int>> matrix(size, std::vector<int>(size, 0));
    for (std::size_t row = 0; row < size; ++row)
        for (std::size_t col = 0; col < size; ++col)
            matrix[row][col] = shadows[row].extended_by(perms[col]) ? 1 : 0;
    return matrix;
}

mpz_class evaluation_matrix_determinant(int n, const Limits& limits) {
    const auto matrix = evaluation_matrix(n, limits);
    std::vector<std::vector<mpz_class>> m(matrix.size());
    for (std::size_t r = 0; r < matrix.size(); ++r)
        m[r].assign(matrix[r].begin(), matrix[r].end());
    return integer_determinant(std::move(m));
}

std::vector<GridMonomial> monomials_of_degree(int n, int degree, const Limits& limits) {
    const ToeplitzOrder order(n);
    const int vars = order.variable_count();
    // Guard on the number of weak compositions before enumerating.
    double estimate = 1.0;
    for (int k = 1; k <= degree; ++k)
        estimate *= static_cast<double>(vars + degree - k) / static_cast<double>(k);
    if (estimate > static_cast<double>(limits.slice_monomials))
        throw ResourceLimitError("monomials_of_degree: slice exceeds guard");
    std::vector<GridMonomial> out;
    std::vector<std::pair<Cell, int>> factors;
    auto recurse = [&](auto&& self, int rank, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(n, factors);
            return;
        }
        if (rank == vars) return;
        self(self, rank + 1, remaining);
        factors.emplace_back(order.variable_at(rank), 0);
        for (int e = 1; e <= remaining; ++e) {
            factors.back().second = e;
            self(self, rank + 1, remaining - e);
        }
        factors.pop_back();
    };
    recurse(recurse, 0, degree);
    return out;
}

std::vector<RookPlacement> rook_placements_of_size(int n, int size) {
    std::vector<RookPlacement> out;
    for_each_rook_placement(n, [&](const RookPlacement& r) {
        if (r.size() == size) out.push_back(r);
    });
    std::sort(out.begin(), out.end(), [](const RookPlacement& a, const RookPlacement& b) {
        return toeplitz_compare(GridMonomial::of_placement(a), GridMonomial::of_placement(b)) > 0;
    });
    return out;
}

DegreeSliceOracle::DegreeSliceOracle(int n, int degree, Field field, const Limits& limits)
    : n_(n), degree_(degree), field_(field) {
    if (degree < 0) throw std::invalid_argument("degree slice: negative degree");
    for (const RookPlacement& r : rook_placements_of_size(n, degree))
        rook_monomials_.push_back(GridMonomial::of_placement(r));

    std::int64_t total_monomials = 1;
    {
        // C(n^2 + d - 1, d), guarded.
        const ToeplitzOrder order(n);
        double estimate = 1.0;
        for (int k = 1; k <= degree; ++k)
            estimate *= static_cast<double>(order.variable_count() + degree - k) /
                        static_cast<double>(k);
        if (estimate > static_cast<double>(limits.slice_monomials))
            throw ResourceLimitError("degree slice: monomial count exceeds guard");
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(order.variable_count() + degree - 1),
                     static_cast<unsigned long>(degree));
        total_monomials = static_cast<std::int64_t>(binom.get_si());
    }
    nonrook_count_ = total_monomials - static_cast<std::int64_t>(rook_monomials_.size());

    for (std::size_t k = 0; k < rook_monomials_.size(); ++k)
        column_of_[format_monomial(rook_monomials_[k])] = static_cast<int>(k);

    if (degree == 0) return;
    // Rows come from (row or column sum) * (monomial of degree d-1), projected
    // to the rook coordinates; quadratic-generator products cover the rest.
    const std::vector<GridMonomial> lower = monomials_of_degree(n, degree - 1, limits);
    std::vector<Polynomial> sums;
    for (const Polynomial& g : ideal_generators(n, field_))
        if (g.degree() == 1) sums.push_back(g);
    for (const Polynomial& sum : sums) {
        for (const GridMonomial& m : lower) {
            std::vector<Scalar> row(rook_monomials_.size(), Scalar::zero(field_));
            bool nonzero = false;
            const Polynomial product = sum.times_monomial(m);
            for (const auto& [mono, coeff] : product.terms()) {
                if (!mono.is_rook_monomial()) continue;
                const auto it = column_of_.find(format_monomial(mono));
                if (it == column_of_.end())
                    throw std::logic_error("degree slice: unindexed rook monomial");
                row[static_cast<std::size_t>(it->second)] += coeff;
                nonzero = true;
            }
            if (!nonzero) continue;
            // Incremental echelon insert.
            for (std::size_t r = 0; r < basis_.size(); ++r) {
                const auto pivot = static_cast<std::size_t>(pivots_[r]);
                if (row[pivot].is_zero()) continue;
                const Scalar factor = row[pivot];
                for (std::size_t c = 0; c < row.size(); ++c)
                    if (!basis_[r][c].is_zero()) row[c] -= factor * basis_[r][c];
            }
            int pivot = -1;
            for (std::size_t c = 0; c < row.size(); ++c)
                if (!row[c].is_zero()) {
                    pivot = static_cast<int>(c);
                    break;
                }
            if (pivot < 0) continue;
            const Scalar inv = Scalar::one(field_) / row[static_cast<std::size_t>(pivot)];
            for (auto& x : row) x *= inv;
            for (std::size_t r = 0; r < basis_.size(); ++r) {
                const Scalar factor = basis_[r][static_cast<std::size_t>(pivot)];
                if (factor.is_zero()) continue;
                for (std::size_t c = 0; c < row.size(); ++c)
                    if (!row[c].is_zero()) basis_[r][c] -= factor * row[c];
            }
            basis_.push_back(std::move(row));
            pivots_.push_back(pivot);
        }
    }
}

std::int64_t DegreeSliceOracle::slice_rank() const {
    return nonrook_count_ + static_cast<std::int64_t>(basis_.size());
}

std::int64_t DegreeSliceOracle::quotient_dimension() const {
    return static_cast<std::int64_t>(rook_monomials_.size()) -
           static_cast<std::int64_t>(basis_.size());
}

std::vector<Scalar> DegreeSliceOracle::project(const Polynomial& f) const {
    std::vector<Scalar> v(rook_monomials_.size(), Scalar::zero(field_));
    for (const auto& [mono, coeff] : f.terms()) {
        if (!mono.is_rook_monomial()) continue;  // spanned by quadratic products
        const auto it = column_of_.find(format_monomial(mono));
        if (it == column_of_.end()) throw std::logic_error("degree slice: unknown rook monomial");
        v[static_cast<std::size_t>(it->second)] += coeff;
    }
    return v;
}

bool DegreeSliceOracle::reduce_to_zero(std::vector<Scalar> v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const auto pivot = static_cast<std::size_t>(pivots_[r]);
        if (v[pivot].is_zero()) continue;
        const Scalar factor = v[pivot];
        for (std::size_t c = 0; c < v.size(); ++c)
            if (!basis_[r][c].is_zero()) v[c] -= factor * basis_[r][c];
    }
    return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

bool DegreeSliceOracle::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous())
        throw std::invalid_argument("degree slice: polynomial must be homogeneous");
    if (f.degree() != degree_) throw std::invalid_argument("degree slice: degree mismatch");
    if (!(f.field() == field_)) throw std::invalid_argument("degree slice: field mismatch");
    return reduce_to_zero(project(f));
}

bool ideal_membership(const Polynomial& f, int n, const Limits& limits) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous())
        throw std::invalid_argument(
            "ideal_membership: polynomial must be homogeneous; reduce componentwise instead");
    DegreeSliceOracle oracle(n, f.degree(), f.field(), limits);
    return oracle.contains(f);
}

}  // namespace viennot
