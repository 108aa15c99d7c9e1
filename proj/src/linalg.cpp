#include "viennot/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace viennot {

bool EchelonBasis::reduce(std::vector<mpq_class>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int col = pivots_[r];
        if (v[static_cast<std::size_t>(col)] == 0) continue;
        const mpq_class factor = v[static_cast<std::size_t>(col)];
        const auto& row = rows_[r];
        for (int c = 0; c < width_; ++c)
            if (row[static_cast<std::size_t>(c)] != 0)
                v[static_cast<std::size_t>(c)] -= factor * row[static_cast<std::size_t>(c)];
    }
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
}

bool EchelonBasis::insert(std::vector<mpq_class> v) {
    if (static_cast<int>(v.size()) != width_)
        throw std::invalid_argument("echelon: row width mismatch");
    if (reduce(v)) return false;
    int pivot = -1;
    for (int c = 0; c < width_; ++c)
        if (v[static_cast<std::size_t>(c)] != 0) {
            pivot = c;
            break;
        }
    const mpq_class inv = 1 / v[static_cast<std::size_t>(pivot)];
    for (auto& x : v)
        if (x != 0) x *= inv;
    v[static_cast<std::size_t>(pivot)] = 1;
    // Keep the basis fully reduced so vector reduction is a single pass.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        auto& row = rows_[r];
        const mpq_class factor = row[static_cast<std::size_t>(pivot)];
        if (factor == 0) continue;
        for (int c = 0; c < width_; ++c)
            if (v[static_cast<std::size_t>(c)] != 0)
                row[static_cast<std::size_t>(c)] -= factor * v[static_cast<std::size_t>(c)];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
}

namespace {

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) { return mod_pow(a % p, p - 2, p); }

}  // namespace

int rank_mod_p(std::vector<std::vector<std::uint64_t>>& rows, std::uint64_t p) {
    if (rows.empty()) return 0;
    const std::size_t width = rows[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < width && row < rows.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < rows.size() && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        const std::uint64_t inv = mod_inverse(rows[row][col] % p, p);
        for (std::size_t c = col; c < width; ++c) rows[row][c] = rows[row][c] % p * inv % p;
        for (std::size_t r = row + 1; r < rows.size(); ++r) {
            const std::uint64_t factor = rows[r][col] % p;
            if (factor == 0) continue;
            const std::uint64_t neg = p - factor;
            for (std::size_t c = col; c < width; ++c)
                rows[r][c] = (rows[r][c] + neg * rows[row][c]) % p;
        }
        ++row;
        ++rank;
    }
    return rank;
}

int rank_mod_2(std::vector<std::vector<std::uint64_t>>& rows, int width) {
    int rank = 0;
    std::size_t row = 0;
    for (int col = 0; col < width && row < rows.size(); ++col) {
        const std::size_t block = static_cast<std::size_t>(col) / 64;
        const std::uint64_t mask = 1ULL << (col % 64);
        std::size_t pivot = row;
        while (pivot < rows.size() && !(rows[pivot][block] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[row]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == row || !(rows[r][block] & mask)) continue;
            for (std::size_t b = block; b < rows[r].size(); ++b) rows[r][b] ^= rows[row][b];
        }
        ++row;
        ++rank;
    }
    return rank;
}

mpz_class integer_determinant(std::vector<std::vector<mpz_class>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

std::optional<std::vector<std::uint64_t>> solve_mod_p(std::vector<std::vector<std::uint64_t>> rows,
                                                      std::vector<std::uint64_t> rhs,
                                                      std::uint64_t p) {
    const std::size_t n = rows.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && rows[pivot][col] % p == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(rows[pivot], rows[col]);
        std::swap(rhs[pivot], rhs[col]);
        const std::uint64_t inv = mod_inverse(rows[col][col] % p, p);
        for (std::size_t c = col; c < n; ++c) rows[col][c] = rows[col][c] % p * inv % p;
        rhs[col] = rhs[col] % p * inv % p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const std::uint64_t factor = rows[r][col] % p;
            if (factor == 0) continue;
            const std::uint64_t neg = p - factor;
            for (std::size_t c = col; c < n; ++c)
                rows[r][c] = (rows[r][c] + neg * rows[col][c]) % p;
            rhs[r] = (rhs[r] + neg * rhs[col]) % p;
        }
    }
    return rhs;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& x, const mpz_class& m) {
    // Half-extended Euclid; stop when the remainder crosses sqrt(m/2).
    mpz_class bound;
    mpz_class half_m = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half_m.get_mpz_t());
    mpz_class r0 = m, r1 = x % m;
    if (r1 < 0) r1 += m;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class den = t1, num = r1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) {
        num /= g;
        den /= g;
    }
    return mpq_class(num, den);
}

std::vector<std::uint64_t> solver_primes(int count) {
    std::vector<std::uint64_t> primes;
    std::uint64_t candidate = (1ULL << 31) - 1;
    auto is_prime = [](std::uint64_t v) {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    while (static_cast<int>(primes.size()) < count) {
        if (is_prime(candidate)) primes.push_back(candidate);
        --candidate;
    }
    return primes;
}

RationalSolve solve_full_column_rank(const std::vector<std::vector<long>>& matrix,
                                     const std::vector<mpq_class>& rhs) {
    RationalSolve result;
    const std::size_t row_count = matrix.size();
    const std::size_t col_count = row_count == 0 ? 0 : matrix[0].size();
    if (col_count == 0) {
        result.pivot_rank_ok = true;
        return result;
    }

    // Pivot rows found mod the first prime; the pivot subsystem is then
    // invertible over the rationals as well.
    const auto primes = solver_primes(42);
    std::uint64_t p0 = primes[0];
    std::vector<std::vector<std::uint64_t>> work(row_count,
                                                 std::vector<std::uint64_t>(col_count));
    std::vector<int> row_index(row_count);
    for (std::size_t r = 0; r < row_count; ++r) {
        row_index[r] = static_cast<int>(r);
        for (std::size_t c = 0; c < col_count; ++c) {
            long v = matrix[r][c] % static_cast<long>(p0);
            if (v < 0) v += static_cast<long>(p0);
            work[r][c] = static_cast<std::uint64_t>(v);
        }
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_count && row < row_count; ++col) {
        std::size_t pivot = row;
        while (pivot < row_count && work[pivot][col] == 0) ++pivot;
        if (pivot == row_count) continue;
        std::swap(work[pivot], work[row]);
        std::swap(row_index[pivot], row_index[row]);
        const std::uint64_t inv = mod_inverse(work[row][col], p0);
        for (std::size_t c = col; c < col_count; ++c) work[row][c] = work[row][c] * inv % p0;
        for (std::size_t r = row + 1; r < row_count; ++r) {
            const std::uint64_t factor = work[r][col];
            if (factor == 0) continue;
            const std::uint64_t neg = p0 - factor;
            for (std::size_t c = col; c < col_count; ++c)
                work[r][c] = (work[r][c] + neg * work[row][c]) % p0;
        }
        result.pivot_rows.push_back(row_index[row]);
        ++row;
    }
    if (result.pivot_rows.size() != col_count) return result;  // rank deficiency mod p0
    result.pivot_rank_ok = true;

    // Clear denominators of the pivot right-hand side.
    mpz_class denominator_lcm = 1;
    for (int r : result.pivot_rows)
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                rhs[static_cast<std::size_t>(r)].get_den().get_mpz_t());
    std::vector<mpz_class> b_int(col_count);
    for (std::size_t k = 0; k < col_count; ++k) {
        const auto& q = rhs[static_cast<std::size_t>(result.pivot_rows[k])];
        b_int[k] = q.get_num() * (denominator_lcm / q.get_den());
    }
    std::vector<std::vector<long>> square(col_count, std::vector<long>(col_count));
    for (std::size_t k = 0; k < col_count; ++k)
        for (std::size_t c = 0; c < col_count; ++c)
            square[k][c] = matrix[static_cast<std::size_t>(result.pivot_rows[k])][c];

    // CRT over as many primes as rational reconstruction needs, verified by
    // re-substitution into the pivot subsystem.
    mpz_class modulus = 1;
    std::vector<mpz_class> combined(col_count, 0);
    std::vector<mpq_class> candidate(col_count);
    for (int prime_index = 0; prime_index < static_cast<int>(primes.size()); ++prime_index) {
        const std::uint64_t p = primes[static_cast<std::size_t>(prime_index)];
        std::vector<std::vector<std::uint64_t>> rows_p(col_count,
                                                       std::vector<std::uint64_t>(col_count));
        std::vector<std::uint64_t> rhs_p(col_count);
        for (std::size_t r = 0; r < col_count; ++r) {
            for (std::size_t c = 0; c < col_count; ++c) {
                long v = square[r][c] % static_cast<long>(p);
                if (v < 0) v += static_cast<long>(p);
                rows_p[r][c] = static_cast<std::uint64_t>(v);
            }
            mpz_class res = b_int[r] % static_cast<unsigned long>(p);
            if (res < 0) res += static_cast<unsigned long>(p);
            rhs_p[r] = res.get_ui();
        }
        auto sol_p = solve_mod_p(std::move(rows_p), std::move(rhs_p), p);
        if (!sol_p) continue;  // singular mod this prime; try the next one
        if (modulus == 1) {
            for (std::size_t k = 0; k < col_count; ++k) combined[k] = (*sol_p)[k];
            modulus = p;
        } else {
            // CRT combine coordinatewise.
            mpz_class p_mpz(static_cast<unsigned long>(p));
            mpz_class inv_mod_p;
            mpz_class modulus_mod_p = modulus % p_mpz;
            mpz_invert(inv_mod_p.get_mpz_t(), modulus_mod_p.get_mpz_t(), p_mpz.get_mpz_t());
            for (std::size_t k = 0; k < col_count; ++k) {
                mpz_class target((*sol_p)[k]);
                mpz_class delta = (target - combined[k] % p_mpz) % p_mpz;
                if (delta < 0) delta += p_mpz;
                combined[k] += modulus * ((delta * inv_mod_p) % p_mpz);
            }
            modulus *= p_mpz;
        }
        bool reconstructed = true;
        for (std::size_t k = 0; k < col_count && reconstructed; ++k) {
            auto q = rational_reconstruct(combined[k], modulus);
            if (!q) reconstructed = false;
            else candidate[k] = *q;
        }
        if (!reconstructed) continue;
        // Exact verification against the pivot subsystem.
        bool verified = true;
        for (std::size_t r = 0; r < col_count && verified; ++r) {
            mpq_class acc = 0;
            for (std::size_t c = 0; c < col_count; ++c)
                if (square[r][c] != 0) acc += candidate[c] * square[r][c];
            verified = acc * denominator_lcm == b_int[r];
        }
        if (verified) {
            for (std::size_t k = 0; k < col_count; ++k) result.candidate.push_back(candidate[k]);
            return result;
        }
    }
    throw std::runtime_error("solve_full_column_rank: rational reconstruction did not converge");
}

}  // namespace viennot
