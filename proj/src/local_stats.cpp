#include "viennot/local_stats.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "viennot/linalg.hpp"

namespace viennot {

PermutationStatistic::PermutationStatistic(int n, Field field, std::vector<Scalar> values)
    : n_(n), field_(field), values_(std::move(values)) {
    if (values_.size() != factorial(n))
        throw std::invalid_argument("statistic: length must be n!");
    for (const Scalar& v : values_)
        if (!(v.field() == field_)) throw std::invalid_argument("statistic: mixed fields");
}

PermutationStatistic PermutationStatistic::zero(int n, Field field) {
    return PermutationStatistic(n, field,
                                std::vector<Scalar>(factorial(n), Scalar::zero(field)));
}

const Scalar& PermutationStatistic::at(const Permutation& w) const {
    return values_[static_cast<std::size_t>(w.lex_rank())];
}

void PermutationStatistic::set(const Permutation& w, Scalar v) {
    values_[static_cast<std::size_t>(w.lex_rank())] = std::move(v);
}

PermutationStatistic PermutationStatistic::operator+(const PermutationStatistic& o) const {
    if (n_ != o.n_ || !(field_ == o.field_)) throw std::invalid_argument("statistic: mismatch");
    std::vector<Scalar> out = values_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += o.values_[k];
    return PermutationStatistic(n_, field_, std::move(out));
}

PermutationStatistic PermutationStatistic::operator-(const PermutationStatistic& o) const {
    if (n_ != o.n_ || !(field_ == o.field_)) throw std::invalid_argument("statistic: mismatch");
    std::vector<Scalar> out = values_;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= o.values_[k];
    return PermutationStatistic(n_, field_, std::move(out));
}

PermutationStatistic PermutationStatistic::scaled(const Scalar& c) const {
    std::vector<Scalar> out = values_;
    for (auto& v : out) v *= c;
    return PermutationStatistic(n_, field_, std::move(out));
}

bool PermutationStatistic::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Scalar& v) { return v.is_zero(); });
}

bool PermutationStatistic::operator==(const PermutationStatistic& o) const {
    if (n_ != o.n_ || !(field_ == o.field_)) return false;
    for (std::size_t k = 0; k < values_.size(); ++k)
        if (!(values_[k] == o.values_[k])) return false;
    return true;
}

PermutationStatistic indicator(const RookPlacement& r, Field field) {
    PermutationStatistic f = PermutationStatistic::zero(r.n(), field);
    for_each_permutation(r.n(), [&](const Permutation& w) {
        if (r.extended_by(w)) f.set(w, Scalar::one(field));
    });
    return f;
}

BuiltinStatistic builtin_statistic_by_name(const std::string& name) {
    if (name == "exc") return BuiltinStatistic::Exceedance;
    if (name == "inv") return BuiltinStatistic::Inversion;
    if (name == "peak") return BuiltinStatistic::Peak;
    if (name == "lis") return BuiltinStatistic::Lis;
    if (name == "constant") return BuiltinStatistic::Constant;
    throw std::invalid_argument("unknown statistic name: " + name);
}

PermutationStatistic builtin_statistic(BuiltinStatistic which, int n, Field field) {
    PermutationStatistic f = PermutationStatistic::zero(n, field);
    for_each_permutation(n, [&](const Permutation& w) {
        long value = 0;
        switch (which) {
            case BuiltinStatistic::Exceedance:
                for (int i = 1; i <= n; ++i)
                    if (w(i) > i) ++value;
                break;
            case BuiltinStatistic::Inversion:
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 1; j <= n; ++j)
                        if (w(i) > w(j)) ++value;
                break;
            case BuiltinStatistic::Peak:
                for (int i = 2; i < n; ++i)
                    if (w(i - 1) < w(i) && w(i) > w(i + 1)) ++value;
                break;
            case BuiltinStatistic::Lis:
                value = lis(w);
                break;
            case BuiltinStatistic::Constant:
                value = 1;
                break;
        }
        f.set(w, Scalar(value, field));
    });
    return f;
}

JuntaBasis junta_basis(int n, int k, const Limits& limits) {
    if (k < 0 || k > n - 1)
        throw std::invalid_argument("junta_basis: k must satisfy 0 <= k <= n-1");
    std::vector<RookPlacement> elements;
    for_each_permutation(
        n,
        [&](const Permutation& w) {
            RookPlacement s = shadow_set(w);
            if (s.size() <= k) elements.push_back(std::move(s));
        },
        limits);
    std::sort(elements.begin(), elements.end(), [](const RookPlacement& a, const RookPlacement& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return toeplitz_compare(GridMonomial::of_placement(a), GridMonomial::of_placement(b)) > 0;
    });
    return JuntaBasis{n, k, std::move(elements)};
}

PermutationStatistic reconstruct(const JuntaBasis& basis, const std::vector<Scalar>& coefficients,
                                 Field field) {
    if (coefficients.size() != basis.elements.size())
        throw std::invalid_argument("reconstruct: coefficient count mismatch");
    PermutationStatistic out = PermutationStatistic::zero(basis.n, field);
    for (std::size_t c = 0; c < coefficients.size(); ++c) {
        if (coefficients[c].is_zero()) continue;
        out = out + indicator(basis.elements[c], field).scaled(coefficients[c]);
    }
    return out;
}

namespace {

// Decomposition over a prime field by direct elimination of [A | f].
Decomposition decompose_mod_p(const PermutationStatistic& f, JuntaBasis basis) {
    const std::uint64_t p = f.field().modulus;
    const auto rows = static_cast<std::size_t>(factorial(basis.n));
    const std::size_t cols = basis.elements.size();
    std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols + 1, 0));
    for (std::size_t c = 0; c < cols; ++c) {
        const PermutationStatistic ind = indicator(basis.elements[c], f.field());
        for (std::size_t r = 0; r < rows; ++r)
            a[r][c] = ind.values()[r].value().get_num().get_ui();
    }
    for (std::size_t r = 0; r < rows; ++r)
        a[r][cols] = f.values()[r].value().get_num().get_ui();

    // Gauss-Jordan on the augmented system.
    std::size_t row = 0;
    std::vector<int> pivot_col_of_row;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col] % p == 0) ++pivot;
        if (pivot == rows)
            throw std::logic_error("decompose: junta indicators dependent mod p");
        std::swap(a[pivot], a[row]);
        std::uint64_t inv = 1, base = a[row][col] % p, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        for (std::size_t c = col; c <= cols; ++c) a[row][c] = a[row][c] % p * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row) continue;
            const std::uint64_t factor = a[r][col] % p;
            if (factor == 0) continue;
            const std::uint64_t neg = p - factor;
            for (std::size_t c = col; c <= cols; ++c) a[r][c] = (a[r][c] + neg * a[row][c]) % p;
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<Scalar> coeffs(cols, Scalar::zero(f.field()));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        coeffs[static_cast<std::size_t>(pivot_col_of_row[r])] =
            Scalar(static_cast<long>(a[r][cols]), f.field());
    Decomposition result;
    result.basis = std::move(basis);
    const PermutationStatistic rebuilt = reconstruct(result.basis, coeffs, f.field());
    if (rebuilt == f) {
        result.k_local = true;
        result.coefficients = std::move(coeffs);
    } else {
        result.residual = f - rebuilt;
    }
    return result;
}

}  // namespace

Decomposition decompose(const PermutationStatistic& f, int k, const Limits& limits) {
    JuntaBasis basis = junta_basis(f.n(), k, limits);
    if (!f.field().is_rational()) return decompose_mod_p(f, std::move(basis));

    const auto rows = static_cast<std::size_t>(factorial(f.n()));
    const std::size_t cols = basis.elements.size();
    std::vector<std::vector<long>> matrix(rows, std::vector<long>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c)
        for_each_permutation(f.n(), [&](const Permutation& w) {
            if (basis.elements[c].extended_by(w))
                matrix[static_cast<std::size_t>(w.lex_rank())][c] = 1;
        });
    std::vector<mpq_class> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) rhs[r] = f.values()[r].value();

    const RationalSolve solve = solve_full_column_rank(matrix, rhs);
    if (!solve.pivot_rank_ok)
        throw std::logic_error("decompose: junta indicators are rank deficient");
    std::vector<Scalar> coeffs;
    coeffs.reserve(cols);
    for (const mpq_class& q : solve.candidate) coeffs.emplace_back(q, f.field());

    Decomposition result;
    result.basis = std::move(basis);
    const PermutationStatistic rebuilt = reconstruct(result.basis, coeffs, f.field());
    if (rebuilt == f) {
        result.k_local = true;
        result.coefficients = std::move(coeffs);
    } else {
        result.residual = f - rebuilt;
    }
    return result;
}

int minimal_locality(const PermutationStatistic& f, const Limits& limits) {
    // Loc_k spaces are nested, so the success predicate is monotone in k.
    int lo = 0, hi = f.n() - 1;
    while (lo < hi) {
        const int mid = (lo + hi) / 2;
        if (decompose(f, mid, limits).k_local) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

namespace {

// Minimal CSV field reader: handles double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_number) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    for (std::size_t k = 0; k < line.size(); ++k) {
        const char ch = line[k];
        if (quoted) {
            if (ch == '"') {
                if (k + 1 < line.size() && line[k + 1] == '"') {
                    current += '"';
                    ++k;
                } else {
                    quoted = false;
                }
            } else {
                current += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(current);
            current.clear();
        } else if (ch == '\r') {
            // tolerate CRLF
        } else {
            current += ch;
        }
    }
    if (quoted)
        throw ParseError(line_number, "unterminated quote in CSV line");
    fields.push_back(current);
    return fields;
}

}  // namespace

PermutationStatistic parse_statistic_csv(std::istream& in, Field field) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(0, "empty statistic file");
    const auto header = split_csv_line(line, 1);
    if (header.size() != 2 || header[0] != "permutation" || header[1] != "value")
        throw ParseError(0, "statistic CSV must start with header permutation,value");
    std::map<std::uint64_t, Scalar> values;
    int n = -1;
    std::size_t line_number = 1;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line, line_number);
        if (fields.size() != 2) throw ParseError(line_number, "expected two CSV fields");
        const Permutation w = parse_permutation(fields[0]);
        if (n == -1) n = w.n();
        else if (n != w.n()) throw ParseError(line_number, "mixed permutation sizes");
        const Scalar v = parse_scalar(fields[1], field);
        if (!values.emplace(w.lex_rank(), v).second)
            throw ParseError(line_number, "repeated permutation " + fields[0]);
    }
    if (n == -1) throw ParseError(0, "statistic file has no data rows");
    if (values.size() != factorial(n))
        throw ParseError(0, "statistic file must list all n! permutations exactly once");
    std::vector<Scalar> ordered;
    ordered.reserve(values.size());
    for (auto& [rank, v] : values) ordered.push_back(std::move(v));
    return PermutationStatistic(n, field, std::move(ordered));
}

std::string format_statistic_csv(const PermutationStatistic& f) {
    std::string out = "permutation,value\n";
    for_each_permutation(f.n(), [&](const Permutation& w) {
        out += "\"" + format_permutation(w) + "\"," + format_scalar(f.at(w)) + "\n";
    });
    return out;
}

std::string format_decomposition_csv(const JuntaBasis& basis,
                                     const std::vector<Scalar>& coefficients) {
    std::string out = "rook_placement,coefficient\n";
    for (std::size_t k = 0; k < basis.elements.size(); ++k)
        out += "\"" + format_rook_placement(basis.elements[k]) + "\"," +
               format_scalar(coefficients[k]) + "\n";
    return out;
}

}  // namespace viennot
