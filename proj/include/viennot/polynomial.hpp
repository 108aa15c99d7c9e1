#pragma once

#include <map>
#include <string>
#include <string_view>

#include "viennot/monomial.hpp"
#include "viennot/permutation.hpp"
#include "viennot/scalar.hpp"

namespace viennot {

// Exact multivariate polynomial on the n x n variable grid.  Terms are kept
// in Toeplitz-descending order with no explicit zero coefficients, so the
// first term is always the leading term.
class Polynomial {
  public:
    using TermMap = std::map<GridMonomial, Scalar, ToeplitzGreater>;

    Polynomial(int n, Field field) : n_(n), field_(field) {}
    static Polynomial zero(int n, Field field) { return Polynomial(n, field); }
    static Polynomial constant(int n, Scalar c);
    static Polynomial term(int n, GridMonomial m, Scalar c);
    static Polynomial monomial(int n, GridMonomial m, Field field);

    int n() const { return n_; }
    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    // Total degree; zero polynomial rejected.
    int degree() const;
    bool is_homogeneous() const;
    std::pair<GridMonomial, Scalar> leading_term() const;
    // Highest-degree homogeneous component; zero rejected.
    Polynomial top_component() const;
    Polynomial homogeneous_component(int d) const;

    void add_term(const GridMonomial& m, const Scalar& c);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Scalar& c) const;
    Polynomial times_monomial(const GridMonomial& m) const;
    Polynomial transpose() const;

    // x_{i,j} -> 1 when w(i) = j, else 0.
    Scalar evaluate(const Permutation& w) const;

    bool operator==(const Polynomial& o) const;

  private:
    void check_compatible(const Polynomial& o) const;
    int n_;
    Field field_;
    TermMap terms_;
};

// Signed-sum text form "3*x[2,4]*x[5,5] - x[1,1]^2"; coefficients are exact
// rationals "p/q".
std::string format_polynomial(const Polynomial& f);
Polynomial parse_polynomial(std::string_view text, int n, Field field);

// JSON form: list of {"coeff": "p/q", "monomial": [[i,j,exp],...]}.
std::string polynomial_to_json(const Polynomial& f);
Polynomial polynomial_from_json(std::string_view json_text, int n, Field field);

}  // namespace viennot
