#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "viennot/limits.hpp"
#include "viennot/quotient.hpp"
#include "viennot/scalar.hpp"
#include "viennot/shadow.hpp"

namespace viennot {

// A function S_n -> F stored by lexicographic rank of the permutation.
class PermutationStatistic {
  public:
    PermutationStatistic(int n, Field field, std::vector<Scalar> values);
    static PermutationStatistic zero(int n, Field field);

    int n() const { return n_; }
    const Field& field() const { return field_; }
    const std::vector<Scalar>& values() const { return values_; }
    const Scalar& at(const Permutation& w) const;
    void set(const Permutation& w, Scalar v);

    PermutationStatistic operator+(const PermutationStatistic& o) const;
    PermutationStatistic operator-(const PermutationStatistic& o) const;
    PermutationStatistic scaled(const Scalar& c) const;
    bool is_zero() const;
    bool operator==(const PermutationStatistic& o) const;

  private:
    int n_;
    Field field_;
    std::vector<Scalar> values_;
};

// 1 at w exactly when w extends the placement.
PermutationStatistic indicator(const RookPlacement& r, Field field = Field::rationals());

enum class BuiltinStatistic { Exceedance, Inversion, Peak, Lis, Constant };
BuiltinStatistic builtin_statistic_by_name(const std::string& name);
PermutationStatistic builtin_statistic(BuiltinStatistic which, int n,
                                       Field field = Field::rationals());

// Shadow sets of all w with lis(w) >= n - k, ordered by size and then by
// Toeplitz-descending order of the shadow monomial.  Nested in k.
struct JuntaBasis {
    int n = 0;
    int k = 0;
    std::vector<RookPlacement> elements;
};

JuntaBasis junta_basis(int n, int k, const Limits& limits = {});

// Exact decomposition over the junta basis.  NotKLocal is a result, not an
// error: `coefficients` is then empty and `residual` holds f minus the best
// candidate reconstruction from the pivot subsystem.
struct Decomposition {
    bool k_local = false;
    JuntaBasis basis;
    std::vector<Scalar> coefficients;
    std::optional<PermutationStatistic> residual;
};

Decomposition decompose(const PermutationStatistic& f, int k, const Limits& limits = {});
PermutationStatistic reconstruct(const JuntaBasis& basis, const std::vector<Scalar>& coefficients,
                                 Field field);
int minimal_locality(const PermutationStatistic& f, const Limits& limits = {});

// CSV with header "permutation,value"; permutations quoted one-line words,
// values exact rationals.  Floating-point syntax is rejected.
PermutationStatistic parse_statistic_csv(std::istream& in, Field field = Field::rationals());
std::string format_statistic_csv(const PermutationStatistic& f);
std::string format_decomposition_csv(const JuntaBasis& basis,
                                     const std::vector<Scalar>& coefficients);

}  // namespace viennot
