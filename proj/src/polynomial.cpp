#include "viennot/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "viennot/text.hpp"

namespace viennot {

Polynomial Polynomial::constant(int n, Scalar c) {
    Polynomial f(n, c.field());
    f.add_term(GridMonomial(n), c);
    return f;
}

Polynomial Polynomial::term(int n, GridMonomial m, Scalar c) {
    Polynomial f(n, c.field());
    f.add_term(m, c);
    return f;
}

Polynomial Polynomial::monomial(int n, GridMonomial m, Field field) {
    return term(n, std::move(m), Scalar::one(field));
}

int Polynomial::degree() const {
    if (is_zero()) throw std::invalid_argument("polynomial: degree of zero");
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (is_zero()) return true;
    const int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

std::pair<GridMonomial, Scalar> Polynomial::leading_term() const {
    if (is_zero()) throw std::invalid_argument("polynomial: leading term of zero");
    return *terms_.begin();
}

Polynomial Polynomial::top_component() const {
    if (is_zero()) throw std::invalid_argument("polynomial: top component of zero");
    const int d = degree();
    return homogeneous_component(d);
}

Polynomial Polynomial::homogeneous_component(int d) const {
    Polynomial out(n_, field_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

void Polynomial::add_term(const GridMonomial& m, const Scalar& c) {
    if (m.n() != n_) throw std::invalid_argument("polynomial: monomial grid mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial: grid size mismatch");
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomial: field mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial out(n_, field_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(n_, field_);
    for (const auto& [m, c] : terms_) out.add_term(m, -c);
    return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial out(n_, field_);
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

Polynomial Polynomial::times_monomial(const GridMonomial& m) const {
    Polynomial out(n_, field_);
    for (const auto& [mono, c] : terms_) out.add_term(mono.times(m), c);
    return out;
}

Polynomial Polynomial::transpose() const {
    Polynomial out(n_, field_);
    for (const auto& [m, c] : terms_) out.add_term(m.transpose(), c);
    return out;
}

Scalar Polynomial::evaluate(const Permutation& w) const {
    if (w.n() != n_) throw std::invalid_argument("polynomial: evaluation size mismatch");
    Scalar total = Scalar::zero(field_);
    for (const auto& [m, c] : terms_) {
        bool supported = true;
        for (const auto& [cell, exp] : m.factors())
            if (w(cell.i) != cell.j) {
                supported = false;
                break;
            }
        if (supported) total += c;
    }
    return total;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (n_ != o.n_ || !(field_ == o.field_) || terms_.size() != o.terms_.size()) return false;
    auto ita = terms_.begin();
    auto itb = o.terms_.begin();
    for (; ita != terms_.end(); ++ita, ++itb)
        if (!(ita->first == itb->first) || !(ita->second == itb->second)) return false;
    return true;
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        mpq_class v = c.value();
        const bool negative = v < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        mpq_class abs_v = negative ? mpq_class(-v) : v;
        if (abs_v != 1 || m.is_one()) {
            out += abs_v.get_str();
            if (!m.is_one()) out += "*";
        }
        if (!m.is_one()) out += format_monomial(m);
    }
    return out;
}

namespace {

// term := [coeff '*'?] factor ('*' factor)* | coeff
GridMonomial parse_factor(TextCursor& cur, int n) {
    cur.expect('x', "variable");
    cur.expect('[', "variable");
    const int i = cur.read_positive_int("variable row");
    cur.skip_ws();
    cur.expect(',', "variable");
    const int j = cur.read_positive_int("variable column");
    cur.skip_ws();
    cur.expect(']', "variable");
    if (i > n || j > n) cur.fail("variable index exceeds grid size");
    int exp = 1;
    cur.skip_ws();
    if (cur.try_consume('^')) exp = cur.read_positive_int("exponent");
    return GridMonomial(n, {{Cell{i, j}, exp}});
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, int n, Field field) {
    TextCursor cur(text);
    Polynomial out(n, field);
    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.at_end()) {
            if (first) cur.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (cur.try_consume('+')) sign = 1;
        else if (cur.try_consume('-')) sign = -1;
        else if (!first) cur.fail("expected '+' or '-' between terms");
        cur.skip_ws();
        Scalar coeff = Scalar::one(field);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::string num = cur.read_digits("coefficient");
            mpz_class numerator(num);
            cur.skip_ws();
            if (cur.peek() == '.') cur.fail("floating-point values are rejected");
            if (cur.try_consume('/')) {
                std::string den = cur.read_digits("denominator");
                mpz_class denominator(den);
                if (denominator == 0) cur.fail("zero denominator");
                coeff = Scalar(mpq_class(numerator, denominator), field);
            } else {
                coeff = Scalar(numerator, field);
            }
            have_coeff = true;
        }
        GridMonomial mono(n);
        bool have_factor = false;
        while (true) {
            cur.skip_ws();
            if (have_coeff || have_factor) {
                if (!cur.try_consume('*')) break;
                cur.skip_ws();
            }
            if (cur.peek() != 'x') {
                if (have_factor || have_coeff) cur.fail("expected variable after '*'");
                cur.fail("expected coefficient or variable");
            }
            mono = mono.times(parse_factor(cur, n));
            have_factor = true;
        }
        if (!have_coeff && !have_factor) cur.fail("expected term");
        if (sign < 0) coeff = -coeff;
        out.add_term(mono, coeff);
        first = false;
    }
    return out;
}

std::string polynomial_to_json(const Polynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [cell, exp] : m.factors())
            mono.push_back(nlohmann::json::array({cell.i, cell.j, exp}));
        terms.push_back({{"coeff", format_scalar(c)}, {"monomial", mono}});
    }
    return terms.dump();
}

Polynomial polynomial_from_json(std::string_view json_text, int n, Field field) {
    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, "invalid JSON polynomial");
    }
    if (!parsed.is_array()) throw ParseError(0, "polynomial JSON must be a list of terms");
    Polynomial out(n, field);
    for (const auto& term : parsed) {
        const Scalar coeff = parse_scalar(term.at("coeff").get<std::string>(), field);
        std::vector<std::pair<Cell, int>> factors;
        for (const auto& entry : term.at("monomial")) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError(0, "monomial entries must be [i,j,exp]");
            factors.emplace_back(Cell{entry[0].get<int>(), entry[1].get<int>()},
                                 entry[2].get<int>());
        }
        out.add_term(GridMonomial(n, factors), coeff);
    }
    return out;
}

}  // namespace viennot
