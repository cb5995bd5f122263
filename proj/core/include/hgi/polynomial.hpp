#pragma once

#include "hgi/rational.hpp"

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hgi {

// One variable x[row,col] of the generic matrix X. Both indices are 1-based.
struct VarId {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Variables are totally ordered: x[u,i] beats x[v,m] iff u < v, or u = v and
// i < m. So the (row, col)-lexicographically smallest VarId is the largest
// variable; sorting factor lists by VarId puts the most significant variable
// first.
inline bool variable_precedes(const VarId& a, const VarId& b) {
    return a < b;
}

// Power product with positive exponents, factors sorted by VarId ascending
// (most significant variable first).
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial variable(VarId v, int exp = 1) {
        if (exp <= 0) throw std::invalid_argument("Monomial::variable: exponent must be positive");
        Monomial m;
        m.factors_.emplace_back(v, exp);
        return m;
    }

    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int degree() const;
    int exponent_of(VarId v) const;

    bool divides(const Monomial& other) const;
    Monomial times(const Monomial& other) const;
    // Requires other.divides(*this).
    Monomial divided_by(const Monomial& other) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& other) const;
    bool squarefree() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
};

// The lexicographic order induced by the variable order above. This is the
// only term order in the library.
struct TermOrder {
    // Positive if a > b, zero if equal, negative if a < b.
    int compare(const Monomial& a, const Monomial& b) const;
};

inline const TermOrder kLex{};

struct Term {
    Rational coeff;
    Monomial mono;

    friend bool operator==(const Term& a, const Term& b) {
        return a.mono == b.mono && a.coeff == b.coeff;
    }
};

// Exact multivariate polynomial, terms strictly decreasing in the lex order.
// The zero polynomial has no terms.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(const Rational& c);
    static Polynomial variable(VarId v);
    static Polynomial term(const Rational& c, const Monomial& m);
    // Sorts, merges equal monomials, strips zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coefficient() const { return leading_term().coeff; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Rational& c, const Monomial& m) const;
    Polynomial monic() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    // Debug / test format: terms as "c*x[r,c]^e*..." joined with " + " / " - ".
    std::string str() const;

private:
    std::vector<Term> terms_;
};

} // namespace hgi
