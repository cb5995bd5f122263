#include "hgi/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace hgi {

Monomial Monomial::from_factors(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& [v, e] : factors) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

int Monomial::exponent_of(VarId v) const {
    for (const auto& [w, e] : factors_) {
        if (w == v) return e;
        if (v < w) return 0;
    }
    return 0;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
        while (it != other.factors_.end() && it->first < v) ++it;
        if (it == other.factors_.end() || !(it->first == v) || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        } else if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else {
            out.factors_.push_back(*b++);
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, other.factors_.end());
    return out;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial out;
    auto b = other.factors_.begin();
    for (const auto& [v, e] : factors_) {
        if (b != other.factors_.end() && b->first == v) {
            int r = e - b->second;
            if (r < 0) throw std::invalid_argument("Monomial::divided_by: not divisible");
            if (r > 0) out.factors_.emplace_back(v, r);
            ++b;
        } else {
            out.factors_.emplace_back(v, e);
        }
    }
    if (b != other.factors_.end()) throw std::invalid_argument("Monomial::divided_by: not divisible");
    return out;
}

Monomial Monomial::lcm(const Monomial& x, const Monomial& y) {
    Monomial out;
    auto a = x.factors_.begin();
    auto b = y.factors_.begin();
    while (a != x.factors_.end() && b != y.factors_.end()) {
        if (a->first == b->first) {
            out.factors_.emplace_back(a->first, std::max(a->second, b->second));
            ++a;
            ++b;
        } else if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else {
            out.factors_.push_back(*b++);
        }
    }
    out.factors_.insert(out.factors_.end(), a, x.factors_.end());
    out.factors_.insert(out.factors_.end(), b, y.factors_.end());
    return out;
}

bool Monomial::coprime_with(const Monomial& other) const {
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() && b != other.factors_.end()) {
        if (a->first == b->first) return false;
        if (a->first < b->first) ++a;
        else ++b;
    }
    return true;
}

bool Monomial::squarefree() const {
    for (const auto& [v, e] : factors_) {
        if (e > 1) return false;
    }
    return true;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    // Pure lex: walk variables from most significant down; the first position
    // where the exponents differ decides, and a present variable beats an
    // absent one.
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        const auto& [va, ea] = fa[i];
        const auto& [vb, eb] = fb[j];
        if (va == vb) {
            if (ea != eb) return ea > eb ? 1 : -1;
            ++i;
            ++j;
        } else if (va < vb) {
            return 1; // a has positive exponent on a more significant variable
        } else {
            return -1;
        }
    }
    if (i < fa.size()) return 1;
    if (j < fb.size()) return -1;
    return 0;
}

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({c, Monomial::one()});
    return p;
}

Polynomial Polynomial::variable(VarId v) {
    Polynomial p;
    p.terms_.push_back({Rational(1), Monomial::variable(v)});
    return p;
}

Polynomial Polynomial::term(const Rational& c, const Monomial& m) {
    Polynomial p;
    if (c != 0) p.terms_.push_back({c, m});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        return kLex.compare(a.mono, b.mono) > 0;
    });
    Polynomial p;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::logic_error("Polynomial::leading_term on zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({-t.coeff, t.mono});
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() && b != other.terms_.end()) {
        int c = kLex.compare(a->mono, b->mono);
        if (c > 0) {
            out.terms_.push_back(*a++);
        } else if (c < 0) {
            out.terms_.push_back(*b++);
        } else {
            Rational s = a->coeff + b->coeff;
            if (s != 0) out.terms_.push_back({std::move(s), a->mono});
            ++a;
            ++b;
        }
    }
    out.terms_.insert(out.terms_.end(), a, terms_.end());
    out.terms_.insert(out.terms_.end(), b, other.terms_.end());
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    std::vector<Term> acc;
    acc.reserve(terms_.size() * other.terms_.size());
    for (const auto& s : terms_) {
        for (const auto& t : other.terms_) {
            acc.push_back({s.coeff * t.coeff, s.mono.times(t.mono)});
        }
    }
    return from_terms(std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono});
    return out;
}

Polynomial Polynomial::times_term(const Rational& c, const Monomial& m) const {
    if (c == 0) return Polynomial();
    Polynomial out;
    out.terms_.reserve(terms_.size());
    // Multiplying every monomial by the same monomial preserves the lex order.
    for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.mono.times(m)});
    return out;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading_coefficient());
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.mono.is_one()) {
            os << c.get_str();
            printed = true;
        }
        for (const auto& [v, e] : t.mono.factors()) {
            if (printed) os << "*";
            os << "x[" << v.row << "," << v.col << "]";
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

} // namespace hgi
