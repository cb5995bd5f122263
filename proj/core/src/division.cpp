#include "hgi/division.hpp"

#include <stdexcept>

namespace hgi {

namespace {

// Shared worker: divide f, filling quotients only when requested.
Polynomial run_division(const Polynomial& f, const std::vector<Polynomial>& divisors,
                        std::vector<Polynomial>* quotients) {
    for (const auto& g : divisors) {
        if (g.is_zero()) throw std::invalid_argument("divide: zero divisor");
    }
    if (quotients) quotients->assign(divisors.size(), Polynomial::zero());

    Polynomial p = f;
    std::vector<Term> remainder_terms;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        bool reduced = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            const auto& g = divisors[i];
            if (!g.leading_monomial().divides(lt.mono)) continue;
            Rational c = lt.coeff / g.leading_coefficient();
            Monomial m = lt.mono.divided_by(g.leading_monomial());
            p = p - g.times_term(c, m);
            if (quotients) (*quotients)[i] = (*quotients)[i] + Polynomial::term(c, m);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Leading term is irreducible: move it to the remainder. Terms
            // come off in strictly decreasing order, so the remainder list is
            // already sorted.
            remainder_terms.push_back(lt);
            p = p - Polynomial::term(lt.coeff, lt.mono);
        }
    }
    return Polynomial::from_terms(std::move(remainder_terms));
}

} // namespace

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder&) {
    DivisionResult out;
    out.remainder = run_division(f, divisors, &out.quotients);
    return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  const TermOrder&) {
    return run_division(f, divisors, nullptr);
}

Polynomial s_polynomial(const Polynomial& g1, const Polynomial& g2, const TermOrder&) {
    if (g1.is_zero() || g2.is_zero()) throw std::invalid_argument("s_polynomial: zero input");
    Polynomial a = g1.monic();
    Polynomial b = g2.monic();
    Monomial l = Monomial::lcm(a.leading_monomial(), b.leading_monomial());
    return a.times_term(1, l.divided_by(a.leading_monomial())) -
           b.times_term(1, l.divided_by(b.leading_monomial()));
}

} // namespace hgi
