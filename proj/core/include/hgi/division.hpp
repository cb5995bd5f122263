#pragma once

#include "hgi/polynomial.hpp"

#include <vector>

namespace hgi {

struct DivisionResult {
    std::vector<Polynomial> quotients; // one per divisor, f = sum q_i g_i + r
    Polynomial remainder;
};

// Multivariate division with a deterministic rule: at every step the first
// divisor (in list order) whose leading monomial divides the current leading
// monomial is used. No monomial of the remainder is divisible by any divisor
// leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      const TermOrder& ord = kLex);

// Remainder only; cheaper when quotients are not needed.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors,
                  const TermOrder& ord = kLex);

// S(g1, g2) = lcm/lm(g1) * g1' - lcm/lm(g2) * g2' where g1', g2' are the monic
// normalizations and lcm is the leading-monomial lcm.
Polynomial s_polynomial(const Polynomial& g1, const Polynomial& g2,
                        const TermOrder& ord = kLex);

} // namespace hgi
