#pragma once

#include "hgi/polynomial.hpp"
#include "hgi/rational.hpp"

#include <vector>

namespace hgi {

// Dense exact rational matrix; dimensions fixed at construction.
class RationalMatrix {
public:
    RationalMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c);             // 1-based
    const Rational& at(int r, int c) const; // 1-based

    bool column_is_zero(int c) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    int rows_;
    int cols_;
    std::vector<Rational> a_;
};

// Exact rank via fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing denominators row by row.
int rank(const RationalMatrix& m);

// Submatrix keeping the given 1-based columns in the given order.
RationalMatrix column_submatrix(const RationalMatrix& m, const std::vector<int>& cols);

// Substitute x[r,c] -> m.at(r,c).
Rational evaluate(const Polynomial& p, const RationalMatrix& m);

} // namespace hgi
