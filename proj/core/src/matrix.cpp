#include "hgi/matrix.hpp"

#include <stdexcept>

namespace hgi {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("RationalMatrix: bad dimensions");
    a_.assign(static_cast<std::size_t>(rows) * cols, Rational(0));
}

Rational& RationalMatrix::at(int r, int c) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("RationalMatrix::at");
    return a_[static_cast<std::size_t>(r - 1) * cols_ + (c - 1)];
}

const Rational& RationalMatrix::at(int r, int c) const {
    return const_cast<RationalMatrix*>(this)->at(r, c);
}

bool RationalMatrix::column_is_zero(int c) const {
    for (int r = 1; r <= rows_; ++r) {
        if (at(r, c) != 0) return false;
    }
    return true;
}

int rank(const RationalMatrix& m) {
    int R = m.rows(), C = m.cols();
    // Clear denominators per row; scaling a row by a nonzero constant leaves
    // the rank unchanged.
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (int r = 0; r < R; ++r) {
        mpz_class l(1);
        for (int c = 0; c < C; ++c) {
            mpz_class den = m.at(r + 1, c + 1).get_den();
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
            l = l / g * den;
        }
        for (int c = 0; c < C; ++c) {
            const Rational& q = m.at(r + 1, c + 1);
            a[r][c] = q.get_num() * (l / q.get_den());
        }
    }

    // Bareiss elimination: divisions below are exact.
    int rk = 0;
    mpz_class prev(1);
    for (int col = 0; col < C && rk < R; ++col) {
        int pivot = -1;
        for (int r = rk; r < R; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[rk], a[pivot]);
        for (int r = rk + 1; r < R; ++r) {
            for (int c = col + 1; c < C; ++c) {
                mpz_class num = a[rk][col] * a[r][c] - a[r][col] * a[rk][c];
                mpz_divexact(a[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

RationalMatrix column_submatrix(const RationalMatrix& m, const std::vector<int>& cols) {
    if (cols.empty()) throw std::invalid_argument("column_submatrix: empty column list");
    RationalMatrix out(m.rows(), static_cast<int>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int r = 1; r <= m.rows(); ++r) {
            out.at(r, static_cast<int>(j) + 1) = m.at(r, cols[j]);
        }
    }
    return out;
}

Rational evaluate(const Polynomial& p, const RationalMatrix& m) {
    Rational acc(0);
    for (const auto& t : p.terms()) {
        Rational v = t.coeff;
        for (const auto& [var, e] : t.mono.factors()) {
            const Rational& x = m.at(var.row, var.col);
            for (int i = 0; i < e; ++i) v *= x;
        }
        acc += v;
    }
    return acc;
}

} // namespace hgi
