#include "hgi/minor.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgi {

namespace {

void check_spec(const MinorSpec& spec, int d, int n) {
    if (spec.rows.size() != spec.cols.size() || spec.rows.empty())
        throw std::invalid_argument("minor_polynomial: rows and cols must be nonempty and equal-sized");
    if (!std::is_sorted(spec.rows.begin(), spec.rows.end()) ||
        !std::is_sorted(spec.cols.begin(), spec.cols.end()))
        throw std::invalid_argument("minor_polynomial: rows and cols must be sorted");
    if (std::adjacent_find(spec.rows.begin(), spec.rows.end()) != spec.rows.end() ||
        std::adjacent_find(spec.cols.begin(), spec.cols.end()) != spec.cols.end())
        throw std::invalid_argument("minor_polynomial: repeated index");
    if (spec.rows.front() < 1 || spec.rows.back() > d || spec.cols.front() < 1 || spec.cols.back() > n)
        throw std::invalid_argument("minor_polynomial: index out of range");
}

// Cofactor expansion along the first remaining row.
Polynomial expand(const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() == 1) return Polynomial::variable({rows[0], cols[0]});
    Polynomial acc;
    std::vector<int> subrows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> subcols;
        subcols.reserve(cols.size() - 1);
        for (std::size_t t = 0; t < cols.size(); ++t) {
            if (t != j) subcols.push_back(cols[t]);
        }
        Polynomial cof = expand(subrows, subcols).times_term(
            Rational(j % 2 == 0 ? 1 : -1), Monomial::variable({rows[0], cols[j]}));
        acc = acc + cof;
    }
    return acc;
}

} // namespace

Polynomial minor_polynomial(const MinorSpec& spec, int d, int n) {
    check_spec(spec, d, n);
    return expand(spec.rows, spec.cols);
}

Monomial minor_diagonal(const MinorSpec& spec) {
    std::vector<Monomial::Factor> fs;
    fs.reserve(spec.rows.size());
    for (std::size_t i = 0; i < spec.rows.size(); ++i) {
        fs.emplace_back(VarId{spec.rows[i], spec.cols[i]}, 1);
    }
    return Monomial::from_factors(std::move(fs));
}

} // namespace hgi
