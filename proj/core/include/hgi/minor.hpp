#pragma once

#include "hgi/polynomial.hpp"

#include <vector>

namespace hgi {

// The minor [A|B]: determinant of the submatrix of the generic d x n matrix X
// with rows A and columns B, both sorted ascending and of equal size.
struct MinorSpec {
    std::vector<int> rows;
    std::vector<int> cols;
};

// Symbolic determinant of the minor. Under the lex order its leading term is
// the main-diagonal product with coefficient +1.
Polynomial minor_polynomial(const MinorSpec& spec, int d, int n);

// The main-diagonal monomial x[rows[0],cols[0]] * x[rows[1],cols[1]] * ...
Monomial minor_diagonal(const MinorSpec& spec);

} // namespace hgi
