#pragma once

#include "hgi/hypergraph.hpp"
#include "hgi/minor.hpp"
#include "hgi/polynomial.hpp"

#include <vector>

namespace hgi {

// The canonical generating set of a hypergraph ideal in a d x n variable
// matrix: one minor [A|B] for every inclusion-minimal edge B with |B| <= d
// and every row subset A of that size. Edges larger than d contribute
// nothing.
struct IdealSpec {
    Hypergraph hyper;
    int d = 0;
    std::vector<MinorSpec> minors;
    std::vector<Polynomial> generators;
};

IdealSpec ideal_of(const Hypergraph& h, int d);

} // namespace hgi
