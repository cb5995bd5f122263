#include "hgi/ideal.hpp"

#include <numeric>
#include <stdexcept>

namespace hgi {

IdealSpec ideal_of(const Hypergraph& h, int d) {
    if (d < 1) throw std::invalid_argument("ideal_of: d must be positive");

    IdealSpec spec;
    spec.hyper = h;
    spec.d = d;

    std::vector<int> row_pool(d);
    std::iota(row_pool.begin(), row_pool.end(), 1);

    Hypergraph canon = canonical_generating_edges(h);
    for (const auto& edge : canon.edges) {
        const int size = static_cast<int>(edge.size());
        if (size > d) continue;
        for (const auto& rows : subsets_of_size(row_pool, size)) {
            spec.minors.push_back({rows, edge});
            spec.generators.push_back(minor_polynomial({rows, edge}, d, h.n));
        }
    }
    return spec;
}

} // namespace hgi
