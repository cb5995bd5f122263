#pragma once

#include "hgi/grid.hpp"

#include <set>
#include <string>
#include <vector>

namespace hgi {

// Edge sets over an ambient label range [n]. The declared ground set
// (vertices) can be a proper subset of [n] after vertex deletions; isolated
// declared vertices still count as connected components.
struct Hypergraph {
    int n = 0;
    std::vector<int> vertices;           // sorted, subset of [n]
    std::set<std::vector<int>> edges;    // each edge sorted; set ordering is lexicographic

    static Hypergraph on_full_ground_set(int n);
    void add_edge(std::vector<int> e);
    bool has_edge(const std::vector<int>& e) const;
};

// All 3-subsets of every row plus all 2-subsets of every column of the grid.
Hypergraph build_delta(const GridShape& shape);
Hypergraph build_delta(int k, int l);

// Full rows as single edges plus all 2-subsets of every column.
Hypergraph build_delta_prime(int k, int l);

// Remove the vertices in V: keep edges disjoint from V, shrink the declared
// ground set.
Hypergraph induced(const Hypergraph& h, const std::vector<int>& removed);

// Components of the edge-intersection structure on the declared ground set;
// isolated vertices form singleton components. Deterministic: sorted by
// smallest member.
std::vector<std::vector<int>> connected_components(const Hypergraph& h);

// Add every r-subset of each connected component's vertex set.
Hypergraph r_completion(const Hypergraph& h, int r);

// Inclusion-minimal edges; dropping the rest changes no generated ideal.
Hypergraph canonical_generating_edges(const Hypergraph& h);

// {"n": int, "edges": [[...], ...]} with edges sorted lexicographically.
std::string to_json(const Hypergraph& h);

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, int r);

} // namespace hgi
