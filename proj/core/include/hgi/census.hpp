#pragma once

#include "hgi/arrangement.hpp"
#include "hgi/hypergraph.hpp"
#include "hgi/subsets.hpp"

#include <string>
#include <vector>

namespace hgi {

// One isomorphism class of prime components: a canonical representative
// subset, its orbit size under the row and column symmetries, the generating
// hypergraph of its ideal, and the point-and-line arrangement of its variety.
struct CensusRow {
    std::vector<int> S;
    Regime regime = Regime::Dc;
    long orbit_size = 0;
    Hypergraph hyper;
    LineArrangement arrangement;
};

struct CensusReport {
    int k = 0;
    int l = 0;
    int d = 0;
    std::vector<CensusRow> rows;
    long total = 0;
};

// The component census: at k = 2 it is computed from the minimality
// criterion; at (k, l) = (3, 4) the nine known representatives are fixed and
// their orbit sizes are computed. Other shapes are unsupported.
CensusReport census(int k, int l, int d);

// "I_0" for the empty set, otherwise "I_{a,b,...}".
std::string class_label(const std::vector<int>& S);

// Aligned text table with one row per class: type, hypergraph summary, count.
std::string census_table(const CensusReport& report);

std::string census_json(const CensusReport& report);

} // namespace hgi
