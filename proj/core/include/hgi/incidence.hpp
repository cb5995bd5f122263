#pragma once

#include "hgi/arrangement.hpp"

#include <set>
#include <vector>

namespace hgi {

// The incidence structure of an arrangement's lines: each crossing is the set
// of lines (labeled 1..line_count) meeting at one point. Two crossings share
// at most one line.
struct IncidenceType {
    int line_count = 0;
    std::set<std::set<int>> crossings;

    bool operator==(const IncidenceType&) const = default;
    bool operator<(const IncidenceType& other) const {
        if (line_count != other.line_count) return line_count < other.line_count;
        return crossings < other.crossings;
    }
};

// All incidence types with the given number of lines, up to relabeling the
// lines, in a deterministic canonical order.
std::vector<IncidenceType> enumerate_incidence_types(int line_count);

// The crossing structure of a concrete arrangement: for every block lying on
// two or more lines, the set of those lines (1-based labels in input order).
IncidenceType incidence_type_of(const LineArrangement& arr);

// An irreducibility certificate: an order removing one line at a time such
// that each removed line meets the remaining lines in at most two points.
// The four pairwise-crossing lines with six distinct crossings admit no such
// order and are certified by a dedicated special case instead.
struct BuildupCertificate {
    bool certified = false;
    bool via_complete_quadrilateral = false;
    std::vector<int> removal_order;
    std::vector<int> incidence_counts;
};

// Searches removal orders over the abstract crossing structure. The removal
// order uses 1-based line labels for an IncidenceType and 0-based indices
// into arr.lines for a LineArrangement.
BuildupCertificate certify_irreducible_by_buildup(const IncidenceType& type);
BuildupCertificate certify_irreducible_by_buildup(const LineArrangement& arr);

} // namespace hgi
