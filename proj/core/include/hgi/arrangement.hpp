#pragma once

#include "hgi/grid.hpp"
#include "hgi/matrix.hpp"
#include "hgi/polynomial.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgi {

// A point-and-line arrangement on [n]: `zeros` is the set of zero columns,
// `points` partitions the remaining columns into coincidence blocks, and each
// line is the set of indices (into `points`) of the blocks it passes through.
struct LineArrangement {
    int n = 0;
    std::vector<int> zeros;
    std::vector<std::vector<int>> points;
    std::vector<std::vector<int>> lines;

    bool operator==(const LineArrangement&) const = default;
};

// Checks the structural invariants: blocks partition [n] \ zeros, every line
// passes through at least three blocks, and two blocks share at most one line.
void validate_arrangement(const LineArrangement& arr);

std::string arrangement_to_json(const LineArrangement& arr);

// The arrangement L(S) at k = 2: for empty S the column blocks all lie on one
// line; otherwise the blocks are the merged untouched columns plus the
// surviving column singletons, with a per-row line kept when it would pass
// through at least three blocks.
LineArrangement build_L_of_S(const GridShape& shape, const std::vector<int>& S);

// True when every surviving column of the grid lies inside one block and
// every row with at least three distinct non-zero blocks has a line through
// all of its blocks.
bool is_compatible(const LineArrangement& arr, const GridShape& shape);

// The vanishing conditions of the arrangement: variables of zero columns,
// 2-minors inside blocks, 3-minors over triples of pairwise distinct blocks
// on a common line, and 4-minors over the columns of two intersecting lines
// (the last family is empty when d = 3).
std::vector<Polynomial> F_of_L(const LineArrangement& arr, int d);

// The conjectured generating set at d = 3: block 2-minors, all 3-minors over
// each line's columns, and the concurrency binomials for triples of lines
// through a common block.
std::vector<Polynomial> G_of_L(const LineArrangement& arr, int d);

// Reads the arrangement of a matrix: zero columns, proportionality blocks,
// and maximal collinear families of at least three blocks.
LineArrangement arrangement_from_matrix(const RationalMatrix& a);

// True when the two arrangements differ only by reordering blocks and lines.
bool same_arrangement(const LineArrangement& a, const LineArrangement& b);

// All maximal subsets of at most d columns avoiding zeros, coincidence, and
// collinearity.
std::vector<std::vector<int>> enumerate_bases(const LineArrangement& arr, int d);

// True when every polynomial of F_of_L(arr, d) vanishes at `a` and every
// basis of the arrangement picks out a full-rank column submatrix.
bool is_configuration(const RationalMatrix& a, const LineArrangement& arr, int d);

struct SamplerError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Draws an exact rational matrix in the configuration space of the
// arrangement: lines become two-dimensional column spans sharing prescribed
// crossing directions, blocks become proportional column families, and
// genericity is enforced by is_configuration with up to 32 resamples.
// Deterministic in (arr, d, seed). Throws SamplerError when the arrangement
// admits no line-removal build-up order or when all resamples fail.
RationalMatrix sample_configuration(const LineArrangement& arr, int d, uint64_t seed);

} // namespace hgi
