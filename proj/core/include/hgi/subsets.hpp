#pragma once

#include "hgi/grid.hpp"
#include "hgi/hypergraph.hpp"

#include <map>
#include <vector>

namespace hgi {

// Regime of a vertex subset S: D when S is empty or deleting S disconnects
// the grid hypergraph (isolated survivors included), Dc otherwise.
enum class Regime { D, Dc };

struct SubsetClass {
    std::vector<int> S;
    Regime regime = Regime::D;
    bool minimal = false;            // evaluated for k = 2 only
    std::vector<int> orbit_canon;    // lexicographically least image under row/column permutations
};

SubsetClass classify_S(const GridShape& shape, const std::vector<int>& S);

// Union of the columns that do not meet S.
std::vector<int> c_of_s(const GridShape& shape, const std::vector<int>& S);

// The candidate prime hypergraph attached to S (k = 2 only).
// Dc regime: singletons of S, pairs inside c_of_s, triples inside each
// (row survivors union c_of_s), and quadruples avoiding S.
// D regime: the surviving grid edges, 3-completed, plus singletons of S.
Hypergraph build_H_of_S(const GridShape& shape, const std::vector<int>& S);

// Standard representative hypergraph on ground set [i+j+c]: pairs inside the
// middle block {i+1..i+c}, triples inside {1..i+c} and {i+1..i+c+j},
// quadruples avoiding the middle block.
Hypergraph build_F_ijc(int i, int j, int c);

struct Standardization {
    int i = 0;
    int j = 0;
    int c = 0;
    std::map<int, int> relabel; // surviving vertex -> position in [i+j+c]
};

// For S in the Dc regime at k = 2: the unique (i <= j, c) with the relabeling
// that carries H(S) minus its singletons onto F(i,j,c).
Standardization standardize(const GridShape& shape, const std::vector<int>& S);

// The three conditions at k = 2: survivor column supports of the two rows are
// incomparable, no full column inside S, and at least two survivors per row.
// The empty set qualifies.
bool is_minimal(const GridShape& shape, const std::vector<int>& S);

struct OrbitInfo {
    std::vector<int> canonical;
    long size = 0;
};

// Orbit of S under all row and column permutations of the grid, computed by
// closure under adjacent transpositions. Canonical form: lexicographically
// least sorted image.
OrbitInfo sym_orbit(const GridShape& shape, const std::vector<int>& S);

struct MinimalClass {
    SubsetClass representative; // representative.S is the orbit canonical form
    long orbit_size = 0;
};

struct MinimalEnumeration {
    std::vector<MinimalClass> classes; // sorted by (|S|, S)
    long total = 0;                    // direct count over all subsets
};

// Exhaustive scan of all subsets of [2l] at k = 2 (l <= 12), grouped into
// orbits.
MinimalEnumeration enumerate_minimal(int l);

} // namespace hgi
