#include "hgi/subsets.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace hgi {

namespace {

void check_subset(const GridShape& shape, const std::vector<int>& S) {
    for (int v : S) {
        if (v < 1 || v > shape.n()) throw std::invalid_argument("subset vertex out of range");
    }
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<int> set_difference_sorted(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace

std::vector<int> c_of_s(const GridShape& shape, const std::vector<int>& S) {
    std::vector<int> s = sorted_unique(S);
    std::vector<int> out;
    for (int j = 1; j <= shape.l; ++j) {
        std::vector<int> col = shape.column(j);
        bool meets = false;
        for (int v : col) {
            if (std::binary_search(s.begin(), s.end(), v)) {
                meets = true;
                break;
            }
        }
        if (!meets) out.insert(out.end(), col.begin(), col.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubsetClass classify_S(const GridShape& shape, const std::vector<int>& S) {
    check_subset(shape, S);
    SubsetClass out;
    out.S = sorted_unique(S);
    if (out.S.empty()) {
        out.regime = Regime::D;
    } else {
        Hypergraph delta_s = induced(build_delta(shape), out.S);
        out.regime = connected_components(delta_s).size() >= 2 ? Regime::D : Regime::Dc;
    }
    if (shape.k == 2) out.minimal = is_minimal(shape, out.S);
    out.orbit_canon = sym_orbit(shape, out.S).canonical;
    return out;
}

Hypergraph build_H_of_S(const GridShape& shape, const std::vector<int>& S) {
    if (shape.k != 2) throw std::invalid_argument("build_H_of_S: defined for k = 2 only");
    check_subset(shape, S);
    std::vector<int> s = sorted_unique(S);

    SubsetClass cls;
    cls.S = s;
    Regime regime;
    if (s.empty()) {
        regime = Regime::D;
    } else {
        Hypergraph delta_s = induced(build_delta(shape), s);
        regime = connected_components(delta_s).size() >= 2 ? Regime::D : Regime::Dc;
    }

    Hypergraph h = Hypergraph::on_full_ground_set(shape.n());
    if (regime == Regime::D) {
        Hypergraph delta_s = induced(build_delta(shape), s);
        Hypergraph completed = r_completion(delta_s, 3);
        for (const auto& e : completed.edges) h.add_edge(e);
    } else {
        std::vector<int> c = c_of_s(shape, s);
        for (auto& e : subsets_of_size(c, 2)) h.add_edge(e);
        for (int i = 1; i <= 2; ++i) {
            std::vector<int> pool = sorted_unique([&] {
                std::vector<int> p = set_difference_sorted(shape.row(i), s);
                p.insert(p.end(), c.begin(), c.end());
                return p;
            }());
            for (auto& e : subsets_of_size(pool, 3)) h.add_edge(e);
        }
        std::vector<int> all;
        for (int v = 1; v <= shape.n(); ++v) all.push_back(v);
        std::vector<int> rest = set_difference_sorted(all, s);
        for (auto& e : subsets_of_size(rest, 4)) h.add_edge(e);
    }
    for (int v : s) h.add_edge({v});
    return h;
}

Hypergraph build_F_ijc(int i, int j, int c) {
    if (i < 0 || j < 0 || c < 0 || i > j) throw std::invalid_argument("build_F_ijc: requires 0 <= i <= j, c >= 0");
    int n = i + j + c;
    Hypergraph h = Hypergraph::on_full_ground_set(n);
    std::vector<int> middle, left, rightspan, outside;
    for (int x = i + 1; x <= i + c; ++x) middle.push_back(x);
    for (int x = 1; x <= i + c; ++x) left.push_back(x);
    for (int x = i + 1; x <= i + c + j; ++x) rightspan.push_back(x);
    for (int x = 1; x <= n; ++x) {
        if (x <= i || x > i + c) outside.push_back(x);
    }
    for (auto& e : subsets_of_size(middle, 2)) h.add_edge(e);
    for (auto& e : subsets_of_size(left, 3)) h.add_edge(e);
    for (auto& e : subsets_of_size(rightspan, 3)) h.add_edge(e);
    for (auto& e : subsets_of_size(outside, 4)) h.add_edge(e);
    return h;
}

Standardization standardize(const GridShape& shape, const std::vector<int>& S) {
    if (shape.k != 2) throw std::invalid_argument("standardize: defined for k = 2 only");
    std::vector<int> s = sorted_unique(S);
    SubsetClass cls = classify_S(shape, s);
    if (cls.regime != Regime::Dc) throw std::invalid_argument("standardize: S must be in the Dc regime");

    std::vector<int> c = c_of_s(shape, s);
    std::vector<int> top = set_difference_sorted(shape.row(1), s);
    std::vector<int> bot = set_difference_sorted(shape.row(2), s);
    std::vector<int> I = set_difference_sorted(top, c);
    std::vector<int> J = set_difference_sorted(bot, c);
    if (I.size() > J.size()) std::swap(I, J);

    Standardization st;
    st.i = static_cast<int>(I.size());
    st.j = static_cast<int>(J.size());
    st.c = static_cast<int>(c.size());
    int next = 1;
    for (int v : I) st.relabel[v] = next++;
    for (int v : c) st.relabel[v] = next++;
    for (int v : J) st.relabel[v] = next++;
    return st;
}

bool is_minimal(const GridShape& shape, const std::vector<int>& S) {
    if (shape.k != 2) throw std::invalid_argument("is_minimal: defined for k = 2 only");
    check_subset(shape, S);
    std::vector<int> s = sorted_unique(S);
    if (s.empty()) return true;

    // No column may lie inside S.
    for (int j = 1; j <= shape.l; ++j) {
        std::vector<int> col = shape.column(j);
        bool inside = true;
        for (int v : col) {
            if (!std::binary_search(s.begin(), s.end(), v)) {
                inside = false;
                break;
            }
        }
        if (inside) return false;
    }

    // Each row keeps at least two survivors.
    std::vector<int> top = set_difference_sorted(shape.row(1), s);
    std::vector<int> bot = set_difference_sorted(shape.row(2), s);
    if (top.size() < 2 || bot.size() < 2) return false;

    // Survivor column supports must be incomparable.
    auto columns_of = [&](const std::vector<int>& vs) {
        std::set<int> cols;
        for (int v : vs) cols.insert(shape.col_of(v));
        return cols;
    };
    std::set<int> c1 = columns_of(top);
    std::set<int> c2 = columns_of(bot);
    bool c1_in_c2 = std::includes(c2.begin(), c2.end(), c1.begin(), c1.end());
    bool c2_in_c1 = std::includes(c1.begin(), c1.end(), c2.begin(), c2.end());
    return !c1_in_c2 && !c2_in_c1;
}

namespace {

// Subsets as bitmasks over vertices 1..n (bit v-1 for vertex v).
uint64_t apply_row_swap_mask(const GridShape& shape, uint64_t mask, int r) {
    // Swap rows r and r+1: exchange bits (j-1)k + r - 1 and (j-1)k + r.
    uint64_t out = mask;
    for (int j = 1; j <= shape.l; ++j) {
        int a = shape.entry(r, j) - 1;
        int b = shape.entry(r + 1, j) - 1;
        uint64_t ba = (mask >> a) & 1, bb = (mask >> b) & 1;
        out &= ~((uint64_t{1} << a) | (uint64_t{1} << b));
        out |= (ba << b) | (bb << a);
    }
    return out;
}

uint64_t apply_col_swap_mask(const GridShape& shape, uint64_t mask, int c) {
    uint64_t out = mask;
    for (int i = 1; i <= shape.k; ++i) {
        int a = shape.entry(i, c) - 1;
        int b = shape.entry(i, c + 1) - 1;
        uint64_t ba = (mask >> a) & 1, bb = (mask >> b) & 1;
        out &= ~((uint64_t{1} << a) | (uint64_t{1} << b));
        out |= (ba << b) | (bb << a);
    }
    return out;
}

std::vector<int> mask_to_set(uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask; ++v, mask >>= 1) {
        if (mask & 1) out.push_back(v + 1);
    }
    return out;
}

uint64_t set_to_mask(const std::vector<int>& s) {
    uint64_t m = 0;
    for (int v : s) m |= uint64_t{1} << (v - 1);
    return m;
}

// Breadth-first closure under adjacent row/column transpositions; these
// generate the full row and column symmetric groups.
std::unordered_set<uint64_t> orbit_masks(const GridShape& shape, uint64_t start) {
    std::unordered_set<uint64_t> seen{start};
    std::queue<uint64_t> q;
    q.push(start);
    while (!q.empty()) {
        uint64_t m = q.front();
        q.pop();
        for (int r = 1; r < shape.k; ++r) {
            uint64_t im = apply_row_swap_mask(shape, m, r);
            if (seen.insert(im).second) q.push(im);
        }
        for (int c = 1; c < shape.l; ++c) {
            uint64_t im = apply_col_swap_mask(shape, m, c);
            if (seen.insert(im).second) q.push(im);
        }
    }
    return seen;
}

} // namespace

OrbitInfo sym_orbit(const GridShape& shape, const std::vector<int>& S) {
    check_subset(shape, S);
    if (shape.n() > 63) throw std::invalid_argument("sym_orbit: ground set too large");
    std::vector<int> s = sorted_unique(S);
    auto orbit = orbit_masks(shape, set_to_mask(s));

    OrbitInfo out;
    out.size = static_cast<long>(orbit.size());
    // Lexicographically least sorted image: smallest members first, so compare
    // the sorted vectors directly.
    bool first = true;
    std::vector<int> best;
    for (uint64_t m : orbit) {
        std::vector<int> img = mask_to_set(m);
        if (first || img < best) {
            best = std::move(img);
            first = false;
        }
    }
    out.canonical = best;
    return out;
}

MinimalEnumeration enumerate_minimal(int l) {
    if (l < 3 || l > 12) throw std::invalid_argument("enumerate_minimal: supported range is 3 <= l <= 12");
    GridShape shape(2, l);
    const int n = 2 * l;

    // Bit layout per column j: bit 2(j-1) is the row-1 entry, bit 2(j-1)+1 the
    // row-2 entry.
    uint64_t row1 = 0, row2 = 0;
    for (int j = 1; j <= l; ++j) {
        row1 |= uint64_t{1} << (shape.entry(1, j) - 1);
        row2 |= uint64_t{1} << (shape.entry(2, j) - 1);
    }

    auto minimal_mask = [&](uint64_t s) {
        if (s == 0) return true;
        uint64_t t1 = row1 & ~s, t2 = row2 & ~s;
        if (__builtin_popcountll(t1) < 2 || __builtin_popcountll(t2) < 2) return false;
        uint64_t cols1 = 0, cols2 = 0;
        bool full_column = false;
        for (int j = 0; j < l; ++j) {
            uint64_t colbits = uint64_t{3} << (2 * j);
            if ((s & colbits) == colbits) {
                full_column = true;
                break;
            }
            if (t1 >> (2 * j) & 1) cols1 |= uint64_t{1} << j;
            if (t2 >> (2 * j + 1) & 1) cols2 |= uint64_t{1} << j;
        }
        if (full_column) return false;
        bool c1_in_c2 = (cols1 & ~cols2) == 0;
        bool c2_in_c1 = (cols2 & ~cols1) == 0;
        return !c1_in_c2 && !c2_in_c1;
    };

    MinimalEnumeration result;
    std::unordered_set<uint64_t> grouped;
    for (uint64_t s = 0; s < (uint64_t{1} << n); ++s) {
        if (!minimal_mask(s)) continue;
        ++result.total;
        if (grouped.count(s)) continue;
        auto orbit = orbit_masks(shape, s);
        bool first = true;
        std::vector<int> best;
        for (uint64_t m : orbit) {
            grouped.insert(m);
            std::vector<int> img = mask_to_set(m);
            if (first || img < best) {
                best = std::move(img);
                first = false;
            }
        }
        MinimalClass cls;
        cls.representative = classify_S(shape, best);
        cls.orbit_size = static_cast<long>(orbit.size());
        result.classes.push_back(std::move(cls));
    }

    std::sort(result.classes.begin(), result.classes.end(),
              [](const MinimalClass& a, const MinimalClass& b) {
                  if (a.representative.S.size() != b.representative.S.size())
                      return a.representative.S.size() < b.representative.S.size();
                  return a.representative.S < b.representative.S;
              });
    return result;
}

} // namespace hgi
