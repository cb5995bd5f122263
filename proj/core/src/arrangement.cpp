#include "hgi/arrangement.hpp"

#include "hgi/hypergraph.hpp"
#include "hgi/minor.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace hgi {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

void validate_arrangement(const LineArrangement& arr) {
    if (arr.n < 0) throw std::invalid_argument("arrangement: negative ground-set size");
    std::vector<int> seen(arr.n + 1, 0);
    for (int v : arr.zeros) {
        if (v < 1 || v > arr.n) throw std::invalid_argument("arrangement: zero column out of range");
        if (seen[v]++) throw std::invalid_argument("arrangement: column listed twice");
    }
    for (const auto& block : arr.points) {
        if (block.empty()) throw std::invalid_argument("arrangement: empty point block");
        for (int v : block) {
            if (v < 1 || v > arr.n) throw std::invalid_argument("arrangement: column out of range");
            if (seen[v]++) throw std::invalid_argument("arrangement: column listed twice");
        }
    }
    for (int v = 1; v <= arr.n; ++v) {
        if (!seen[v]) throw std::invalid_argument("arrangement: column missing from zeros and blocks");
    }
    const int p = static_cast<int>(arr.points.size());
    for (const auto& line : arr.lines) {
        if (sorted_unique(line).size() != line.size())
            throw std::invalid_argument("arrangement: line lists a block twice");
        if (static_cast<int>(line.size()) < 3)
            throw std::invalid_argument("arrangement: line through fewer than three blocks");
        for (int b : line) {
            if (b < 0 || b >= p) throw std::invalid_argument("arrangement: line block index out of range");
        }
    }
    for (size_t i = 0; i < arr.lines.size(); ++i) {
        for (size_t j = i + 1; j < arr.lines.size(); ++j) {
            std::vector<int> a = sorted_unique(arr.lines[i]);
            std::vector<int> b = sorted_unique(arr.lines[j]);
            std::vector<int> shared;
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
            if (shared.size() > 1) throw std::invalid_argument("arrangement: two lines share two blocks");
        }
    }
}

std::string arrangement_to_json(const LineArrangement& arr) {
    nlohmann::json j;
    j["n"] = arr.n;
    j["zeros"] = arr.zeros;
    j["points"] = arr.points;
    j["lines"] = arr.lines;
    return j.dump();
}

LineArrangement build_L_of_S(const GridShape& shape, const std::vector<int>& S) {
    if (shape.k != 2) throw std::invalid_argument("build_L_of_S: defined for k = 2 only");
    std::vector<int> s = sorted_unique(S);
    for (int v : s) {
        if (v < 1 || v > shape.n()) throw std::invalid_argument("build_L_of_S: subset vertex out of range");
    }

    LineArrangement arr;
    arr.n = shape.n();
    arr.zeros = s;

    if (s.empty()) {
        std::vector<int> all_points;
        for (int j = 1; j <= shape.l; ++j) {
            arr.points.push_back(shape.column(j));
            all_points.push_back(j - 1);
        }
        arr.lines.push_back(all_points);
        return arr;
    }

    auto in_s = [&](int v) { return std::binary_search(s.begin(), s.end(), v); };

    std::vector<int> merged;
    for (int j = 1; j <= shape.l; ++j) {
        std::vector<int> col = shape.column(j);
        bool touched = std::any_of(col.begin(), col.end(), in_s);
        if (!touched) merged.insert(merged.end(), col.begin(), col.end());
    }
    std::sort(merged.begin(), merged.end());

    if (!merged.empty()) arr.points.push_back(merged);
    for (int j = 1; j <= shape.l; ++j) {
        std::vector<int> col = shape.column(j);
        if (!std::any_of(col.begin(), col.end(), in_s)) continue;
        std::vector<int> survivors;
        for (int v : col) {
            if (!in_s(v)) survivors.push_back(v);
        }
        if (!survivors.empty()) arr.points.push_back(survivors);
    }

    for (int i = 1; i <= 2; ++i) {
        std::vector<int> incident;
        for (size_t b = 0; b < arr.points.size(); ++b) {
            bool meets_row = std::any_of(arr.points[b].begin(), arr.points[b].end(),
                                         [&](int v) { return shape.row_of(v) == i; });
            if (meets_row) incident.push_back(static_cast<int>(b));
        }
        if (incident.size() >= 3) arr.lines.push_back(incident);
    }
    return arr;
}

bool is_compatible(const LineArrangement& arr, const GridShape& shape) {
    if (arr.n != shape.n()) throw std::invalid_argument("is_compatible: ground-set size mismatch");
    validate_arrangement(arr);

    std::vector<int> block_of(arr.n + 1, -1);
    for (size_t b = 0; b < arr.points.size(); ++b) {
        for (int v : arr.points[b]) block_of[v] = static_cast<int>(b);
    }

    for (int j = 1; j <= shape.l; ++j) {
        int block = -2;
        for (int v : shape.column(j)) {
            if (block_of[v] < 0) continue;
            if (block == -2) {
                block = block_of[v];
            } else if (block != block_of[v]) {
                return false;
            }
        }
    }

    for (int i = 1; i <= shape.k; ++i) {
        std::set<int> blocks;
        for (int v : shape.row(i)) {
            if (block_of[v] >= 0) blocks.insert(block_of[v]);
        }
        if (blocks.size() < 3) continue;
        bool on_one_line = false;
        for (const auto& line : arr.lines) {
            std::set<int> line_blocks(line.begin(), line.end());
            if (std::includes(line_blocks.begin(), line_blocks.end(), blocks.begin(), blocks.end())) {
                on_one_line = true;
                break;
            }
        }
        if (!on_one_line) return false;
    }
    return true;
}

std::vector<Polynomial> F_of_L(const LineArrangement& arr, int d) {
    if (d < 3) throw std::invalid_argument("F_of_L: requires d >= 3");
    validate_arrangement(arr);

    std::vector<Polynomial> out;
    for (int j : arr.zeros) {
        for (int i = 1; i <= d; ++i) out.push_back(Polynomial::variable({i, j}));
    }

    std::vector<int> row_pool(d);
    std::iota(row_pool.begin(), row_pool.end(), 1);

    for (const auto& block : arr.points) {
        for (const auto& cols : subsets_of_size(block, 2)) {
            for (const auto& rows : subsets_of_size(row_pool, 2)) {
                out.push_back(minor_polynomial({rows, cols}, d, arr.n));
            }
        }
    }

    std::set<std::vector<int>> triples;
    for (const auto& line : arr.lines) {
        for (const auto& blocks : subsets_of_size(sorted_unique(line), 3)) {
            for (int c0 : arr.points[blocks[0]]) {
                for (int c1 : arr.points[blocks[1]]) {
                    for (int c2 : arr.points[blocks[2]]) {
                        std::vector<int> cols = sorted_unique({c0, c1, c2});
                        triples.insert(cols);
                    }
                }
            }
        }
    }
    for (const auto& cols : triples) {
        for (const auto& rows : subsets_of_size(row_pool, 3)) {
            out.push_back(minor_polynomial({rows, cols}, d, arr.n));
        }
    }

    if (d >= 4) {
        std::set<std::vector<int>> quads;
        for (size_t i = 0; i < arr.lines.size(); ++i) {
            for (size_t j = i + 1; j < arr.lines.size(); ++j) {
                std::vector<int> a = sorted_unique(arr.lines[i]);
                std::vector<int> b = sorted_unique(arr.lines[j]);
                std::vector<int> shared;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
                if (shared.empty()) continue;
                std::vector<int> cols;
                for (int blk : a) {
                    cols.insert(cols.end(), arr.points[blk].begin(), arr.points[blk].end());
                }
                for (int blk : b) {
                    if (!std::binary_search(a.begin(), a.end(), blk))
                        cols.insert(cols.end(), arr.points[blk].begin(), arr.points[blk].end());
                }
                std::sort(cols.begin(), cols.end());
                for (auto& quad : subsets_of_size(cols, 4)) quads.insert(quad);
            }
        }
        for (const auto& cols : quads) {
            for (const auto& rows : subsets_of_size(row_pool, 4)) {
                out.push_back(minor_polynomial({rows, cols}, d, arr.n));
            }
        }
    }
    return out;
}

std::vector<Polynomial> G_of_L(const LineArrangement& arr, int d) {
    if (d != 3) throw std::invalid_argument("G_of_L: stated only for d = 3");
    validate_arrangement(arr);

    std::vector<Polynomial> out;
    std::vector<int> row_pool(d);
    std::iota(row_pool.begin(), row_pool.end(), 1);

    for (const auto& block : arr.points) {
        for (const auto& cols : subsets_of_size(block, 2)) {
            for (const auto& rows : subsets_of_size(row_pool, 2)) {
                out.push_back(minor_polynomial({rows, cols}, d, arr.n));
            }
        }
    }

    std::set<std::vector<int>> triples;
    for (const auto& line : arr.lines) {
        std::vector<int> cols;
        for (int blk : line) cols.insert(cols.end(), arr.points[blk].begin(), arr.points[blk].end());
        std::sort(cols.begin(), cols.end());
        for (auto& t : subsets_of_size(cols, 3)) triples.insert(t);
    }
    for (const auto& cols : triples) {
        out.push_back(minor_polynomial({row_pool, cols}, d, arr.n));
    }

    // Concurrency binomials: for three distinct lines through a common block,
    // pick one pair of columns from two distinct non-shared blocks on each
    // line. With the lines ordered by their smallest such column, the pair on
    // the middle line is split across the two 3-minors of each product.
    const int p = static_cast<int>(arr.points.size());
    std::vector<std::vector<int>> lines_of_block(p);
    for (size_t li = 0; li < arr.lines.size(); ++li) {
        for (int blk : arr.lines[li]) lines_of_block[blk].push_back(static_cast<int>(li));
    }

    std::set<std::vector<int>> emitted;
    auto emit = [&](const std::vector<int>& cd, const std::vector<int>& ab, const std::vector<int>& ef) {
        auto key = [&] {
            std::vector<int> k;
            k.insert(k.end(), cd.begin(), cd.end());
            k.insert(k.end(), ab.begin(), ab.end());
            k.insert(k.end(), ef.begin(), ef.end());
            return k;
        }();
        if (!emitted.insert(key).second) return;
        auto m3 = [&](int x, int y, int z) {
            return minor_polynomial({row_pool, sorted_unique({x, y, z})}, d, arr.n);
        };
        Polynomial lhs = m3(cd[0], cd[1], ab[0]) * m3(ef[0], ef[1], ab[1]);
        Polynomial rhs = m3(cd[0], cd[1], ab[1]) * m3(ef[0], ef[1], ab[0]);
        out.push_back(lhs - rhs);
    };

    for (int blk = 0; blk < p; ++blk) {
        const auto& through = lines_of_block[blk];
        if (through.size() < 3) continue;
        for (const auto& line_triple : subsets_of_size(through, 3)) {
            // Columns available on each line: blocks other than the shared one.
            std::vector<std::vector<std::vector<int>>> pair_choices(3);
            for (int t = 0; t < 3; ++t) {
                std::vector<std::pair<int, int>> col_block;
                for (int b : arr.lines[line_triple[t]]) {
                    if (b == blk) continue;
                    for (int c : arr.points[b]) col_block.push_back({c, b});
                }
                std::sort(col_block.begin(), col_block.end());
                for (size_t x = 0; x < col_block.size(); ++x) {
                    for (size_t y = x + 1; y < col_block.size(); ++y) {
                        if (col_block[x].second == col_block[y].second) continue;
                        pair_choices[t].push_back({col_block[x].first, col_block[y].first});
                    }
                }
            }
            for (const auto& p1 : pair_choices[0]) {
                for (const auto& p2 : pair_choices[1]) {
                    for (const auto& p3 : pair_choices[2]) {
                        std::vector<std::vector<int>> trio = {p1, p2, p3};
                        std::sort(trio.begin(), trio.end());
                        emit(trio[0], trio[1], trio[2]);
                    }
                }
            }
        }
    }
    return out;
}

LineArrangement arrangement_from_matrix(const RationalMatrix& a) {
    const int n = a.cols();
    LineArrangement arr;
    arr.n = n;

    std::vector<int> nonzero;
    for (int j = 1; j <= n; ++j) {
        if (a.column_is_zero(j)) {
            arr.zeros.push_back(j);
        } else {
            nonzero.push_back(j);
        }
    }

    // Coincidence blocks: union-find over exact proportionality.
    std::map<int, int> parent;
    for (int j : nonzero) parent[j] = j;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto proportional = [&](int x, int y) {
        return rank(column_submatrix(a, {x, y})) <= 1;
    };
    for (size_t i = 0; i < nonzero.size(); ++i) {
        for (size_t j = i + 1; j < nonzero.size(); ++j) {
            if (proportional(nonzero[i], nonzero[j])) {
                parent[find(nonzero[i])] = find(nonzero[j]);
            }
        }
    }
    std::map<int, std::vector<int>> by_root;
    for (int j : nonzero) by_root[find(j)].push_back(j);
    for (auto& [root, members] : by_root) {
        std::sort(members.begin(), members.end());
        arr.points.push_back(members);
    }
    std::sort(arr.points.begin(), arr.points.end());
    std::vector<int> block_rep;
    for (const auto& members : arr.points) block_rep.push_back(members.front());

    // Lines: maximal sets of three or more blocks with all representative
    // triples rank two. Candidate lines are spanned by block pairs.
    const int p = static_cast<int>(arr.points.size());
    auto collinear = [&](int x, int y, int z) {
        return rank(column_submatrix(a, {block_rep[x], block_rep[y], block_rep[z]})) <= 2;
    };
    std::set<std::vector<int>> lines;
    for (int x = 0; x < p; ++x) {
        for (int y = x + 1; y < p; ++y) {
            std::vector<int> on_line = {x, y};
            for (int z = 0; z < p; ++z) {
                if (z == x || z == y) continue;
                if (collinear(x, y, z)) on_line.push_back(z);
            }
            if (on_line.size() < 3) continue;
            std::sort(on_line.begin(), on_line.end());
            lines.insert(on_line);
        }
    }
    for (const auto& line : lines) arr.lines.push_back(line);
    return arr;
}

bool same_arrangement(const LineArrangement& a, const LineArrangement& b) {
    if (a.n != b.n) return false;
    if (sorted_unique(a.zeros) != sorted_unique(b.zeros)) return false;

    auto normal_blocks = [](const LineArrangement& arr) {
        std::vector<std::vector<int>> blocks;
        for (auto block : arr.points) {
            std::sort(block.begin(), block.end());
            blocks.push_back(block);
        }
        return blocks;
    };
    auto blocks_a = normal_blocks(a);
    auto blocks_b = normal_blocks(b);
    auto sorted_blocks = [](std::vector<std::vector<int>> blocks) {
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };
    if (sorted_blocks(blocks_a) != sorted_blocks(blocks_b)) return false;

    // Lines compared as sets of column sets.
    auto line_columns = [](const LineArrangement& arr, const std::vector<std::vector<int>>& blocks) {
        std::set<std::set<int>> out;
        for (const auto& line : arr.lines) {
            std::set<int> cols;
            for (int blk : line) cols.insert(blocks[blk].begin(), blocks[blk].end());
            out.insert(cols);
        }
        return out;
    };
    return line_columns(a, blocks_a) == line_columns(b, blocks_b);
}

std::vector<std::vector<int>> enumerate_bases(const LineArrangement& arr, int d) {
    validate_arrangement(arr);

    std::vector<int> block_of(arr.n + 1, -1);
    for (size_t b = 0; b < arr.points.size(); ++b) {
        for (int v : arr.points[b]) block_of[v] = static_cast<int>(b);
    }
    std::vector<std::set<int>> line_sets;
    for (const auto& line : arr.lines) line_sets.push_back({line.begin(), line.end()});

    std::vector<int> candidates;
    for (int v = 1; v <= arr.n; ++v) {
        if (block_of[v] >= 0) candidates.push_back(v);
    }

    auto admissible = [&](const std::vector<int>& current, int next) {
        for (int v : current) {
            if (block_of[v] == block_of[next]) return false;
        }
        if (current.size() >= 2) {
            for (size_t i = 0; i < current.size(); ++i) {
                for (size_t j = i + 1; j < current.size(); ++j) {
                    for (const auto& line : line_sets) {
                        if (line.count(block_of[current[i]]) && line.count(block_of[current[j]]) &&
                            line.count(block_of[next])) {
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    };

    std::vector<std::vector<int>> bases;
    std::vector<int> current;
    std::function<void(size_t)> search = [&](size_t start) {
        // Maximal when at the size cap or no column at all extends the set.
        bool extendable = false;
        for (int v : candidates) {
            if (std::find(current.begin(), current.end(), v) != current.end()) continue;
            if (admissible(current, v)) {
                extendable = true;
                break;
            }
        }
        if (static_cast<int>(current.size()) == d || !extendable) {
            if (!current.empty()) bases.push_back(current);
            return;
        }
        for (size_t idx = start; idx < candidates.size(); ++idx) {
            int v = candidates[idx];
            if (!admissible(current, v)) continue;
            current.push_back(v);
            search(idx + 1);
            current.pop_back();
        }
    };
    search(0);
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    return bases;
}

bool is_configuration(const RationalMatrix& a, const LineArrangement& arr, int d) {
    if (a.rows() != d || a.cols() != arr.n) throw std::invalid_argument("is_configuration: dimension mismatch");
    for (const Polynomial& f : F_of_L(arr, d)) {
        if (evaluate(f, a) != 0) return false;
    }
    for (const auto& basis : enumerate_bases(arr, d)) {
        RationalMatrix sub = column_submatrix(a, basis);
        if (rank(sub) != static_cast<int>(basis.size())) return false;
    }
    return true;
}

} // namespace hgi
