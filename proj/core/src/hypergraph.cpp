#include "hgi/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hgi {

Hypergraph Hypergraph::on_full_ground_set(int n) {
    if (n < 0) throw std::invalid_argument("Hypergraph: negative ground set size");
    Hypergraph h;
    h.n = n;
    h.vertices.resize(n);
    std::iota(h.vertices.begin(), h.vertices.end(), 1);
    return h;
}

void Hypergraph::add_edge(std::vector<int> e) {
    if (e.empty()) throw std::invalid_argument("Hypergraph::add_edge: empty edge");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (int v : e) {
        if (v < 1 || v > n) throw std::invalid_argument("Hypergraph::add_edge: vertex out of range");
    }
    edges.insert(std::move(e));
}

bool Hypergraph::has_edge(const std::vector<int>& e) const {
    std::vector<int> s = e;
    std::sort(s.begin(), s.end());
    return edges.count(s) > 0;
}

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, int r) {
    std::vector<std::vector<int>> out;
    if (r < 0 || r > static_cast<int>(pool.size())) return out;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    const int n = static_cast<int>(pool.size());
    for (;;) {
        std::vector<int> sub;
        sub.reserve(r);
        for (int i : idx) sub.push_back(pool[i]);
        out.push_back(std::move(sub));
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int t = i + 1; t < r; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

Hypergraph build_delta(const GridShape& shape) {
    if (shape.k < 2 || shape.l < 3)
        throw std::invalid_argument("build_delta: requires k >= 2 and l >= 3");
    Hypergraph h = Hypergraph::on_full_ground_set(shape.n());
    for (int j = 1; j <= shape.l; ++j) {
        for (auto& e : subsets_of_size(shape.column(j), 2)) h.add_edge(e);
    }
    for (int i = 1; i <= shape.k; ++i) {
        for (auto& e : subsets_of_size(shape.row(i), 3)) h.add_edge(e);
    }
    return h;
}

Hypergraph build_delta(int k, int l) { return build_delta(GridShape(k, l)); }

Hypergraph build_delta_prime(int k, int l) {
    GridShape shape(k, l);
    if (k < 2 || l < 3)
        throw std::invalid_argument("build_delta_prime: requires k >= 2 and l >= 3");
    Hypergraph h = Hypergraph::on_full_ground_set(shape.n());
    for (int j = 1; j <= l; ++j) {
        for (auto& e : subsets_of_size(shape.column(j), 2)) h.add_edge(e);
    }
    for (int i = 1; i <= k; ++i) h.add_edge(shape.row(i));
    return h;
}

Hypergraph induced(const Hypergraph& h, const std::vector<int>& removed) {
    std::vector<int> rem = removed;
    std::sort(rem.begin(), rem.end());
    Hypergraph out;
    out.n = h.n;
    for (int v : h.vertices) {
        if (!std::binary_search(rem.begin(), rem.end(), v)) out.vertices.push_back(v);
    }
    for (const auto& e : h.edges) {
        bool hit = false;
        for (int v : e) {
            if (std::binary_search(rem.begin(), rem.end(), v)) {
                hit = true;
                break;
            }
        }
        if (!hit) out.edges.insert(e);
    }
    return out;
}

std::vector<std::vector<int>> connected_components(const Hypergraph& h) {
    // Union-find over the declared ground set; each edge merges its vertices.
    std::map<int, int> parent;
    for (int v : h.vertices) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (const auto& e : h.edges) {
        for (std::size_t i = 1; i < e.size(); ++i) {
            if (!parent.count(e[0]) || !parent.count(e[i]))
                throw std::logic_error("connected_components: edge vertex outside ground set");
            unite(e[0], e[i]);
        }
    }
    std::map<int, std::vector<int>> groups;
    for (int v : h.vertices) groups[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, vs] : groups) {
        std::sort(vs.begin(), vs.end());
        out.push_back(std::move(vs));
    }
    std::sort(out.begin(), out.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    return out;
}

Hypergraph r_completion(const Hypergraph& h, int r) {
    if (r < 1) throw std::invalid_argument("r_completion: r must be at least 1");
    Hypergraph out = h;
    for (const auto& comp : connected_components(h)) {
        for (auto& e : subsets_of_size(comp, r)) out.add_edge(e);
    }
    return out;
}

Hypergraph canonical_generating_edges(const Hypergraph& h) {
    Hypergraph out;
    out.n = h.n;
    out.vertices = h.vertices;
    for (const auto& e : h.edges) {
        bool minimal = true;
        for (const auto& f : h.edges) {
            if (f.size() >= e.size()) continue;
            if (std::includes(e.begin(), e.end(), f.begin(), f.end())) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.edges.insert(e);
    }
    return out;
}

std::string to_json(const Hypergraph& h) {
    std::ostringstream os;
    os << "{\"n\":" << h.n << ",\"edges\":[";
    bool first = true;
    for (const auto& e : h.edges) {
        if (!first) os << ",";
        first = false;
        os << "[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

} // namespace hgi
