#include "hgi/census.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hgi {

namespace {

// Edge families of a census class: singletons of S, pairs inside each
// coincidence block, and triples over the columns of each line.
Hypergraph class_hypergraph(int n, const std::vector<int>& S,
                            const LineArrangement& arr) {
    Hypergraph h = Hypergraph::on_full_ground_set(n);
    for (int s : S) h.add_edge({s});
    for (const auto& block : arr.points)
        for (auto& e : subsets_of_size(block, 2)) h.add_edge(std::move(e));
    for (const auto& line : arr.lines) {
        std::vector<int> cols;
        for (int b : line)
            cols.insert(cols.end(), arr.points[b].begin(), arr.points[b].end());
        std::sort(cols.begin(), cols.end());
        for (auto& e : subsets_of_size(cols, 3)) h.add_edge(std::move(e));
    }
    return h;
}

LineArrangement make_arrangement(int n, std::vector<int> zeros,
                                 std::vector<std::vector<int>> points,
                                 std::vector<std::vector<int>> lines) {
    LineArrangement arr;
    arr.n = n;
    arr.zeros = std::move(zeros);
    arr.points = std::move(points);
    arr.lines = std::move(lines);
    validate_arrangement(arr);
    return arr;
}

CensusReport census_grid_2(int l, int d) {
    GridShape shape{2, l};
    MinimalEnumeration en = enumerate_minimal(l);
    CensusReport report;
    report.k = 2;
    report.l = l;
    report.d = d;
    report.total = en.total;
    for (const MinimalClass& mc : en.classes) {
        CensusRow row;
        row.S = mc.representative.S;
        row.regime = mc.representative.regime;
        row.orbit_size = mc.orbit_size;
        row.hyper = canonical_generating_edges(build_H_of_S(shape, row.S));
        row.arrangement = build_L_of_S(shape, row.S);
        report.rows.push_back(std::move(row));
    }
    return report;
}

CensusReport census_grid_3_4(int d) {
    struct Entry {
        std::vector<int> S;
        std::vector<std::vector<int>> points;
        std::vector<std::vector<int>> lines;
    };
    const std::vector<Entry> entries = {
        {{}, {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}}, {{0, 1, 2, 3}}},
        {{1, 2, 6, 9}, {{3}, {4, 5}, {7, 8}, {10, 11, 12}}, {{1, 2, 3}}},
        {{1, 5, 6, 8, 9}, {{2, 3}, {4}, {7}, {10, 11, 12}}, {{1, 2, 3}}},
        {{1, 5, 6, 8, 12}, {{2, 3}, {4}, {7, 9}, {10, 11}}, {{1, 2, 3}}},
        {{1, 4, 8, 12}, {{2, 3, 5, 6}, {7, 9}, {10, 11}}, {}},
        {{1, 2, 6}, {{3}, {4, 5}, {7, 8, 9, 10, 11, 12}}, {}},
        {{1, 2, 7, 9, 11, 12}, {{3}, {4, 5, 6}, {8}, {10}}, {}},
        {{1, 2, 4, 5, 9, 12}, {{3}, {6}, {7, 8}, {10, 11}}, {}},
        {{1, 4, 5, 8, 9, 12}, {{2, 3}, {6}, {7}, {10, 11}}, {}},
    };
    GridShape shape{3, 4};
    CensusReport report;
    report.k = 3;
    report.l = 4;
    report.d = d;
    report.total = 0;
    for (const Entry& entry : entries) {
        CensusRow row;
        row.S = entry.S;
        row.regime = classify_S(shape, entry.S).regime;
        row.orbit_size = sym_orbit(shape, entry.S).size;
        row.arrangement = make_arrangement(12, entry.S, entry.points, entry.lines);
        row.hyper = class_hypergraph(12, entry.S, row.arrangement);
        report.total += row.orbit_size;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string edge_summary(const Hypergraph& h) {
    std::map<int, int> by_size;
    for (const auto& e : h.edges) ++by_size[static_cast<int>(e.size())];
    std::ostringstream out;
    bool first = true;
    for (const auto& [size, count] : by_size) {
        if (!first) out << ", ";
        first = false;
        out << count << " of size " << size;
    }
    if (first) out << "none";
    return out.str();
}

} // namespace

std::string class_label(const std::vector<int>& S) {
    if (S.empty()) return "I_0";
    std::ostringstream out;
    out << "I_{";
    for (std::size_t i = 0; i < S.size(); ++i) {
        if (i) out << ",";
        out << S[i];
    }
    out << "}";
    return out.str();
}

CensusReport census(int k, int l, int d) {
    if (d < 3) throw std::invalid_argument("census: d must be at least 3");
    if (k == 2 && l >= 3 && l <= 12) return census_grid_2(l, d);
    if (k == 3 && l == 4) {
        if (d != 3) throw std::invalid_argument("census: the 3x4 grid is supported at d = 3 only");
        return census_grid_3_4(d);
    }
    throw std::invalid_argument("census: unsupported grid shape");
}

std::string census_table(const CensusReport& report) {
    std::vector<std::array<std::string, 3>> cells;
    cells.push_back({"type", "edges", "count"});
    for (const CensusRow& row : report.rows)
        cells.push_back({class_label(row.S), edge_summary(row.hyper),
                         std::to_string(row.orbit_size)});
    cells.push_back({"total", "", std::to_string(report.total)});
    std::size_t w0 = 0;
    std::size_t w1 = 0;
    for (const auto& c : cells) {
        w0 = std::max(w0, c[0].size());
        w1 = std::max(w1, c[1].size());
    }
    std::ostringstream out;
    out << "census " << report.k << "x" << report.l << " at d = " << report.d
        << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto& c = cells[i];
        out << c[0] << std::string(w0 - c[0].size() + 2, ' ') << c[1]
            << std::string(w1 - c[1].size() + 2, ' ') << c[2] << "\n";
        if (i == 0) out << std::string(w0 + w1 + c[2].size() + 4, '-') << "\n";
    }
    return out.str();
}

std::string census_json(const CensusReport& report) {
    nlohmann::json doc;
    doc["k"] = report.k;
    doc["l"] = report.l;
    doc["d"] = report.d;
    doc["total"] = report.total;
    doc["classes"] = nlohmann::json::array();
    for (const CensusRow& row : report.rows) {
        nlohmann::json cls;
        cls["S"] = row.S;
        cls["regime"] = row.regime == Regime::D ? "D" : "Dc";
        cls["orbit_size"] = row.orbit_size;
        nlohmann::json hyper;
        hyper["n"] = row.hyper.n;
        hyper["edges"] = nlohmann::json::array();
        for (const auto& e : row.hyper.edges) hyper["edges"].push_back(e);
        cls["hypergraph"] = std::move(hyper);
        nlohmann::json arr;
        arr["n"] = row.arrangement.n;
        arr["zeros"] = row.arrangement.zeros;
        arr["points"] = row.arrangement.points;
        arr["lines"] = row.arrangement.lines;
        cls["arrangement"] = std::move(arr);
        doc["classes"].push_back(std::move(cls));
    }
    return doc.dump(2);
}

} // namespace hgi
