#include <doctest.h>

#include "hgi/arrangement.hpp"
#include "hgi/grid.hpp"
#include "hgi/hypergraph.hpp"
#include "hgi/ideal.hpp"
#include "hgi/incidence.hpp"
#include "hgi/matrix.hpp"
#include "hgi/minor.hpp"
#include "hgi/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <vector>

using namespace hgi;

namespace {

RationalMatrix matrix_of(const std::vector<std::vector<long>>& rows) {
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int r = 1; r <= m.rows(); ++r) {
        for (int c = 1; c <= m.cols(); ++c) m.at(r, c) = rows[r - 1][c - 1];
    }
    return m;
}

// The running example: zero first column, columns 2 and 3 proportional, and
// blocks {2,3}, {4}, {5} collinear.
RationalMatrix example_matrix() {
    return matrix_of({{0, 1, 2, 0, 1, 0},
                      {0, 0, 0, 1, 1, 0},
                      {0, 0, 0, 0, 0, 1}});
}

LineArrangement example_arrangement() {
    LineArrangement arr;
    arr.n = 6;
    arr.zeros = {1};
    arr.points = {{2, 3}, {4}, {5}, {6}};
    arr.lines = {{0, 1, 2}};
    return arr;
}

bool contains_poly(const std::vector<Polynomial>& v, const Polynomial& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

bool same_poly_set(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a) {
        if (!contains_poly(b, p)) return false;
    }
    return true;
}

Polynomial m3(const std::vector<int>& cols, int n) {
    return minor_polynomial({{1, 2, 3}, cols}, 3, n);
}

} // namespace

TEST_CASE("arrangement validation rejects malformed structures") {
    LineArrangement ok = example_arrangement();
    CHECK_NOTHROW(validate_arrangement(ok));

    LineArrangement overlap = ok;
    overlap.points[1] = {3, 4}; // column 3 already sits in the first block
    CHECK_THROWS_AS(validate_arrangement(overlap), std::invalid_argument);

    LineArrangement missing = ok;
    missing.zeros = {}; // column 1 now belongs nowhere
    CHECK_THROWS_AS(validate_arrangement(missing), std::invalid_argument);

    LineArrangement empty_block = ok;
    empty_block.points.push_back({});
    CHECK_THROWS_AS(validate_arrangement(empty_block), std::invalid_argument);

    LineArrangement short_line = ok;
    short_line.lines = {{0, 1}};
    CHECK_THROWS_AS(validate_arrangement(short_line), std::invalid_argument);

    LineArrangement bad_index = ok;
    bad_index.lines = {{0, 1, 4}};
    CHECK_THROWS_AS(validate_arrangement(bad_index), std::invalid_argument);

    LineArrangement repeated_block = ok;
    repeated_block.lines = {{0, 1, 1}};
    CHECK_THROWS_AS(validate_arrangement(repeated_block), std::invalid_argument);

    LineArrangement shared_pair = ok;
    shared_pair.lines = {{0, 1, 2}, {0, 1, 3}};
    CHECK_THROWS_AS(validate_arrangement(shared_pair), std::invalid_argument);
}

TEST_CASE("arrangement attached to a vertex subset") {
    GridShape g(2, 6);
    LineArrangement arr = build_L_of_S(g, {1, 3, 6, 8});
    CHECK(arr.n == 12);
    CHECK(arr.zeros == std::vector<int>{1, 3, 6, 8});
    REQUIRE(arr.points.size() == 5);
    CHECK(arr.points[0] == std::vector<int>{9, 10, 11, 12});
    CHECK(arr.points[1] == std::vector<int>{2});
    CHECK(arr.points[2] == std::vector<int>{4});
    CHECK(arr.points[3] == std::vector<int>{5});
    CHECK(arr.points[4] == std::vector<int>{7});
    REQUIRE(arr.lines.size() == 2);
    CHECK(arr.lines[0] == std::vector<int>{0, 3, 4});
    CHECK(arr.lines[1] == std::vector<int>{0, 1, 2});
    CHECK(is_compatible(arr, g));
}

TEST_CASE("arrangement of the empty subset joins all columns on one line") {
    GridShape g(2, 5);
    LineArrangement arr = build_L_of_S(g, {});
    CHECK(arr.zeros.empty());
    REQUIRE(arr.points.size() == 5);
    CHECK(arr.points[0] == std::vector<int>{1, 2});
    CHECK(arr.points[4] == std::vector<int>{9, 10});
    REQUIRE(arr.lines.size() == 1);
    CHECK(arr.lines[0] == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(is_compatible(arr, g));
}

TEST_CASE("arrangement with few survivors per row has no lines") {
    GridShape g(2, 5);
    LineArrangement arr = build_L_of_S(g, {1, 4});
    CHECK(arr.zeros == std::vector<int>{1, 4});
    REQUIRE(arr.points.size() == 3);
    CHECK(arr.points[0] == std::vector<int>{5, 6, 7, 8, 9, 10});
    CHECK(arr.points[1] == std::vector<int>{2});
    CHECK(arr.points[2] == std::vector<int>{3});
    CHECK(arr.lines.empty());
    CHECK(is_compatible(arr, g));
}

TEST_CASE("compatibility follows the row and column rules") {
    GridShape g(2, 4);

    LineArrangement one_line;
    one_line.n = 8;
    one_line.zeros = {3, 5, 8};
    one_line.points = {{1, 2}, {4}, {6}, {7}};
    one_line.lines = {{0, 1, 2, 3}};
    CHECK(is_compatible(one_line, g));

    LineArrangement no_lines;
    no_lines.n = 8;
    no_lines.zeros = {3, 5, 8};
    no_lines.points = {{1, 2, 4}, {6, 7}};
    CHECK(is_compatible(no_lines, g));

    LineArrangement wrong_line;
    wrong_line.n = 8;
    wrong_line.zeros = {3, 5, 8};
    wrong_line.points = {{1, 2}, {4}, {6}, {7}};
    wrong_line.lines = {{0, 1, 3}}; // misses the block holding column 6
    CHECK_FALSE(is_compatible(wrong_line, g));

    LineArrangement split_column;
    split_column.n = 8;
    split_column.zeros = {3, 5, 8};
    split_column.points = {{1}, {2, 4}, {6, 7}};
    CHECK_FALSE(is_compatible(split_column, g));
}

TEST_CASE("vanishing conditions of the running example") {
    LineArrangement arr = example_arrangement();
    auto f = F_of_L(arr, 3);

    std::vector<Polynomial> expected;
    expected.push_back(Polynomial::variable({1, 1}));
    expected.push_back(Polynomial::variable({2, 1}));
    expected.push_back(Polynomial::variable({3, 1}));
    for (const auto& rows : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}}) {
        expected.push_back(minor_polynomial({rows, {2, 3}}, 3, 6));
    }
    expected.push_back(m3({2, 4, 5}, 6));
    expected.push_back(m3({3, 4, 5}, 6));

    CHECK(f.size() == 8);
    CHECK(same_poly_set(f, expected));

    RationalMatrix a = example_matrix();
    for (const auto& p : f) CHECK(evaluate(p, a) == 0);

    CHECK_THROWS_AS(F_of_L(arr, 2), std::invalid_argument);
}

TEST_CASE("vanishing conditions include crossing quadruples when d is four") {
    LineArrangement arr;
    arr.n = 5;
    arr.points = {{1}, {2}, {3}, {4}, {5}};
    arr.lines = {{0, 1, 2}, {0, 3, 4}};
    auto f = F_of_L(arr, 4);

    long triples = 0;
    long quads = 0;
    for (const auto& p : f) {
        if (p.degree() == 3) ++triples;
        if (p.degree() == 4) ++quads;
    }
    CHECK(triples == 2 * 4); // two column triples, four row triples each
    CHECK(quads == 5 * 1);   // five column quadruples over the crossing pair
    CHECK(f.size() == 13);
}

TEST_CASE("grid ideal generators appear among the vanishing conditions") {
    GridShape g(2, 4);
    auto f = F_of_L(build_L_of_S(g, {}), 3);
    IdealSpec spec = ideal_of(build_delta(2, 4), 3);
    CHECK(spec.generators.size() == 20);
    for (const auto& p : spec.generators) CHECK(contains_poly(f, p));
    CHECK(f.size() == 4 * 3 + 4 * 8);
}

TEST_CASE("conjectured generating set of the concurrent arrangement") {
    LineArrangement arr = three_concurrent_lines();
    auto gl = G_of_L(arr, 3);
    CHECK(gl.size() == 4);
    CHECK(contains_poly(gl, m3({1, 2, 3}, 7)));
    CHECK(contains_poly(gl, m3({1, 4, 5}, 7)));
    CHECK(contains_poly(gl, m3({1, 6, 7}, 7)));
    CHECK(contains_poly(gl, concurrency_binomial()));
    CHECK_THROWS_AS(G_of_L(arr, 4), std::invalid_argument);
}

TEST_CASE("reading the arrangement back from a matrix") {
    LineArrangement arr = arrangement_from_matrix(example_matrix());
    CHECK(arr.n == 6);
    CHECK(arr.zeros == std::vector<int>{1});
    REQUIRE(arr.points.size() == 4);
    CHECK(arr.points[0] == std::vector<int>{2, 3});
    CHECK(arr.points[1] == std::vector<int>{4});
    CHECK(arr.points[2] == std::vector<int>{5});
    CHECK(arr.points[3] == std::vector<int>{6});
    REQUIRE(arr.lines.size() == 1);
    CHECK(arr.lines[0] == std::vector<int>{0, 1, 2});
    CHECK(same_arrangement(arr, example_arrangement()));

    LineArrangement id3 = arrangement_from_matrix(matrix_of({{1, 0, 0},
                                                             {0, 1, 0},
                                                             {0, 0, 1}}));
    CHECK(id3.zeros.empty());
    CHECK(id3.points.size() == 3);
    CHECK(id3.lines.empty());
}

TEST_CASE("arrangement equality ignores block and line order") {
    LineArrangement a = example_arrangement();

    LineArrangement b;
    b.n = 6;
    b.zeros = {1};
    b.points = {{6}, {5}, {4}, {2, 3}};
    b.lines = {{1, 2, 3}};
    CHECK(same_arrangement(a, b));

    LineArrangement c = a;
    c.lines = {};
    CHECK_FALSE(same_arrangement(a, c));

    LineArrangement d = a;
    d.points = {{2}, {3}, {4}, {5}, {6}};
    CHECK_FALSE(same_arrangement(a, d));
}

TEST_CASE("bases avoid zeros, coincidence, and collinearity") {
    auto bases = enumerate_bases(example_arrangement(), 3);
    CHECK(bases == std::vector<std::vector<int>>{
                       {2, 4, 6}, {2, 5, 6}, {3, 4, 6}, {3, 5, 6}, {4, 5, 6}});

    LineArrangement collinear3;
    collinear3.n = 3;
    collinear3.points = {{1}, {2}, {3}};
    collinear3.lines = {{0, 1, 2}};
    CHECK(enumerate_bases(collinear3, 3) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});

    LineArrangement single;
    single.n = 1;
    single.points = {{1}};
    CHECK(enumerate_bases(single, 3) == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("configuration membership requires vanishing and generic bases") {
    LineArrangement arr = example_arrangement();
    CHECK(is_configuration(example_matrix(), arr, 3));

    RationalMatrix zero(3, 6);
    CHECK_FALSE(is_configuration(zero, arr, 3));

    // Collapsing block {5} onto block {4} keeps every polynomial vanishing
    // but kills the basis {4, 5, 6}.
    RationalMatrix degenerate = matrix_of({{0, 1, 2, 0, 0, 0},
                                           {0, 0, 0, 1, 2, 0},
                                           {0, 0, 0, 0, 0, 1}});
    CHECK_FALSE(is_configuration(degenerate, arr, 3));

    CHECK_THROWS_AS(is_configuration(RationalMatrix(3, 5), arr, 3), std::invalid_argument);
}

TEST_CASE("round trip from a matrix in the configuration space") {
    LineArrangement arr = arrangement_from_matrix(example_matrix());
    CHECK(is_configuration(example_matrix(), arr, 3));
    CHECK(same_arrangement(arr, example_arrangement()));
}

TEST_CASE("sampling is deterministic and lands in the configuration space") {
    GridShape g(2, 5);
    LineArrangement arr = build_L_of_S(g, {1, 4});
    RationalMatrix a = sample_configuration(arr, 3, 7);
    RationalMatrix b = sample_configuration(arr, 3, 7);
    CHECK(a == b);
    CHECK(a.column_is_zero(1));
    CHECK(a.column_is_zero(4));
    CHECK_FALSE(a.column_is_zero(2));
    CHECK(is_configuration(a, arr, 3));
    CHECK(same_arrangement(arrangement_from_matrix(a), arr));

    RationalMatrix c = sample_configuration(arr, 3, 8);
    CHECK_FALSE(a == c);
}

TEST_CASE("sampling realizes lines as exact collinearity") {
    GridShape g(2, 4);
    LineArrangement arr = build_L_of_S(g, {});
    RationalMatrix a = sample_configuration(arr, 3, 11);
    CHECK(is_configuration(a, arr, 3));
    CHECK(same_arrangement(arrangement_from_matrix(a), arr));

    LineArrangement conc = three_concurrent_lines();
    RationalMatrix b = sample_configuration(conc, 3, 5);
    CHECK(is_configuration(b, conc, 3));
    CHECK(same_arrangement(arrangement_from_matrix(b), conc));
}

TEST_CASE("complete quadrilateral defeats the sampler but carries a certificate") {
    LineArrangement quad;
    quad.n = 6;
    quad.points = {{1}, {2}, {3}, {4}, {5}, {6}};
    quad.lines = {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
    validate_arrangement(quad);

    BuildupCertificate cert = certify_irreducible_by_buildup(quad);
    CHECK(cert.certified);
    CHECK(cert.via_complete_quadrilateral);

    CHECK_THROWS_AS(sample_configuration(quad, 3, 1), SamplerError);
}

TEST_CASE("incidence type census by line count") {
    CHECK(enumerate_incidence_types(1).size() == 1);
    CHECK(enumerate_incidence_types(2).size() == 2);
    CHECK(enumerate_incidence_types(3).size() == 5);
    CHECK(enumerate_incidence_types(4).size() == 16);

    auto two = enumerate_incidence_types(2);
    std::set<IncidenceType> got(two.begin(), two.end());
    CHECK(got.count(IncidenceType{2, {}}) == 1);
    CHECK(got.count(IncidenceType{2, {{1, 2}}}) == 1);
}

TEST_CASE("incidence structure of a concrete arrangement") {
    IncidenceType t = incidence_type_of(three_concurrent_lines());
    CHECK(t.line_count == 3);
    CHECK(t.crossings == std::set<std::set<int>>{{1, 2, 3}});

    IncidenceType e = incidence_type_of(example_arrangement());
    CHECK(e.line_count == 1);
    CHECK(e.crossings.empty());
}

TEST_CASE("buildup certificates for small crossing structures") {
    BuildupCertificate two = certify_irreducible_by_buildup(IncidenceType{2, {{1, 2}}});
    CHECK(two.certified);
    CHECK_FALSE(two.via_complete_quadrilateral);
    CHECK(two.removal_order.size() == 2);
    REQUIRE(two.incidence_counts.size() == 2);
    for (int c : two.incidence_counts) CHECK(c <= 2);

    BuildupCertificate conc = certify_irreducible_by_buildup(IncidenceType{3, {{1, 2, 3}}});
    CHECK(conc.certified);
    CHECK_FALSE(conc.via_complete_quadrilateral);
    CHECK(conc.removal_order.size() == 3);

    IncidenceType quad{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    BuildupCertificate q = certify_irreducible_by_buildup(quad);
    CHECK(q.certified);
    CHECK(q.via_complete_quadrilateral);
    CHECK(q.removal_order.empty());
}

TEST_CASE("arrangement serialization carries the full structure") {
    nlohmann::json j = nlohmann::json::parse(arrangement_to_json(example_arrangement()));
    CHECK(j.at("n").get<int>() == 6);
    CHECK(j.at("zeros").get<std::vector<int>>() == std::vector<int>{1});
    CHECK(j.at("points").size() == 4);
    CHECK(j.at("lines").size() == 1);
}
