#include <doctest.h>

#include "hgi/buchberger.hpp"
#include "hgi/census.hpp"
#include "hgi/fixtures.hpp"
#include "hgi/grid.hpp"
#include "hgi/hypergraph.hpp"
#include "hgi/ideal.hpp"
#include "hgi/minor.hpp"
#include "hgi/subsets.hpp"
#include "hgi/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <vector>

using namespace hgi;

namespace {

bool contains_poly(const std::vector<Polynomial>& v, const Polynomial& p) {
    return std::find(v.begin(), v.end(), p) != v.end();
}

std::vector<long> row_sizes(const CensusReport& r) {
    std::vector<long> out;
    for (const auto& row : r.rows) out.push_back(row.orbit_size);
    return out;
}

std::vector<std::vector<int>> row_reps(const CensusReport& r) {
    std::vector<std::vector<int>> out;
    for (const auto& row : r.rows) out.push_back(row.S);
    return out;
}

} // namespace

TEST_CASE("hypergraph ideal takes one minor per row choice and minimal edge") {
    IdealSpec spec = ideal_of(build_delta(2, 5), 3);
    CHECK(spec.d == 3);
    CHECK(spec.minors.size() == 35);
    CHECK(spec.generators.size() == 35);
    CHECK(contains_poly(spec.generators, minor_polynomial({{1, 2}, {1, 2}}, 3, 10)));
    CHECK(contains_poly(spec.generators, minor_polynomial({{2, 3}, {9, 10}}, 3, 10)));
    CHECK(contains_poly(spec.generators, minor_polynomial({{1, 2, 3}, {1, 3, 5}}, 3, 10)));
    CHECK_FALSE(contains_poly(spec.generators, minor_polynomial({{1, 2}, {1, 3}}, 3, 10)));
}

TEST_CASE("singleton edges give variables and oversized edges give nothing") {
    Hypergraph h = Hypergraph::on_full_ground_set(2);
    h.add_edge({1});
    IdealSpec spec = ideal_of(h, 3);
    REQUIRE(spec.generators.size() == 3);
    CHECK(contains_poly(spec.generators, Polynomial::variable({1, 1})));
    CHECK(contains_poly(spec.generators, Polynomial::variable({2, 1})));
    CHECK(contains_poly(spec.generators, Polynomial::variable({3, 1})));

    Hypergraph big = Hypergraph::on_full_ground_set(5);
    big.add_edge({1, 2, 3, 4, 5});
    CHECK(ideal_of(big, 3).generators.empty());

    Hypergraph nested = Hypergraph::on_full_ground_set(3);
    nested.add_edge({1, 2});
    nested.add_edge({1, 2, 3});
    CHECK(ideal_of(nested, 3).generators.size() == 3);
}

TEST_CASE("shipped reduction identities hold symbolically") {
    auto fixtures = printed_identity_fixtures();
    REQUIRE(fixtures.size() == 19);
    for (const auto& fix : fixtures) {
        CAPTURE(fix.name);
        CHECK(identity_defect(fix).is_zero());
        CHECK(verify_identity(fix));
    }
}

TEST_CASE("a corrupted reduction identity is rejected") {
    auto fixtures = printed_identity_fixtures();
    REQUIRE(!fixtures.empty());
    IdentityFixture bad = fixtures.front();
    REQUIRE(!bad.reduction.empty());
    bad.reduction.front().sign = -bad.reduction.front().sign;
    CHECK_FALSE(verify_identity(bad));
    CHECK_FALSE(identity_defect(bad).is_zero());
}

TEST_CASE("standard representative ideals pass the pairwise criterion") {
    Budget budget;
    GBFamilyOutcome f = verify_gb_family_F(1, 2, 2, 3, budget);
    CHECK(f.verdict.status == CheckStatus::is_gb);
    CHECK(f.squarefree);
    CHECK(f.basis.verified);
    CHECK(f.generators > 0);

    GBFamilyOutcome i0 = verify_gb_family_I0(2, 4, 3, budget);
    CHECK(i0.verdict.status == CheckStatus::is_gb);
    CHECK(i0.squarefree);

    GBFamilyOutcome is = verify_gb_family_IS(2, 5, {1, 4}, 3, budget);
    CHECK(is.verdict.status == CheckStatus::is_gb);
    CHECK(is.squarefree);

    GBFamilyOutcome disc = verify_gb_family_IS(2, 4, {1, 2}, 3, budget);
    CHECK(disc.verdict.status == CheckStatus::is_gb);
    CHECK(disc.split_ok);
}

TEST_CASE("grid ideal sits inside every component ideal") {
    Budget budget;
    IdealSpec grid5 = ideal_of(build_delta(2, 5), 3);
    GBFamilyOutcome comp = verify_gb_family_IS(2, 5, {1, 3, 5, 8}, 3, budget);
    REQUIRE(comp.verdict.status == CheckStatus::is_gb);
    CHECK(check_containment(grid5, comp.basis));

    IdealSpec grid4 = ideal_of(build_delta(2, 4), 3);
    GBFamilyOutcome hidden = verify_gb_family_I0(2, 4, 3, budget);
    REQUIRE(hidden.verdict.status == CheckStatus::is_gb);
    CHECK(check_containment(grid4, hidden.basis));
}

TEST_CASE("distinct minimal components do not contain each other") {
    Budget budget;
    GridShape g(2, 4);
    IdealSpec inner = ideal_of(build_H_of_S(g, {1, 4}), 3);
    GBFamilyOutcome outer = verify_gb_family_IS(2, 4, {1, 3, 6}, 3, budget);
    REQUIRE(outer.verdict.status == CheckStatus::is_gb);
    int witness = -1;
    CHECK_FALSE(check_containment(inner, outer.basis, &witness));
    CHECK(witness >= 0);
    CHECK(witness < static_cast<int>(inner.generators.size()));

    GroebnerBasis unverified;
    unverified.polys = outer.basis.polys;
    unverified.verified = false;
    CHECK_THROWS_AS(check_containment(inner, unverified), std::invalid_argument);
}

TEST_CASE("component census on three columns") {
    CensusReport r = census(2, 3, 3);
    CHECK(r.total == 7);
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].S.empty());
    CHECK(r.rows[0].orbit_size == 1);
    CHECK(r.rows[0].regime == Regime::D);
    CHECK(r.rows[1].S == std::vector<int>{1, 4});
    CHECK(r.rows[1].orbit_size == 6);
    CHECK(r.rows[1].regime == Regime::Dc);
    for (const auto& row : r.rows) {
        CHECK((!row.hyper.edges.empty() || row.S.empty()));
        CHECK(row.arrangement.n == 6);
    }
}

TEST_CASE("component census on four columns") {
    CensusReport r = census(2, 4, 3);
    CHECK(r.total == 43);
    CHECK(row_reps(r) == std::vector<std::vector<int>>{
                             {}, {1, 4}, {1, 3, 6}, {1, 3, 6, 8}});
    CHECK(row_sizes(r) == std::vector<long>{1, 12, 24, 6});
}

TEST_CASE("component census on five columns") {
    CensusReport r = census(2, 5, 3);
    CHECK(r.total == 171);
    CHECK(row_reps(r) == std::vector<std::vector<int>>{
                             {},
                             {1, 4},
                             {1, 3, 6},
                             {1, 3, 5, 8},
                             {1, 3, 6, 8},
                             {1, 3, 5, 8, 10}});
    CHECK(row_sizes(r) == std::vector<long>{1, 20, 60, 40, 30, 20});
    CHECK(class_label(r.rows[0].S) == "I_0");
    CHECK(class_label(r.rows[1].S) == "I_{1,4}");
}

TEST_CASE("component census on the three by four grid") {
    CensusReport r = census(3, 4, 3);
    REQUIRE(r.rows.size() == 9);
    CHECK(row_reps(r) == std::vector<std::vector<int>>{
                             {},
                             {1, 2, 6, 9},
                             {1, 5, 6, 8, 9},
                             {1, 5, 6, 8, 12},
                             {1, 4, 8, 12},
                             {1, 2, 6},
                             {1, 2, 7, 9, 11, 12},
                             {1, 2, 4, 5, 9, 12},
                             {1, 4, 5, 8, 9, 12}});
    CHECK(row_sizes(r) == std::vector<long>{1, 36, 36, 72, 36, 36, 24, 18, 72});
    CHECK(r.total == 331);

    for (const auto& row : r.rows) {
        CAPTURE(class_label(row.S));
        for (const auto& e : row.hyper.edges) CHECK(e.size() <= 3);
        CHECK(row.arrangement.n == 12);
    }

    // Spot checks against the published generating families.
    const CensusRow& r1269 = r.rows[1];
    CHECK(r1269.hyper.has_edge({1}));
    CHECK(r1269.hyper.has_edge({4, 5}));
    CHECK(r1269.hyper.has_edge({10, 11}));
    CHECK(r1269.hyper.has_edge({3, 4, 7}));
    CHECK_FALSE(r1269.hyper.has_edge({1, 2}));
}

TEST_CASE("census rejects unsupported shapes") {
    CHECK_THROWS_AS(census(2, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(census(2, 13, 3), std::invalid_argument);
    CHECK_THROWS_AS(census(3, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(census(4, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(census(3, 4, 4), std::invalid_argument);
    CHECK_THROWS_AS(census(2, 4, 2), std::invalid_argument);
}

TEST_CASE("census serialization round trips through json") {
    CensusReport r = census(2, 4, 3);
    nlohmann::json j = nlohmann::json::parse(census_json(r));
    CHECK(j.at("k").get<int>() == 2);
    CHECK(j.at("l").get<int>() == 4);
    CHECK(j.at("d").get<int>() == 3);
    CHECK(j.at("total").get<long>() == 43);
    REQUIRE(j.at("classes").size() == 4);
    CHECK(j.at("classes")[1].at("orbit_size").get<long>() == 12);
    CHECK(j.at("classes")[1].at("S").get<std::vector<int>>() == std::vector<int>{1, 4});

    std::string table = census_table(r);
    CHECK(table.find("I_0") != std::string::npos);
    CHECK(table.find("I_{1,3,6,8}") != std::string::npos);
    CHECK(table.find("43") != std::string::npos);
}

TEST_CASE("verification suites pass on small instances") {
    Budget budget;

    VerifyReport identities = verify_suite_identities();
    CHECK(identities.all_ok());
    CHECK(identities.failed() == 0);

    VerifyReport incidence = verify_suite_incidence();
    CHECK(incidence.all_ok());

    VerifyReport buildup = verify_suite_buildup();
    CHECK(buildup.all_ok());

    VerifyReport gb = verify_suite_gb(2, 3, 3, budget);
    CHECK(gb.all_ok());

    VerifyReport containment = verify_suite_containment(2, 4, 3, budget);
    CHECK(containment.all_ok());

    VerifyReport sampling = verify_suite_sampling(2, 4, 3, 2, 0);
    CHECK(sampling.all_ok());
}

TEST_CASE("report formatting carries a machine readable summary") {
    VerifyReport r;
    r.suite = "demo";
    r.checks.push_back({"first", "pass", ""});
    r.checks.push_back({"second", "fail", "expected 1 got 2"});
    CHECK_FALSE(r.all_ok());
    CHECK(r.passed() == 1);
    CHECK(r.failed() == 1);

    std::string text = report_text(r);
    CHECK(text.find("SUMMARY suite=demo checks=2 passed=1 failed=1 status=fail") != std::string::npos);
    CHECK(text.find("expected 1 got 2") != std::string::npos);

    nlohmann::json j = nlohmann::json::parse(report_json(r));
    CHECK(j.at("suite").get<std::string>() == "demo");
    CHECK(j.at("checks").size() == 2);

    VerifyReport merged = merge_reports("all", {r});
    CHECK(merged.checks.size() == 2);
    CHECK(merged.checks[0].name == "demo/first");
}

TEST_CASE("concurrency binomial experiment") {
    ConcurrencyReport r = concurrency_binomial_experiment(5, 0);
    CHECK(r.samples == 5);
    CHECK(r.binomial_vanishes_on_samples);
    CHECK(r.witness_annihilates_F);
    CHECK(r.witness_value == Rational(6));
    CHECK(r.witness_value != 0);
}

TEST_CASE("conjectured generators hold on sampled configurations") {
    Budget budget;
    ConjectureReport r = conjecture_experiment_GL(three_concurrent_lines(), 3, budget, 3, 0);
    CHECK(r.samples == 3);
    CHECK(r.samples_vanish_on_generators);
    if (r.completion_status == CheckStatus::is_gb) {
        CHECK(r.completed_basis_size > 0);
        CHECK(r.samples_vanish_on_completed);
    }
}
