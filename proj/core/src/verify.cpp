#include "hgi/verify.hpp"

#include "hgi/arrangement.hpp"
#include "hgi/fixtures.hpp"
#include "hgi/incidence.hpp"
#include "hgi/subsets.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hgi {

namespace {

std::string gb_status_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::is_gb: return "pass";
        case CheckStatus::not_gb: return "fail";
        case CheckStatus::budget_exceeded: return "budget";
    }
    return "fail";
}

CheckLine line_of(std::string name, bool ok, std::string detail = "") {
    return CheckLine{std::move(name), ok ? "pass" : "fail", std::move(detail)};
}

// Every non-singleton canonical edge must lie inside one connected component
// of the survivor hypergraph.
bool generators_split_by_component(const GridShape& shape, const std::vector<int>& S,
                                   const Hypergraph& h) {
    Hypergraph survivors = induced(build_delta(shape), S);
    auto comps = connected_components(survivors);
    std::map<int, int> comp_of;
    for (std::size_t ci = 0; ci < comps.size(); ++ci)
        for (int v : comps[ci]) comp_of[v] = static_cast<int>(ci);
    std::set<int> in_s(S.begin(), S.end());
    for (const auto& e : canonical_generating_edges(h).edges) {
        if (e.size() == 1 && in_s.count(e.front())) continue;
        int home = -1;
        for (int v : e) {
            auto it = comp_of.find(v);
            if (it == comp_of.end()) return false;
            if (home == -1)
                home = it->second;
            else if (it->second != home)
                return false;
        }
    }
    return true;
}

GBFamilyOutcome run_family(const Hypergraph& h, int d, const Budget& budget) {
    GBFamilyOutcome out;
    IdealSpec spec = ideal_of(h, d);
    out.generators = static_cast<int>(spec.generators.size());
    out.verdict = buchberger_check(spec.generators, kLex, budget);
    if (out.verdict.status == CheckStatus::is_gb) {
        out.basis = as_verified_basis(spec.generators);
        out.squarefree = is_radical_by_squarefree_initials(out.basis);
    }
    return out;
}

std::string pair_detail(const CheckVerdict& verdict) {
    std::ostringstream out;
    out << "pairs_reduced=" << verdict.pairs_reduced
        << " pairs_skipped=" << verdict.pairs_skipped_coprime;
    if (verdict.failing_pair)
        out << " failing_pair=(" << verdict.failing_pair->first << ","
            << verdict.failing_pair->second << ")";
    return out.str();
}

struct ClassBundle {
    std::string label;
    std::vector<int> S;
    Regime regime = Regime::Dc;
    GBFamilyOutcome outcome;
    IdealSpec spec;
};

// Census classes of a k = 2 grid with their canonical generator sets and
// Buchberger verdicts, in census order.
std::vector<ClassBundle> class_bundles(int l, int d, const Budget& budget) {
    GridShape shape{2, l};
    CensusReport rep = census(2, l, d);
    std::vector<ClassBundle> bundles;
    for (const CensusRow& row : rep.rows) {
        ClassBundle b;
        b.label = class_label(row.S);
        b.S = row.S;
        b.regime = row.regime;
        Hypergraph h = build_H_of_S(shape, row.S);
        b.spec = ideal_of(h, d);
        b.outcome = verify_gb_family_IS(2, l, row.S, d, budget);
        bundles.push_back(std::move(b));
    }
    return bundles;
}

// Ordered-pair non-redundancy: for distinct classes a, b find a generator of
// a's ideal with nonzero normal form modulo b's basis.
std::vector<CheckLine> nonredundancy_lines(const std::vector<ClassBundle>& bundles) {
    std::vector<CheckLine> lines;
    for (std::size_t a = 0; a < bundles.size(); ++a) {
        for (std::size_t b = 0; b < bundles.size(); ++b) {
            if (a == b) continue;
            std::string name = bundles[a].label + " not inside " + bundles[b].label;
            if (!bundles[b].outcome.basis.verified) {
                lines.push_back(line_of(std::move(name), false, "basis unverified"));
                continue;
            }
            int witness = -1;
            const auto& gens = bundles[a].spec.generators;
            for (std::size_t g = 0; g < gens.size(); ++g) {
                if (!normal_form(gens[g], bundles[b].outcome.basis).is_zero()) {
                    witness = static_cast<int>(g);
                    break;
                }
            }
            std::ostringstream detail;
            if (witness >= 0) detail << "witness_generator=" << witness;
            lines.push_back(line_of(std::move(name), witness >= 0, detail.str()));
        }
    }
    return lines;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return x;
}

} // namespace

bool VerifyReport::all_ok() const {
    for (const CheckLine& c : checks)
        if (!c.ok()) return false;
    return true;
}

int VerifyReport::passed() const {
    int n = 0;
    for (const CheckLine& c : checks)
        if (c.ok()) ++n;
    return n;
}

int VerifyReport::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

std::string report_text(const VerifyReport& report) {
    std::ostringstream out;
    for (const CheckLine& c : report.checks) {
        out << "[" << c.status << "] " << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "SUMMARY suite=" << report.suite << " checks=" << report.checks.size()
        << " passed=" << report.passed() << " failed=" << report.failed()
        << " status=" << (report.all_ok() ? "pass" : "fail") << "\n";
    return out.str();
}

std::string report_json(const VerifyReport& report) {
    nlohmann::json doc;
    doc["suite"] = report.suite;
    doc["checks"] = nlohmann::json::array();
    for (const CheckLine& c : report.checks) {
        nlohmann::json line;
        line["name"] = c.name;
        line["status"] = c.status;
        line["detail"] = c.detail;
        doc["checks"].push_back(std::move(line));
    }
    doc["passed"] = report.passed();
    doc["failed"] = report.failed();
    doc["status"] = report.all_ok() ? "pass" : "fail";
    return doc.dump(2);
}

VerifyReport merge_reports(const std::string& suite,
                           const std::vector<VerifyReport>& parts) {
    VerifyReport merged;
    merged.suite = suite;
    for (const VerifyReport& part : parts)
        for (const CheckLine& c : part.checks)
            merged.checks.push_back(
                CheckLine{part.suite + "/" + c.name, c.status, c.detail});
    return merged;
}

GroebnerBasis as_verified_basis(std::vector<Polynomial> gens) {
    for (Polynomial& g : gens) g = g.monic();
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return kLex.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    GroebnerBasis gb;
    gb.polys = std::move(gens);
    gb.verified = true;
    return gb;
}

GBFamilyOutcome verify_gb_family_F(int i, int j, int c, int d, const Budget& budget) {
    if (d < 3) throw std::invalid_argument("verify_gb_family_F: d must be at least 3");
    return run_family(build_F_ijc(i, j, c), d, budget);
}

GBFamilyOutcome verify_gb_family_I0(int k, int l, int d, const Budget& budget) {
    return verify_gb_family_IS(k, l, {}, d, budget);
}

GBFamilyOutcome verify_gb_family_IS(int k, int l, const std::vector<int>& S, int d,
                                    const Budget& budget) {
    if (k != 2) throw std::invalid_argument("verify_gb_family_IS: k must be 2");
    if (d < 3) throw std::invalid_argument("verify_gb_family_IS: d must be at least 3");
    GridShape shape{2, l};
    Hypergraph h = build_H_of_S(shape, S);
    GBFamilyOutcome out = run_family(h, d, budget);
    if (classify_S(shape, S).regime == Regime::D)
        out.split_ok = generators_split_by_component(shape, S, h);
    return out;
}

bool check_containment(const IdealSpec& inner, const GroebnerBasis& outer, int* witness) {
    if (!outer.verified)
        throw std::invalid_argument("check_containment: outer basis is not verified");
    for (std::size_t g = 0; g < inner.generators.size(); ++g) {
        if (!normal_form(inner.generators[g], outer).is_zero()) {
            if (witness) *witness = static_cast<int>(g);
            return false;
        }
    }
    return true;
}

VerifyReport verify_suite_gb(int k, int l, int d, const Budget& budget) {
    if (k != 2) throw std::invalid_argument("verify_suite_gb: k must be 2");
    VerifyReport report;
    report.suite = "gb";
    for (const ClassBundle& b : class_bundles(l, d, budget)) {
        std::ostringstream detail;
        detail << "generators=" << b.outcome.generators << " " << pair_detail(b.outcome.verdict);
        report.checks.push_back(CheckLine{b.label + " buchberger",
                                          gb_status_string(b.outcome.verdict.status),
                                          detail.str()});
        report.checks.push_back(line_of(
            b.label + " squarefree initials", b.outcome.squarefree,
            b.outcome.basis.verified ? "" : "basis unverified"));
        if (b.regime == Regime::D)
            report.checks.push_back(line_of(b.label + " component split", b.outcome.split_ok));
    }
    return report;
}

VerifyReport verify_suite_identities() {
    VerifyReport report;
    report.suite = "identities";
    std::vector<IdentityFixture> fixtures = printed_identity_fixtures();
    for (const IdentityFixture& fix : fixtures) {
        Polynomial defect = identity_defect(fix);
        std::string detail;
        if (!defect.is_zero()) detail = "defect has " + std::to_string(defect.terms().size()) + " terms";
        report.checks.push_back(line_of(fix.name, defect.is_zero(), detail));
    }
    IdentityFixture corrupted = fixtures.front();
    corrupted.reduction.front().sign = -corrupted.reduction.front().sign;
    report.checks.push_back(
        line_of("corrupted fixture rejected", !verify_identity(corrupted)));
    return report;
}

VerifyReport verify_suite_containment(int k, int l, int d, const Budget& budget) {
    if (k != 2) throw std::invalid_argument("verify_suite_containment: k must be 2");
    VerifyReport report;
    report.suite = "containment";
    GridShape shape{2, l};
    IdealSpec delta_ideal = ideal_of(build_delta(shape), d);
    std::vector<ClassBundle> bundles = class_bundles(l, d, budget);
    for (const ClassBundle& b : bundles) {
        std::string name = "I_Delta inside " + b.label;
        if (!b.outcome.basis.verified) {
            report.checks.push_back(line_of(std::move(name), false, "basis unverified"));
            continue;
        }
        int witness = -1;
        bool ok = check_containment(delta_ideal, b.outcome.basis, &witness);
        std::string detail;
        if (!ok) detail = "surviving_generator=" + std::to_string(witness);
        report.checks.push_back(line_of(std::move(name), ok, detail));
    }
    for (CheckLine& line : nonredundancy_lines(bundles))
        report.checks.push_back(std::move(line));
    return report;
}

VerifyReport verify_suite_sampling(int k, int l, int d, int seeds, std::uint64_t seed) {
    VerifyReport report;
    report.suite = "sampling";
    if (seeds < 1) throw std::invalid_argument("verify_suite_sampling: seeds must be positive");
    GridShape shape{k, l};
    CensusReport rep = census(k, l, d);
    IdealSpec delta_ideal = ideal_of(build_delta(shape), d);

    for (std::size_t ci = 0; ci < rep.rows.size(); ++ci) {
        const CensusRow& row = rep.rows[ci];
        std::string label = class_label(row.S);
        int vanish_failures = 0;
        int roundtrip_failures = 0;
        int compat_failures = 0;
        std::string sampler_error;
        for (int s = 0; s < seeds && sampler_error.empty(); ++s) {
            try {
                RationalMatrix a =
                    sample_configuration(row.arrangement, d, mix_seed(seed, ci * 100000 + s));
                for (const Polynomial& g : delta_ideal.generators)
                    if (evaluate(g, a) != 0) {
                        ++vanish_failures;
                        break;
                    }
                LineArrangement read_back = arrangement_from_matrix(a);
                if (!same_arrangement(read_back, row.arrangement)) ++roundtrip_failures;
                if (!is_compatible(read_back, shape)) ++compat_failures;
            } catch (const SamplerError& err) {
                sampler_error = std::string("seed ") + std::to_string(s) + ": " + err.what();
            }
        }
        bool ok = sampler_error.empty() && vanish_failures == 0 && roundtrip_failures == 0 &&
                  compat_failures == 0;
        std::ostringstream detail;
        if (!sampler_error.empty()) {
            detail << sampler_error;
        } else if (!ok) {
            detail << "vanish_failures=" << vanish_failures
                   << " roundtrip_failures=" << roundtrip_failures
                   << " compat_failures=" << compat_failures;
        } else {
            detail << "seeds=" << seeds;
        }
        report.checks.push_back(line_of(label + " samples", ok, detail.str()));
    }

    if (k == 2) {
        int draws = 20;
        int failures = 0;
        std::string sampler_error;
        std::mt19937_64 gen(mix_seed(seed, 0xa11ce));
        for (int t = 0; t < draws && sampler_error.empty(); ++t) {
            std::uint64_t mask = gen() & ((1ULL << shape.n()) - 1);
            std::vector<int> S;
            for (int v = 1; v <= shape.n(); ++v)
                if (mask & (1ULL << (v - 1))) S.push_back(v);
            LineArrangement arr = build_L_of_S(shape, S);
            try {
                RationalMatrix a = sample_configuration(arr, d, mix_seed(seed, 0xbeef00 + t));
                bool ok = is_compatible(arrangement_from_matrix(a), shape);
                for (const Polynomial& g : delta_ideal.generators)
                    if (evaluate(g, a) != 0) ok = false;
                if (!ok) ++failures;
            } catch (const SamplerError& err) {
                sampler_error = std::string("draw ") + std::to_string(t) + ": " + err.what();
            }
        }
        bool ok = sampler_error.empty() && failures == 0;
        std::string detail = sampler_error.empty()
                                 ? (ok ? "draws=" + std::to_string(draws)
                                       : "failures=" + std::to_string(failures))
                                 : sampler_error;
        report.checks.push_back(line_of("random compatible arrangements", ok, detail));
    }

    if (k == 2 && l <= 4) {
        std::vector<ClassBundle> bundles = class_bundles(l, d, Budget{});
        for (CheckLine& line : nonredundancy_lines(bundles))
            report.checks.push_back(std::move(line));
    }
    return report;
}

VerifyReport verify_suite_incidence() {
    VerifyReport report;
    report.suite = "incidence";
    const int expected[5] = {0, 1, 2, 5, 16};
    for (int m = 1; m <= 4; ++m) {
        auto types = enumerate_incidence_types(m);
        std::ostringstream detail;
        detail << "computed=" << types.size() << " expected=" << expected[m];
        report.checks.push_back(
            line_of("types with " + std::to_string(m) + " lines",
                    static_cast<int>(types.size()) == expected[m], detail.str()));
    }
    bool stable = enumerate_incidence_types(4) == enumerate_incidence_types(4);
    report.checks.push_back(line_of("canonical order stable", stable));
    return report;
}

VerifyReport verify_suite_buildup() {
    VerifyReport report;
    report.suite = "buildup";
    for (int l = 4; l <= 5; ++l) {
        CensusReport rep = census(2, l, 3);
        int failures = 0;
        for (const CensusRow& row : rep.rows)
            if (!certify_irreducible_by_buildup(row.arrangement).certified) ++failures;
        report.checks.push_back(line_of(
            "arrangements of the 2x" + std::to_string(l) + " census", failures == 0,
            failures == 0 ? "classes=" + std::to_string(rep.rows.size())
                          : "failures=" + std::to_string(failures)));
    }
    {
        CensusReport rep = census(3, 4, 3);
        int failures = 0;
        for (const CensusRow& row : rep.rows)
            if (!certify_irreducible_by_buildup(row.arrangement).certified) ++failures;
        report.checks.push_back(line_of(
            "arrangements of the 3x4 census", failures == 0,
            failures == 0 ? "classes=" + std::to_string(rep.rows.size())
                          : "failures=" + std::to_string(failures)));
    }
    {
        int failures = 0;
        for (const IncidenceType& type : enumerate_incidence_types(3))
            if (!certify_irreducible_by_buildup(type).certified) ++failures;
        report.checks.push_back(line_of("three-line types", failures == 0));
    }
    {
        int failures = 0;
        int special = 0;
        for (const IncidenceType& type : enumerate_incidence_types(4)) {
            BuildupCertificate cert = certify_irreducible_by_buildup(type);
            if (!cert.certified) ++failures;
            if (cert.via_complete_quadrilateral) ++special;
        }
        std::ostringstream detail;
        detail << "special_case=" << special;
        report.checks.push_back(
            line_of("four-line types", failures == 0 && special == 1, detail.str()));
    }
    return report;
}

LineArrangement three_concurrent_lines() {
    LineArrangement arr;
    arr.n = 7;
    for (int v = 1; v <= 7; ++v) arr.points.push_back({v});
    arr.lines = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}};
    validate_arrangement(arr);
    return arr;
}

Polynomial concurrency_binomial() {
    const int d = 3;
    const int n = 7;
    auto m = [&](std::vector<int> cols) {
        return minor_polynomial(MinorSpec{{1, 2, 3}, std::move(cols)}, d, n);
    };
    return m({2, 3, 4}) * m({5, 6, 7}) - m({2, 3, 5}) * m({4, 6, 7});
}

RationalMatrix concurrency_witness() {
    RationalMatrix a(3, 7);
    const int cols[7][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1},
                            {1, 2, 3}, {4, 5, 6}, {7, 8, 10}};
    for (int c = 1; c <= 7; ++c)
        for (int r = 1; r <= 3; ++r) a.at(r, c) = Rational(cols[c - 1][r - 1]);
    return a;
}

ConcurrencyReport concurrency_binomial_experiment(int samples, std::uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("concurrency_binomial_experiment: samples must be positive");
    LineArrangement arr = three_concurrent_lines();
    Polynomial binomial = concurrency_binomial();
    ConcurrencyReport report;
    report.samples = samples;
    report.binomial_vanishes_on_samples = true;
    for (int s = 0; s < samples; ++s) {
        RationalMatrix a = sample_configuration(arr, 3, mix_seed(seed, s));
        if (evaluate(binomial, a) != 0) report.binomial_vanishes_on_samples = false;
    }
    RationalMatrix witness = concurrency_witness();
    report.witness_annihilates_F = true;
    for (const Polynomial& f : F_of_L(arr, 3))
        if (evaluate(f, witness) != 0) report.witness_annihilates_F = false;
    report.witness_value = evaluate(binomial, witness);
    return report;
}

ConjectureReport conjecture_experiment_GL(const LineArrangement& arr, int d,
                                          const Budget& budget, int samples,
                                          std::uint64_t seed) {
    ConjectureReport report;
    std::vector<Polynomial> gl = G_of_L(arr, d);
    report.direct_check = buchberger_check(gl, kLex, budget);
    CompletionResult completion = buchberger_complete(gl, kLex, budget);
    report.completion_status = completion.status;
    if (completion.basis)
        report.completed_basis_size = static_cast<int>(completion.basis->polys.size());
    report.samples = samples;
    report.samples_vanish_on_generators = true;
    report.samples_vanish_on_completed = completion.basis.has_value();
    for (int s = 0; s < samples; ++s) {
        RationalMatrix a = sample_configuration(arr, d, mix_seed(seed, 0xc0ffee + s));
        for (const Polynomial& g : gl)
            if (evaluate(g, a) != 0) report.samples_vanish_on_generators = false;
        if (completion.basis)
            for (const Polynomial& g : completion.basis->polys)
                if (evaluate(g, a) != 0) report.samples_vanish_on_completed = false;
    }
    return report;
}

} // namespace hgi
