#pragma once

#include "hgi/buchberger.hpp"
#include "hgi/census.hpp"
#include "hgi/ideal.hpp"
#include "hgi/matrix.hpp"
#include "hgi/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hgi {

struct CheckLine {
    std::string name;
    std::string status; // "pass", "fail", or "budget"
    std::string detail; // empty unless there is something to report
    bool ok() const { return status == "pass"; }
};

struct VerifyReport {
    std::string suite;
    std::vector<CheckLine> checks;

    bool all_ok() const;
    int passed() const;
    int failed() const;
};

// One line per check, then a machine-parsable summary line of the form
// "SUMMARY suite=<name> checks=<n> passed=<n> failed=<n> status=<pass|fail>".
std::string report_text(const VerifyReport& report);
std::string report_json(const VerifyReport& report);

// Concatenates the parts' checks under one suite name, prefixing each check
// with its part name.
VerifyReport merge_reports(const std::string& suite,
                           const std::vector<VerifyReport>& parts);

// Wraps monic generators as a basis usable with normal_form; callers must
// have verified the Groebner property first.
GroebnerBasis as_verified_basis(std::vector<Polynomial> gens);

// Outcome of checking one family ideal: Buchberger criterion on the canonical
// generators, the square-free initial-term test (radicality, sufficient
// only), and for disconnected survivor hypergraphs the confinement of every
// generator to a single connected component.
struct GBFamilyOutcome {
    CheckVerdict verdict;
    bool squarefree = false;
    bool split_ok = true;
    int generators = 0;
    GroebnerBasis basis; // verified only when the criterion passed
};

GBFamilyOutcome verify_gb_family_F(int i, int j, int c, int d, const Budget& budget);
GBFamilyOutcome verify_gb_family_I0(int k, int l, int d, const Budget& budget);
GBFamilyOutcome verify_gb_family_IS(int k, int l, const std::vector<int>& S, int d,
                                    const Budget& budget);

// True when every generator of inner has normal form zero modulo outer.
// On failure *witness is the index of the first surviving generator. Throws
// when outer is not a verified basis.
bool check_containment(const IdealSpec& inner, const GroebnerBasis& outer,
                       int* witness = nullptr);

// Verification suites shared by the command-line driver and the test rig.
// Every suite is deterministic in its arguments.
VerifyReport verify_suite_gb(int k, int l, int d, const Budget& budget);
VerifyReport verify_suite_identities();
VerifyReport verify_suite_containment(int k, int l, int d, const Budget& budget);
VerifyReport verify_suite_sampling(int k, int l, int d, int seeds, std::uint64_t seed);
VerifyReport verify_suite_incidence();
VerifyReport verify_suite_buildup();

// Seven points, three lines through the shared block 0, two free blocks per
// line.
LineArrangement three_concurrent_lines();

// [234][567] - [235][467] as maximal 3-minors of a 3 x 7 matrix.
Polynomial concurrency_binomial();

// Degenerate matrix annihilating every polynomial of
// F_of_L(three_concurrent_lines(), 3) on which the concurrency binomial is
// nonzero; block 0 is the zero column, so the matrix lies outside the
// configuration space.
RationalMatrix concurrency_witness();

struct ConcurrencyReport {
    int samples = 0;
    bool binomial_vanishes_on_samples = false;
    bool witness_annihilates_F = false;
    Rational witness_value;
};

// Evaluates the concurrency binomial on sampled configurations of the
// three-concurrent-lines arrangement and on the stored witness.
ConcurrencyReport concurrency_binomial_experiment(int samples, std::uint64_t seed);

struct ConjectureReport {
    CheckVerdict direct_check;        // Buchberger criterion on G_L as given
    CheckStatus completion_status = CheckStatus::budget_exceeded;
    int completed_basis_size = 0;
    int samples = 0;
    bool samples_vanish_on_generators = false;
    bool samples_vanish_on_completed = false;
};

// Experimental evidence only: nothing here asserts that G_L generates the
// arrangement ideal.
ConjectureReport conjecture_experiment_GL(const LineArrangement& arr, int d,
                                          const Budget& budget, int samples,
                                          std::uint64_t seed);

} // namespace hgi
