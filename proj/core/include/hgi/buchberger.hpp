#pragma once

#include "hgi/division.hpp"
#include "hgi/polynomial.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hgi {

// Caps for Groebner computations. Completion respects both limits; the
// pairwise check ignores the degree cap but refuses to start when the number
// of pair reductions would exceed max_pairs. Hitting a cap is reported as
// budget_exceeded, which is distinct from a negative verdict.
struct Budget {
    int max_degree = 12;
    long max_pairs = 50000;
};

enum class CheckStatus { is_gb, not_gb, budget_exceeded };

struct CheckVerdict {
    CheckStatus status = CheckStatus::is_gb;
    // Smallest (i,j) in lexicographic index order whose S-polynomial does not
    // reduce to zero; present only for not_gb.
    std::optional<std::pair<int, int>> failing_pair;
    long pairs_reduced = 0;
    long pairs_skipped_coprime = 0;
};

struct GroebnerBasis {
    std::vector<Polynomial> polys; // auto-reduced, monic, sorted by leading monomial descending
    bool verified = false;
};

// Number of worker threads: the HGI_THREADS environment variable when set,
// otherwise the hardware concurrency (at least 1).
int default_thread_count();

// Buchberger's criterion on the generating set as given. Pairs with coprime
// leading monomials are skipped. Independent pair reductions may run on
// several threads; the verdict does not depend on the thread count.
CheckVerdict buchberger_check(const std::vector<Polynomial>& gens,
                              const TermOrder& ord = kLex,
                              const Budget& budget = Budget{},
                              int threads = 0);

struct CompletionResult {
    CheckStatus status = CheckStatus::is_gb; // is_gb on success
    std::optional<GroebnerBasis> basis;
    long pairs_reduced = 0;
    long basis_size_before_reduction = 0;
};

// Buchberger completion with the fixed pair strategy: smallest lcm degree
// first, ties broken by index order. The output is auto-reduced.
CompletionResult buchberger_complete(const std::vector<Polynomial>& gens,
                                     const TermOrder& ord = kLex,
                                     const Budget& budget = Budget{});

// Remainder of division by the basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb,
                       const TermOrder& ord = kLex);

// Sufficient radicality test: every leading monomial squarefree. False means
// inconclusive, not a disproof.
bool is_radical_by_squarefree_initials(const GroebnerBasis& gb);

} // namespace hgi
