#include "hgi/buchberger.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <thread>

namespace hgi {

int default_thread_count() {
    if (const char* env = std::getenv("HGI_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void check_nonzero(const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw std::invalid_argument("buchberger: zero generator");
    }
}

} // namespace

CheckVerdict buchberger_check(const std::vector<Polynomial>& gens, const TermOrder& ord,
                              const Budget& budget, int threads) {
    check_nonzero(gens);
    CheckVerdict verdict;
    if (gens.size() < 2) return verdict;

    // Materialize the pair list up front so the budget decision is a pure
    // function of the input, independent of thread count.
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i + 1 < static_cast<int>(gens.size()); ++i) {
        for (int j = i + 1; j < static_cast<int>(gens.size()); ++j) {
            if (gens[i].leading_monomial().coprime_with(gens[j].leading_monomial())) {
                ++verdict.pairs_skipped_coprime;
            } else {
                pairs.emplace_back(i, j);
            }
        }
    }
    if (static_cast<long>(pairs.size()) > budget.max_pairs) {
        verdict.status = CheckStatus::budget_exceeded;
        return verdict;
    }

    if (threads <= 0) threads = default_thread_count();
    threads = std::min<long>(threads, std::max<long>(1, pairs.size()));

    if (threads == 1) {
        for (const auto& [i, j] : pairs) {
            ++verdict.pairs_reduced;
            if (!reduce(s_polynomial(gens[i], gens[j], ord), gens, ord).is_zero()) {
                verdict.status = CheckStatus::not_gb;
                verdict.failing_pair = {i, j};
                return verdict;
            }
        }
        return verdict;
    }

    // Parallel mode: every pair is reduced; failures are aggregated and the
    // smallest index pair is reported, so the outcome matches the sequential
    // scan.
    std::vector<char> failed(pairs.size(), 0);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= pairs.size()) break;
            auto [i, j] = pairs[t];
            if (!reduce(s_polynomial(gens[i], gens[j], ord), gens, ord).is_zero()) {
                failed[t] = 1;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    verdict.pairs_reduced = static_cast<long>(pairs.size());
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (failed[t]) {
            verdict.status = CheckStatus::not_gb;
            verdict.failing_pair = pairs[t];
            break;
        }
    }
    return verdict;
}

namespace {

struct QueuedPair {
    int lcm_degree;
    int i;
    int j;

    bool operator<(const QueuedPair& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

std::vector<Polynomial> auto_reduce(std::vector<Polynomial> basis, const TermOrder& ord) {
    // Drop elements whose leading monomial is divisible by another element's
    // leading monomial (keeping the earlier one on ties), then fully reduce
    // each survivor by the others.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (basis[j].leading_monomial().divides(basis[i].leading_monomial())) {
                if (basis[i].leading_monomial() == basis[j].leading_monomial()) {
                    redundant = j < i;
                } else {
                    redundant = true;
                }
                if (redundant) break;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        Polynomial r = reduce(minimal[i], others, ord);
        if (!r.is_zero()) reduced.push_back(r.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return reduced;
}

} // namespace

CompletionResult buchberger_complete(const std::vector<Polynomial>& gens, const TermOrder& ord,
                                     const Budget& budget) {
    check_nonzero(gens);
    CompletionResult result;

    std::vector<Polynomial> basis;
    basis.reserve(gens.size());
    for (const auto& g : gens) basis.push_back(g.monic());

    std::vector<QueuedPair> queue;
    auto push_pairs_for = [&](int jnew) {
        for (int i = 0; i < jnew; ++i) {
            const Monomial& a = basis[i].leading_monomial();
            const Monomial& b = basis[jnew].leading_monomial();
            if (a.coprime_with(b)) continue;
            queue.push_back({Monomial::lcm(a, b).degree(), i, jnew});
        }
        std::sort(queue.begin(), queue.end());
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_for(j);

    while (!queue.empty()) {
        QueuedPair qp = queue.front();
        queue.erase(queue.begin());
        if (result.pairs_reduced >= budget.max_pairs) {
            result.status = CheckStatus::budget_exceeded;
            return result;
        }
        ++result.pairs_reduced;
        Polynomial r = reduce(s_polynomial(basis[qp.i], basis[qp.j], ord), basis, ord);
        if (r.is_zero()) continue;
        if (r.degree() > budget.max_degree) {
            result.status = CheckStatus::budget_exceeded;
            return result;
        }
        basis.push_back(r.monic());
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    result.basis_size_before_reduction = static_cast<long>(basis.size());
    GroebnerBasis gb;
    gb.polys = auto_reduce(std::move(basis), ord);
    gb.verified = true;
    result.basis = std::move(gb);
    return result;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb, const TermOrder& ord) {
    return reduce(f, gb.polys, ord);
}

bool is_radical_by_squarefree_initials(const GroebnerBasis& gb) {
    for (const auto& g : gb.polys) {
        if (!g.leading_monomial().squarefree()) return false;
    }
    return true;
}

} // namespace hgi
