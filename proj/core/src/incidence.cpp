#include "hgi/incidence.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hgi {

namespace {

bool family_valid(const std::vector<std::set<int>>& crossings) {
    for (size_t i = 0; i < crossings.size(); ++i) {
        for (size_t j = i + 1; j < crossings.size(); ++j) {
            std::vector<int> shared;
            std::set_intersection(crossings[i].begin(), crossings[i].end(), crossings[j].begin(),
                                  crossings[j].end(), std::back_inserter(shared));
            if (shared.size() > 1) return false;
        }
    }
    return true;
}

std::set<std::set<int>> apply_permutation(const std::set<std::set<int>>& crossings,
                                          const std::vector<int>& perm) {
    std::set<std::set<int>> out;
    for (const auto& c : crossings) {
        std::set<int> image;
        for (int line : c) image.insert(perm[line - 1]);
        out.insert(image);
    }
    return out;
}

std::set<std::set<int>> canonical_crossings(const std::set<std::set<int>>& crossings, int m) {
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::set<int>> best = apply_permutation(crossings, perm);
    while (std::next_permutation(perm.begin(), perm.end())) {
        std::set<std::set<int>> image = apply_permutation(crossings, perm);
        if (image < best) best = image;
    }
    return best;
}

} // namespace

std::vector<IncidenceType> enumerate_incidence_types(int line_count) {
    if (line_count < 1 || line_count > 4) {
        throw std::invalid_argument("enumerate_incidence_types: supported range is 1 to 4 lines");
    }

    std::vector<std::set<int>> candidates;
    for (int mask = 0; mask < (1 << line_count); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::set<int> c;
        for (int i = 0; i < line_count; ++i) {
            if (mask >> i & 1) c.insert(i + 1);
        }
        candidates.push_back(c);
    }

    std::set<std::set<std::set<int>>> canonical_forms;
    const int fam_count = 1 << candidates.size();
    for (int fam = 0; fam < fam_count; ++fam) {
        std::vector<std::set<int>> family;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (fam >> i & 1) family.push_back(candidates[i]);
        }
        if (!family_valid(family)) continue;
        canonical_forms.insert(canonical_crossings({family.begin(), family.end()}, line_count));
    }

    std::vector<IncidenceType> out;
    for (const auto& form : canonical_forms) {
        IncidenceType t;
        t.line_count = line_count;
        t.crossings = form;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

IncidenceType incidence_type_of(const LineArrangement& arr) {
    validate_arrangement(arr);
    IncidenceType t;
    t.line_count = static_cast<int>(arr.lines.size());
    std::vector<std::vector<int>> lines_of_block(arr.points.size());
    for (size_t li = 0; li < arr.lines.size(); ++li) {
        for (int blk : arr.lines[li]) lines_of_block[blk].push_back(static_cast<int>(li) + 1);
    }
    for (const auto& through : lines_of_block) {
        if (through.size() >= 2) t.crossings.insert({through.begin(), through.end()});
    }
    return t;
}

namespace {

BuildupCertificate certify_crossings(int line_count, const std::set<std::set<int>>& crossings) {
    BuildupCertificate cert;

    std::vector<std::set<int>> cross(crossings.begin(), crossings.end());
    std::vector<int> order;
    std::vector<int> counts;
    std::vector<bool> removed(line_count, false);

    std::function<bool(int)> search = [&](int remaining) {
        if (remaining == 0) return true;
        for (int line = 1; line <= line_count; ++line) {
            if (removed[line - 1]) continue;
            int incidences = 0;
            for (const auto& c : cross) {
                if (!c.count(line)) continue;
                int live = 0;
                for (int other : c) {
                    if (!removed[other - 1]) ++live;
                }
                if (live >= 2) ++incidences;
            }
            if (incidences > 2) continue;
            removed[line - 1] = true;
            order.push_back(line);
            counts.push_back(incidences);
            if (search(remaining - 1)) return true;
            removed[line - 1] = false;
            order.pop_back();
            counts.pop_back();
        }
        return false;
    };

    if (search(line_count)) {
        cert.certified = true;
        cert.removal_order = order;
        cert.incidence_counts = counts;
        return cert;
    }

    // Four lines crossing pairwise at six distinct points: certified by the
    // dedicated argument rather than a removal order.
    if (line_count == 4 && crossings.size() == 6) {
        bool all_pairs = std::all_of(crossings.begin(), crossings.end(),
                                     [](const std::set<int>& c) { return c.size() == 2; });
        if (all_pairs) {
            cert.certified = true;
            cert.via_complete_quadrilateral = true;
        }
    }
    return cert;
}

} // namespace

BuildupCertificate certify_irreducible_by_buildup(const IncidenceType& type) {
    return certify_crossings(type.line_count, type.crossings);
}

BuildupCertificate certify_irreducible_by_buildup(const LineArrangement& arr) {
    IncidenceType t = incidence_type_of(arr);
    BuildupCertificate cert = certify_crossings(t.line_count, t.crossings);
    for (auto& line : cert.removal_order) line -= 1;
    return cert;
}

} // namespace hgi
