#include "hgi/arrangement.hpp"
#include "hgi/incidence.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace hgi {

namespace {

using Vec = std::vector<long>;

Vec add(const Vec& a, const Vec& b) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec scale(long s, const Vec& a) {
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

bool is_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    long coordinate() {
        std::uniform_int_distribution<long> dist(-100, 100);
        return dist(engine_);
    }

    long nonzero_scalar() {
        std::uniform_int_distribution<long> dist(1, 200);
        long v = dist(engine_);
        return v <= 100 ? v : 100 - v;
    }

    Vec vector(int d) {
        while (true) {
            Vec v(d);
            for (auto& x : v) x = coordinate();
            if (!is_zero(v)) return v;
        }
    }

    Vec in_span(const Vec& u, const Vec& v) {
        while (true) {
            Vec w = add(scale(coordinate(), u), scale(coordinate(), v));
            if (!is_zero(w)) return w;
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace

RationalMatrix sample_configuration(const LineArrangement& arr, int d, uint64_t seed) {
    if (d < 3) throw SamplerError("sample_configuration: requires d >= 3");
    validate_arrangement(arr);

    BuildupCertificate cert = certify_irreducible_by_buildup(arr);
    if (!cert.certified || cert.via_complete_quadrilateral) {
        throw SamplerError("sample_configuration: arrangement has no line-removal build-up order");
    }

    // Lines are created in reverse removal order, so each new line meets the
    // lines built before it in at most two already-directed blocks.
    std::vector<int> build_order(cert.removal_order.rbegin(), cert.removal_order.rend());

    const int p = static_cast<int>(arr.points.size());
    std::vector<std::set<int>> line_blocks;
    for (const auto& line : arr.lines) line_blocks.push_back({line.begin(), line.end()});

    for (int attempt = 0; attempt < 32; ++attempt) {
        Rng rng(seed + static_cast<uint64_t>(attempt) * 0x9e3779b97f4a7c15ULL);

        std::vector<std::pair<Vec, Vec>> span(arr.lines.size());
        std::vector<Vec> direction(p);
        std::vector<bool> directed(p, false);
        std::vector<bool> line_built(arr.lines.size(), false);

        for (int li : build_order) {
            std::vector<int> fixed;
            for (int blk : arr.lines[li]) {
                if (directed[blk]) fixed.push_back(blk);
            }
            if (fixed.size() > 2) {
                throw SamplerError("sample_configuration: build order leaves three fixed blocks on one line");
            }
            Vec u, v;
            if (fixed.size() == 2) {
                u = direction[fixed[0]];
                v = direction[fixed[1]];
            } else if (fixed.size() == 1) {
                u = direction[fixed[0]];
                v = rng.vector(d);
            } else {
                u = rng.vector(d);
                v = rng.vector(d);
            }
            span[li] = {u, v};
            line_built[li] = true;
            for (int blk : arr.lines[li]) {
                if (!directed[blk]) {
                    direction[blk] = rng.in_span(u, v);
                    directed[blk] = true;
                }
            }
        }

        for (int blk = 0; blk < p; ++blk) {
            if (!directed[blk]) {
                direction[blk] = rng.vector(d);
                directed[blk] = true;
            }
        }

        RationalMatrix a(d, arr.n);
        for (int blk = 0; blk < p; ++blk) {
            for (int col : arr.points[blk]) {
                Vec w = scale(rng.nonzero_scalar(), direction[blk]);
                for (int r = 1; r <= d; ++r) a.at(r, col) = Rational(w[r - 1]);
            }
        }

        if (is_configuration(a, arr, d)) return a;
    }
    throw SamplerError("sample_configuration: no generic sample within the resample budget");
}

} // namespace hgi
