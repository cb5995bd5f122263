#pragma once

#include <stdexcept>
#include <vector>

namespace hgi {

// The k x l index matrix filled column by column: entry(i,j) = (j-1)*k + i.
// Row i collects every j-th column's i-th entry; rows and columns partition
// [k*l] two ways.
struct GridShape {
    int k = 0;
    int l = 0;

    GridShape(int k_, int l_) : k(k_), l(l_) {
        if (k < 1 || l < 1) throw std::invalid_argument("GridShape: k and l must be positive");
    }

    int n() const { return k * l; }

    int entry(int i, int j) const {
        if (i < 1 || i > k || j < 1 || j > l) throw std::out_of_range("GridShape::entry");
        return (j - 1) * k + i;
    }

    int row_of(int v) const {
        check_vertex(v);
        return (v - 1) % k + 1;
    }

    int col_of(int v) const {
        check_vertex(v);
        return (v - 1) / k + 1;
    }

    std::vector<int> row(int i) const {
        std::vector<int> r;
        r.reserve(l);
        for (int j = 1; j <= l; ++j) r.push_back(entry(i, j));
        return r;
    }

    std::vector<int> column(int j) const {
        std::vector<int> c;
        c.reserve(k);
        for (int i = 1; i <= k; ++i) c.push_back(entry(i, j));
        return c;
    }

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n()) throw std::out_of_range("GridShape: vertex out of range");
    }
};

} // namespace hgi
