#pragma once

#include <gmpxx.h>
#include <string>

namespace hgi {

// Exact rational scalar used everywhere. No floating point in the library.
using Rational = mpq_class;

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational q(s);
    q.canonicalize();
    return q;
}

} // namespace hgi
