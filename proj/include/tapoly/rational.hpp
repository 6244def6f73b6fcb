#pragma once

#include <gmpxx.h>

#include <string>

namespace tapoly {

// Exact arbitrary-precision integers and rationals. mpq_class keeps values
// in lowest terms with a positive denominator, which is exactly the
// canonical form required of coefficients everywhere in this library.
using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace tapoly
