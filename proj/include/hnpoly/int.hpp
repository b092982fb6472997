#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hnpoly {

// Exact arbitrary-precision integer. All rank/degree/area arithmetic in this
// library runs on Int; cross products and gcds never overflow.
using Int = mpz_class;

inline Int int_from(long v) { return Int(v); }

/// Non-negative gcd with gcd(x, 0) = |x| and gcd(0, 0) = 0.
inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool fits_long(const Int& v) { return v.fits_slong_p(); }

/// Narrow to long, throwing instead of truncating.
inline long to_long_checked(const Int& v, const char* what = "integer") {
    if (!v.fits_slong_p())
        throw std::overflow_error(std::string(what) + " out of machine range: " + v.get_str());
    return v.get_si();
}

/// Parse a base-10 integer (optional leading '-'). Throws std::invalid_argument.
inline Int int_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    Int r;
    if (mpz_set_str(r.get_mpz_t(), std::string(s).c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: '" + std::string(s) + "'");
    return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace hnpoly
