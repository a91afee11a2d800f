#pragma once

#include <gmpxx.h>

#include <string>

namespace polyfree {

// All coefficients and matrix entries are arbitrary-precision integers.
using Int = mpz_class;

inline std::string int_to_string(const Int& v) { return v.get_str(); }

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

}  // namespace polyfree
