#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace trgr {

// All arithmetic in the library is exact: arbitrary-precision integers and
// rationals. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

/// Canonical string form "p/q" (the "/q" is omitted when q = 1).
inline std::string rat_str(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    return c.get_str();
}

inline Rat rat_parse(const std::string& s) {
    Rat x;
    if (mpq_set_str(x.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational literal '" + s + "'");
    x.canonicalize();
    return x;
}

}  // namespace trgr
