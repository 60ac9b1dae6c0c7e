// Exact arithmetic primitives shared by the whole library.
//
// Every quantity in this project is an arbitrary-precision integer (Int)
// or rational (Rat); there is no floating point anywhere.  This header
// also collects the handful of small numeric helpers (factorials,
// binomial coefficients, integer powers) that the combinatorial layers
// use constantly.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pcsym {

using Int = mpz_class;
using Rat = mpq_class;

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    Int r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

// Binomial coefficient C(n, k) for arbitrary integer n and k >= 0,
// via the falling-factorial product (valid for negative n as well).
inline Int binomial(const Int& n, long k) {
    if (k < 0) return 0;
    Int num = 1;
    for (long t = 0; t < k; ++t) num *= n - t;
    Int r = num / factorial(k);  // always exact
    return r;
}

inline Int ipow(const Int& base, long e) {
    Int r = 1;
    for (long t = 0; t < e; ++t) r *= base;
    return r;
}

// "num/den" with den = 1 elided; used by all pretty printers.
inline std::string rat_str(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Exact conversion to a machine integer for JSON output; the desk-scale
// computations in this project never overflow this, but we check anyway.
inline long long to_int64(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer too large for serialization: " + v.get_str());
    return static_cast<long long>(v.get_si());
}

}  // namespace pcsym
