#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sgc {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// project goes through this type; there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline Rat rat_pow(const Rat& base, unsigned exp) {
    Rat r(1);
    Rat b = base;
    unsigned e = exp;
    while (e) {
        if (e & 1u) r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

inline mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// 1 / (n0! n1! ... nk!)
template <typename Ints>
Rat inverse_factorial_product(const Ints& ns) {
    mpz_class den(1);
    for (auto n : ns) den *= factorial(static_cast<unsigned>(n));
    Rat r(mpz_class(1), den);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace sgc
