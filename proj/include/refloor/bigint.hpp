#pragma once

#include <gmpxx.h>

#include <string>

namespace refloor {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient with the conventions used throughout:
/// C(n, r) = 0 for r < 0, and for r >= 0 the falling-factorial formula
/// n(n-1)...(n-r+1)/r!, which is also valid for negative n.
inline BigInt binomial(const BigInt& n, long r) {
    if (r < 0) return 0;
    if (n >= 0) {
        if (n < r) return 0;
        BigInt out;
        mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(r));
        return out;
    }
    // Upper negation: C(n, r) = (-1)^r C(r - n - 1, r).
    BigInt flipped = binomial(BigInt(r) - n - 1, r);
    return (r % 2 == 0) ? flipped : BigInt(-flipped);
}

inline BigInt binomial(long n, long r) { return binomial(BigInt(n), r); }

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str(10);
    return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

} // namespace refloor
