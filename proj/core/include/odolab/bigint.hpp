#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "odolab/error.hpp"

namespace odolab {

// All scale terms, residues and group orders are arbitrary precision: the
// interesting examples pass 2^64 within a dozen truncation levels, and the
// finite-subgroup orders grow like n!.
using Bigint = mpz_class;

inline Bigint big_gcd(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Bigint big_lcm(const Bigint& a, const Bigint& b) {
    Bigint r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Bigint big_pow(const Bigint& base, unsigned long exp) {
    Bigint r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Bigint big_factorial(unsigned long n) {
    Bigint r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// a mod m with a result in [0, m), whatever the sign of a.
inline Bigint mod_pos(const Bigint& a, const Bigint& m) {
    Bigint r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// Largest e with p^e | n, for n > 0 and p >= 2.
inline unsigned valuation(Bigint n, const Bigint& p) {
    if (n <= 0) throw Error("valuation: argument must be positive");
    if (p < 2) throw Error("valuation: divisor must be at least 2");
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
        n /= p;
        ++e;
    }
    return e;
}

// Prime factorization by trial division, adequate for the ratio-sized and
// level-sized integers this library manipulates. The budget keeps a
// pathological input (say, a 40-digit semiprime ratio) from hanging the
// process: we fail loudly instead.
inline std::map<Bigint, unsigned> factorize(Bigint n,
                                            unsigned long division_budget = 2'000'000) {
    if (n <= 0) throw Error("factorize: argument must be positive");
    std::map<Bigint, unsigned> out;
    unsigned long spent = 0;
    for (Bigint d = 2; d * d <= n; ++d) {
        if (++spent > division_budget)
            throw BudgetError("factorize: trial division budget exhausted for " +
                              n.get_str());
        while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
            ++out[d];
            n /= d;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

// Convenience for code that needs a machine-size index out of a Bigint and
// must not truncate silently.
inline std::uint64_t to_u64(const Bigint& n, const char* what) {
    if (n < 0 || !n.fits_ulong_p())
        throw BudgetError(std::string(what) + ": value " + n.get_str() +
                          " does not fit in a machine word");
    return static_cast<std::uint64_t>(n.get_ui());
}

} // namespace odolab
