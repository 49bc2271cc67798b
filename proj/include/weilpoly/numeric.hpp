// Integer and rational helpers on top of GMP.

#ifndef WEILPOLY_NUMERIC_HPP
#define WEILPOLY_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace weilpoly {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PrecisionExhausted : Error {
    using Error::Error;
};
struct DomainError : Error {
    using Error::Error;
};
struct NotSquarefree : Error {
    using Error::Error;
};
struct DeltaPositive : Error {
    using Error::Error;
};
struct PreconditionViolated : Error {
    using Error::Error;
};
struct NotWeil : Error {
    using Error::Error;
};
struct BudgetExceeded : Error {
    using Error::Error;
};

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

// floor(sqrt(n)), n >= 0
inline Int isqrt(const Int& n) {
    if (sign(n) < 0) throw DomainError("isqrt of negative integer");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (sign(n) < 0) return false;
    Int r = isqrt(n);
    if (r * r == n) {
        if (root) *root = r;
        return true;
    }
    return false;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// floor(x) for rational x
inline Int rat_floor(const Rat& x) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return r;
}

// Smallest prime factor if q = p^n for a prime p, otherwise nullopt.
inline std::optional<Int> prime_power_base(const Int& q) {
    if (q < 2) return std::nullopt;
    Int n = q;
    Int p = 0;
    if (mpz_even_p(n.get_mpz_t())) {
        p = 2;
    } else {
        for (Int d = 3; d * d <= n; d += 2) {
            if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
                p = d;
                break;
            }
        }
        if (p == 0) p = n;  // n itself prime
    }
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) n /= p;
    if (n != 1) return std::nullopt;
    return p;
}

inline bool is_prime_power(const Int& q) { return prime_power_base(q).has_value(); }

}  // namespace weilpoly

#endif
