#pragma once

// Exact arithmetic kernel: arbitrary-precision integers and rationals
// (GMP-backed), half-integers, the factorial family, the extended shifted
// factorial, and the tent-exponent bracket product.
//
// Everything here is exact; no floating point. Rationals are kept in
// canonical form (positive denominator, coprime) at all times, so equality
// is structural.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hexatile {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonicalizing constructor for rationals (mpq_class alone does not
/// reduce num/den handed to it).
inline ExactRational make_ratio(ExactInt num, ExactInt den) {
    if (den == 0) throw domain_error("make_ratio: zero denominator");
    ExactRational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline ExactRational to_rational(const ExactInt& z) { return ExactRational(z); }

/// An element of Z union (Z + 1/2), stored as twice its value so the
/// factorial-family code never needs rational bases.
struct HalfInteger {
    ExactInt twice;

    HalfInteger() : twice(0) {}
    explicit HalfInteger(long whole) : twice(2 * whole) {}
    explicit HalfInteger(ExactInt whole) : twice(2 * std::move(whole)) {}

    static HalfInteger from_twice(ExactInt t) {
        HalfInteger h;
        h.twice = std::move(t);
        return h;
    }
    /// whole + 1/2
    static HalfInteger half_more(long whole) { return from_twice(2 * whole + 1); }

    bool is_integer() const { return mpz_even_p(twice.get_mpz_t()); }
    bool positive() const { return twice > 0; }

    HalfInteger plus(long k) const { return from_twice(twice + 2 * k); }
    ExactRational to_rational() const { return make_ratio(twice, 2); }

    std::string str() const {
        if (is_integer()) return ExactInt(twice / 2).get_str();
        return twice.get_str() + "/2";
    }

    friend bool operator==(const HalfInteger& a, const HalfInteger& b) {
        return a.twice == b.twice;
    }
};

inline ExactInt factorial(long n) {
    if (n < 0) throw domain_error("factorial: negative argument " + std::to_string(n));
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline ExactInt double_factorial(long n) {
    if (n < 1) throw domain_error("double_factorial: argument must be >= 1, got " + std::to_string(n));
    ExactInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline ExactInt binomial(long n, long k) {
    if (n < 0) throw domain_error("binomial: negative n " + std::to_string(n));
    if (k < 0 || k > n) return ExactInt(0);
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/// H(n) = prod_{i=0}^{n-1} i!  (empty product for n = 0)
inline ExactInt hyperfactorial(long n) {
    if (n < 0) throw domain_error("hyperfactorial: negative argument " + std::to_string(n));
    ExactInt r = 1;
    for (long i = 2; i < n; ++i) r *= factorial(i);
    return r;
}

/// Barnes G at integer arguments: 0 for n <= 0, prod_{i=0}^{n-2} i! for n >= 1.
inline ExactInt barnes_g(long n) {
    if (n <= 0) return ExactInt(0);
    return hyperfactorial(n - 1);
}

/// Extended shifted factorial (a)_n for a positive integer or half-integer a:
///   n > 0 : a(a+1)...(a+n-1)
///   n = 0 : 1
///   n < 0 : 1/((a-1)(a-2)...(a+n)), requiring a+n > 0.
inline ExactRational shifted_factorial(const HalfInteger& a, long n) {
    const ExactInt an_twice = a.twice + 2 * n;
    if (!(a.twice > 0) || !(an_twice > 0))
        throw domain_error("shifted_factorial: need a > 0 and a+n > 0, got (a=" + a.str() +
                           ", n=" + std::to_string(n) + ")");
    if (n == 0) return ExactRational(1);
    ExactInt num = 1, den = 1;
    if (n > 0) {
        for (long i = 0; i < n; ++i) num *= a.twice + 2 * i;  // 2(a+i)
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(n));
    } else {
        mpz_ui_pow_ui(num.get_mpz_t(), 2, static_cast<unsigned long>(-n));
        for (long j = 1; j <= -n; ++j) den *= a.twice - 2 * j;  // 2(a-j)
    }
    return make_ratio(num, den);
}

inline ExactRational shifted_factorial(long a, long n) {
    return shifted_factorial(HalfInteger(a), n);
}

/// Bracket product <a, a+n> = prod_{i=0}^{n} (a+i)^{min(i+1, n+1-i)}
/// for n >= 0, and 1 for negative n.
inline ExactRational bracket_product(const HalfInteger& a, long n) {
    if (!a.positive())
        throw domain_error("bracket_product: need a > 0, got a=" + a.str());
    if (n < 0) return ExactRational(1);
    ExactInt num = 1;
    long half_powers = 0;  // denominator is 2^(sum of exponents) when a is half-integral
    for (long i = 0; i <= n; ++i) {
        const long e = std::min(i + 1, n + 1 - i);
        ExactInt base = a.twice + 2 * i;  // 2(a+i)
        for (long t = 0; t < e; ++t) num *= base;
        half_powers += e;
    }
    ExactInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(half_powers));
    return make_ratio(num, den);
}

/// 2^e for any sign of e, as an exact rational.
inline ExactRational pow2(long e) {
    ExactInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? ExactRational(p) : make_ratio(1, p);
}

inline ExactRational rational_pow(const ExactRational& q, long e) {
    if (e == 0) return ExactRational(1);
    ExactInt num, den;
    const unsigned long m = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), m);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), m);
    if (e < 0) {
        if (num == 0) throw domain_error("rational_pow: zero to negative power");
        std::swap(num, den);
    }
    return make_ratio(num, den);
}

/// Checks the two shifted-factorial-to-factorial identities at (i, j):
///   (i)_j     = (i+j-1)!/(i-1)!
///   (i+1/2)_j = 2^{-2j} i!(2i+2j)! / ((i+j)!(2i)!)
inline bool shifted_to_factorial_identity_check(long i, long j) {
    if (i < 1 || i + j <= 0) return false;
    const ExactRational lhs1 = shifted_factorial(i, j);
    const ExactRational rhs1 = make_ratio(factorial(i + j - 1), factorial(i - 1));
    if (lhs1 != rhs1) return false;

    const ExactRational lhs2 = shifted_factorial(HalfInteger::half_more(i), j);
    ExactRational rhs2 = pow2(-2 * j) * to_rational(factorial(i) * factorial(2 * i + 2 * j));
    rhs2 /= to_rational(factorial(i + j) * factorial(2 * i));
    return lhs2 == rhs2;
}

}  // namespace hexatile
