#pragma once

// Closed-form counting formulas: the boxed-hexagon product formula, the
// intrusion ratios for even/odd left side, their per-step factors, the
// left-aligned fixed-lozenge formula they generalize, the weighted counts
// of the axis-cut auxiliary regions, and the exact ratio identities used
// by the induction argument. Everything is exact rational arithmetic.

#include <hexatile/exact.hpp>
#include <hexatile/region.hpp>

#include <string>
#include <vector>

namespace hexatile {

enum class Parity { Even, Odd };

struct TilingCount {
    ExactRational value;
    std::string source;  // "formula:<name>" or "oracle:<method>"
    RegionSpec region;
};

/// Number of lozenge tilings of the hexagon with sides a, b, c, a, b, c,
/// via the hyperfactorial form H(a)H(b)H(c)H(a+b+c)/(H(a+b)H(b+c)H(c+a)).
inline ExactInt macmahon_value(long a, long b, long c) {
    if (a < 0 || b < 0 || c < 0) throw domain_error("macmahon: sides must be nonnegative");
    ExactRational q = make_ratio(hyperfactorial(a) * hyperfactorial(b), hyperfactorial(a + b));
    q *= make_ratio(hyperfactorial(c) * hyperfactorial(a + b + c),
                    hyperfactorial(b + c) * hyperfactorial(c + a));
    if (q.get_den() != 1) throw std::logic_error("macmahon: non-integer result");
    return q.get_num();
}

/// The same count as the triple product over the box, prod (i+j+k-1)/(i+j+k-2).
inline ExactRational macmahon_triple_product(long a, long b, long c) {
    ExactRational q(1);
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k) q *= make_ratio(i + j + k - 1, i + j + k - 2);
    return q;
}

inline TilingCount macmahon(long a, long b, long c) {
    return {ExactRational(macmahon_value(a, b, c)),
            "formula:macmahon",
            {RegionFamily::Hexagon, {{"a", a}, {"b", b}, {"c", c}}}};
}

namespace detail {

inline HalfInteger whole(long v) { return HalfInteger(v); }
inline HalfInteger half(long whole_part) { return HalfInteger::half_more(whole_part); }

}  // namespace detail

/// Ratio of tiling counts after extending the intrusion from k to k+1
/// removed lozenges (even left side) or bowties (odd left side). Inputs
/// with b > c are normalized by the reflection swap first.
inline ExactRational step_ratio(Parity parity, long a, long b, long c, long k) {
    if (b > c) std::swap(b, c);
    if (a < 0 || k < 0 || k >= std::min(b, c))
        throw domain_error("step_ratio: need a >= 0 and 0 <= k < min(b,c)");
    using detail::half;
    using detail::whole;
    const long f = (c - b) / 2;
    ExactRational r(1);
    if (parity == Parity::Even) {
        r *= shifted_factorial(half(k), b - 2 * k);
        r /= shifted_factorial(half(a + k), b - 2 * k);
        if (b - 2 * k - 1 != 0) {
            r *= shifted_factorial(whole(a + k + 1), b - 2 * k - 1);
            r /= shifted_factorial(whole(k + 1), b - 2 * k - 1);
        }
        r *= shifted_factorial(half(b - k), f);
        r /= shifted_factorial(half(a + b - k), f);
        if (f != 0) {
            r *= shifted_factorial(whole(c - k), -f);
            r /= shifted_factorial(whole(a + c - k), -f);
        }
    } else {
        r = make_ratio(1, 4);
        r *= shifted_factorial(whole(a + k + 1), c - 2 * k);
        r *= shifted_factorial(half(k + 1), c - 2 * k - 2);
        r /= shifted_factorial(whole(k + 1), c - 2 * k - 1);
        r /= shifted_factorial(half(a + k + 1), c - 2 * k - 1);
        r *= shifted_factorial(whole(b - k), f);
        r /= shifted_factorial(whole(a + b - k + 1), f);
        if (f != 0) {
            r *= shifted_factorial(half(c - k - 1), -f);
            r /= shifted_factorial(half(a + c - k), -f);
        }
    }
    return r;
}

/// Exact ratio M(intruded)/M(hexagon) for intrusion depth d: the product
/// formula with shifted factorials, evaluated factor by factor. The Odd
/// variant carries the global 1/4^d. b > c is normalized by reflection.
inline ExactRational intrusion_ratio(Parity parity, long a, long b, long c, long d) {
    if (b > c) std::swap(b, c);
    if (a < 0 || d < 0) throw domain_error("intrusion_ratio: need a, d >= 0");
    if (d > b)
        throw domain_error("intrusion_ratio: need d <= min(b,c), got d=" + std::to_string(d) +
                           " min=" + std::to_string(b));
    using detail::half;
    using detail::whole;
    const long f = (c - b) / 2;
    ExactRational r(1);
    for (long k = 0; k < d; ++k) {
        if (parity == Parity::Even) {
            ExactRational num = shifted_factorial(half(k), b - 2 * k);
            ExactRational den = shifted_factorial(half(a + k), b - 2 * k);
            if (b - 2 * k - 1 != 0) {
                num *= shifted_factorial(whole(a + k + 1), b - 2 * k - 1);
                den *= shifted_factorial(whole(k + 1), b - 2 * k - 1);
            }
            num *= shifted_factorial(half(b - k), f);
            den *= shifted_factorial(half(a + b - k), f);
            if (f != 0) {
                num *= shifted_factorial(whole(c - k), -f);
                den *= shifted_factorial(whole(a + c - k), -f);
            }
            r *= num / den;
        } else {
            ExactRational num = shifted_factorial(whole(a + k + 1), c - 2 * k);
            num *= shifted_factorial(half(k + 1), c - 2 * k - 2);
            ExactRational den = shifted_factorial(whole(k + 1), c - 2 * k - 1);
            den *= shifted_factorial(half(a + k + 1), c - 2 * k - 1);
            num *= shifted_factorial(whole(b - k), f);
            den *= shifted_factorial(whole(a + b - k + 1), f);
            if (f != 0) {
                num *= shifted_factorial(half(c - k - 1), -f);
                den *= shifted_factorial(half(a + c - k), -f);
            }
            r *= num / den;
        }
    }
    if (parity == Parity::Odd) r *= rational_pow(make_ratio(1, 4), d);
    return r;
}

/// The plane-partition form of the even ratio: the fraction of boxed plane
/// partitions of P(b, c, 2a) whose first d anti-diagonal entries are pinned.
inline ExactRational pp_restricted_ratio(long b, long c, long a, long d) {
    if (!(d <= b && b <= c)) throw domain_error("pp_restricted_ratio: need d <= b <= c");
    return intrusion_ratio(Parity::Even, a, b, c, d);
}

/// Exact count of tilings of the intruded hexagon with left side m.
inline TilingCount intrusion_count(long m, long b, long c, long d) {
    if (m < 0 || b < 0 || c < 0 || d < 0)
        throw domain_error("intrusion_count: parameters must be nonnegative");
    if (d > std::min(b, c))
        throw domain_error("intrusion_count: need d <= min(b,c), got d=" + std::to_string(d));
    const Parity parity = (m % 2 == 0) ? Parity::Even : Parity::Odd;
    ExactRational v = intrusion_ratio(parity, m / 2, std::min(b, c), std::max(b, c), d);
    v *= to_rational(macmahon_value(m, b, c));
    if (v.get_den() != 1 || v < 0)
        throw std::logic_error("intrusion_count: formula produced a non-integer");
    return {v,
            "formula:intrusion",
            {RegionFamily::Intruded, {{"left", m}, {"b", b}, {"c", c}, {"d", d}}}};
}

/// The conjectured left-aligned fixed-lozenge formula for the hexagon with
/// sides 2m, N, N and r pinned lozenges, evaluated exactly. Must agree
/// with intrusion_count(2m, N, N, r).
inline TilingCount fk_count(long m, long N, long r) {
    if (m < 0 || r < 1 || r > N) throw domain_error("fk_count: need m >= 0 and 1 <= r <= N");
    ExactRational v = pow2((r - 1) * (r - 2 * N) / 2);
    ExactRational binoms = make_ratio(binomial(m + N - 1, m) * binomial(m + N - 1, m),
                                      binomial(2 * m + 2 * N - 1, 2 * m));
    v *= binoms;
    for (long i = N - r; i <= N - 2; ++i) v /= to_rational(factorial(i));
    for (long i = 1; i <= r - 1; ++i) {
        ExactRational t = to_rational(double_factorial(2 * i) * double_factorial(2 * N - 2 * i - 1));
        t /= to_rational(double_factorial(2 * i - 1));
        if (N - 2 * i - 1 != 0) t *= shifted_factorial(detail::whole(m + i + 1), N - 2 * i - 1);
        t /= shifted_factorial(detail::half(m + i), N - 2 * i);
        v *= t;
    }
    v *= to_rational(macmahon_value(2 * m, N, N));
    if (v.get_den() != 1 || v < 0)
        throw std::logic_error("fk_count: formula produced a non-integer");
    return {v,
            "formula:fixed-lozenge",
            {RegionFamily::Intruded, {{"left", 2 * m}, {"b", N}, {"c", N}, {"d", r}}}};
}

namespace detail {

inline ExactRational vandermonde_over_grid(long m, long n) {
    ExactRational r(1);
    for (long i = 1; i <= m; ++i)
        for (long j = i + 1; j <= m; ++j) r *= ExactRational(j - i);
    for (long i = 1; i <= n; ++i)
        for (long j = i + 1; j <= n; ++j) r *= ExactRational(j - i);
    for (long i = 1; i <= m; ++i)
        for (long j = 1; j <= n; ++j) r /= ExactRational(i + j);
    return r;
}

}  // namespace detail

/// Weighted tiling count of the toothed region of build_R, by the product
/// formula. Valid for m, n, x >= 0 and also for (m = 0, x = -1).
inline TilingCount ciucu_R(long m, long n, long x) {
    if (!(m >= 0 && n >= 0 && (x >= 0 || (m == 0 && x >= -1))))
        throw domain_error("ciucu_R: need m,n >= 0 and x >= 0 (x >= -1 when m = 0)");
    using detail::half;
    using detail::whole;
    ExactRational v = pow2(n * (n - 1) / 2 - 2 * m * n);
    for (long i = 1; i <= m; ++i) v /= to_rational(factorial(2 * i));
    for (long i = 1; i <= n; ++i) v /= to_rational(factorial(2 * i - 1));
    v *= detail::vandermonde_over_grid(m, n);
    if (m != 0) {
        v *= shifted_factorial(whole(x + n + 1), m);
        v *= shifted_factorial(whole(x + n + 2), m);
    }
    v *= bracket_product(whole(x + 2), n - 2);
    v *= bracket_product(half(x + 1), n - 1);  // base x + 3/2
    if (m != 0)
        for (long i = 1; i <= n; ++i) {
            v *= shifted_factorial(whole(x + i), m);
            v /= shifted_factorial(half(x + i), m);
        }
    for (long i = 1; i <= m; ++i)
        if (n + i - 1 != 0) v *= shifted_factorial(whole(2 * x + n + i + 2), n + i - 1);
    return {v, "formula:axis-region", {RegionFamily::R, {{"m", m}, {"n", n}, {"x", x}}}};
}

/// Weighted tiling count of the region of build_Rbar, by the product formula.
inline TilingCount ciucu_Rbar(long m, long n, long x) {
    if (m < 0 || n < 0 || x < 0) throw domain_error("ciucu_Rbar: parameters must be nonnegative");
    using detail::half;
    using detail::whole;
    ExactRational v = pow2(m * (m - 1) / 2 - 2 * m * n - n);
    for (long i = 1; i <= m; ++i) v /= to_rational(factorial(2 * i - 1));
    for (long i = 1; i <= n; ++i) v /= to_rational(factorial(2 * i));
    v *= detail::vandermonde_over_grid(m, n);
    if (n != 0) v *= shifted_factorial(whole(x + m + 1), n);
    v *= bracket_product(whole(x + 1), m - 1);
    v *= bracket_product(half(x + 1), m - 2);  // base x + 3/2
    if (n != 0)
        for (long i = 1; i <= m; ++i) {
            v *= shifted_factorial(whole(x + i), n);
            v /= shifted_factorial(half(x + i), n);
        }
    for (long i = 1; i <= n; ++i) v *= shifted_factorial(whole(2 * x + m + i + 1), m + i);
    return {v, "formula:axis-region-bar", {RegionFamily::Rbar, {{"m", m}, {"n", n}, {"x", x}}}};
}

// ---------------------------------------------------------------------------
// Exact ratio identities behind the double induction. Each identity
// compares a ratio of formula counts with its closed form; the two
// sum-to-one identities combine them.

struct IdentityReport {
    struct Item {
        std::string name;
        bool ok;
    };
    std::vector<Item> items;
    bool all_ok() const {
        for (const Item& i : items)
            if (!i.ok) return false;
        return true;
    }
};

namespace detail {

inline ExactRational count_ratio(long m1, long b1, long c1, long d1, long m2, long b2, long c2,
                                 long d2) {
    return intrusion_count(m1, b1, c1, d1).value / intrusion_count(m2, b2, c2, d2).value;
}

}  // namespace detail

/// Verifies the eight step-down ratio identities and the two sum-to-one
/// combinations at (a, b, c, t). Requires 1 <= t <= b < c.
inline IdentityReport induction_identity_checks(long a, long b, long c, long t) {
    if (!(a >= 0 && 1 <= t && t <= b && b < c))
        throw domain_error("induction_identity_checks: need 1 <= t <= b < c");
    using detail::count_ratio;
    IdentityReport rep;
    auto item = [&rep](const std::string& name, const ExactRational& lhs,
                       const ExactRational& rhs) {
        rep.items.push_back({name, lhs == rhs});
        return lhs;
    };

    // grow-b ratio at even left side
    ExactRational rhs = make_ratio(factorial(b) * factorial(2 * a + b + c - 1),
                                   factorial(2 * a + b) * factorial(b + c - 1));
    for (long k = 0; k < t; ++k)
        rhs *= make_ratio((a + b - k) * (b + c - 2 * k - 1),
                          (b - k) * (2 * a + b + c - 2 * k - 1));
    const ExactRational r1 =
        item("even-grow-b", count_ratio(2 * a, b + 1, c - 1, t, 2 * a, b, c - 1, t), rhs);

    // shrink-b ratio at odd left side
    rhs = make_ratio(factorial(2 * a + b) * factorial(b + c - 2),
                     factorial(2 * a + b + c - 1) * factorial(b - 1));
    for (long k = 0; k + 1 < t; ++k)
        rhs *= make_ratio((b - k - 1) * (2 * a + b + c - 2 * k - 1),
                          (a + b - k) * (b + c - 2 * k - 3));
    const ExactRational r2 =
        item("odd-shrink-b", count_ratio(2 * a + 1, b - 1, c - 1, t - 1, 2 * a + 1, b, c - 1, t - 1), rhs);

    // grow-c ratio at even left side
    rhs = make_ratio(factorial(c - 1) * factorial(2 * a + b + c - 1),
                     factorial(2 * a + c - 1) * factorial(b + c - 1));
    for (long k = 0; k < t; ++k)
        rhs *= make_ratio((a + c - k - 1) * (b + c - 2 * k - 1),
                          (c - k - 1) * (2 * a + b + c - 2 * k - 1));
    const ExactRational r3 =
        item("even-grow-c", count_ratio(2 * a, b, c, t, 2 * a, b, c - 1, t), rhs);

    // shrink-c ratio at odd left side
    rhs = make_ratio(factorial(2 * a + c - 1) * factorial(b + c - 2),
                     factorial(2 * a + b + c - 1) * factorial(c - 2));
    for (long k = 0; k + 1 < t; ++k)
        rhs *= make_ratio((c - k - 2) * (2 * a + b + c - 2 * k - 1),
                          (a + c - k - 1) * (b + c - 2 * k - 3));
    const ExactRational r4 =
        item("odd-shrink-c", count_ratio(2 * a + 1, b, c - 2, t - 1, 2 * a + 1, b, c - 1, t - 1), rhs);

    rep.items.push_back({"even-sum-to-one", r1 * r2 + r3 * r4 == 1});

    // the four companion identities feeding the second sum
    rhs = make_ratio(factorial(b + 1) * factorial(2 * a + b + c + 1),
                     factorial(b + c + 1) * factorial(2 * a + b + 1));
    for (long k = 0; k < t; ++k)
        rhs *= make_ratio((a + b - k + 1) * (b + c - 2 * k + 1),
                          (b - k + 1) * (2 * a + b + c - 2 * k + 1));
    const ExactRational r5 =
        item("even-grow-b2", count_ratio(2 * a, b + 2, c, t, 2 * a, b + 1, c, t), rhs);

    rhs = make_ratio(factorial(b + c) * factorial(2 * a + b + 1),
                     factorial(b) * factorial(2 * a + b + c + 1));
    for (long k = 0; k < t; ++k)
        rhs *= make_ratio((b - k) * (2 * a + b + c - 2 * k + 1),
                          (a + b - k + 1) * (b + c - 2 * k - 1));
    const ExactRational r6 =
        item("odd-shrink-b2", count_ratio(2 * a + 1, b, c, t, 2 * a + 1, b + 1, c, t), rhs);

    rhs = make_ratio(factorial(c) * factorial(2 * a + b + c + 1),
                     factorial(b + c + 1) * factorial(2 * a + c));
    for (long k = 0; k < t; ++k)
        rhs *= make_ratio((a + c - k) * (b + c - 2 * k + 1),
                          (c - k) * (2 * a + b + c - 2 * k + 1));
    const ExactRational r7 =
        item("even-grow-c2", count_ratio(2 * a, b + 1, c + 1, t, 2 * a, b + 1, c, t), rhs);

    rhs = make_ratio(factorial(b + c) * factorial(2 * a + c),
                     factorial(c - 1) * factorial(2 * a + b + c + 1));
    for (long k = 0; k < t; ++k)
        rhs *= make_ratio((c - k - 1) * (2 * a + b + c - 2 * k + 1),
                          (a + c - k) * (b + c - 2 * k - 1));
    const ExactRational r8 =
        item("odd-shrink-c2", count_ratio(2 * a + 1, b + 1, c - 1, t, 2 * a + 1, b + 1, c, t), rhs);

    rep.items.push_back({"odd-sum-to-one", r5 * r6 + r7 * r8 == 1});
    return rep;
}

}  // namespace hexatile
