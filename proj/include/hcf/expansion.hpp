#pragma once

/**
 * @file expansion.hpp
 * @brief Hurwitz digit extraction, Q-pair recurrences, convergents and the
 *        approximation identities and inequalities built on them.
 */

#include "hcf/error.hpp"
#include "hcf/gaussian.hpp"
#include "hcf/interval.hpp"
#include "hcf/surd.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace hcf {

using Digits = std::vector<GaussianInt>;

/// A remainder z_n: exact when the source is exact, an enclosure otherwise.
using Remainder = std::variant<Surd, ComplexInterval>;

/// Produces an enclosure of a complex number at the requested working precision.
using IntervalSource = std::function<ComplexInterval(long bits)>;

enum class ExpansionStatus {
    complete,             ///< max_digits reached
    terminated,           ///< a remainder hit zero (value in Q(i))
    precision_exhausted,  ///< an enclosure straddled a rounding-cell boundary
};

inline const char* to_string(ExpansionStatus s) {
    switch (s) {
        case ExpansionStatus::complete: return "complete";
        case ExpansionStatus::terminated: return "terminated";
        default: return "precision_exhausted";
    }
}

struct QPair {
    std::vector<GaussianInt> p;  ///< p_0, p_1, ...
    std::vector<GaussianInt> q;  ///< q_0, q_1, ...
};

/// p_n = a_n p_{n-1} + p_{n-2}, q_n = a_n q_{n-1} + q_{n-2} from (0, 1), (1, 0).
inline QPair q_pair(const Digits& digits) {
    if (digits.empty()) throw std::invalid_argument("q_pair needs at least one digit");
    QPair r;
    r.p.reserve(digits.size());
    r.q.reserve(digits.size());
    GaussianInt p2(0), p1(1), q2(1), q1(0);
    for (const GaussianInt& a : digits) {
        GaussianInt p = a * p1 + p2;
        GaussianInt q = a * q1 + q2;
        p2 = std::exchange(p1, p);
        q2 = std::exchange(q1, q);
        r.p.push_back(std::move(p));
        r.q.push_back(std::move(q));
    }
    return r;
}

/// Value of the finite continued fraction <a_0; a_1, ..., a_k>.
inline RatGauss fold(const Digits& digits) {
    if (digits.empty()) throw std::invalid_argument("fold needs at least one digit");
    RatGauss v(digits.back());
    for (std::size_t k = digits.size() - 1; k-- > 0;) {
        if (v.is_zero()) throw std::domain_error("continued fraction hits a zero tail");
        v = RatGauss(digits[k]) + v.inverse();
    }
    return v;
}

/// p_n / q_n.
inline RatGauss convergent(const Digits& digits, std::size_t n) {
    if (n >= digits.size()) throw std::out_of_range("convergent index out of range");
    const QPair pq = q_pair(Digits(digits.begin(), digits.begin() + static_cast<long>(n) + 1));
    if (pq.q[n].is_zero()) throw std::domain_error("convergent with q_n = 0");
    return RatGauss(pq.p[n]) / RatGauss(pq.q[n]);
}

/// The continuant K(w_1, ..., w_k), i.e. q_k of [0; w_1, ..., w_k]; K() = 1.
inline GaussianInt continuant(const Digits& word) {
    GaussianInt prev(0), cur(1);  // q_{-1} = 0, q_0 = 1 for the leading 0
    for (const GaussianInt& a : word) {
        GaussianInt next = a * cur + prev;
        prev = std::exchange(cur, std::move(next));
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Expansion
// ---------------------------------------------------------------------------

struct Expansion {
    Digits digits;
    std::vector<GaussianInt> p;
    std::vector<GaussianInt> q;
    /// z_0, z_1, ...; one beyond the last digit unless the expansion terminated.
    std::vector<Remainder> remainders;
    bool terminated = false;
    bool certified = true;
    ExpansionStatus status = ExpansionStatus::complete;
    std::optional<Surd> source;

    std::size_t size() const { return digits.size(); }

    /// p_n for n >= -2.
    GaussianInt p_at(long n) const {
        if (n == -2) return GaussianInt(0);
        if (n == -1) return GaussianInt(1);
        return p.at(static_cast<std::size_t>(n));
    }
    GaussianInt q_at(long n) const {
        if (n == -2) return GaussianInt(1);
        if (n == -1) return GaussianInt(0);
        return q.at(static_cast<std::size_t>(n));
    }

    bool has_exact_remainder(std::size_t n) const {
        return n < remainders.size() && std::holds_alternative<Surd>(remainders[n]);
    }
    const Surd& exact_remainder(std::size_t n) const { return std::get<Surd>(remainders.at(n)); }

    ComplexInterval remainder_enclosure(std::size_t n, long bits) const {
        const Remainder& r = remainders.at(n);
        if (const Surd* s = std::get_if<Surd>(&r)) return refine(*s, bits);
        return std::get<ComplexInterval>(r);
    }
};

inline void fill_q_pair(Expansion& e) {
    if (e.digits.empty()) return;
    QPair pq = q_pair(e.digits);
    e.p = std::move(pq.p);
    e.q = std::move(pq.q);
}

/// Expansion carrying only digits and the Q-pair.
inline Expansion from_digits(const Digits& digits) {
    Expansion e;
    e.digits = digits;
    fill_q_pair(e);
    return e;
}

/// Exact Hurwitz expansion of a quadratic (or Q(i)) number.
inline Expansion expand(const Surd& x, std::size_t max_digits) {
    if (max_digits == 0) throw std::invalid_argument("max_digits must be positive");
    Expansion e;
    e.source = x;
    Surd z = x;
    e.remainders.emplace_back(z);
    while (e.digits.size() < max_digits) {
        GaussianInt a = nearest_gauss(z);
        e.digits.push_back(a);
        Surd frac = z - Surd(a);
        if (frac.is_zero()) {
            e.terminated = true;
            e.status = ExpansionStatus::terminated;
            break;
        }
        z = frac.inverse();
        e.remainders.emplace_back(z);
    }
    fill_q_pair(e);
    return e;
}

inline Expansion expand(const RatGauss& x, std::size_t max_digits) { return expand(Surd(x), max_digits); }

/**
 * Expansion from an enclosure source. A digit is emitted only when the
 * enclosure of z_n lies inside a single rounding cell; otherwise the
 * expansion stops with status precision_exhausted.
 */
inline Expansion expand(const IntervalSource& source, std::size_t max_digits, long bits) {
    if (max_digits == 0) throw std::invalid_argument("max_digits must be positive");
    Expansion e;
    ComplexInterval z = source(bits);
    e.remainders.emplace_back(z);
    while (e.digits.size() < max_digits) {
        const Integer re_lo = floor_rational(z.re().lo() + kHalf);
        const Integer re_hi = floor_rational(z.re().hi() + kHalf);
        const Integer im_lo = floor_rational(z.im().lo() + kHalf);
        const Integer im_hi = floor_rational(z.im().hi() + kHalf);
        if (re_lo != re_hi || im_lo != im_hi) {
            e.status = ExpansionStatus::precision_exhausted;
            break;
        }
        GaussianInt a(re_lo, im_lo);
        const ComplexInterval frac = z - ComplexInterval(RatGauss(a));
        if (frac.contains_zero()) {
            if (frac.re().is_point() && frac.im().is_point()) {
                e.digits.push_back(a);
                e.terminated = true;
                e.status = ExpansionStatus::terminated;
            } else {
                e.status = ExpansionStatus::precision_exhausted;
            }
            break;
        }
        e.digits.push_back(a);
        z = (ComplexInterval(RatGauss(1)) / frac).rounded(bits);
        e.remainders.emplace_back(z);
    }
    fill_q_pair(e);
    return e;
}

// ---------------------------------------------------------------------------
// Identity and growth checks
// ---------------------------------------------------------------------------

struct Check {
    std::string name;
    long index = 0;
    bool pass = false;
};

struct CheckReport {
    std::vector<Check> checks;

    bool passed() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t count(const std::string& name) const {
        std::size_t k = 0;
        for (const Check& c : checks) k += c.name == name;
        return k;
    }
    std::size_t failures() const {
        std::size_t k = 0;
        for (const Check& c : checks) k += !c.pass;
        return k;
    }
};

/// Determinant, mirror and (for exact remainders) reconstruction identities.
inline CheckReport check_identities(const Expansion& e) {
    CheckReport r;
    const long len = static_cast<long>(e.size());
    for (long n = 0; n < len; ++n) {
        const GaussianInt det = e.q_at(n) * e.p_at(n - 1) - e.q_at(n - 1) * e.p_at(n);
        r.checks.push_back({"determinant", n, det == GaussianInt(n % 2 == 0 ? 1 : -1)});
    }
    for (long n = 1; n + 1 < len; ++n) {
        bool ok = false;
        if (!e.q_at(n).is_zero()) {
            Digits mirrored;
            for (long k = n + 1; k >= 1; --k) mirrored.push_back(e.digits[static_cast<std::size_t>(k)]);
            try {
                ok = fold(mirrored) == RatGauss(e.q_at(n + 1)) / RatGauss(e.q_at(n));
            } catch (const std::domain_error&) {
                ok = false;
            }
        }
        r.checks.push_back({"mirror", n, ok});
    }
    if (!e.remainders.empty() && e.has_exact_remainder(0)) {
        const Surd& z = e.exact_remainder(0);
        for (long n = 0; n < len; ++n) {
            if (!e.has_exact_remainder(static_cast<std::size_t>(n + 1))) break;
            const Surd& t = e.exact_remainder(static_cast<std::size_t>(n + 1));
            const Surd num = Surd(e.p_at(n)) * t + Surd(e.p_at(n - 1));
            const Surd den = Surd(e.q_at(n)) * t + Surd(e.q_at(n - 1));
            r.checks.push_back({"reconstruction", n, !den.is_zero() && num / den == z});
        }
    }
    return r;
}

namespace detail {

inline int sgn_z(const Integer& v) { return mpz_sgn(v.get_mpz_t()); }

/// A > ((l + f sqrt5)/2) * B for A, B >= 0, exact.
inline bool exceeds_phi_multiple(const Integer& a, const Integer& b, const Integer& l, const Integer& f) {
    const Integer lhs = 2 * a - l * b;
    if (sgn_z(lhs) <= 0) return false;
    return lhs * lhs > 5 * f * f * b * b;
}

/// (Lucas L_k, Fibonacci F_k); phi^k = (L_k + F_k sqrt5) / 2.
inline std::pair<Integer, Integer> lucas_fibonacci(long k) {
    Integer l0(2), l1(1), f0(0), f1(1);
    for (long i = 0; i < k; ++i) {
        l0 = std::exchange(l1, l0 + l1);
        f0 = std::exchange(f1, f0 + f1);
    }
    return {l0, f0};
}

}  // namespace detail

/**
 * Strict growth of |q_n|, the alternation |q_{n+1}/q_n| > phi or
 * |q_{n+2}/q_{n+1}| > phi, and |q_{n+k}| > phi^floor(k/2) |q_n| for n, k >= 1.
 * Every comparison is done on squared moduli in Z[sqrt5].
 */
inline CheckReport growth_check(const Expansion& e) {
    CheckReport r;
    const long len = static_cast<long>(e.q.size());
    std::vector<Integer> nq;
    nq.reserve(e.q.size());
    for (const GaussianInt& q : e.q) nq.push_back(q.norm());
    for (long n = 0; n + 1 < len; ++n)
        r.checks.push_back({"strict_increase", n, nq[n + 1] > nq[n]});
    const auto [l2, f2] = detail::lucas_fibonacci(2);  // phi^2
    for (long n = 0; n + 2 < len; ++n) {
        const bool ok = detail::exceeds_phi_multiple(nq[n + 1], nq[n], l2, f2) ||
                        detail::exceeds_phi_multiple(nq[n + 2], nq[n + 1], l2, f2);
        r.checks.push_back({"phi_alternation", n, ok});
    }
    for (long k = 1; k < len; ++k) {
        const auto [l, f] = detail::lucas_fibonacci(2 * (k / 2));
        for (long n = 1; n + k < len; ++n) {
            r.checks.push_back({"phi_power_growth", n * len + k,
                                detail::exceeds_phi_multiple(nq[n + k], nq[n], l, f)});
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Approximation bounds
// ---------------------------------------------------------------------------

/// 2 + sqrt(2) = 1 / (1 - sqrt(2)/2).
inline Interval gamma_constant(long bits) { return Interval(2) + Interval(2).sqrt(bits); }

struct ApproxBounds {
    Interval lower;   ///< 1 / ((|z_{n+1}| + 1) |q_n|^2)
    Interval middle;  ///< |z - p_n/q_n|
    Interval upper;   ///< gamma / |q_n q_{n+1}|
    long bits = 0;
    bool separated() const { return lower.hi() < middle.lo() && middle.hi() <= upper.lo(); }
};

inline ApproxBounds approx_bounds_at(const Expansion& e, std::size_t n, long bits) {
    ApproxBounds b;
    b.bits = bits;
    const RatGauss conv = RatGauss(e.p.at(n)) / RatGauss(e.q.at(n));
    ComplexInterval diff;
    if (e.has_exact_remainder(0)) {
        diff = refine(e.exact_remainder(0) - Surd(conv), bits);
    } else {
        diff = e.remainder_enclosure(0, bits) - ComplexInterval(conv);
    }
    b.middle = diff.abs(bits);
    const Interval z_next = e.remainder_enclosure(n + 1, bits).abs(bits);
    const Interval qn2(Rational(e.q[n].norm()));
    b.lower = Interval(1) / ((z_next + Interval(1)) * qn2);
    const Interval qq = Interval(Rational(e.q[n].norm() * e.q.at(n + 1).norm())).sqrt(bits);
    b.upper = gamma_constant(bits) / qq;
    return b;
}

/**
 * Certified sandwich for n >= 1. Precision doubles from 64 bits up to
 * `max_bits`; throws precision_exhausted if the enclosures still overlap.
 */
inline ApproxBounds approx_bounds(const Expansion& e, std::size_t n, long max_bits = 256) {
    if (n < 1) throw std::invalid_argument("approx_bounds needs n >= 1");
    if (n + 1 >= e.q.size() || n + 1 >= e.remainders.size())
        throw std::out_of_range("approx_bounds needs q_{n+1} and z_{n+1}");
    ApproxBounds b;
    for (long bits = 64; bits <= max_bits; bits *= 2) {
        b = approx_bounds_at(e, n, bits);
        if (b.separated()) return b;
    }
    throw precision_exhausted("approximation bounds overlap at " + std::to_string(max_bits) + " bits");
}

// ---------------------------------------------------------------------------
// Good approximations
// ---------------------------------------------------------------------------

inline constexpr long kDefaultNormCap = 10000;

inline std::complex<double> to_complex(const ComplexInterval& box) {
    return {box.re().mid().get_d(), box.im().mid().get_d()};
}

/**
 * True iff |q x - p| is minimal among all |q' x - p'| with |q'| <= |q|.
 * Every q' up to units is enumerated; a floating prefilter with a wide margin
 * discards clear losers and every survivor is compared exactly.
 */
inline bool is_good_approximation(const Surd& x, const GaussianInt& p, const GaussianInt& q,
                                  long norm_cap = kDefaultNormCap) {
    if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
    if (x.is_rational()) throw std::invalid_argument("x must be irrational");
    const Integer qn = q.norm();
    if (qn > norm_cap) throw budget_exhausted("|q|^2 exceeds the brute-force cap");
    const Surd target = Surd(q) * x - Surd(p);
    const std::complex<double> xd = to_complex(refine(x, 64));
    const std::complex<double> td = to_complex(refine(target, 64));
    const double t2 = std::norm(td);
    const double slack = 1e-6 * t2 + 1e-12 * (1.0 + qn.get_d() * std::norm(xd));
    const long bound = static_cast<long>(std::sqrt(qn.get_d())) + 1;
    for (long r = 1; r <= bound; ++r) {
        for (long s = 0; s <= bound; ++s) {
            if (Integer(r) * r + Integer(s) * s > qn) break;
            const std::complex<double> y = std::complex<double>(static_cast<double>(r), static_cast<double>(s)) * xd;
            const std::complex<double> near(std::floor(y.real() + 0.5), std::floor(y.imag() + 0.5));
            if (std::norm(y - near) > t2 + slack) continue;
            const Surd qx = Surd(GaussianInt(r, s)) * x;
            const Surd err = qx - Surd(nearest_gauss(qx));
            if (compare_abs(err, target) < 0) return false;
        }
    }
    return true;
}

}  // namespace hcf
