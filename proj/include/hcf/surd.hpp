#pragma once

/**
 * @file surd.hpp
 * @brief Exact quadratic irrationals over Q(i): values a + b*sqrt(d) with
 *        a, b in Q(i) and d in Z[i] not a square.
 *
 * sqrt(d) always denotes the canonical root (Re > 0, or Re = 0 and Im > 0).
 * The radicand is reduced by extracting square factors over Gaussian primes
 * of norm <= 10^4 and by the unit -1 (which is a square in Q(i)); anything
 * the trial division cannot reach stays in d.
 *
 * Every real quantity the continued-fraction code needs to compare (real and
 * imaginary parts against rationals, squared moduli) has the shape
 *
 *     r + t*sqrt(N(d)) + Re(beta * sqrt(d)),   r, t in Q, beta in Q(i),
 *
 * and `sign_of_form` decides its sign exactly: an algebraic zero test first,
 * then interval refinement, which terminates once the value is known to be
 * nonzero.
 */

#include "hcf/error.hpp"
#include "hcf/gaussian.hpp"
#include "hcf/interval.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcf {

namespace detail {

inline constexpr long kTrialNormBound = 10000;
inline constexpr long kMaxSignBits = 1L << 16;

inline int sgn(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline std::optional<Integer> exact_isqrt(const Integer& n) {
    if (n < 0 || !mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline std::optional<Rational> exact_qsqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto n = exact_isqrt(q.get_num());
    auto d = exact_isqrt(q.get_den());
    if (!n || !d) return std::nullopt;
    return make_rational(*n, *d);
}

/// Gaussian primes of norm <= kTrialNormBound, one associate each, by norm.
inline const std::vector<GaussianInt>& small_gaussian_primes() {
    static const std::vector<GaussianInt> primes = [] {
        const long bound = kTrialNormBound;
        std::vector<bool> composite(static_cast<std::size_t>(bound + 1), false);
        std::vector<std::pair<long, GaussianInt>> out;
        for (long p = 2; p <= bound; ++p) {
            if (composite[static_cast<std::size_t>(p)]) continue;
            for (long m = p * p; m <= bound; m += p) composite[static_cast<std::size_t>(m)] = true;
            if (p == 2) {
                out.emplace_back(2, GaussianInt(1, 1));
            } else if (p % 4 == 1) {
                for (long a = 1; a * a < p; ++a) {
                    const long b2 = p - a * a;
                    long b = 0;
                    while (b * b < b2) ++b;
                    if (b * b == b2 && a > b) {
                        out.emplace_back(p, GaussianInt(a, b));
                        out.emplace_back(p, GaussianInt(b, a));
                        break;
                    }
                }
            } else if (p * p <= bound) {
                out.emplace_back(p * p, GaussianInt(p, 0));
            }
        }
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<GaussianInt> primes;
        primes.reserve(out.size());
        for (auto& e : out) primes.push_back(std::move(e.second));
        return primes;
    }();
    return primes;
}

/// a / b when b divides a exactly.
inline std::optional<GaussianInt> exact_quotient(const GaussianInt& a, const GaussianInt& b) {
    const Integer n = b.norm();
    const GaussianInt num = a * b.conj();
    if (!mpz_divisible_p(num.re().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.im().get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    return GaussianInt(Integer(num.re() / n), Integer(num.im() / n));
}

inline bool is_canonical_direction(int re_sign, int im_sign) {
    return re_sign > 0 || (re_sign == 0 && im_sign > 0);
}

}  // namespace detail

/// Canonical square root of d when d is a perfect square in Z[i].
inline std::optional<GaussianInt> gaussian_sqrt(const GaussianInt& d) {
    auto k = detail::exact_isqrt(d.norm());
    if (!k) return std::nullopt;
    const Integer x2 = *k + d.re();
    const Integer y2 = *k - d.re();
    if (x2 % 2 != 0 || y2 % 2 != 0) return std::nullopt;
    auto x = detail::exact_isqrt(Integer(x2 / 2));
    auto y = detail::exact_isqrt(Integer(y2 / 2));
    if (!x || !y) return std::nullopt;
    GaussianInt g(*x, d.im() < 0 ? Integer(-*y) : *y);
    if (g * g != d) return std::nullopt;
    return g;  // x >= 0; x == 0 forces d.im() == 0 and y >= 0
}

/// Enclosure of sqrt(N(d)) = |d|.
inline Interval abs_enclosure(const GaussianInt& d, long bits) {
    auto [lo, hi] = sqrt_bounds(Rational(d.norm()), bits);
    return {lo, hi};
}

/// Enclosure of the canonical root sqrt(d).
inline ComplexInterval sqrt_enclosure(const GaussianInt& d, long bits) {
    const Rational dr(d.re());
    const Rational di(d.im());
    if (d.im() == 0) {
        if (d.re() >= 0) return {Interval(dr).sqrt(bits), Interval(0)};
        return {Interval(0), Interval(-dr).sqrt(bits)};
    }
    const Interval root_n = abs_enclosure(d, bits + 8);
    const Interval two(2);
    const Interval abs_di{Rational(abs(di))};
    if (d.re() >= 0) {
        const Interval sr = ((root_n + Interval(dr)) / two).sqrt(bits + 4);
        Interval si = abs_di / (two * sr);
        if (d.im() < 0) si = -si;
        return ComplexInterval(sr, si).rounded(bits);
    }
    const Interval t = ((root_n - Interval(dr)) / two).sqrt(bits + 4);
    const Interval sr = abs_di / (two * t);
    return ComplexInterval(sr, d.im() < 0 ? -t : t).rounded(bits);
}

namespace detail {

/// Exact sign of r + t*sqrt(n), n a nonnegative non-square integer (or t == 0).
inline int sign_quadratic_real(const Rational& r, const Rational& t, const Integer& n) {
    const int sr = sgn(r);
    const int st = sgn(t);
    if (st == 0 || n == 0) return sr;
    if (sr == 0) return st;
    if (sr == st) return sr;
    const int c = cmp(Rational(r * r), Rational(t * t * n));
    return c > 0 ? sr : st;  // c == 0 impossible for non-square n
}

/// Enclosure of r + t*sqrt(N(d)) + Re(beta*sqrt(d)).
inline Interval form_enclosure(const Rational& r, const Rational& t, const RatGauss& beta,
                               const GaussianInt& d, long bits) {
    Interval e(r);
    if (t != 0) e = e + Interval(t) * abs_enclosure(d, bits);
    if (!beta.is_zero()) {
        const ComplexInterval s = sqrt_enclosure(d, bits);
        e = e + Interval(beta.re()) * s.re() - Interval(beta.im()) * s.im();
    }
    return e;
}

/// Sign of a quantity known to be nonzero, by refinement.
inline int sign_by_refinement(const Rational& r, const Rational& t, const RatGauss& beta,
                              const GaussianInt& d) {
    for (long bits = 64; bits <= kMaxSignBits; bits *= 2) {
        if (auto s = form_enclosure(r, t, beta, d, bits).strict_sign()) return *s;
    }
    throw precision_exhausted("sign refinement did not separate from zero");
}

}  // namespace detail

/**
 * Exact sign of r + t*sqrt(N(d)) + Re(beta*sqrt(d)) for canonical,
 * non-square d. Write y = Re(beta*sqrt(d)); then
 * y^2 = (Re(beta^2 d) + |beta|^2 sqrt(N(d))) / 2, so the zero test reduces to
 * an identity in Q(sqrt(N(d))) plus a sign comparison of two nonzero numbers.
 */
inline int sign_of_form(const Rational& r, const Rational& t, const RatGauss& beta,
                        const GaussianInt& d) {
    const Integer n = d.norm();
    const auto k = detail::exact_isqrt(n);
    if (beta.is_zero() || d.is_zero()) {
        if (k) return detail::sgn(Rational(r + t * *k));
        return detail::sign_quadratic_real(r, t, n);
    }
    const Rational y0 = (beta * beta * RatGauss(d)).re() / 2;
    const Rational y1 = beta.norm() / 2;
    const RatGauss zero_beta;
    if (k) {
        const Rational shift = r + t * *k;  // E = shift + y
        const Rational ysq = y0 + y1 * *k;
        if (ysq == shift * shift) {
            if (shift == 0) return 0;
            const int sy = detail::sign_by_refinement(Rational(0), Rational(0), beta, d);
            return sy == -detail::sgn(shift) ? 0 : detail::sgn(shift);
        }
        return detail::sign_by_refinement(r, t, beta, d);
    }
    if (y0 == r * r + t * t * n && y1 == 2 * r * t) {
        const int su = detail::sign_quadratic_real(r, t, n);
        if (su == 0) return 0;
        const int sy = detail::sign_by_refinement(Rational(0), Rational(0), beta, d);
        return sy == -su ? 0 : su;
    }
    return detail::sign_by_refinement(r, t, beta, d);
}

// ---------------------------------------------------------------------------
// Surd
// ---------------------------------------------------------------------------

class Surd {
public:
    Surd() = default;
    Surd(const RatGauss& a) : a_(a) {}        // NOLINT(google-explicit-constructor)
    Surd(const GaussianInt& g) : a_(g) {}     // NOLINT(google-explicit-constructor)
    Surd(long v) : a_(v) {}                   // NOLINT(google-explicit-constructor)

    /// a + b*sqrt(d), brought to canonical form.
    static Surd make(const RatGauss& a, const RatGauss& b, const GaussianInt& d);

    const RatGauss& a() const { return a_; }
    const RatGauss& b() const { return b_; }
    /// Canonical radicand; zero when the value is in Q(i).
    const GaussianInt& d() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    const RatGauss& to_rational() const {
        if (!is_rational()) throw std::domain_error("surd is irrational");
        return a_;
    }

    /// Galois conjugate a - b*sqrt(d).
    Surd conjugate() const { return raw(a_, -b_, d_); }
    /// Complex conjugate. The radicand changes to conj(d).
    Surd complex_conj() const {
        if (is_rational()) return Surd(a_.conj());
        return make(a_.conj(), b_.conj(), d_.conj());
    }

    Surd operator-() const { return raw(-a_, -b_, d_); }
    friend Surd operator+(const Surd& x, const Surd& y) {
        const GaussianInt d = common_radicand(x, y);
        return raw(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Surd operator-(const Surd& x, const Surd& y) {
        const GaussianInt d = common_radicand(x, y);
        return raw(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend Surd operator*(const Surd& x, const Surd& y) {
        const GaussianInt d = common_radicand(x, y);
        return raw(x.a_ * y.a_ + x.b_ * y.b_ * RatGauss(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Surd operator/(const Surd& x, const Surd& y) { return x * y.inverse(); }

    Surd inverse() const {
        if (is_zero()) throw std::domain_error("division by zero surd");
        if (is_rational()) return Surd(a_.inverse());
        // (a + b s)^-1 = (a - b s) / (a^2 - b^2 d); the norm is nonzero since d is not a square
        const RatGauss n = a_ * a_ - b_ * b_ * RatGauss(d_);
        return raw(a_ / n, -b_ / n, d_);
    }

    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    Surd& operator-=(const Surd& o) { return *this = *this - o; }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }
    Surd& operator/=(const Surd& o) { return *this = *this / o; }

    friend bool operator==(const Surd& x, const Surd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }
    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
        if (auto c = x.a_ <=> y.a_; c != 0) return c;
        if (auto c = x.b_ <=> y.b_; c != 0) return c;
        return x.d_ <=> y.d_;
    }

    /// Enclosure at working precision `bits` (not normalized; see `refine`).
    ComplexInterval enclose(long bits) const {
        if (is_rational()) return ComplexInterval(a_);
        return (ComplexInterval(a_) + ComplexInterval(b_) * sqrt_enclosure(d_, bits)).rounded(bits);
    }

    std::string str() const {
        std::ostringstream os;
        os << '(' << a_ << ')';
        if (!is_rational()) os << " + (" << b_ << ")*sqrt(" << d_ << ')';
        return os.str();
    }

private:
    Surd(RatGauss a, RatGauss b, GaussianInt d)
        : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {}

    /// Construct from parts already in canonical form.
    static Surd raw(RatGauss a, RatGauss b, GaussianInt d) {
        if (b.is_zero()) return Surd(std::move(a));
        return Surd(std::move(a), std::move(b), std::move(d));
    }

    static GaussianInt common_radicand(const Surd& x, const Surd& y) {
        if (x.is_rational()) return y.d_;
        if (y.is_rational() || x.d_ == y.d_) return x.d_;
        throw std::invalid_argument("surd arithmetic with incompatible radicands " + x.d_.str() +
                                    " and " + y.d_.str());
    }

    RatGauss a_;
    RatGauss b_;
    GaussianInt d_;
};

inline std::ostream& operator<<(std::ostream& os, const Surd& x) { return os << x.str(); }

inline Surd Surd::make(const RatGauss& a, const RatGauss& b, const GaussianInt& d) {
    if (b.is_zero() || d.is_zero()) return Surd(a);
    if (auto g = gaussian_sqrt(d)) return Surd(a + b * RatGauss(*g));

    // d = f^2 * rest with rest reduced over small primes
    GaussianInt f(1);
    GaussianInt rest = d;
    if (d.im() == 0) {
        // rational radicands stay rational: sqrt(-2) = i*sqrt(2), not (1+i)*sqrt(i)
        Integer n = abs(d.re());
        Integer g(1);
        for (long p = 2; p <= detail::kTrialNormBound && Integer(p) * p <= n; ++p) {
            const Integer p2 = Integer(p) * p;
            while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
                n /= p2;
                g *= p;
            }
        }
        rest = GaussianInt(n, Integer(0));
        f = GaussianInt(g, Integer(0));
        if (d.re() < 0) f *= GaussianInt::i();
    }
    static const std::vector<GaussianInt> kNone;
    for (const GaussianInt& pi : d.im() == 0 ? kNone : detail::small_gaussian_primes()) {
        const Integer p = pi.norm();
        const Integer p2 = p * p;
        if (p2 > rest.norm()) break;
        if (!mpz_divisible_p(rest.norm().get_mpz_t(), p2.get_mpz_t())) continue;
        const GaussianInt pi2 = pi * pi;
        while (true) {
            auto q = detail::exact_quotient(rest, pi2);
            if (!q) break;
            rest = std::move(*q);
            f *= pi;
        }
    }
    // -1 = i^2 is a square: pick the representative with Re > 0 or (Re = 0, Im > 0)
    if (!detail::is_canonical_direction(sgn(rest.re()), sgn(rest.im()))) {
        rest = -rest;
        f *= GaussianInt::i();
    }
    if (auto g = gaussian_sqrt(rest)) return Surd(a + b * RatGauss(f * *g));

    // canonical sqrt(d) is +f*sqrt(rest) or -f*sqrt(rest)
    const RatGauss fq(f);
    const int re_sign = sign_of_form(Rational(0), Rational(0), fq, rest);
    const int im_sign = re_sign != 0
                            ? 0
                            : sign_of_form(Rational(0), Rational(0), fq * RatGauss(GaussianInt(0, -1)), rest);
    const bool plus = detail::is_canonical_direction(re_sign, im_sign);
    return raw(a, b * (plus ? fq : -fq), rest);
}

// ---------------------------------------------------------------------------
// Exact comparisons
// ---------------------------------------------------------------------------

/// sign(Re(x) - c).
inline int sign_re_minus(const Surd& x, const Rational& c) {
    if (x.is_rational()) return detail::sgn(Rational(x.a().re() - c));
    return sign_of_form(x.a().re() - c, Rational(0), x.b(), x.d());
}

/// sign(Im(x) - c).
inline int sign_im_minus(const Surd& x, const Rational& c) {
    if (x.is_rational()) return detail::sgn(Rational(x.a().im() - c));
    return sign_of_form(x.a().im() - c, Rational(0), x.b() * RatGauss(GaussianInt(0, -1)), x.d());
}

/// sign(|x|^2 - c).
inline int sign_norm_minus(const Surd& x, const Rational& c) {
    if (x.is_rational()) return detail::sgn(Rational(x.a().norm() - c));
    // |a + b s|^2 = |a|^2 + |b|^2 |d| + 2 Re(conj(a) b s)
    return sign_of_form(x.a().norm() - c, x.b().norm(), RatGauss(2) * x.a().conj() * x.b(), x.d());
}

/// sign(|x|^2 - |y|^2).
inline int compare_abs(const Surd& x, const Surd& y) {
    if (x.is_rational() && y.is_rational())
        return detail::sgn(Rational(x.a().norm() - y.a().norm()));
    if (x.is_rational()) return -sign_norm_minus(y, x.a().norm());
    if (y.is_rational()) return sign_norm_minus(x, y.a().norm());
    if (x.d() != y.d()) throw std::invalid_argument("compare_abs with incompatible radicands");
    const RatGauss beta = RatGauss(2) * (x.a().conj() * x.b() - y.a().conj() * y.b());
    return sign_of_form(x.a().norm() - y.a().norm(), x.b().norm() - y.b().norm(), beta, x.d());
}

/// The real (which = 0) or imaginary (which = 1) part when it is rational.
inline std::optional<Rational> exact_coordinate(const Surd& x, int which) {
    const Rational base = which == 0 ? x.a().re() : x.a().im();
    if (x.is_rational()) return base;
    const RatGauss beta = which == 0 ? x.b() : x.b() * RatGauss(GaussianInt(0, -1));
    auto k = detail::exact_isqrt(x.d().norm());
    if (!k) return std::nullopt;  // y^2 carries an irrational sqrt(N(d)) term
    const Rational ysq = ((beta * beta * RatGauss(x.d())).re() + beta.norm() * *k) / 2;
    if (ysq == 0) return base;
    auto y = detail::exact_qsqrt(ysq);
    if (!y) return std::nullopt;
    const int s = detail::sign_by_refinement(Rational(0), Rational(0), beta, x.d());
    return base + (s > 0 ? *y : Rational(-*y));
}

/// The Gaussian integer g with x - g in the fundamental square, exactly.
inline GaussianInt nearest_gauss(const Surd& x) {
    if (x.is_rational()) return nearest_gauss(x.a());
    const ComplexInterval box = x.enclose(64);
    auto pick = [&](const Interval& approx, auto sign_minus) {
        Integer k = floor_rational(approx.mid() + kHalf);
        while (sign_minus(Rational(k) - kHalf) < 0) k -= 1;
        while (sign_minus(Rational(k) + kHalf) >= 0) k += 1;
        return k;
    };
    Integer re = pick(box.re(), [&](const Rational& c) { return sign_re_minus(x, c); });
    Integer im = pick(box.im(), [&](const Rational& c) { return sign_im_minus(x, c); });
    return {std::move(re), std::move(im)};
}

inline bool in_fundamental_domain(const Surd& x) {
    if (x.is_rational()) return in_fundamental_domain(x.a());
    return sign_re_minus(x, -kHalf) >= 0 && sign_re_minus(x, kHalf) < 0 &&
           sign_im_minus(x, -kHalf) >= 0 && sign_im_minus(x, kHalf) < 0;
}

/**
 * Enclosure of x whose sides are at most 2^-bits wide, with dyadic endpoints.
 * Exactly rational coordinates give a degenerate side when dyadic. For any
 * bits' >= bits + 2 the box for bits' lies inside the box for bits.
 */
inline ComplexInterval refine(const Surd& x, long bits) {
    if (bits < 1) throw std::invalid_argument("refine needs bits >= 1");
    auto side = [&](int which) -> Interval {
        if (auto e = exact_coordinate(x, which)) {
            if (detail::is_dyadic(*e)) return Interval(*e);
            return {floor_to_grid(*e, bits + 1), ceil_to_grid(*e, bits + 1)};
        }
        const Rational target = detail::mul_pow2(Rational(1), -(bits + 3));
        Interval tight;
        for (long wp = bits + 16;; wp *= 2) {
            const ComplexInterval box = x.enclose(wp);
            tight = which == 0 ? box.re() : box.im();
            if (tight.width() <= target) break;
            if (wp > detail::kMaxSignBits) throw precision_exhausted("refine did not converge");
        }
        const Rational margin = detail::mul_pow2(Rational(1), -(bits + 2));
        return {floor_to_grid(tight.lo() - margin, bits + 3), ceil_to_grid(tight.hi() + margin, bits + 3)};
    };
    return {side(0), side(1)};
}

}  // namespace hcf
