#pragma once

/**
 * @file interval.hpp
 * @brief Certified real and complex interval arithmetic with exact rational
 *        endpoints.
 *
 * +, -, *, / are carried out exactly on the endpoints, so they never lose an
 * enclosed value. Square roots and explicit `rounded()` calls snap the
 * endpoints outward to dyadic rationals with a chosen number of significant
 * bits, which keeps endpoint sizes bounded.
 */

#include "hcf/gaussian.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hcf {

namespace detail {

/// Approximate floor(log2 |q|) for q != 0 (off by at most one).
inline long approx_log2(const Rational& q) {
    return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

/// q * 2^k exactly (k may be negative).
inline Rational mul_pow2(const Rational& q, long k) {
    Rational r;
    if (k >= 0)
        mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(k));
    else
        mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-k));
    return r;
}

inline bool is_dyadic(const Rational& q) {
    const mpz_srcptr den = q.get_den_mpz_t();
    return mpz_scan1(den, 0) == mpz_sizeinbase(den, 2) - 1;
}

}  // namespace detail

/// Largest multiple of 2^-k that is <= q.
inline Rational floor_to_grid(const Rational& q, long k) {
    return detail::mul_pow2(Rational(floor_rational(detail::mul_pow2(q, k))), -k);
}

/// Smallest multiple of 2^-k that is >= q.
inline Rational ceil_to_grid(const Rational& q, long k) {
    return detail::mul_pow2(Rational(ceil_rational(detail::mul_pow2(q, k))), -k);
}

/// Dyadic lower bound of q keeping about `bits` significant bits.
inline Rational round_down(const Rational& q, long bits) {
    if (q == 0) return q;
    if (detail::is_dyadic(q) && static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) <= bits + 2)
        return q;
    return floor_to_grid(q, bits - detail::approx_log2(q));
}

inline Rational round_up(const Rational& q, long bits) { return -round_down(-q, bits); }

/// Dyadic enclosure of sqrt(q), q >= 0, with about `bits` significant bits.
inline std::pair<Rational, Rational> sqrt_bounds(const Rational& q, long bits) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    if (q == 0) return {Rational(0), Rational(0)};
    // exact square root when both parts are perfect squares
    if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
        mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
        Rational r = make_rational(n, d);
        if (detail::is_dyadic(r)) return {r, r};
        return {round_down(r, bits), round_up(r, bits)};
    }
    const long k = bits + 2 - detail::approx_log2(q) / 2;
    const Rational scaled = detail::mul_pow2(q, 2 * k);
    Integer lo_int = floor_rational(scaled);
    Integer hi_int = ceil_rational(scaled);
    Integer lo_root, hi_root;
    mpz_sqrt(lo_root.get_mpz_t(), lo_int.get_mpz_t());
    mpz_sqrt(hi_root.get_mpz_t(), hi_int.get_mpz_t());
    if (hi_root * hi_root < hi_int) hi_root += 1;
    return {detail::mul_pow2(Rational(lo_root), -k), detail::mul_pow2(Rational(hi_root), -k)};
}

/// Division by an enclosure that contains zero.
class interval_division_error : public std::domain_error {
public:
    interval_division_error() : std::domain_error("interval division by an interval containing zero") {}
};

// ---------------------------------------------------------------------------

class Interval {
public:
    Interval() = default;
    Interval(const Rational& v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::invalid_argument("interval with lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }

    /// +1 / -1 when the whole interval is strictly on one side of zero.
    std::optional<int> strict_sign() const {
        if (lo_ > 0) return 1;
        if (hi_ < 0) return -1;
        return std::nullopt;
    }

    Interval operator-() const { return {-hi_, -lo_}; }
    friend Interval operator+(const Interval& a, const Interval& b) {
        return {a.lo_ + b.lo_, a.hi_ + b.hi_};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {a.lo_ - b.hi_, a.hi_ - b.lo_};
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        if (a.is_point() && b.is_point()) return Interval(a.lo_ * b.lo_);
        Rational c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
        return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw interval_division_error();
        return a * Interval(1 / b.hi_, 1 / b.lo_);
    }

    Interval square() const {
        if (is_point()) return Interval(lo_ * lo_);
        if (lo_ >= 0) return {lo_ * lo_, hi_ * hi_};
        if (hi_ <= 0) return {hi_ * hi_, lo_ * lo_};
        return {Rational(0), std::max(Rational(lo_ * lo_), Rational(hi_ * hi_))};
    }

    Interval abs() const {
        if (lo_ >= 0) return *this;
        if (hi_ <= 0) return -*this;
        return {Rational(0), std::max(Rational(-lo_), hi_)};
    }

    /// Outward rounding to dyadic endpoints with about `bits` significant bits.
    Interval rounded(long bits) const {
        if (is_point() && detail::is_dyadic(lo_)) return *this;
        return {round_down(lo_, bits), round_up(hi_, bits)};
    }

    Interval sqrt(long bits) const {
        if (lo_ < 0) throw std::domain_error("sqrt of interval with negative part");
        return {sqrt_bounds(lo_, bits).first, sqrt_bounds(hi_, bits).second};
    }

    friend Interval hull(const Interval& a, const Interval& b) {
        return {std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_)};
    }

private:
    Rational lo_{0};
    Rational hi_{0};
};

/// Axis-parallel box in C.
class ComplexInterval {
public:
    ComplexInterval() = default;
    ComplexInterval(Interval re, Interval im) : re_(std::move(re)), im_(std::move(im)) {}
    ComplexInterval(const RatGauss& z) : re_(z.re()), im_(z.im()) {}  // NOLINT(google-explicit-constructor)

    const Interval& re() const { return re_; }
    const Interval& im() const { return im_; }

    bool contains(const RatGauss& z) const { return re_.contains(z.re()) && im_.contains(z.im()); }
    bool contains(const ComplexInterval& o) const {
        return re_.contains(o.re_) && im_.contains(o.im_);
    }
    bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
    Rational max_width() const { return std::max(re_.width(), im_.width()); }

    ComplexInterval operator-() const { return {-re_, -im_}; }
    ComplexInterval conj() const { return {re_, -im_}; }

    friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    /// Defined only when the divisor box excludes 0.
    friend ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
        if (b.contains_zero()) throw interval_division_error();
        const Interval n = b.norm();
        const ComplexInterval num = a * b.conj();
        return {num.re_ / n, num.im_ / n};
    }

    /// |z|^2 enclosure.
    Interval norm() const { return re_.square() + im_.square(); }
    Interval abs(long bits) const { return norm().sqrt(bits); }

    ComplexInterval rounded(long bits) const { return {re_.rounded(bits), im_.rounded(bits)}; }

private:
    Interval re_;
    Interval im_;
};

}  // namespace hcf
