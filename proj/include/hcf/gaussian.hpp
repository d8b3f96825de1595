#pragma once

/**
 * @file gaussian.hpp
 * @brief Exact arithmetic on the Gaussian integers Z[i] and on Q(i).
 *
 * Both types are thin value wrappers over GMP integers/rationals. Nothing in
 * here touches floating point: the Hurwitz rounding rule breaks ties at
 * half-integers, and those ties must be resolved bit-exactly.
 */

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hcf {

using Integer = mpz_class;
using Rational = mpq_class;

/// floor(q) for an exact rational.
inline Integer floor_rational(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_rational(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

// ---------------------------------------------------------------------------
// GaussianInt
// ---------------------------------------------------------------------------

class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    GaussianInt(Integer re, Integer im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}

    static GaussianInt i() { return {0, 1}; }

    const Integer& re() const { return re_; }
    const Integer& im() const { return im_; }

    Integer norm() const { return re_ * re_ + im_ * im_; }
    GaussianInt conj() const { return {re_, -im_}; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    GaussianInt operator-() const { return {-re_, -im_}; }

    GaussianInt& operator+=(const GaussianInt& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianInt& operator-=(const GaussianInt& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianInt& operator*=(const GaussianInt& o) {
        Integer r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }

    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    /// Lexicographic (re, im); only meaningful as a container key.
    friend std::strong_ordering operator<=>(const GaussianInt& a, const GaussianInt& b) {
        if (auto c = compare(a.re_, b.re_); c != 0) return c;
        return compare(a.im_, b.im_);
    }

    /// i^k * g for k taken mod 4.
    GaussianInt rotate(int k) const {
        switch (((k % 4) + 4) % 4) {
            case 0: return *this;
            case 1: return {-im_, re_};
            case 2: return {-re_, -im_};
            default: return {im_, -re_};
        }
    }

    std::string str() const;

private:
    Integer re_{0};
    Integer im_{0};
};

inline std::string GaussianInt::str() const {
    std::ostringstream os;
    if (im_ == 0) {
        os << re_;
    } else {
        if (re_ != 0) os << re_;
        if (im_ > 0 && re_ != 0) os << '+';
        if (im_ == -1) {
            os << '-';
        } else if (im_ != 1) {
            os << im_;
        }
        os << 'i';
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const GaussianInt& g) { return os << g.str(); }

/// Parses "3", "-2+5i", "i", "-i", "4-i", "7i".
inline GaussianInt parse_gaussian(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty Gaussian integer literal");
    auto parse_int = [&](const std::string& part) -> Integer {
        if (part.empty() || part == "+") return Integer(1);
        if (part == "-") return Integer(-1);
        Integer v;
        const std::string digits = part[0] == '+' ? part.substr(1) : part;
        if (v.set_str(digits, 10) != 0)
            throw std::invalid_argument("bad Gaussian integer literal: " + std::string(text));
        return v;
    };
    if (s.back() != 'i') return {parse_int(s), Integer(0)};
    s.pop_back();
    // split at the last sign that is not the leading character
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) return {Integer(0), parse_int(s)};
    return {parse_int(s.substr(0, split)), parse_int(s.substr(split))};
}

// ---------------------------------------------------------------------------
// RatGauss: elements of Q(i)
// ---------------------------------------------------------------------------

class RatGauss {
public:
    RatGauss() = default;
    RatGauss(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
    explicit RatGauss(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    RatGauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    RatGauss(const GaussianInt& g) : re_(g.re()), im_(g.im()) {}  // NOLINT(google-explicit-constructor)

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    Rational norm() const { return re_ * re_ + im_ * im_; }
    RatGauss conj() const { return {re_, -im_}; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_gaussian_integer() const {
        return re_.get_den() == 1 && im_.get_den() == 1;
    }
    GaussianInt to_gaussian() const {
        if (!is_gaussian_integer()) throw std::domain_error("value is not in Z[i]");
        return {re_.get_num(), im_.get_num()};
    }

    RatGauss operator-() const { return {-re_, -im_}; }

    RatGauss& operator+=(const RatGauss& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    RatGauss& operator-=(const RatGauss& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    RatGauss& operator*=(const RatGauss& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    RatGauss& operator/=(const RatGauss& o) {
        const Rational n = o.norm();
        if (n == 0) throw std::domain_error("division by zero in Q(i)");
        *this *= o.conj();
        re_ /= n;
        im_ /= n;
        return *this;
    }
    RatGauss inverse() const { return RatGauss(1) /= *this; }

    friend RatGauss operator+(RatGauss a, const RatGauss& b) { return a += b; }
    friend RatGauss operator-(RatGauss a, const RatGauss& b) { return a -= b; }
    friend RatGauss operator*(RatGauss a, const RatGauss& b) { return a *= b; }
    friend RatGauss operator/(RatGauss a, const RatGauss& b) { return a /= b; }

    friend bool operator==(const RatGauss& a, const RatGauss& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const RatGauss& a, const RatGauss& b) {
        if (auto c = compare(a.re_, b.re_); c != 0) return c;
        return compare(a.im_, b.im_);
    }

    std::string str() const {
        std::ostringstream os;
        os << re_ << (im_ < 0 ? "-" : "+") << abs(im_) << "i";
        return os.str();
    }

private:
    Rational re_{0};
    Rational im_{0};
};

inline std::ostream& operator<<(std::ostream& os, const RatGauss& z) { return os << z.str(); }

inline const Rational kHalf{1, 2};

/// Hurwitz rounding [z] = floor(Re z + 1/2) + i floor(Im z + 1/2).
inline GaussianInt nearest_gauss(const RatGauss& z) {
    return {floor_rational(z.re() + kHalf), floor_rational(z.im() + kHalf)};
}

/// Membership in the half-open square -1/2 <= Re, Im < 1/2.
inline bool in_fundamental_domain(const RatGauss& z) {
    return z.re() >= -kHalf && z.re() < kHalf && z.im() >= -kHalf && z.im() < kHalf;
}

/// Euclidean division with nearest-integer quotient; the remainder has norm
/// at most half the divisor's norm.
inline std::pair<GaussianInt, GaussianInt> gauss_divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("Gaussian division by zero");
    GaussianInt q = nearest_gauss(RatGauss(a) / RatGauss(b));
    GaussianInt r = a - q * b;
    return {std::move(q), std::move(r)};
}

inline bool divides(const GaussianInt& d, const GaussianInt& a) {
    if (d.is_zero()) return a.is_zero();
    return (RatGauss(a) / RatGauss(d)).is_gaussian_integer();
}

/// The associate u*g (u a unit) with Re > 0 and Im >= 0; zero maps to zero.
inline GaussianInt first_quadrant_associate(const GaussianInt& g) {
    if (g.is_zero()) return g;
    for (int k = 0; k < 4; ++k) {
        GaussianInt r = g.rotate(k);
        if (r.re() > 0 && r.im() >= 0) return r;
    }
    return g;  // unreachable
}

/// Greatest common divisor in Z[i], normalized to the first-quadrant associate.
inline GaussianInt gauss_gcd(GaussianInt a, GaussianInt b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gauss_gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        auto [q, r] = gauss_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return first_quadrant_associate(a);
}

}  // namespace hcf
