#pragma once

/**
 * @file region.hpp
 * @brief Feasible regions for the Hurwitz orbit and validity of digit words.
 *
 * A region is an intersection of generalized-circle constraints
 *
 *     f(z) = A |z|^2 + 2 Re(conj(B) z) + C  >= 0   (or > 0),
 *
 * with A, C rational and B in Q(i). Half-planes have A = 0; disks have A < 0
 * and disk complements A > 0. This family is closed under z -> 1/z and under
 * translations, so the region for T^n of a cylinder is computed exactly.
 *
 * Validity only depends on the interior, so emptiness is decided for the open
 * set where every f is strictly positive. That set is nonempty iff some
 * constraint curve carries a point where every other f is positive; on a
 * circle this reduces to a circle-versus-convex-polygon test in rational
 * arithmetic, and a line is turned into a circle by a Moebius map first.
 */

#include "hcf/error.hpp"
#include "hcf/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <string>
#include <vector>

namespace hcf {

struct Constraint {
    Rational A{0};
    RatGauss B;
    Rational C{0};
    bool strict = false;

    Rational eval(const RatGauss& z) const { return A * z.norm() + 2 * (B.conj() * z).re() + C; }

    bool is_line() const { return A == 0 && !B.is_zero(); }

    /// Image under z -> 1/z (after clearing the positive factor |w|^2).
    Constraint inverted() const { return {C, B.conj(), A, strict}; }

    /// g(w) = f(w + t): describes the region shifted by -t.
    Constraint translated(const RatGauss& t) const {
        return {A, RatGauss(A) * t + B, A * t.norm() + 2 * (B.conj() * t).re() + C, strict};
    }

    /// Describes i^j times the region.
    Constraint rotated(int j) const {
        RatGauss u(1);
        for (int k = 0; k < ((j % 4) + 4) % 4; ++k) u = u * RatGauss(Rational(0), Rational(1));
        return {A, B * u, C, strict};
    }

    /// The complementary constraint: -f > 0 for closed f, -f >= 0 for strict f.
    Constraint complement() const { return {-A, -B, -C, !strict}; }

    /// Positive rescaling so the first nonzero coefficient has absolute value 1.
    Constraint normalized() const {
        Rational s;
        if (A != 0) s = abs(A);
        else if (B.re() != 0) s = abs(B.re());
        else if (B.im() != 0) s = abs(B.im());
        else if (C != 0) s = abs(C);
        else return *this;
        return {A / s, RatGauss(B.re() / s, B.im() / s), C / s, strict};
    }

    /// Same curve and orientation, ignoring strictness.
    bool same_shape(const Constraint& o) const { return A == o.A && B == o.B && C == o.C; }

    friend bool operator==(const Constraint& x, const Constraint& y) {
        return x.same_shape(y) && x.strict == y.strict;
    }
    friend std::strong_ordering operator<=>(const Constraint& x, const Constraint& y) {
        if (auto c = compare(x.A, y.A); c != 0) return c;
        if (auto c = x.B <=> y.B; c != 0) return c;
        if (auto c = compare(x.C, y.C); c != 0) return c;
        return x.strict <=> y.strict;
    }

    std::string str() const {
        std::ostringstream os;
        os << A << "|z|^2 + 2Re(conj(" << B << ")z) + " << C << (strict ? " > 0" : " >= 0");
        return os.str();
    }

    // -- named constructors ------------------------------------------------
    static Constraint re_at_least(const Rational& c) { return {Rational(0), RatGauss(1), -2 * c, false}; }
    static Constraint re_below(const Rational& c) { return {Rational(0), RatGauss(-1), 2 * c, true}; }
    static Constraint im_at_least(const Rational& c) {
        return {Rational(0), RatGauss(Rational(0), Rational(1)), -2 * c, false};
    }
    static Constraint im_below(const Rational& c) {
        return {Rational(0), RatGauss(Rational(0), Rational(-1)), 2 * c, true};
    }
    /// |z - c|^2 <= r2 (or < r2).
    static Constraint disk(const RatGauss& c, const Rational& r2, bool strict_inside = false) {
        return {Rational(-1), c, r2 - c.norm(), strict_inside};
    }
    /// |z - c|^2 >= r2 (or > r2).
    static Constraint disk_exterior(const RatGauss& c, const Rational& r2, bool strict_outside = false) {
        return {Rational(1), -c, c.norm() - r2, strict_outside};
    }
};

// ---------------------------------------------------------------------------
// Exact interior-emptiness test
// ---------------------------------------------------------------------------

namespace detail {

using Polygon = std::vector<RatGauss>;

/// Drops constraints that hold everywhere (up to a point), dedupes equal curves.
/// Returns nullopt when some constraint alone has empty open set.
inline std::optional<std::vector<Constraint>> simplify(const std::vector<Constraint>& in) {
    std::vector<Constraint> out;
    for (const Constraint& raw : in) {
        const Constraint f = raw.normalized();
        if (f.A != 0) {
            const RatGauss c = RatGauss(-f.B.re() / f.A, -f.B.im() / f.A);
            const Rational r2 = c.norm() - f.C / f.A;
            if (r2 <= 0) {
                if (f.A > 0) continue;  // positive off at most one point
                return std::nullopt;
            }
        } else if (f.B.is_zero()) {
            if (f.C > 0) continue;
            return std::nullopt;
        }
        out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    std::vector<Constraint> dedup;
    for (const Constraint& f : out) {
        if (!dedup.empty() && dedup.back().same_shape(f)) {
            dedup.back().strict = dedup.back().strict || f.strict;
            continue;
        }
        dedup.push_back(f);
    }
    for (const Constraint& f : dedup) {
        const Constraint g = Constraint{-f.A, -f.B, -f.C, false};
        for (const Constraint& h : dedup)
            if (h.same_shape(g)) return std::nullopt;
    }
    return dedup;
}

/// Keeps the part of a convex polygon where 2 Re(conj(B) z) + C >= 0.
inline Polygon clip(const Polygon& poly, const RatGauss& b, const Rational& c) {
    Polygon out;
    const std::size_t n = poly.size();
    auto value = [&](const RatGauss& z) -> Rational { return 2 * (b.re() * z.re() + b.im() * z.im()) + c; };
    for (std::size_t k = 0; k < n; ++k) {
        const RatGauss& p = poly[k];
        const RatGauss& q = poly[(k + 1) % n];
        const Rational vp = value(p);
        const Rational vq = value(q);
        if (vp >= 0) out.push_back(p);
        if ((vp > 0 && vq < 0) || (vp < 0 && vq > 0)) {
            const Rational t = vp / (vp - vq);
            out.push_back(p + RatGauss(t) * (q - p));
        }
    }
    return out;
}

inline Rational twice_area(const Polygon& poly) {
    Rational s(0);
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const RatGauss& p = poly[k];
        const RatGauss& q = poly[(k + 1) % n];
        s += p.re() * q.im() - q.re() * p.im();
    }
    return s;
}

inline Rational dist2_to_segment(const RatGauss& c, const RatGauss& p, const RatGauss& q) {
    const RatGauss d = q - p;
    const Rational len2 = d.norm();
    if (len2 == 0) return (c - p).norm();
    Rational t = ((c - p).re() * d.re() + (c - p).im() * d.im()) / len2;
    if (t < 0) t = 0;
    if (t > 1) t = 1;
    return (c - (p + RatGauss(t) * d)).norm();
}

/// Polygon given counter-clockwise with positive area.
inline bool polygon_contains(const Polygon& poly, const RatGauss& c) {
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        const RatGauss e = poly[(k + 1) % n] - poly[k];
        const RatGauss w = c - poly[k];
        if (e.re() * w.im() - e.im() * w.re() < 0) return false;
    }
    return true;
}

/// Does circle j (A_j != 0) carry a point where every other constraint is positive?
inline bool circle_witness(const std::vector<Constraint>& cs, std::size_t j) {
    const Constraint& fj = cs[j];
    const RatGauss c(-fj.B.re() / fj.A, -fj.B.im() / fj.A);
    const Rational r2 = c.norm() - fj.C / fj.A;
    const Rational s = r2 + 1;  // s > sqrt(r2)
    Polygon poly = {c + RatGauss(-s, -s), c + RatGauss(s, -s), c + RatGauss(s, s), c + RatGauss(-s, s)};
    for (std::size_t k = 0; k < cs.size(); ++k) {
        if (k == j) continue;
        const Rational ratio = cs[k].A / fj.A;
        const RatGauss b = cs[k].B - RatGauss(ratio) * fj.B;
        const Rational cc = cs[k].C - ratio * fj.C;
        if (b.is_zero()) {
            if (cc > 0) continue;
            return false;
        }
        poly = clip(poly, b, cc);
        if (poly.size() < 3) return false;
    }
    if (twice_area(poly) <= 0) return false;
    Rational near;
    if (polygon_contains(poly, c)) {
        near = 0;
    } else {
        near = dist2_to_segment(c, poly.back(), poly.front());
        for (std::size_t k = 0; k + 1 < poly.size(); ++k)
            near = std::min(near, dist2_to_segment(c, poly[k], poly[k + 1]));
    }
    if (!(near < r2)) return false;
    for (const RatGauss& v : poly)
        if ((v - c).norm() > r2) return true;
    return false;
}

/// Open set {all f > 0} is nonempty; input already simplified.
inline bool open_nonempty(const std::vector<Constraint>& cs) {
    if (cs.empty()) return true;
    for (std::size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].A != 0) {
            if (circle_witness(cs, j)) return true;
            continue;
        }
        // Moebius map z = 1/w + z0 with z0 off line j turns that line into a circle
        const Constraint& fj = cs[j];
        const Rational bn = fj.B.norm();
        const RatGauss p0 = RatGauss(-fj.C / (2 * bn)) * fj.B;
        const RatGauss z0 = p0 + fj.B;
        std::vector<Constraint> moved;
        moved.reserve(cs.size());
        for (const Constraint& f : cs) moved.push_back(f.translated(z0).inverted());
        const Constraint target = moved[j].normalized();
        auto simple = simplify(moved);
        if (!simple) return false;
        for (std::size_t k = 0; k < simple->size(); ++k) {
            if ((*simple)[k].same_shape(target)) {
                if (circle_witness(*simple, k)) return true;
                break;
            }
        }
    }
    return false;
}

}  // namespace detail

/// True iff the set where every constraint holds has empty interior.
inline bool interior_empty(const std::vector<Constraint>& cs) {
    auto simple = detail::simplify(cs);
    if (!simple) return true;
    return !detail::open_nonempty(*simple);
}

// ---------------------------------------------------------------------------
// Region
// ---------------------------------------------------------------------------

class Region {
public:
    Region() = default;
    explicit Region(std::vector<Constraint> cs) : constraints_(std::move(cs)) {}

    /// The half-open square -1/2 <= Re, Im < 1/2.
    static Region fundamental() {
        return Region({Constraint::re_at_least(-kHalf), Constraint::re_below(kHalf),
                       Constraint::im_at_least(-kHalf), Constraint::im_below(kHalf)});
    }

    const std::vector<Constraint>& constraints() const { return constraints_; }
    bool interior_empty() const { return hcf::interior_empty(constraints_); }

    Region intersect(const Region& o) const {
        std::vector<Constraint> cs = constraints_;
        cs.insert(cs.end(), o.constraints_.begin(), o.constraints_.end());
        return Region(std::move(cs));
    }

    /// The region shifted by -t: {z - t : z in r}.
    Region shifted_back(const RatGauss& t) const {
        std::vector<Constraint> cs;
        for (const Constraint& f : constraints_) cs.push_back(f.translated(t));
        return Region(std::move(cs));
    }

    Region rotated(int j) const {
        std::vector<Constraint> cs;
        for (const Constraint& f : constraints_) cs.push_back(f.rotated(j));
        return Region(std::move(cs));
    }

    /// Canonical irredundant form: normalized, sorted, redundant constraints removed
    /// one at a time in canonical order. Regions with empty interior become {}.
    Region pruned() const;

    bool is_empty_marker() const { return empty_; }

    /// Contained in `o` up to boundary (interiors compared).
    bool interior_subset_of(const Region& o) const {
        for (const Constraint& g : o.constraints_) {
            std::vector<Constraint> cs = constraints_;
            cs.push_back(g.complement());
            if (!hcf::interior_empty(cs)) return false;
        }
        return true;
    }
    bool interior_equals(const Region& o) const { return interior_subset_of(o) && o.interior_subset_of(*this); }

    friend bool operator==(const Region& x, const Region& y) {
        return x.empty_ == y.empty_ && x.constraints_ == y.constraints_;
    }

    std::string str() const {
        if (empty_) return "{}";
        std::ostringstream os;
        for (std::size_t k = 0; k < constraints_.size(); ++k) os << (k ? " & " : "") << constraints_[k].str();
        return os.str();
    }

private:
    std::vector<Constraint> constraints_;
    bool empty_ = false;
};

inline Region Region::pruned() const {
    Region out;
    auto simple = detail::simplify(constraints_);
    if (!simple || !detail::open_nonempty(*simple)) {
        out.empty_ = true;
        return out;
    }
    std::vector<Constraint> cs = std::move(*simple);
    // Sides of the square are tried last, so arcs they make redundant go first
    // and equal regions keep equal constraint lists along a cycle.
    std::vector<Constraint> sides;
    const Region square = Region::fundamental();
    for (const Constraint& f : square.constraints()) sides.push_back(f.normalized());
    auto is_side = [&](const Constraint& f) {
        return std::any_of(sides.begin(), sides.end(), [&](const Constraint& g) { return g.same_shape(f); });
    };
    std::vector<bool> keep(cs.size(), true);
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (is_side(cs[i]) != (pass == 1)) continue;
            std::vector<Constraint> test;
            for (std::size_t k = 0; k < cs.size(); ++k)
                if (k != i && keep[k]) test.push_back(cs[k]);
            test.push_back(cs[i].complement());
            if (hcf::interior_empty(test)) keep[i] = false;
        }
    }
    for (std::size_t i = 0; i < cs.size(); ++i)
        if (keep[i]) out.constraints_.push_back(cs[i]);
    return out;
}

/// Image under z -> 1/z. The origin is always treated as punctured.
inline Region invert_region(const Region& r) {
    std::vector<Constraint> cs;
    for (const Constraint& f : r.constraints()) cs.push_back(f.inverted());
    return Region(std::move(cs));
}

/// Feasible region for the next orbit point: (1/r - digit) intersected with the square.
inline Region step_uncached(const Region& r, const GaussianInt& digit) {
    if (r.is_empty_marker()) return r;
    return invert_region(r).shifted_back(RatGauss(digit)).intersect(Region::fundamental()).pruned();
}

namespace detail {
// Feasible regions recur, so transitions are memoized by exact key.
struct StepCache {
    std::mutex lock;
    std::unordered_map<std::string, Region> table;
    static constexpr std::size_t kLimit = 1u << 16;
};
inline StepCache& step_cache() {
    static StepCache cache;
    return cache;
}
}  // namespace detail

inline Region step(const Region& r, const GaussianInt& digit) {
    if (r.is_empty_marker()) return r;
    std::string key = r.str();
    key += '|';
    key += digit.str();
    auto& cache = detail::step_cache();
    {
        std::lock_guard<std::mutex> g(cache.lock);
        auto it = cache.table.find(key);
        if (it != cache.table.end()) return it->second;
    }
    Region out = step_uncached(r, digit);
    std::lock_guard<std::mutex> g(cache.lock);
    if (cache.table.size() >= detail::StepCache::kLimit) cache.table.clear();
    cache.table.emplace(std::move(key), out);
    return out;
}

/// Cell of the partition of the square by the first digit: {w : [1/w] = digit}.
inline Region first_digit_cell(const GaussianInt& digit) {
    const Region shifted = Region::fundamental().shifted_back(-RatGauss(digit));  // digit + square
    return invert_region(shifted).intersect(Region::fundamental()).pruned();
}

inline bool is_valid_prefix(const std::vector<GaussianInt>& digits) {
    if (digits.empty()) throw std::invalid_argument("is_valid_prefix needs a nonempty word");
    Region r = Region::fundamental();
    for (std::size_t k = 1; k < digits.size(); ++k) {
        r = step(r, digits[k]);
        if (r.is_empty_marker()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Feasible digits
// ---------------------------------------------------------------------------

inline constexpr long kDefaultDigitCap = 200;

struct FeasibleDigits {
    std::vector<GaussianInt> digits;  ///< feasible digits with |a|^2 <= cap
    bool cusp = false;                ///< every digit with |a|^2 > threshold is feasible
    long threshold = 0;
};

namespace detail {

/// Every constraint is positive on the punctured closed disk of radius 1/k at 0.
inline bool contains_punctured_disk(const Region& r, long k) {
    const Rational rho(1, k);
    for (const Constraint& f : r.constraints()) {
        Rational base = f.C;
        if (f.A < 0) base += f.A * rho * rho;
        if (base <= 0) return false;
        if (base * base <= 4 * f.B.norm() * rho * rho) return false;
    }
    return true;
}

}  // namespace detail

inline FeasibleDigits feasible_digits(const Region& r, long cap = kDefaultDigitCap) {
    FeasibleDigits out;
    if (r.is_empty_marker() || r.interior_empty()) return out;
    const Region inv = invert_region(r);
    const long bound = static_cast<long>(std::sqrt(static_cast<double>(cap))) + 1;
    for (long x = -bound; x <= bound; ++x) {
        for (long y = -bound; y <= bound; ++y) {
            if (x * x + y * y > cap) continue;
            const GaussianInt a(x, y);
            const Region next = inv.shifted_back(RatGauss(a)).intersect(Region::fundamental());
            if (!next.interior_empty()) out.digits.push_back(a);
        }
    }
    // a + square lies outside |z| <= sqrt(cap) - 1 once |a|^2 > cap
    const long k = static_cast<long>(std::floor(std::sqrt(static_cast<double>(cap)))) - 1;
    if (k >= 1 && Integer(k + 1) * (k + 1) <= cap && detail::contains_punctured_disk(r, k)) {
        out.cusp = true;
        out.threshold = cap;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Periodic validity and the shape catalog
// ---------------------------------------------------------------------------

inline constexpr long kDefaultCyclePeriods = 64;

/// Rotation-normalized key of a region (strictness ignored).
inline std::string catalog_key(const Region& r) {
    if (r.is_empty_marker()) return "{}";
    std::string best;
    for (int j = 0; j < 4; ++j) {
        std::vector<Constraint> cs;
        for (const Constraint& f : r.constraints()) {
            Constraint g = f.rotated(j).normalized();
            g.strict = false;
            cs.push_back(g);
        }
        std::sort(cs.begin(), cs.end());
        std::ostringstream os;
        for (const Constraint& g : cs) os << g.A << ',' << g.B.re() << ',' << g.B.im() << ',' << g.C << ';';
        if (j == 0 || os.str() < best) best = os.str();
    }
    return best;
}

/// Set of rotation-normalized shapes seen so far.
class RegionCatalog {
public:
    void add(const Region& r) { keys_.insert(catalog_key(r)); }
    std::size_t size() const { return keys_.size(); }
    const std::set<std::string>& keys() const { return keys_; }

private:
    std::set<std::string> keys_;
};

/**
 * Validity of preperiod + period repeated forever. The first digit is free.
 * Regions at period boundaries are compared exactly; a repeat proves
 * validity. Throws budget_exhausted when no repeat appears within `max_periods`.
 */
inline bool is_valid_eventually_periodic(const std::vector<GaussianInt>& preperiod,
                                         const std::vector<GaussianInt>& period,
                                         long max_periods = kDefaultCyclePeriods,
                                         RegionCatalog* catalog = nullptr) {
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    std::vector<GaussianInt> head = preperiod;
    Region r = Region::fundamental();
    std::size_t start = 1;
    if (head.empty()) {
        head.push_back(period[0]);
        start = 1;
    }
    for (std::size_t k = start; k < head.size(); ++k) {
        r = step(r, head[k]);
        if (r.is_empty_marker()) return false;
        if (catalog) catalog->add(r);
    }
    // with an empty preperiod the first period digit was consumed as a_0
    const std::size_t offset = preperiod.empty() ? 1 : 0;
    const std::size_t m = period.size();
    std::vector<Region> seen;
    for (long rep = 0; rep <= max_periods; ++rep) {
        for (const Region& s : seen)
            if (s == r) return true;
        seen.push_back(r);
        for (std::size_t k = 0; k < m; ++k) {
            r = step(r, period[(k + offset) % m]);
            if (r.is_empty_marker()) return false;
            if (catalog) catalog->add(r);
        }
    }
    throw budget_exhausted("no region cycle within " + std::to_string(max_periods) + " periods");
}

inline bool is_valid_periodic(const std::vector<GaussianInt>& period, long max_periods = kDefaultCyclePeriods,
                              RegionCatalog* catalog = nullptr) {
    return is_valid_eventually_periodic({}, period, max_periods, catalog);
}

// ---------------------------------------------------------------------------
// Random valid words
// ---------------------------------------------------------------------------

/// Uniform-ish integer in [lo, hi] from raw engine output (portable across libraries).
inline long draw(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

/**
 * A valid prefix of the given length built by a random walk: candidate
 * digits favour small norms and are kept when the feasible region stays
 * nonempty. `catalog`, when given, records every region visited.
 */
inline std::vector<GaussianInt> random_valid_word(std::mt19937_64& rng, std::size_t length,
                                                  RegionCatalog* catalog = nullptr) {
    std::vector<GaussianInt> w;
    if (length == 0) return w;
    w.emplace_back(draw(rng, -3, 3), draw(rng, -3, 3));
    Region r = Region::fundamental();
    if (catalog) catalog->add(r);
    while (w.size() < length) {
        bool placed = false;
        for (int attempt = 0; attempt < 40 && !placed; ++attempt) {
            const long spread = draw(rng, 0, 3) == 0 ? 6 : 3;
            const GaussianInt a(draw(rng, -spread, spread), draw(rng, -spread, spread));
            if (a.norm() < 2) continue;
            Region next = step(r, a);
            if (next.is_empty_marker()) continue;
            w.push_back(a);
            r = std::move(next);
            placed = true;
        }
        if (!placed) {
            const FeasibleDigits f = feasible_digits(r, 32);
            if (f.digits.empty()) throw inconsistency("nonempty region without feasible digits");
            const GaussianInt a = f.digits[static_cast<std::size_t>(draw(rng, 0, static_cast<long>(f.digits.size()) - 1))];
            w.push_back(a);
            r = step(r, a);
        }
        if (catalog) catalog->add(r);
    }
    return w;
}

// ---------------------------------------------------------------------------
// Boundary sampling for plotting
// ---------------------------------------------------------------------------

struct BoundaryPoint {
    std::size_t arc = 0;  ///< index of the constraint whose curve carries the point
    double re = 0, im = 0;
};

/**
 * Points on the boundary of a region: each constraint curve is sampled at
 * `points` parameters (over the full circle, or across the square for a line)
 * and samples satisfying every other constraint, up to rounding, are kept.
 */
inline std::vector<BoundaryPoint> sample_boundary(const Region& r, std::size_t points) {
    std::vector<BoundaryPoint> out;
    if (r.is_empty_marker() || points == 0) return out;
    const auto& cs = r.constraints();
    auto eval = [](const Constraint& f, double x, double y) {
        return f.A.get_d() * (x * x + y * y) + 2 * (f.B.re().get_d() * x + f.B.im().get_d() * y) + f.C.get_d();
    };
    auto inside = [&](std::size_t skip, double x, double y) {
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (k != skip && eval(cs[k], x, y) < -1e-12) return false;
        return true;
    };
    const double pi = std::acos(-1.0);
    for (std::size_t j = 0; j < cs.size(); ++j) {
        const Constraint& f = cs[j];
        const double bx = f.B.re().get_d(), by = f.B.im().get_d();
        for (std::size_t s = 0; s < points; ++s) {
            double x = 0, y = 0;
            if (f.A != 0) {
                const double a = f.A.get_d();
                const double cx = -bx / a, cy = -by / a;
                const double rad = std::sqrt(std::max(0.0, cx * cx + cy * cy - f.C.get_d() / a));
                const double t = 2 * pi * static_cast<double>(s) / static_cast<double>(points);
                x = cx + rad * std::cos(t);
                y = cy + rad * std::sin(t);
            } else {
                // 2(bx x + by y) + C = 0, walked along its direction across [-1/2, 1/2]^2
                const double n2 = bx * bx + by * by;
                const double px = -f.C.get_d() * bx / (2 * n2), py = -f.C.get_d() * by / (2 * n2);
                const double t = -1.0 + 2.0 * static_cast<double>(s) / static_cast<double>(points > 1 ? points - 1 : 1);
                const double len = std::sqrt(n2);
                x = px - by / len * t;
                y = py + bx / len * t;
            }
            if (inside(j, x, y)) out.push_back({j, x, y});
        }
    }
    return out;
}

}  // namespace hcf
