#pragma once

/**
 * @file periodic.hpp
 * @brief Eventually periodic expansions: exact evaluation, cycle detection,
 *        pure periodicity and the conjugate criteria, reversal and
 *        singularization, and explicit counterexample constructions.
 */

#include "hcf/error.hpp"
#include "hcf/expansion.hpp"
#include "hcf/region.hpp"
#include "hcf/surd.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcf {

struct PeriodicCF {
    Digits preperiod;
    Digits period;
    bool valid = false;

    /// Primitive period, then the shortest preperiod describing the same word.
    PeriodicCF normalized() const;

    /// The first `count` digits of preperiod + period repeated.
    Digits prefix(std::size_t count) const {
        Digits out;
        for (std::size_t k = 0; k < count; ++k)
            out.push_back(k < preperiod.size() ? preperiod[k] : period[(k - preperiod.size()) % period.size()]);
        return out;
    }

    friend bool operator==(const PeriodicCF& x, const PeriodicCF& y) {
        return x.preperiod == y.preperiod && x.period == y.period;
    }
};

/// Shortest word u with period = u^k.
inline Digits primitive_root(const Digits& period) {
    const std::size_t m = period.size();
    for (std::size_t d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        bool ok = true;
        for (std::size_t k = d; k < m && ok; ++k) ok = period[k] == period[k - d];
        if (ok) return Digits(period.begin(), period.begin() + static_cast<long>(d));
    }
    return period;
}

inline PeriodicCF PeriodicCF::normalized() const {
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    PeriodicCF out{preperiod, primitive_root(period), valid};
    while (!out.preperiod.empty() && out.preperiod.back() == out.period.back()) {
        out.preperiod.pop_back();
        std::rotate(out.period.rbegin(), out.period.rbegin() + 1, out.period.rend());
    }
    return out;
}

/// Builds the word and decides its validity with the region engine.
inline PeriodicCF make_periodic(Digits preperiod, Digits period, long max_periods = kDefaultCyclePeriods) {
    PeriodicCF cf{std::move(preperiod), std::move(period), false};
    cf = cf.normalized();
    cf.valid = is_valid_eventually_periodic(cf.preperiod, cf.period, max_periods);
    return cf;
}

/// Value of <digits; tail>, i.e. (p_k tail + p_{k-1}) / (q_k tail + q_{k-1}).
inline Surd fold_with_tail(const Digits& digits, const Surd& tail) {
    if (digits.empty()) return tail;
    const QPair pq = q_pair(digits);
    const std::size_t k = digits.size() - 1;
    const Surd p1(pq.p[k]), q1(pq.q[k]);
    const Surd p0(k == 0 ? GaussianInt(1) : pq.p[k - 1]);
    const Surd q0(k == 0 ? GaussianInt(0) : pq.q[k - 1]);
    return (p1 * tail + p0) / (q1 * tail + q0);
}

/// The two fixed points of w -> <period; w> and the attracting one.
struct FixedPoints {
    Surd roots[2];
    int attracting = -1;  ///< index into roots, -1 when neither attracts
};

inline FixedPoints period_fixed_points(const Digits& period) {
    if (period.empty()) throw std::invalid_argument("period must be nonempty");
    const QPair pq = q_pair(period);
    const std::size_t m = period.size() - 1;
    const GaussianInt p = pq.p[m], q = pq.q[m];
    const GaussianInt pp = m == 0 ? GaussianInt(1) : pq.p[m - 1];
    const GaussianInt qq = m == 0 ? GaussianInt(0) : pq.q[m - 1];
    // q w^2 + (qq - p) w - pp = 0
    const GaussianInt lin = qq - p;
    const GaussianInt disc = lin * lin + GaussianInt(4) * q * pp;
    if (gaussian_sqrt(disc)) throw std::invalid_argument("period has a rational fixed point");
    const RatGauss two_q = RatGauss(GaussianInt(2) * q);
    FixedPoints f;
    f.roots[0] = Surd::make(RatGauss(p - qq) / two_q, RatGauss(1) / two_q, disc);
    f.roots[1] = f.roots[0].conjugate();
    for (int k = 0; k < 2; ++k) {
        // derivative at the fixed point is det / (q w + qq)^2 with |det| = 1
        const Surd lambda = Surd(q) * f.roots[k] + Surd(qq);
        if (sign_norm_minus(lambda, Rational(1)) > 0) f.attracting = k;
    }
    return f;
}

/**
 * Exact value of an eventually periodic word. The root is chosen by
 * re-expanding both candidates over two periods. A word that is not a valid
 * expansion gets its formal value, the limit of its convergents.
 */
inline Surd eval_periodic(const PeriodicCF& cf) {
    const FixedPoints f = period_fixed_points(cf.period);
    const std::size_t check = cf.preperiod.size() + 2 * cf.period.size() + 1;
    const Digits expected = cf.prefix(check);
    std::optional<int> matched;
    Surd values[2];
    for (int k = 0; k < 2; ++k) {
        values[k] = fold_with_tail(cf.preperiod, f.roots[k]);
        const Expansion e = expand(values[k], check);
        if (e.digits == expected) {
            if (matched) throw inconsistency("both fixed points reproduce the periodic word");
            matched = k;
        }
    }
    if (matched) {
        if (f.attracting != *matched) throw inconsistency("expansion root is not the attracting fixed point");
        return values[*matched];
    }
    if (cf.valid) throw inconsistency("valid periodic word not reproduced by either fixed point");
    if (f.attracting < 0) throw std::domain_error("periodic word has no attracting fixed point");
    return values[f.attracting];
}

inline constexpr std::size_t kDefaultCycleBudget = 2000;

/// Runs the exact expansion until a remainder repeats.
inline PeriodicCF expand_to_cycle(const Surd& x, std::size_t budget = kDefaultCycleBudget) {
    if (x.is_rational()) throw std::invalid_argument("expand_to_cycle needs an irrational input");
    std::map<Surd, std::size_t> seen;
    Digits digits;
    Surd z = x;
    for (std::size_t n = 0; n <= budget; ++n) {
        auto [it, fresh] = seen.emplace(z, n);
        if (!fresh) {
            const std::size_t j = it->second;
            PeriodicCF cf{Digits(digits.begin(), digits.begin() + static_cast<long>(j)),
                          Digits(digits.begin() + static_cast<long>(j), digits.end()), true};
            return cf;
        }
        const GaussianInt a = nearest_gauss(z);
        digits.push_back(a);
        z = (z - Surd(a)).inverse();
    }
    throw budget_exhausted("no repeated remainder within " + std::to_string(budget) + " digits");
}

inline bool is_purely_periodic(const Surd& x, std::size_t budget = kDefaultCycleBudget) {
    return expand_to_cycle(x, budget).preperiod.empty();
}

// ---------------------------------------------------------------------------
// Conjugate criteria
// ---------------------------------------------------------------------------

inline constexpr long kDefaultConjugatePeriods = 6;

/**
 * For a purely periodic x with conjugate eta: |eta| < 1, the root-sum identity
 * eta + x = p/q - q'/q at every period boundary, and strictly shrinking
 * distances from q_{mj-2}/q_{mj-1} to -eta.
 */
inline CheckReport check_necessary(const Surd& x, long periods = kDefaultConjugatePeriods,
                                   std::size_t budget = kDefaultCycleBudget) {
    const PeriodicCF cf = expand_to_cycle(x, budget);
    if (!cf.preperiod.empty()) throw std::invalid_argument("check_necessary needs a purely periodic input");
    const Surd eta = x.conjugate();
    CheckReport r;
    r.checks.push_back({"conjugate_in_unit_disk", 0, sign_norm_minus(eta, Rational(1)) < 0});
    const std::size_t m = cf.period.size();
    const Expansion e = from_digits(cf.prefix(m * static_cast<std::size_t>(periods)));
    std::optional<Surd> last_error;
    for (long j = 1; j <= periods; ++j) {
        const long n = static_cast<long>(m) * j - 1;
        const RatGauss q1 = RatGauss(e.q_at(n));
        const Surd sum = Surd(RatGauss(e.p_at(n)) / q1 - RatGauss(e.q_at(n - 1)) / q1);
        r.checks.push_back({"root_sum", j, sum == eta + x});
        const Surd error = Surd(RatGauss(e.q_at(n - 1)) / q1) + eta;
        if (last_error) r.checks.push_back({"conjugate_limit", j, compare_abs(error, *last_error) < 0});
        last_error = error;
    }
    return r;
}

/// k_0 = 1, k_{n+1} = sqrt(8) - 1/k_n, exactly in Q(sqrt 2).
inline std::vector<Surd> k_sequence(std::size_t count) {
    std::vector<Surd> k;
    if (count == 0) return k;
    k.emplace_back(1);
    const Surd root8 = Surd::make(RatGauss(0), RatGauss(2), GaussianInt(2));
    while (k.size() < count) k.push_back(root8 - k.back().inverse());
    return k;
}

/// |u|^2 < |v|^2 (or <=) across different radicands, by interval refinement.
inline int compare_abs_certified(const Surd& u, const Surd& v) {
    if (u.is_rational() || v.is_rational() || u.d() == v.d()) return compare_abs(u, v);
    for (long bits = 64; bits <= detail::kMaxSignBits; bits *= 2) {
        const Interval diff = u.enclose(bits).norm() - v.enclose(bits).norm();
        if (auto s = diff.strict_sign()) return *s;
    }
    throw precision_exhausted("moduli not separated");
}

struct SufficientReport {
    bool abs_above_one = false;
    bool conjugate_in_square = false;
    bool digits_large = false;
    bool hypotheses_hold() const { return abs_above_one && conjugate_in_square && digits_large; }
    bool purely_periodic = false;
    PeriodicCF expansion;
    CheckReport checks;  ///< k-sequence bounds and the conclusion
    bool passed() const { return checks.passed(); }
};

/**
 * Tests |x| > 1, conjugate in the square and all digits of norm >= 8. When
 * they hold, pure periodicity is asserted together with |zeta_n| <= 1/k_n for
 * the conjugated remainders zeta_n over one preperiod plus two periods.
 */
inline SufficientReport check_sufficient(const Surd& x, std::size_t budget = kDefaultCycleBudget) {
    SufficientReport r;
    r.expansion = expand_to_cycle(x, budget);
    r.purely_periodic = r.expansion.preperiod.empty();
    const Surd eta = x.conjugate();
    r.abs_above_one = sign_norm_minus(x, Rational(1)) > 0;
    r.conjugate_in_square = in_fundamental_domain(eta);
    r.digits_large = true;
    for (const Digits* part : {&r.expansion.preperiod, &r.expansion.period})
        for (const GaussianInt& a : *part)
            if (a.norm() < 8) r.digits_large = false;
    if (!r.hypotheses_hold()) return r;
    r.checks.checks.push_back({"purely_periodic", 0, r.purely_periodic});
    const std::size_t count = r.expansion.preperiod.size() + 2 * r.expansion.period.size();
    const Digits digits = r.expansion.prefix(count);
    const std::vector<Surd> k = k_sequence(count + 1);
    Surd zeta = eta;
    for (std::size_t n = 0; n <= count; ++n) {
        // |zeta_n| <= 1/k_n  <=>  |zeta_n k_n|^2 <= 1
        const int s = compare_abs_certified(zeta, k[n].inverse());
        r.checks.checks.push_back({"conjugate_remainder_bound", static_cast<long>(n), s <= 0});
        if (n < count) zeta = (zeta - Surd(digits[n])).inverse();
    }
    return r;
}

// ---------------------------------------------------------------------------
// Reversal and singularization
// ---------------------------------------------------------------------------

inline bool is_reversible(const Digits& period, long max_periods = kDefaultCyclePeriods) {
    return is_valid_periodic(Digits(period.rbegin(), period.rend()), max_periods);
}

/// Middle digits c for which a + 1/(c + 1/b) = (a + 2/c) + 1/(-c + 1/(b + 2/c)) stays in Z[i].
inline bool is_singular_digit(const GaussianInt& c) { return c.norm() == 4 || c.norm() == 2; }

/// 2/c for a singular digit.
inline GaussianInt singular_shift(const GaussianInt& c) {
    if (!is_singular_digit(c)) throw std::invalid_argument("digit " + c.str() + " admits no singularization");
    return (RatGauss(2) / RatGauss(c)).to_gaussian();
}

/// Rewrites (.., a, c, b, ..) at index `at` into (.., a + 2/c, -c, b + 2/c, ..), same value.
inline Digits singularize(const Digits& digits, std::size_t at) {
    if (at == 0 || at + 1 >= digits.size())
        throw std::invalid_argument("singularization needs neighbours on both sides");
    const GaussianInt t = singular_shift(digits[at]);
    Digits out = digits;
    out[at - 1] += t;
    out[at] = -digits[at];
    out[at + 1] += t;
    const auto value = [](const Digits& w) -> std::optional<RatGauss> {
        try {
            return fold(w);
        } catch (const std::domain_error&) {
            return std::nullopt;
        }
    };
    if (value(out) != value(digits)) throw inconsistency("singularization changed the value");
    return out;
}

/// The same rewrite on a period read cyclically; needs at least three digits.
inline Digits singularize_cyclic(const Digits& period, std::size_t at) {
    const std::size_t m = period.size();
    if (m < 3) throw std::invalid_argument("cyclic singularization needs a period of length >= 3");
    if (at >= m) throw std::out_of_range("singularization index out of range");
    const GaussianInt t = singular_shift(period[at]);
    Digits out = period;
    out[(at + m - 1) % m] += t;
    out[at] = -period[at];
    out[(at + 1) % m] += t;
    return out;
}

// ---------------------------------------------------------------------------
// Counterexamples to dropping hypotheses of the sufficient criterion
// ---------------------------------------------------------------------------

enum class CounterexampleFamily { a, b, c };

inline const char* to_string(CounterexampleFamily f) {
    switch (f) {
        case CounterexampleFamily::a: return "a";
        case CounterexampleFamily::b: return "b";
        default: return "c";
    }
}

struct CounterexampleParams {
    GaussianInt M{2, -2};
    GaussianInt N{2, -2};
    Digits period{GaussianInt(3, 1), GaussianInt(4)};  ///< family b
};

struct CounterexampleReport {
    CounterexampleFamily family = CounterexampleFamily::a;
    Surd xi;
    Surd eta;
    PeriodicCF expansion;           ///< computed expansion of xi
    bool seed_valid = false;        ///< the periodic word the construction starts from
    bool conjugate_in_square = false;
    bool conjugate_in_unit_disk = false;
    bool abs_above_one = false;
    bool has_small_digit = false;   ///< some digit of norm < 8
    bool purely_periodic = false;
    bool matches_closed_form = false;
    /// The property combination the construction is meant to exhibit.
    bool advertised() const {
        switch (family) {
            case CounterexampleFamily::a:
                return !conjugate_in_square && conjugate_in_unit_disk && has_small_digit && !purely_periodic;
            case CounterexampleFamily::b:
                return !conjugate_in_square && !has_small_digit && !purely_periodic;
            default:
                return conjugate_in_square && has_small_digit && !purely_periodic;
        }
    }
    bool passed() const { return seed_valid && matches_closed_form && advertised(); }
};

namespace detail {

inline void fill_properties(CounterexampleReport& r) {
    r.eta = r.xi.conjugate();
    r.expansion = expand_to_cycle(r.xi);
    r.conjugate_in_square = in_fundamental_domain(r.eta);
    r.conjugate_in_unit_disk = sign_norm_minus(r.eta, Rational(1)) < 0;
    r.abs_above_one = sign_norm_minus(r.xi, Rational(1)) > 0;
    r.purely_periodic = r.expansion.preperiod.empty();
    for (const Digits* part : {&r.expansion.preperiod, &r.expansion.period})
        for (const GaussianInt& a : *part)
            if (a.norm() < 8) r.has_small_digit = true;
}

}  // namespace detail

/// Is 1/M in the fundamental square?
inline bool inverse_in_square(const GaussianInt& m) {
    return !m.is_zero() && in_fundamental_domain(RatGauss(m).inverse());
}

inline CounterexampleReport generate_counterexample(CounterexampleFamily family,
                                                    const CounterexampleParams& params = {}) {
    CounterexampleReport r;
    r.family = family;
    const GaussianInt one_i(1, 1);
    switch (family) {
        case CounterexampleFamily::a: {
            const GaussianInt &M = params.M, &N = params.N;
            if (M.re() < 2 || M.im() > -2 || N.re() < 2 || N.im() > -2)
                throw std::invalid_argument("family a needs M = M1 - i M2, N = N1 - i N2 with M1, M2, N1, N2 >= 2");
            const Digits seed{M, one_i, N, GaussianInt(2, 4)};
            r.seed_valid = is_valid_periodic(seed) && is_reversible(seed);
            const Surd inner = eval_periodic({{}, seed, r.seed_valid});
            r.xi = Surd(GaussianInt(3, 4)) + inner.inverse();
            detail::fill_properties(r);
            const PeriodicCF claimed{{GaussianInt(1), -N, -one_i, -M},
                                     {GaussianInt(-2, -4), -N, -one_i, -M}, false};
            r.matches_closed_form = r.eta == eval_periodic(claimed);
            break;
        }
        case CounterexampleFamily::b: {
            const Digits& seed = params.period;
            if (seed.size() < 2) throw std::invalid_argument("family b needs a period of length >= 2");
            for (const GaussianInt& a : seed)
                if (a.norm() < 8) throw std::invalid_argument("family b needs period digits of norm >= 8");
            if (seed[seed.size() - 2].re() <= 0)
                throw std::invalid_argument("family b needs the next-to-last period digit to have Re > 0");
            const GaussianInt a0 = seed.back() + GaussianInt(1);
            if (a0.norm() < 8) throw std::invalid_argument("family b needs the leading digit to have norm >= 8");
            r.seed_valid = is_valid_periodic(seed) && is_reversible(seed);
            const Surd inner = eval_periodic({{}, seed, r.seed_valid});
            r.xi = Surd(a0) + inner.inverse();
            detail::fill_properties(r);
            // eta = a0 - <reversed period>, read off the reversed word
            const Digits reversed(seed.rbegin(), seed.rend());
            const Surd back = eval_periodic({{}, reversed, is_valid_periodic(reversed)});
            r.matches_closed_form = r.eta == Surd(a0) - back && r.expansion.preperiod == Digits{a0} &&
                                    r.expansion.period == seed;
            break;
        }
        case CounterexampleFamily::c: {
            const GaussianInt& M = params.M;
            if (!inverse_in_square(M) || M.re() <= 0)
                throw std::invalid_argument("family c needs 1/M in the fundamental square and Re(M) > 0");
            const GaussianInt u(2, 1), v(-2, 1);
            const Digits formal{u, v, M};
            r.seed_valid = !is_valid_periodic(formal) && is_valid_periodic({M, v, u});
            r.xi = eval_periodic({{}, formal, false});
            detail::fill_properties(r);
            const PeriodicCF claimed{{u, v, M + GaussianInt(1)}, {v, u, M}, true};
            const Surd tail = eval_periodic({{}, {M, v, u}, true});
            r.matches_closed_form = r.expansion == claimed && r.eta == -tail.inverse();
            break;
        }
    }
    return r;
}

}  // namespace hcf
