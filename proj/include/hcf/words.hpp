#pragma once

/**
 * @file words.hpp
 * @brief Digit words: generators, the repetition function, square and
 *        mirrored-square prefix patterns, and certificates built on them
 *        (bounded quotients, the continuant-growth inequality behind the
 *        transcendence criteria, continuant submultiplicativity).
 *
 * A word is a_1 a_2 a_3 ... over a finite set of Gaussian integers and is
 * stored 0-based: at(0) = a_1. Expansions attach it as [0; a_1, a_2, ...].
 */

#include "hcf/error.hpp"
#include "hcf/expansion.hpp"
#include "hcf/interval.hpp"
#include "hcf/region.hpp"
#include "hcf/surd.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hcf {

// ---------------------------------------------------------------------------
// Word generators
// ---------------------------------------------------------------------------

enum class WordKind { explicit_list, periodic, automaton };

class Word {
public:
    static Word explicit_word(Digits letters) {
        if (letters.empty()) throw std::invalid_argument("explicit word must be nonempty");
        Word w;
        w.kind_ = WordKind::explicit_list;
        w.head_ = std::move(letters);
        return w;
    }

    static Word periodic(Digits preperiod, Digits period) {
        if (period.empty()) throw std::invalid_argument("periodic word needs a nonempty period");
        Word w;
        w.kind_ = WordKind::periodic;
        w.head_ = std::move(preperiod);
        w.period_ = std::move(period);
        return w;
    }

    /**
     * Deterministic automaton reading the base-`base` digits of the index,
     * most significant first, from state 0; the letter is the output of the
     * final state.
     */
    static Word automaton(int base, std::vector<std::vector<int>> transitions, Digits outputs) {
        if (base < 2) throw std::invalid_argument("automaton base must be at least 2");
        if (transitions.empty() || transitions.size() != outputs.size())
            throw std::invalid_argument("automaton needs one output per state");
        for (const auto& row : transitions) {
            if (row.size() != static_cast<std::size_t>(base))
                throw std::invalid_argument("automaton needs one transition per digit");
            for (int t : row)
                if (t < 0 || static_cast<std::size_t>(t) >= transitions.size())
                    throw std::invalid_argument("automaton transition out of range");
        }
        Word w;
        w.kind_ = WordKind::automaton;
        w.base_ = base;
        w.transitions_ = std::move(transitions);
        w.head_ = std::move(outputs);
        return w;
    }

    /// Thue-Morse word t_0 t_1 ... with letters (x, y) for (0, 1).
    static Word thue_morse(const GaussianInt& x, const GaussianInt& y) {
        return automaton(2, {{0, 1}, {1, 0}}, {x, y});
    }

    WordKind kind() const { return kind_; }
    int base() const { return base_; }
    const std::vector<std::vector<int>>& transitions() const { return transitions_; }
    /// Explicit letters, preperiod, or automaton outputs.
    const Digits& head() const { return head_; }
    const Digits& period() const { return period_; }

    std::optional<std::size_t> length() const {
        if (kind_ == WordKind::explicit_list) return head_.size();
        return std::nullopt;
    }

    GaussianInt at(std::size_t k) const {
        switch (kind_) {
            case WordKind::explicit_list:
                if (k >= head_.size()) throw std::out_of_range("index beyond the end of an explicit word");
                return head_[k];
            case WordKind::periodic:
                if (k < head_.size()) return head_[k];
                return period_[(k - head_.size()) % period_.size()];
            default: {
                std::vector<int> digits;
                for (std::size_t v = k; v > 0; v /= static_cast<std::size_t>(base_))
                    digits.push_back(static_cast<int>(v % static_cast<std::size_t>(base_)));
                int state = 0;
                for (auto it = digits.rbegin(); it != digits.rend(); ++it)
                    state = transitions_[static_cast<std::size_t>(state)][static_cast<std::size_t>(*it)];
                return head_[static_cast<std::size_t>(state)];
            }
        }
    }

    Digits prefix(std::size_t count) const {
        Digits out;
        out.reserve(count);
        for (std::size_t k = 0; k < count; ++k) out.push_back(at(k));
        return out;
    }

    /// Letters that can occur (sorted, distinct).
    Digits alphabet() const {
        Digits letters = head_;
        letters.insert(letters.end(), period_.begin(), period_.end());
        std::sort(letters.begin(), letters.end());
        letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
        return letters;
    }

private:
    WordKind kind_ = WordKind::explicit_list;
    Digits head_;
    Digits period_;
    int base_ = 0;
    std::vector<std::vector<int>> transitions_;
};

// ---------------------------------------------------------------------------
// Repetition function
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultRepetitionBudget = 1u << 22;

namespace detail {

/// Letters of a prefix as small integer codes.
inline std::vector<std::uint32_t> letter_codes(const Digits& letters) {
    std::map<GaussianInt, std::uint32_t> index;
    std::vector<std::uint32_t> out;
    out.reserve(letters.size());
    for (const GaussianInt& a : letters) {
        const auto it = index.emplace(a, static_cast<std::uint32_t>(index.size())).first;
        out.push_back(it->second + 1);
    }
    return out;
}

inline constexpr std::uint64_t kHashModulus = (std::uint64_t{1} << 61) - 1;
inline constexpr std::uint64_t kHashBase = 1000003;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p >> 61) + static_cast<std::uint64_t>(p & kHashModulus);
    if (r >= kHashModulus) r -= kHashModulus;
    return r;
}

/// Lazily extended code buffer over a word.
class CodeBuffer {
public:
    explicit CodeBuffer(const Word& w) : word_(w) {}

    std::uint32_t operator[](std::size_t k) {
        while (k >= codes_.size()) {
            const GaussianInt a = word_.at(codes_.size());
            codes_.push_back(index_.emplace(a, static_cast<std::uint32_t>(index_.size() + 1)).first->second);
        }
        return codes_[k];
    }

private:
    const Word& word_;
    std::vector<std::uint32_t> codes_;
    std::map<GaussianInt, std::uint32_t> index_;
};

}  // namespace detail

/**
 * r(n): least m >= n + 1 such that the length-n suffix of a_1..a_m also
 * starts at some i in [1, m - n]. Rolling hash with direct verification.
 */
inline std::size_t repetition(const Word& w, std::size_t n, std::size_t budget = kDefaultRepetitionBudget) {
    if (n == 0) throw std::invalid_argument("repetition needs n >= 1");
    detail::CodeBuffer x(w);
    std::uint64_t top = 1;  // base^(n-1)
    for (std::size_t k = 1; k < n; ++k) top = detail::mul_mod(top, detail::kHashBase);
    auto push = [](std::uint64_t h, std::uint32_t c) {
        return (detail::mul_mod(h, detail::kHashBase) + c) % detail::kHashModulus;
    };
    auto drop = [&](std::uint64_t h, std::uint32_t c) {
        return (h + detail::kHashModulus - detail::mul_mod(top, c)) % detail::kHashModulus;
    };
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;
    std::uint64_t h = 0;
    for (std::size_t k = 0; k < n; ++k) h = push(h, x[k]);
    std::vector<std::uint64_t> hashes{h};  // hashes[s] = hash of factor starting at s
    for (std::size_t m = n + 1; m <= budget; ++m) {
        // factor at 0-based start m - n - 1 becomes available; test factor at m - n
        const std::size_t prev = m - n - 1;
        seen[hashes[prev]].push_back(prev);
        h = push(drop(hashes.back(), x[m - n - 1]), x[m - 1]);
        hashes.push_back(h);
        const std::size_t cur = m - n;
        if (auto it = seen.find(h); it != seen.end()) {
            for (std::size_t s : it->second) {
                bool same = true;
                for (std::size_t k = 0; k < n && same; ++k) same = x[s + k] == x[cur + k];
                if (same) return m;
            }
        }
    }
    throw budget_exhausted("repetition search exceeded " + std::to_string(budget) + " letters");
}

struct RepProfile {
    std::vector<std::pair<std::size_t, std::size_t>> n_values;  ///< (n, r(n))
    std::size_t warmup = 0;                                     ///< n values above this enter the estimate
    std::vector<Rational> running_min;                          ///< min r(k)/k over warmup < k <= n
    Rational estimate;                                          ///< finite-horizon value, not the liminf
};

inline RepProfile rep_exponent_estimate(const Word& w, std::size_t horizon,
                                        std::size_t budget = kDefaultRepetitionBudget) {
    if (horizon < 4) throw std::invalid_argument("rep_exponent_estimate needs horizon >= 4");
    RepProfile p;
    p.warmup = horizon / 2;
    std::optional<Rational> best;
    for (std::size_t n = 1; n <= horizon; ++n) {
        const std::size_t r = repetition(w, n, budget);
        p.n_values.emplace_back(n, r);
        if (n > p.warmup) {
            const Rational q = make_rational(Integer(static_cast<unsigned long>(r)), Integer(static_cast<unsigned long>(n)));
            if (!best || q < *best) best = q;
            p.running_min.push_back(*best);
        }
    }
    p.estimate = *best;
    return p;
}

// ---------------------------------------------------------------------------
// Square and mirrored-square prefixes
// ---------------------------------------------------------------------------

enum class WuvMode { square, club };

struct WuvTriple {
    std::size_t w = 0, u = 0, v = 0;
    Rational ratio() const {
        return make_rational(Integer(static_cast<unsigned long>(w + v)), Integer(static_cast<unsigned long>(u)));
    }
};

struct WUVDecomposition {
    WuvMode mode = WuvMode::square;
    std::size_t horizon = 0;
    std::vector<WuvTriple> triples;  ///< one per u, increasing u, least w + v

    bool empty() const { return triples.empty(); }
    Rational max_ratio() const {
        Rational m(0);
        for (const WuvTriple& t : triples) m = std::max(m, t.ratio());
        return m;
    }
    bool u_strictly_increasing() const {
        for (std::size_t k = 1; k < triples.size(); ++k)
            if (triples[k].u <= triples[k - 1].u) return false;
        return true;
    }
};

/// Does prefix satisfy W U V U (square) or W U V reverse(U) (club) for this triple?
inline bool matches_pattern(const Digits& prefix, const WuvTriple& t, WuvMode mode) {
    const std::size_t s = t.w + t.u + t.v;
    if (t.u == 0 || s + t.u > prefix.size()) return false;
    for (std::size_t k = 0; k < t.u; ++k) {
        const GaussianInt& second = mode == WuvMode::square ? prefix[s + k] : prefix[s + t.u - 1 - k];
        if (prefix[t.w + k] != second) return false;
    }
    return true;
}

/**
 * All pattern occurrences inside the first `horizon` letters, reduced to the
 * triple with least w + v for each length u (smallest w on ties).
 */
inline WUVDecomposition find_wuv(const Word& word, std::size_t horizon, WuvMode mode) {
    if (horizon < 8) throw std::invalid_argument("find_wuv needs horizon >= 8");
    const std::vector<std::uint32_t> x = detail::letter_codes(word.prefix(horizon));
    const std::size_t H = horizon;
    // best[u] = (end position key, w); key = s for square, e for club
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> best(H / 2 + 1);
    if (mode == WuvMode::square) {
        // lce[i][j]: longest common extension of positions i < j
        std::vector<std::vector<std::uint16_t>> lce(H + 1, std::vector<std::uint16_t>(H + 1, 0));
        for (std::size_t i = H; i-- > 0;)
            for (std::size_t j = H; j-- > i + 1;)
                lce[i][j] = x[i] == x[j] ? static_cast<std::uint16_t>(1 + lce[i + 1][j + 1]) : 0;
        for (std::size_t s = 1; s < H; ++s) {
            for (std::size_t w = 0; w < s; ++w) {
                const std::size_t L = std::min<std::size_t>({lce[w][s], s - w, H - s});
                for (std::size_t u = 1; u <= L; ++u)
                    if (!best[u]) best[u] = std::make_pair(s, w);
            }
        }
    } else {
        // rlce[i][j]: longest k with x[i + t] == x[j - t] for t < k, i < j
        std::vector<std::vector<std::uint16_t>> rlce(H + 1, std::vector<std::uint16_t>(H + 1, 0));
        for (std::size_t i = H; i-- > 0;)
            for (std::size_t j = i + 1; j < H; ++j)
                rlce[i][j] = x[i] == x[j] ? static_cast<std::uint16_t>(1 + (j >= 1 && i + 1 < j - 1 ? rlce[i + 1][j - 1] : 0)) : 0;
        for (std::size_t e = 1; e < H; ++e) {
            for (std::size_t w = 0; w < e; ++w) {
                const std::size_t L = std::min<std::size_t>(rlce[w][e], (e - w + 1) / 2);
                for (std::size_t u = 1; u <= L; ++u)
                    if (!best[u]) best[u] = std::make_pair(e, w);
            }
        }
    }
    WUVDecomposition d;
    d.mode = mode;
    d.horizon = horizon;
    for (std::size_t u = 1; u < best.size(); ++u) {
        if (!best[u]) continue;
        const auto [key, w] = *best[u];
        // square: s = w + u + v; club: e = w + 2u + v - 1
        const std::size_t v = mode == WuvMode::square ? key - w - u : key + 1 - w - 2 * u;
        d.triples.push_back({w, u, v});
    }
    return d;
}

/// Period p and start s such that letters s.. of the prefix repeat with period p
/// over a span of at least max(2p + 1, ceil(H / 2)).
struct PeriodicityWitness {
    std::size_t period = 0;
    std::size_t start = 0;
};

inline std::optional<PeriodicityWitness> detect_periodicity(const Digits& prefix) {
    const std::size_t H = prefix.size();
    for (std::size_t p = 1; 2 * p + 1 <= H; ++p) {
        std::size_t s = H - p;  // smallest s with prefix[k] == prefix[k + p] for s <= k < H - p
        while (s > 0 && prefix[s - 1] == prefix[s - 1 + p]) --s;
        const std::size_t span = H - s;
        if (span >= std::max(2 * p + 1, (H + 1) / 2)) return PeriodicityWitness{p, s};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounded quotients certificate
// ---------------------------------------------------------------------------

struct BadCertificate {
    Integer max_digit_norm;     ///< M^2 with M the largest |a_n|, n >= 1
    Interval M;                 ///< enclosure of M
    Interval C;                 ///< (M + 1)^-1 (M + 2)^-2
    Interval reverse_M;         ///< gamma / C + 1 from the converse direction
    bool growth_flagged = false;
    std::size_t checked = 0;
    std::size_t violations = 0;
    long bits = 0;
    bool consistent() const { return !growth_flagged && checked > 0 && violations == 0; }
};

inline constexpr long kCertificateBits = 96;

namespace detail {

/// Sign of |q x - p|^2 |q|^2 - C^2 using enclosures; nullopt when unresolved.
inline std::optional<int> compare_error(const ComplexInterval& x, const GaussianInt& p, const GaussianInt& q,
                                        const Interval& C) {
    const ComplexInterval err = ComplexInterval(RatGauss(q)) * x - ComplexInterval(RatGauss(p));
    const Interval lhs = err.norm() * Interval(Rational(q.norm()));
    return (lhs - C.square()).strict_sign();
}

}  // namespace detail

/**
 * For bounded digits the distance to any p/q exceeds C/|q|^2. Checks every
 * convergent in range and, for every q with |q|^2 <= cap, the closest
 * numerators around q x, with certified enclosures.
 */
inline BadCertificate badly_approximable_certificate(const Expansion& e, long cap = kDefaultNormCap,
                                                     long max_bits = 1024) {
    if (e.size() < 2) throw std::invalid_argument("certificate needs at least two digits");
    BadCertificate r;
    r.max_digit_norm = 0;
    for (std::size_t n = 1; n < e.size(); ++n) r.max_digit_norm = std::max(r.max_digit_norm, e.digits[n].norm());
    // digits whose size keeps growing carry no uniform constant
    if (e.size() >= 4) {
        const std::size_t half = e.size() / 2;
        Integer early = 0, late = 0;
        for (std::size_t n = 1; n < half; ++n) early = std::max(early, e.digits[n].norm());
        for (std::size_t n = half; n < e.size(); ++n) late = std::max(late, e.digits[n].norm());
        r.growth_flagged = late > 4 * early;
    }
    for (long bits = kCertificateBits; bits <= max_bits; bits *= 2) {
        r.bits = bits;
        r.M = Interval(Rational(r.max_digit_norm)).sqrt(bits);
        const Interval m1 = r.M + Interval(Rational(1));
        const Interval m2 = r.M + Interval(Rational(2));
        r.C = Interval(Rational(1)) / (m1 * m2.square());
        r.reverse_M = gamma_constant(bits) / r.C + Interval(Rational(1));
        if (r.growth_flagged) return r;
        ComplexInterval x;
        if (e.source) x = refine(*e.source, bits);
        else x = e.remainder_enclosure(0, bits);
        r.checked = 0;
        r.violations = 0;
        bool unresolved = false;
        auto test = [&](const GaussianInt& p, const GaussianInt& q) {
            const auto s = detail::compare_error(x, p, q, r.C);
            ++r.checked;
            if (!s) unresolved = true;
            else if (*s <= 0) ++r.violations;
        };
        for (std::size_t n = 0; n < e.size(); ++n) test(e.p[n], e.q[n]);
        const long bound = static_cast<long>(std::sqrt(static_cast<double>(cap))) + 1;
        for (long a = 1; a <= bound; ++a) {
            for (long b = 0; b <= bound; ++b) {
                if (a * a + b * b > cap) continue;
                const GaussianInt q(a, b);
                const ComplexInterval qx = ComplexInterval(RatGauss(q)) * x;
                const GaussianInt centre = nearest_gauss(RatGauss(qx.re().mid(), qx.im().mid()));
                for (long dr = -1; dr <= 1; ++dr)
                    for (long di = -1; di <= 1; ++di) test(centre + GaussianInt(dr, di), q);
            }
        }
        if (!unresolved) return r;
        if (x.max_width() == 0 || !e.source) break;
    }
    throw precision_exhausted("approximation bound not separated");
}

// ---------------------------------------------------------------------------
// Growth inequality for the square-pattern triples
// ---------------------------------------------------------------------------

struct Lemma51Entry {
    WuvTriple triple;
    bool holds = false;
};

struct Lemma51Report {
    double M = 0, N = 0, epsilon = 0;  ///< display values; verification is certified
    Rational N_exact;
    std::vector<Lemma51Entry> entries;
    long bits = 0;
    bool passed() const {
        for (const Lemma51Entry& t : entries)
            if (!t.holds) return false;
        return true;
    }
};

namespace detail {

/// RAII wrapper for an MPFR value.
class Mpfr {
public:
    explicit Mpfr(long bits) { mpfr_init2(v_, static_cast<mpfr_prec_t>(bits)); }
    ~Mpfr() { mpfr_clear(v_); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

private:
    mpfr_t v_;
};

/// log(|q|) = log(norm) / 2 rounded in direction rnd.
inline void half_log_norm(Mpfr& out, const Integer& norm, mpfr_rnd_t rnd) {
    mpfr_set_z(out.get(), norm.get_mpz_t(), rnd);
    mpfr_log(out.get(), out.get(), rnd);
    mpfr_div_2ui(out.get(), out.get(), 1, rnd);
}

/// Bound on M = 1 + max_n |q_n|^(1/n) in direction rnd.
inline void growth_base(Mpfr& out, const Expansion& e, mpfr_rnd_t rnd, long bits) {
    Mpfr t(bits);
    mpfr_set_zero(out.get(), 1);
    for (std::size_t n = 1; n < e.size(); ++n) {
        half_log_norm(t, e.q[n].norm(), rnd);
        mpfr_div_ui(t.get(), t.get(), static_cast<unsigned long>(n), rnd);
        if (mpfr_cmp(t.get(), out.get()) > 0) mpfr_set(out.get(), t.get(), rnd);
    }
    mpfr_exp(out.get(), out.get(), rnd);
    mpfr_add_ui(out.get(), out.get(), 1, rnd);
}

}  // namespace detail

/**
 * With M = 1 + sup |q_n|^(1/n) and N = 2 + sup (2w + v)/u over the examined
 * range, eps = log(psi) / (N log M) makes psi^u >= |q_w q_(w+u+v)|^eps; the
 * inequality is equivalent to u N log M >= log |q_w q_(w+u+v)|, which is
 * verified with outward-rounded logarithms.
 */
inline Lemma51Report lemma51_check(const Expansion& e, const WUVDecomposition& d, long max_bits = 4096) {
    Lemma51Report r;
    if (d.triples.empty()) return r;
    for (const WuvTriple& t : d.triples)
        if (t.w + t.u + t.v >= e.size()) throw std::out_of_range("triple beyond the computed expansion");
    Rational n_sup(0);
    for (const WuvTriple& t : d.triples)
        n_sup = std::max(n_sup, make_rational(Integer(static_cast<unsigned long>(2 * t.w + t.v)),
                                              Integer(static_cast<unsigned long>(t.u))));
    r.N_exact = Rational(2) + n_sup;
    for (long bits = 128; bits <= max_bits; bits *= 2) {
        r.bits = bits;
        detail::Mpfr m_lo(bits), m_hi(bits), log_m(bits), n_lo(bits), lhs(bits), rhs_lo(bits), rhs_hi(bits);
        detail::growth_base(m_lo, e, MPFR_RNDD, bits);
        detail::growth_base(m_hi, e, MPFR_RNDU, bits);
        mpfr_log(log_m.get(), m_lo.get(), MPFR_RNDD);
        mpfr_set_q(n_lo.get(), r.N_exact.get_mpq_t(), MPFR_RNDD);
        r.entries.clear();
        bool unresolved = false;
        for (const WuvTriple& t : d.triples) {
            mpfr_mul(lhs.get(), log_m.get(), n_lo.get(), MPFR_RNDD);
            mpfr_mul_ui(lhs.get(), lhs.get(), static_cast<unsigned long>(t.u), MPFR_RNDD);
            const Integer norm = e.q[t.w].norm() * e.q[t.w + t.u + t.v].norm();
            detail::half_log_norm(rhs_hi, norm, MPFR_RNDU);
            detail::half_log_norm(rhs_lo, norm, MPFR_RNDD);
            if (mpfr_cmp(lhs.get(), rhs_hi.get()) >= 0) {
                r.entries.push_back({t, true});
                continue;
            }
            // upper bound of the left side against the lower bound of the right
            detail::Mpfr lhs_hi(bits), log_hi(bits), n_hi(bits);
            mpfr_log(log_hi.get(), m_hi.get(), MPFR_RNDU);
            mpfr_set_q(n_hi.get(), r.N_exact.get_mpq_t(), MPFR_RNDU);
            mpfr_mul(lhs_hi.get(), log_hi.get(), n_hi.get(), MPFR_RNDU);
            mpfr_mul_ui(lhs_hi.get(), lhs_hi.get(), static_cast<unsigned long>(t.u), MPFR_RNDU);
            if (mpfr_cmp(lhs_hi.get(), rhs_lo.get()) < 0) {
                r.entries.push_back({t, false});
            } else {
                unresolved = true;
                break;
            }
        }
        if (!unresolved) {
            detail::Mpfr psi(bits);
            mpfr_sqrt_ui(psi.get(), 5, MPFR_RNDN);
            mpfr_add_ui(psi.get(), psi.get(), 1, MPFR_RNDN);
            mpfr_div_2ui(psi.get(), psi.get(), 1, MPFR_RNDN);
            mpfr_log(psi.get(), psi.get(), MPFR_RNDN);
            mpfr_div_2ui(psi.get(), psi.get(), 1, MPFR_RNDN);  // log psi = log(phi) / 2
            r.M = m_hi.to_double();
            r.N = r.N_exact.get_d();
            r.epsilon = psi.to_double() / (r.N * std::log(r.M));
            return r;
        }
    }
    throw precision_exhausted("growth inequality not separated");
}

// ---------------------------------------------------------------------------
// Transcendence hypotheses on a finite prefix
// ---------------------------------------------------------------------------

enum class Evidence { not_applicable_periodic, bounded_prefix, growing_prefix, insufficient };

inline const char* to_string(Evidence v) {
    switch (v) {
        case Evidence::not_applicable_periodic: return "not_applicable_periodic";
        case Evidence::bounded_prefix: return "bounded_prefix_evidence";
        case Evidence::growing_prefix: return "growing_prefix_evidence";
        default: return "insufficient";
    }
}

struct HypothesisReport {
    std::size_t horizon = 0;
    bool valid_prefix = false;
    bool digits_at_least_sqrt8 = false;     ///< every |a_n|^2 >= 8
    std::optional<PeriodicityWitness> periodic;
    bool non_periodic() const { return !periodic.has_value(); }
    WUVDecomposition chain;
    bool chain_found = false;               ///< at least two triples, strictly increasing u
    Rational chain_max_ratio;
    bool repeated_w = false;                ///< some |W| shared by two triples
    bool w_increasing = false;              ///< |W| strictly increasing along the chain
    bool distinct_preceding_letters = false;  ///< letter before each U differs between occurrences
    Evidence evidence = Evidence::insufficient;
    std::vector<std::string> failed;        ///< names of hypotheses that failed
};

/**
 * Evidence report for the word as the expansion [0; a_1, a_2, ...]: validity
 * of the prefix, the sqrt(8) digit bound, non-periodicity, and a square-pattern
 * chain. Never a proof.
 */
inline HypothesisReport transcendence_hypothesis_check(const Word& word, std::size_t horizon) {
    if (horizon < 16) throw std::invalid_argument("hypothesis check needs horizon >= 16");
    HypothesisReport r;
    r.horizon = horizon;
    const Digits prefix = word.prefix(horizon);
    r.digits_at_least_sqrt8 = std::all_of(prefix.begin(), prefix.end(), [](const GaussianInt& a) { return a.norm() >= 8; });
    if (r.digits_at_least_sqrt8) {
        r.valid_prefix = true;  // every step from the full square keeps the full square
    } else {
        Digits with_zero{GaussianInt(0)};
        with_zero.insert(with_zero.end(), prefix.begin(), prefix.end());
        r.valid_prefix = is_valid_prefix(with_zero);
    }
    if (!r.valid_prefix) r.failed.emplace_back("valid_prefix");
    if (!r.digits_at_least_sqrt8) r.failed.emplace_back("digit_norm_at_least_8");
    r.periodic = detect_periodicity(prefix);
    if (r.periodic) {
        r.failed.emplace_back("non_periodic");
        r.evidence = Evidence::not_applicable_periodic;
        return r;
    }
    r.chain = find_wuv(word, horizon, WuvMode::square);
    r.chain_found = r.chain.triples.size() >= 2 && r.chain.u_strictly_increasing();
    r.chain_max_ratio = r.chain.max_ratio();
    if (!r.chain_found) {
        r.failed.emplace_back("square_chain");
        return r;
    }
    std::map<std::size_t, int> w_count;
    for (const WuvTriple& t : r.chain.triples) ++w_count[t.w];
    for (const auto& [w, c] : w_count)
        if (c >= 2) r.repeated_w = true;
    r.w_increasing = true;
    r.distinct_preceding_letters = true;
    for (std::size_t k = 0; k < r.chain.triples.size(); ++k) {
        const WuvTriple& t = r.chain.triples[k];
        if (k > 0 && t.w <= r.chain.triples[k - 1].w) r.w_increasing = false;
        // 1-based a_w and a_(w+u+v): the letters just before each copy of U
        if (t.w == 0 || prefix[t.w - 1] == prefix[t.w + t.u + t.v - 1]) r.distinct_preceding_letters = false;
    }
    if (r.valid_prefix && r.repeated_w) r.evidence = Evidence::bounded_prefix;
    else if (r.valid_prefix && r.digits_at_least_sqrt8 && r.w_increasing && r.distinct_preceding_letters)
        r.evidence = Evidence::growing_prefix;
    return r;
}

// ---------------------------------------------------------------------------
// Continuant submultiplicativity
// ---------------------------------------------------------------------------

struct SubmultiplicativityReport {
    GaussianInt qa, qb, qab;
    Rational ratio_squared;  ///< |q(ab)|^2 / (|q(a)|^2 |q(b)|^2)
    bool within_working_bound = false;  ///< ratio <= 2 + sqrt(2)
};

/// ratio^2 <= (2 + sqrt 2)^2 = 6 + 4 sqrt 2, decided exactly.
inline bool within_two_plus_sqrt2(const Rational& ratio_squared) {
    const Rational t = ratio_squared - 6;
    return t <= 0 || t * t <= 32;
}

inline SubmultiplicativityReport continuant_submultiplicativity(const Digits& a, const Digits& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("continuant words must be nonempty");
    Digits ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    auto valid = [](const Digits& w) {
        Digits with_zero{GaussianInt(0)};
        with_zero.insert(with_zero.end(), w.begin(), w.end());
        return is_valid_prefix(with_zero);
    };
    if (!valid(a) || !valid(b) || !valid(ab)) throw std::invalid_argument("continuant words must be valid prefixes");
    SubmultiplicativityReport r;
    r.qa = continuant(a);
    r.qb = continuant(b);
    r.qab = continuant(ab);
    r.ratio_squared = make_rational(r.qab.norm(), r.qa.norm() * r.qb.norm());
    r.within_working_bound = within_two_plus_sqrt2(r.ratio_squared);
    return r;
}

}  // namespace hcf
