// Seeded end-to-end checks shared by `hcf verify-all` and the acceptance runner.
#pragma once

#include "hcf/expansion.hpp"
#include "hcf/periodic.hpp"
#include "hcf/region.hpp"
#include "hcf/words.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace hcf::harness {

// ---------------------------------------------------------------------------
// Seeded generators
// ---------------------------------------------------------------------------

inline GaussianInt random_gaussian(std::mt19937_64& rng, long bound) {
    return {draw(rng, -bound, bound), draw(rng, -bound, bound)};
}

/// (a + b sqrt(d)) / c with small Gaussian a, b, c and a non-square radicand d.
inline Surd random_surd(std::mt19937_64& rng) {
    for (;;) {
        const GaussianInt d = random_gaussian(rng, 12);
        if (d.is_zero() || gaussian_sqrt(d)) continue;
        const GaussianInt b = random_gaussian(rng, 4);
        if (b.is_zero()) continue;
        GaussianInt c = random_gaussian(rng, 3);
        if (c.is_zero()) c = GaussianInt(1);
        const RatGauss inv = RatGauss(c).inverse();
        const Surd x = Surd::make(RatGauss(random_gaussian(rng, 6)) * inv, RatGauss(b) * inv, d);
        if (!x.is_rational()) return x;
    }
}

/// Period of length 1..4 whose digits all have norm at least 8.
inline Digits random_large_period(std::mt19937_64& rng) {
    Digits period;
    const long m = draw(rng, 1, 4);
    while (static_cast<long>(period.size()) < m) {
        const GaussianInt a = random_gaussian(rng, 5);
        if (a.norm() >= 8) period.push_back(a);
    }
    return period;
}

/// Random periodic or base-2 automatic word over a three-letter alphabet.
inline Word random_finite_state_word(std::mt19937_64& rng) {
    const Digits letters{GaussianInt(3), GaussianInt(0, 4), GaussianInt(3, 3)};
    auto letter = [&] { return letters[static_cast<std::size_t>(draw(rng, 0, 2))]; };
    if (draw(rng, 0, 1) == 0) {
        Digits pre, period;
        for (long k = draw(rng, 0, 6); k > 0; --k) pre.push_back(letter());
        for (long k = draw(rng, 1, 10); k > 0; --k) period.push_back(letter());
        return Word::periodic(pre, period);
    }
    const long states = draw(rng, 2, 4);
    std::vector<std::vector<int>> transitions(static_cast<std::size_t>(states));
    Digits outputs;
    for (auto& row : transitions) {
        row = {static_cast<int>(draw(rng, 0, states - 1)), static_cast<int>(draw(rng, 0, states - 1))};
        outputs.push_back(letter());
    }
    return Word::automaton(2, transitions, outputs);
}

/// Repetition function straight from its definition, on a growing prefix.
inline std::size_t naive_repetition(const Word& w, std::size_t n) {
    for (std::size_t len = 256;; len *= 2) {
        const Digits x = w.prefix(len);
        for (std::size_t m = n + 1; m <= x.size(); ++m)
            for (std::size_t i = 1; i + n <= m; ++i) {
                bool same = true;
                for (std::size_t k = 0; k < n && same; ++k) same = x[i - 1 + k] == x[m - n + k];
                if (same) return m;
            }
        if (len > (1u << 20)) throw budget_exhausted("naive scan found no repeat");
    }
}

// ---------------------------------------------------------------------------
// Results
// ---------------------------------------------------------------------------

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;  ///< 0 when untimed
};

/// One table row; timings are optional so seeded output can stay byte-identical.
inline std::string format_row(const CriterionResult& r, bool with_time = true) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << " (" << r.detail;
    if (with_time) {
        os.setf(std::ios::fixed);
        os.precision(2);
        os << "; " << r.seconds << " s";
        if (r.limit_seconds > 0) os << " of " << r.limit_seconds << " s";
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// Copies of -2+2i separated by 2-2i, after `lead`, closed by 1+i.
inline Digits alternating_family(const Digits& lead, std::size_t copies) {
    Digits w = lead;
    for (std::size_t k = 0; k < copies; ++k) {
        if (k) w.emplace_back(2, -2);
        w.emplace_back(-2, 2);
    }
    w.emplace_back(1, 1);
    return w;
}

struct FamilyCase {
    std::string name;
    Digits lead_after_xi;
    bool claimed_valid;
};

inline std::vector<FamilyCase> validity_families() {
    return {{"xi,B,1+i", {}, true},
            {"xi,2-2i,B,1+i", {GaussianInt(2, -2)}, true},
            {"xi,1+2i,B,1+i", {GaussianInt(1, 2)}, false},
            {"xi,-1+2i,2-2i,B,1+i", {GaussianInt(-1, 2), GaussianInt(2, -2)}, false}};
}

class Harness {
public:
    explicit Harness(std::uint64_t seed) : seed_(seed) {}

    std::vector<CriterionResult> run_all() {
        std::vector<CriterionResult> out;
        for (int id = 1; id <= 10; ++id) out.push_back(run(id));
        return out;
    }

    CriterionResult run(int id) {
        CriterionResult r;
        r.id = id;
        const auto start = std::chrono::steady_clock::now();
        try {
            switch (id) {
                case 1: golden_ratio(r); break;
                case 2: validity_fixtures(r); break;
                case 3: identities(r); break;
                case 4: continuant_growth(r); break;
                case 5: sandwich(r); break;
                case 6: good_approximations(r); break;
                case 7: periodic_suite(r); break;
                case 8: singularized_conjugate(r); break;
                case 9: repetition_suite(r); break;
                case 10: catalog_stabilizes(r); break;
                default: throw std::invalid_argument("unknown criterion");
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (id == 3 && corpus_seconds_ > 0) r.seconds = std::max(r.seconds, corpus_seconds_);
        if (r.limit_seconds > 0 && r.seconds >= r.limit_seconds) {
            r.pass = false;
            r.detail += "; over time limit";
        }
        return r;
    }

private:
    std::mt19937_64 rng_for(int id) const { return std::mt19937_64(seed_ * 1000003u + static_cast<std::uint64_t>(id)); }

    /// 1000 random valid words of length 2..30, built once.
    const std::vector<Digits>& corpus() {
        if (corpus_.empty()) {
            const auto start = std::chrono::steady_clock::now();
            std::mt19937_64 rng = rng_for(3);
            for (int k = 0; k < 1000; ++k)
                corpus_.push_back(random_valid_word(rng, static_cast<std::size_t>(draw(rng, 2, 30))));
            corpus_seconds_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
        return corpus_;
    }

    static void golden_ratio(CriterionResult& r) {
        r.title = "golden ratio and its conjugate expand to the alternating tails";
        r.limit_seconds = 1;
        const Rational half(1, 2);
        const Expansion plus = expand(Surd::make(RatGauss(half), RatGauss(half), GaussianInt(5)), 20);
        const Expansion minus = expand(Surd::make(RatGauss(half), RatGauss(-half), GaussianInt(5)), 20);
        Digits want_plus{GaussianInt(2)}, want_minus{GaussianInt(-1)};
        for (int k = 1; k < 20; ++k) {
            want_plus.emplace_back(k % 2 ? -3 : 3);
            want_minus.emplace_back(k % 2 ? 3 : -3);
        }
        r.pass = plus.digits == want_plus && minus.digits == want_minus;
        r.detail = std::string("20 digits each, ") + (r.pass ? "exact match" : "mismatch");
    }

    static void validity_fixtures(CriterionResult& r) {
        r.title = "validity fixtures and alternating families, n = 1..5, xi in {0, 3, 5i}";
        r.limit_seconds = 10;
        const bool short_valid = is_valid_prefix({GaussianInt(0), GaussianInt(-2, 2), GaussianInt(1, 1)});
        const bool short_invalid =
            !is_valid_prefix({GaussianInt(0), GaussianInt(1, 2), GaussianInt(-2, 2), GaussianInt(1, 1)});
        std::size_t cases = 0;
        std::vector<std::string> wrong;
        for (const FamilyCase& f : validity_families()) {
            std::vector<std::size_t> bad_n;
            for (std::size_t n = 1; n <= 5; ++n) {
                bool agree = true;
                for (const GaussianInt& xi : {GaussianInt(0), GaussianInt(3), GaussianInt(0, 5)}) {
                    Digits lead{xi};
                    lead.insert(lead.end(), f.lead_after_xi.begin(), f.lead_after_xi.end());
                    ++cases;
                    agree = agree && is_valid_prefix(alternating_family(lead, n)) == f.claimed_valid;
                }
                if (!agree) bad_n.push_back(n);
            }
            if (!bad_n.empty()) {
                std::ostringstream os;
                os << f.name << " expected " << (f.claimed_valid ? "valid" : "invalid") << " but differs at n =";
                for (std::size_t n : bad_n) os << ' ' << n;
                wrong.push_back(os.str());
            }
        }
        r.pass = short_valid && short_invalid && wrong.empty();
        std::ostringstream os;
        os << "short fixtures " << (short_valid && short_invalid ? "ok" : "wrong") << ", " << cases << " family cases";
        for (const std::string& w : wrong) os << "; " << w;
        r.detail = os.str();
    }

    void identities(CriterionResult& r) {
        r.title = "determinant and mirror identities on 1000 random valid words";
        r.limit_seconds = 60;
        std::size_t checks = 0, failures = 0;
        for (const Digits& w : corpus()) {
            const CheckReport c = check_identities(from_digits(w));
            checks += c.checks.size();
            failures += c.failures();
        }
        r.pass = failures == 0 && checks > 0;
        r.detail = std::to_string(checks) + " exact checks, " + std::to_string(failures) + " failures";
    }

    void continuant_growth(CriterionResult& r) {
        r.title = "continuant growth: strict increase, alternation, golden-ratio powers";
        std::size_t checks = 0, failures = 0;
        for (const Digits& w : corpus()) {
            const CheckReport c = growth_check(from_digits(w));
            checks += c.checks.size();
            failures += c.failures();
        }
        r.pass = failures == 0 && checks > 0;
        r.detail = std::to_string(checks) + " exact checks, " + std::to_string(failures) + " failures";
    }

    void sandwich(CriterionResult& r) {
        r.title = "certified approximation sandwich, 100 surds x 10 indices, <= 256 bits";
        std::mt19937_64 rng = rng_for(5);
        std::size_t separated = 0, failures = 0;
        long worst_bits = 0;
        for (int s = 0; s < 100; ++s) {
            const Expansion e = expand(random_surd(rng), 12);
            for (std::size_t n = 1; n <= 10; ++n) {
                try {
                    const ApproxBounds b = approx_bounds(e, n, 256);
                    ++separated;
                    worst_bits = std::max(worst_bits, b.bits);
                } catch (const precision_exhausted&) {
                    ++failures;
                }
            }
        }
        r.pass = failures == 0 && separated == 1000;
        r.detail = std::to_string(separated) + " separated, " + std::to_string(failures) + " unresolved, max " +
                   std::to_string(worst_bits) + " bits";
    }

    void good_approximations(CriterionResult& r) {
        r.title = "convergents with |q|^2 <= 10^4 are good approximations, 20 surds";
        std::mt19937_64 rng = rng_for(6);
        std::size_t checked = 0, failures = 0;
        for (int s = 0; s < 20; ++s) {
            const Surd x = random_surd(rng);
            const Expansion e = expand(x, 40);
            for (std::size_t n = 0; n < e.size() && e.q[n].norm() <= kDefaultNormCap; ++n) {
                ++checked;
                if (!is_good_approximation(x, e.p[n], e.q[n], kDefaultNormCap)) ++failures;
            }
        }
        r.pass = failures == 0 && checked > 0;
        r.detail = std::to_string(checked) + " convergents, " + std::to_string(failures) + " not good";
    }

    void periodic_suite(CriterionResult& r) {
        r.title = "periodic round trip, |conjugate| < 1, sufficient criterion, counterexample families a and c";
        r.limit_seconds = 300;
        std::mt19937_64 rng = rng_for(7);
        std::size_t round_trips = 0, inside = 0, hypotheses = 0, confirmed = 0;
        for (int s = 0; s < 200; ++s) {
            const PeriodicCF cf = make_periodic({}, random_large_period(rng));
            const Surd x = eval_periodic(cf);
            round_trips += expand_to_cycle(x).normalized() == cf.normalized();
            inside += sign_norm_minus(x.conjugate(), Rational(1)) < 0;
            const SufficientReport sr = check_sufficient(x);
            if (sr.hypotheses_hold()) {
                ++hypotheses;
                confirmed += sr.purely_periodic && sr.passed();
            }
        }
        const bool fam_a = generate_counterexample(CounterexampleFamily::a, {}).passed();
        CounterexampleParams pc;
        pc.M = GaussianInt(3);
        const bool fam_c = generate_counterexample(CounterexampleFamily::c, pc).passed();
        r.pass = round_trips == 200 && inside == 200 && confirmed == hypotheses && fam_a && fam_c;
        std::ostringstream os;
        os << "round trips " << round_trips << "/200, |eta|<1 " << inside << "/200, criterion hypotheses "
           << hypotheses << " confirmed " << confirmed << ", family a " << (fam_a ? "ok" : "wrong") << ", family c "
           << (fam_c ? "ok" : "wrong");
        r.detail = os.str();
    }

    static void singularized_conjugate(CriterionResult& r) {
        r.title = "conjugate of [overline(5+6i,-3+2i,2,9+4i)] by singularization and directly";
        const Digits period{GaussianInt(5, 6), GaussianInt(-3, 2), GaussianInt(2), GaussianInt(9, 4)};
        const Digits target{GaussianInt(10, 4), GaussianInt(-2), GaussianInt(-2, 2), GaussianInt(5, 6)};
        const Surd xi = eval_periodic(make_periodic({}, period));
        const Surd direct = xi.conjugate();
        const Surd closed = -eval_periodic(make_periodic({}, target)).inverse();
        const Digits reversed(period.rbegin(), period.rend());
        const Digits rewritten = singularize_cyclic(reversed, 1);
        const Surd via_rewrite = -eval_periodic(make_periodic({}, rewritten)).inverse();
        const bool path = rewritten == target;
        r.pass = path && direct == closed && via_rewrite == direct;
        r.detail = std::string("rewrite ") + (path ? "reaches" : "misses") + " target; direct " +
                   (direct == closed ? "==" : "!=") + " closed form; routes " + (via_rewrite == direct ? "agree" : "differ");
    }

    void repetition_suite(CriterionResult& r) {
        r.title = "repetition oracle on 50 words, Thue-Morse over {3, 4i} at horizon 512, growth inequality";
        std::mt19937_64 rng = rng_for(9);
        std::size_t mismatches = 0, compared = 0;
        for (int s = 0; s < 50; ++s) {
            const Word w = random_finite_state_word(rng);
            for (std::size_t n = 1; n <= 64; ++n) {
                ++compared;
                mismatches += repetition(w, n) != naive_repetition(w, n);
            }
        }
        const Word tm = Word::thue_morse(GaussianInt(3), GaussianInt(0, 4));
        const RepProfile prof = rep_exponent_estimate(tm, 512);
        Rational worst(0);
        for (const Rational& q : prof.running_min) worst = std::max(worst, q);
        const WUVDecomposition chain = find_wuv(tm, 512, WuvMode::square);
        Digits digits{GaussianInt(0)};
        const Digits head = tm.prefix(513);
        digits.insert(digits.end(), head.begin(), head.end());
        const Lemma51Report lr = lemma51_check(from_digits(digits), chain);
        r.pass = mismatches == 0 && worst < 10 && !chain.empty() && lr.passed() && lr.entries.size() == chain.triples.size();
        std::ostringstream os;
        os << compared << " r(n) values, " << mismatches << " mismatches; estimate " << prof.estimate
           << ", max running min " << worst << "; chain " << chain.triples.size() << " triples; inequality "
           << (lr.passed() ? "holds" : "fails") << " on " << lr.entries.size();
        r.detail = os.str();
    }

    void catalog_stabilizes(CriterionResult& r) {
        r.title = "rotation-normalized region catalog stable over the last 500 of 1000 words";
        std::mt19937_64 rng = rng_for(10);
        RegionCatalog catalog;
        std::vector<std::size_t> sizes;
        std::size_t inconclusive = 0, invalid = 0;
        for (int k = 0; k < 1000; ++k) {
            const Digits w = random_valid_word(rng, 30, &catalog);
            if (!is_valid_prefix(w)) ++invalid;
            const std::size_t p = static_cast<std::size_t>(draw(rng, 1, 4));
            const Digits pre(w.begin(), w.end() - static_cast<long>(p));
            const Digits period(w.end() - static_cast<long>(p), w.end());
            try {
                is_valid_eventually_periodic(pre, period, kDefaultCyclePeriods, &catalog);
            } catch (const budget_exhausted&) {
                ++inconclusive;
            }
            sizes.push_back(catalog.size());
        }
        const bool stable = sizes[499] == sizes.back();
        r.pass = stable && inconclusive == 0 && invalid == 0;
        std::ostringstream os;
        os << "catalog " << sizes[499] << " after 500, " << sizes.back() << " after 1000; " << inconclusive
           << " inconclusive cycles; " << invalid << " invalid words";
        r.detail = os.str();
    }

    std::uint64_t seed_;
    std::vector<Digits> corpus_;
    double corpus_seconds_ = 0;
};

}  // namespace hcf::harness
