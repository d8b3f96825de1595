// Digit words: repetition function, square and mirrored-square patterns,
// bounded-quotient certificates, the growth inequality and hypothesis reports.

#include "hcf/harness.hpp"
#include "hcf/words.hpp"

#include <gtest/gtest.h>

#include <optional>
#include <random>

using namespace hcf;
using G = GaussianInt;

namespace {

/// r(n) by scanning every earlier start directly.
std::size_t naive_r(const Digits& x, std::size_t n) {
    for (std::size_t m = n + 1; m <= x.size(); ++m) {
        const std::size_t cur = m - n;
        for (std::size_t i = 0; i < cur; ++i)
            if (std::equal(x.begin() + static_cast<long>(i), x.begin() + static_cast<long>(i + n), x.begin() + static_cast<long>(cur)))
                return m;
    }
    return 0;
}

/// Least w + v (then least w) for each u, by enumerating every triple.
std::vector<WuvTriple> naive_wuv(const Digits& x, WuvMode mode) {
    std::vector<WuvTriple> out;
    const std::size_t H = x.size();
    for (std::size_t u = 1; 2 * u <= H; ++u) {
        std::optional<WuvTriple> best;
        for (std::size_t w = 0; w + 2 * u <= H; ++w)
            for (std::size_t v = 0; w + 2 * u + v <= H; ++v) {
                bool ok = true;
                for (std::size_t k = 0; k < u && ok; ++k) {
                    const G& second = mode == WuvMode::square ? x[w + u + v + k] : x[w + 2 * u + v - 1 - k];
                    ok = x[w + k] == second;
                }
                if (!ok) continue;
                if (!best || w + v < best->w + best->v || (w + v == best->w + best->v && w < best->w))
                    best = WuvTriple{w, u, v};
            }
        if (best) out.push_back(*best);
    }
    return out;
}

Digits thue_morse_bits(std::size_t count) {
    Digits out;
    for (std::size_t k = 0; k < count; ++k) out.emplace_back(__builtin_popcountll(k) % 2);
    return out;
}

Expansion zero_led(const Word& w, std::size_t count) {
    Digits d{G(0)};
    const Digits p = w.prefix(count);
    d.insert(d.end(), p.begin(), p.end());
    return from_digits(d);
}

}  // namespace

TEST(WordAccess, Kinds) {
    const Word e = Word::explicit_word({G(1), G(2)});
    EXPECT_EQ(e.at(1), G(2));
    EXPECT_THROW(e.at(2), std::out_of_range);
    EXPECT_EQ(e.length(), 2u);
    const Word p = Word::periodic({G(7)}, {G(1), G(2)});
    EXPECT_EQ(p.prefix(6), (Digits{G(7), G(1), G(2), G(1), G(2), G(1)}));
    EXPECT_FALSE(p.length());
    EXPECT_THROW(Word::explicit_word({}), std::invalid_argument);
    EXPECT_THROW(Word::periodic({}, {}), std::invalid_argument);
    EXPECT_THROW(Word::automaton(2, {{0, 2}}, {G(1)}), std::invalid_argument);
}

TEST(WordAccess, ThueMorseMatchesPopcount) {
    const Word t = Word::thue_morse(G(0), G(1));
    EXPECT_EQ(t.prefix(1000), thue_morse_bits(1000));
}

TEST(Repetition, ListedValues) {
    const Word ones = Word::periodic({}, {G(3)});
    EXPECT_EQ(repetition(ones, 1), 2u);
    EXPECT_EQ(repetition(ones, 5), 6u);
    const Word ab = Word::periodic({}, {G(3), G(4)});
    EXPECT_EQ(repetition(ab, 1), 3u);
    EXPECT_EQ(repetition(ab, 2), 4u);
    EXPECT_THROW(repetition(ones, 0), std::invalid_argument);
    EXPECT_THROW(repetition(Word::explicit_word({G(1), G(2), G(3)}), 1), std::out_of_range);
}

TEST(Repetition, AgreesWithNaiveScan) {
    std::mt19937_64 rng(3);
    for (int s = 0; s < 30; ++s) {
        const Word w = harness::random_finite_state_word(rng);
        const Digits x = w.prefix(4096);
        for (std::size_t n = 1; n <= 40; ++n) {
            const std::size_t expected = naive_r(x, n);
            ASSERT_NE(expected, 0u);
            EXPECT_EQ(repetition(w, n), expected) << "word " << s << " n " << n;
        }
    }
}

TEST(Repetition, ThueMorseEstimate) {
    const RepProfile p = rep_exponent_estimate(Word::thue_morse(G(3), G(0, 4)), 512);
    EXPECT_EQ(p.n_values.size(), 512u);
    EXPECT_EQ(p.warmup, 256u);
    for (std::size_t k = 1; k < p.running_min.size(); ++k) EXPECT_LE(p.running_min[k], p.running_min[k - 1]);
    EXPECT_LT(p.estimate, Rational(10));
    EXPECT_GE(p.estimate, Rational(1));
    const Digits x = thue_morse_bits(8192);
    for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 300u}) EXPECT_EQ(p.n_values[n - 1].second, naive_r(x, n));
}

TEST(Wuv, SquareAgreesWithEnumeration) {
    std::mt19937_64 rng(5);
    for (int s = 0; s < 20; ++s) {
        const Word w = harness::random_finite_state_word(rng);
        const WUVDecomposition d = find_wuv(w, 40, WuvMode::square);
        const std::vector<WuvTriple> expected = naive_wuv(w.prefix(40), WuvMode::square);
        ASSERT_EQ(d.triples.size(), expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            EXPECT_EQ(d.triples[k].w, expected[k].w);
            EXPECT_EQ(d.triples[k].u, expected[k].u);
            EXPECT_EQ(d.triples[k].v, expected[k].v);
        }
        EXPECT_TRUE(d.u_strictly_increasing());
    }
}

TEST(Wuv, ClubAgreesWithEnumeration) {
    std::mt19937_64 rng(7);
    for (int s = 0; s < 20; ++s) {
        const Word w = harness::random_finite_state_word(rng);
        const WUVDecomposition d = find_wuv(w, 40, WuvMode::club);
        const std::vector<WuvTriple> expected = naive_wuv(w.prefix(40), WuvMode::club);
        ASSERT_EQ(d.triples.size(), expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            EXPECT_EQ(d.triples[k].w, expected[k].w);
            EXPECT_EQ(d.triples[k].u, expected[k].u);
            EXPECT_EQ(d.triples[k].v, expected[k].v);
            EXPECT_TRUE(matches_pattern(w.prefix(40), d.triples[k], WuvMode::club));
        }
    }
}

TEST(Wuv, ListedExamples) {
    const WUVDecomposition sq = find_wuv(Word::periodic({}, {G(3)}), 8, WuvMode::square);
    ASSERT_FALSE(sq.empty());
    EXPECT_EQ(sq.triples[0].w, 0u);
    EXPECT_EQ(sq.triples[0].u, 1u);
    EXPECT_EQ(sq.triples[0].v, 0u);
    EXPECT_EQ(sq.triples.size(), 4u);
    // abcd cba...: the mirror of "ab" closes at "ba"
    const Word mirror = Word::explicit_word({G(1), G(2), G(3), G(4), G(3), G(2), G(1), G(5)});
    const WUVDecomposition club = find_wuv(mirror, 8, WuvMode::club);
    ASSERT_GE(club.triples.size(), 3u);
    EXPECT_EQ(club.triples[2].u, 3u);
    EXPECT_EQ(club.triples[2].w, 0u);
    EXPECT_EQ(club.triples[2].v, 1u);
    EXPECT_THROW(find_wuv(mirror, 4, WuvMode::square), std::invalid_argument);
}

TEST(Periodicity, Detection) {
    EXPECT_TRUE(detect_periodicity(Word::periodic({G(5), G(6)}, {G(3), G(4)}).prefix(40)));
    EXPECT_FALSE(detect_periodicity(Word::thue_morse(G(3), G(4)).prefix(256)));
    const auto w = detect_periodicity(Word::periodic({G(5)}, {G(3), G(4), G(7)}).prefix(30));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->period, 3u);
    EXPECT_EQ(w->start, 1u);
}

TEST(BadCertificate, GoldenRatioConstant) {
    const Surd golden = Surd::make(RatGauss(Rational(1, 2)), RatGauss(Rational(1, 2)), G(5));
    const BadCertificate c = badly_approximable_certificate(expand(golden, 20));
    EXPECT_EQ(c.max_digit_norm, Integer(9));
    EXPECT_TRUE(c.C.contains(Rational(1, 100)));
    EXPECT_TRUE(c.consistent());
    EXPECT_GT(c.checked, 100u);
}

TEST(BadCertificate, GrowingDigitsFlagged) {
    Digits d{G(0)};
    for (long k = 2; k < 12; ++k) d.emplace_back(k * k);
    const BadCertificate c = badly_approximable_certificate(from_digits(d));
    EXPECT_TRUE(c.growth_flagged);
    EXPECT_FALSE(c.consistent());
    EXPECT_THROW(badly_approximable_certificate(from_digits({G(1)})), std::invalid_argument);
}

TEST(GrowthInequality, ConstantWord) {
    const Word w = Word::periodic({}, {G(3)});
    const WUVDecomposition d = find_wuv(w, 16, WuvMode::square);
    const Lemma51Report r = lemma51_check(zero_led(w, 17), d);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.entries.front().triple.u, 1u);
    EXPECT_EQ(r.N_exact, Rational(2));
    EXPECT_GT(r.epsilon, 0);
}

TEST(GrowthInequality, EmptyChainAndRange) {
    const Lemma51Report empty = lemma51_check(from_digits({G(0), G(3)}), WUVDecomposition{});
    EXPECT_TRUE(empty.entries.empty());
    const Word w = Word::periodic({}, {G(3)});
    const WUVDecomposition d = find_wuv(w, 16, WuvMode::square);
    EXPECT_THROW(lemma51_check(zero_led(w, 4), d), std::out_of_range);
}

TEST(GrowthInequality, ThueMorseHorizon128) {
    const Word w = Word::thue_morse(G(3), G(0, 4));
    const WUVDecomposition d = find_wuv(w, 128, WuvMode::square);
    const Lemma51Report r = lemma51_check(zero_led(w, 129), d);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.entries.size(), d.triples.size());
    // floating oracle for each inequality with a margin
    const double logM = std::log(r.M);
    const Expansion e = zero_led(w, 129);
    for (const Lemma51Entry& t : r.entries) {
        const double rhs = 0.5 * std::log(e.q[t.triple.w].norm().get_d() * e.q[t.triple.w + t.triple.u + t.triple.v].norm().get_d());
        EXPECT_GE(static_cast<double>(t.triple.u) * r.N * logM, rhs * (1 - 1e-9));
    }
}

TEST(Hypotheses, ThueMorse) {
    const HypothesisReport r = transcendence_hypothesis_check(Word::thue_morse(G(3), G(0, 4)), 256);
    EXPECT_TRUE(r.valid_prefix);
    EXPECT_TRUE(r.digits_at_least_sqrt8);
    EXPECT_TRUE(r.non_periodic());
    EXPECT_TRUE(r.chain_found);
    EXPECT_NE(r.evidence, Evidence::insufficient);
}

TEST(Hypotheses, PeriodicAndSmallDigits) {
    const HypothesisReport p = transcendence_hypothesis_check(Word::periodic({}, {G(3), G(4)}), 64);
    EXPECT_EQ(p.evidence, Evidence::not_applicable_periodic);
    EXPECT_NE(std::find(p.failed.begin(), p.failed.end(), "non_periodic"), p.failed.end());
    const HypothesisReport s = transcendence_hypothesis_check(Word::thue_morse(G(2), G(0, 2)), 64);
    EXPECT_FALSE(s.digits_at_least_sqrt8);
    EXPECT_NE(std::find(s.failed.begin(), s.failed.end(), "digit_norm_at_least_8"), s.failed.end());
    EXPECT_THROW(transcendence_hypothesis_check(Word::periodic({}, {G(3)}), 8), std::invalid_argument);
}

TEST(Submultiplicativity, ListedRatios) {
    const SubmultiplicativityReport a = continuant_submultiplicativity({G(3)}, {G(3)});
    EXPECT_EQ(a.qab, G(10));
    EXPECT_EQ(a.ratio_squared, Rational(100, 81));
    EXPECT_TRUE(a.within_working_bound);
    const SubmultiplicativityReport b = continuant_submultiplicativity({G(0, 4)}, {G(0, 4)});
    EXPECT_EQ(b.ratio_squared, Rational(225, 256));
    const SubmultiplicativityReport c = continuant_submultiplicativity({G(3)}, {G(-3)});
    EXPECT_EQ(c.ratio_squared, Rational(64, 81));
    EXPECT_THROW(continuant_submultiplicativity({G(1)}, {G(3)}), std::invalid_argument);
    EXPECT_THROW(continuant_submultiplicativity({}, {G(3)}), std::invalid_argument);
}

TEST(Submultiplicativity, ExactBoundTest) {
    // (2 + sqrt 2)^2 = 11.656...
    EXPECT_TRUE(within_two_plus_sqrt2(Rational(11)));
    EXPECT_TRUE(within_two_plus_sqrt2(Rational(11656, 1000)));
    EXPECT_FALSE(within_two_plus_sqrt2(Rational(11657, 1000)));
}

TEST(Submultiplicativity, RandomValidSplits) {
    std::mt19937_64 rng(11);
    for (int s = 0; s < 100; ++s) {
        Digits w = random_valid_word(rng, static_cast<std::size_t>(draw(rng, 3, 16)));
        w.erase(w.begin());
        const std::size_t cut = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(w.size()) - 1));
        const Digits a(w.begin(), w.begin() + static_cast<long>(cut)), b(w.begin() + static_cast<long>(cut), w.end());
        Digits za{G(0)}, zb{G(0)};
        za.insert(za.end(), a.begin(), a.end());
        zb.insert(zb.end(), b.begin(), b.end());
        if (!is_valid_prefix(zb)) continue;
        const SubmultiplicativityReport r = continuant_submultiplicativity(a, b);
        EXPECT_EQ(r.qab.norm(), continuant(w).norm());
        const double ratio = std::sqrt(r.ratio_squared.get_d());
        EXPECT_EQ(r.within_working_bound, ratio <= 2 + std::sqrt(2.0)) << ratio;
    }
}
