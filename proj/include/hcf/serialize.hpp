// JSON encoding of the library's values and reports.
//
// Integers fitting a signed long are JSON numbers and larger ones are decimal
// strings; rationals are exact "num/den" strings. Enclosures carry exact
// endpoints plus a double for display.
#pragma once

#include "hcf/expansion.hpp"
#include "hcf/periodic.hpp"
#include "hcf/region.hpp"
#include "hcf/words.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace hcf::json {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

inline Json integer(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline Integer to_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw std::invalid_argument("expected an integer, got " + j.dump());
}

inline Json rational(const Rational& v) { return v.get_str(); }

inline Rational to_rational(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw std::invalid_argument("expected a rational, got " + j.dump());
    Rational q(j.get<std::string>());
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in " + j.dump());
    q.canonicalize();
    return q;
}

inline Json interval(const Interval& v) {
    return {{"lo", rational(v.lo())}, {"hi", rational(v.hi())}, {"approx", v.mid().get_d()}};
}

// ---------------------------------------------------------------------------
// Gaussian values
// ---------------------------------------------------------------------------

inline Json gaussian(const GaussianInt& g) { return Json::array({integer(g.re()), integer(g.im())}); }

inline GaussianInt to_gaussian(const Json& j) {
    if (j.is_array() && j.size() == 2) return {to_integer(j[0]), to_integer(j[1])};
    if (j.is_number_integer()) return GaussianInt(j.get<long>());
    if (j.is_string()) return parse_gaussian(j.get<std::string>());
    throw std::invalid_argument("expected a Gaussian integer [re, im], got " + j.dump());
}

inline Json digits(const Digits& ds) {
    Json out = Json::array();
    for (const GaussianInt& d : ds) out.push_back(gaussian(d));
    return out;
}

inline Digits to_digits(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of digits");
    Digits out;
    for (const Json& d : j) out.push_back(to_gaussian(d));
    return out;
}

/// [re_num, re_den, im_num, im_den]
inline Json rat_gauss(const RatGauss& z) {
    return Json::array({integer(z.re().get_num()), integer(z.re().get_den()), integer(z.im().get_num()),
                        integer(z.im().get_den())});
}

inline RatGauss to_rat_gauss(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected [re_num, re_den, im_num, im_den]");
    const Integer rd = to_integer(j[1]), id = to_integer(j[3]);
    if (rd == 0 || id == 0) throw std::invalid_argument("zero denominator");
    return {make_rational(to_integer(j[0]), rd), make_rational(to_integer(j[2]), id)};
}

/// {a, b, d, branch}: the value a + b*sqrt(d) with the canonical root.
inline Json surd(const Surd& x) {
    Json j;
    j["a"] = rat_gauss(x.a());
    j["b"] = rat_gauss(x.b());
    j["d"] = gaussian(x.d());
    j["branch"] = "+";
    j["text"] = x.str();
    return j;
}

inline Surd to_surd(const Json& j) {
    const RatGauss a = to_rat_gauss(j.at("a"));
    RatGauss b = j.contains("b") ? to_rat_gauss(j.at("b")) : RatGauss();
    const GaussianInt d = j.contains("d") ? to_gaussian(j.at("d")) : GaussianInt(0);
    if (j.contains("branch") && j.at("branch") == "-") b = -b;
    return Surd::make(a, b, d);
}

// ---------------------------------------------------------------------------
// Expansions, regions, periodic words
// ---------------------------------------------------------------------------

inline Json expansion(const Expansion& e) {
    Json j;
    j["digits"] = digits(e.digits);
    j["p"] = digits(e.p);
    j["q"] = digits(e.q);
    j["terminated"] = e.terminated;
    j["certified"] = e.certified;
    j["status"] = to_string(e.status);
    return j;
}

inline Json constraint(const Constraint& c) {
    return {{"A", rational(c.A)},
            {"B", Json::array({rational(c.B.re()), rational(c.B.im())})},
            {"C", rational(c.C)},
            {"strict", c.strict}};
}

inline Json region(const Region& r) {
    Json j;
    j["empty"] = r.is_empty_marker();
    j["constraints"] = Json::array();
    for (const Constraint& c : r.constraints()) j["constraints"].push_back(constraint(c));
    return j;
}

inline Json periodic(const PeriodicCF& cf) {
    return {{"preperiod", digits(cf.preperiod)}, {"period", digits(cf.period)}, {"valid", cf.valid}};
}

inline PeriodicCF to_periodic(const Json& j) {
    return {j.contains("preperiod") ? to_digits(j.at("preperiod")) : Digits{}, to_digits(j.at("period")), false};
}

// ---------------------------------------------------------------------------
// Words
// ---------------------------------------------------------------------------

/**
 * {type: "explicit", letters} | {type: "periodic", preperiod, period} |
 * {type: "automaton", base, transitions, outputs}. "thue_morse" with two
 * letters is accepted as shorthand for the two-state automaton.
 */
inline Word to_word(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "explicit") return Word::explicit_word(to_digits(j.at("letters")));
    if (type == "periodic")
        return Word::periodic(j.contains("preperiod") ? to_digits(j.at("preperiod")) : Digits{},
                              to_digits(j.at("period")));
    if (type == "automaton")
        return Word::automaton(j.at("base").get<int>(), j.at("transitions").get<std::vector<std::vector<int>>>(),
                               to_digits(j.at("outputs")));
    if (type == "thue_morse") {
        const Digits letters = to_digits(j.at("letters"));
        if (letters.size() != 2) throw std::invalid_argument("thue_morse needs two letters");
        return Word::thue_morse(letters[0], letters[1]);
    }
    throw std::invalid_argument("unknown word type '" + type + "'");
}

inline Json word(const Word& w) {
    switch (w.kind()) {
        case WordKind::explicit_list: return {{"type", "explicit"}, {"letters", digits(w.head())}};
        case WordKind::periodic:
            return {{"type", "periodic"}, {"preperiod", digits(w.head())}, {"period", digits(w.period())}};
        default:
            return {{"type", "automaton"},
                    {"base", w.base()},
                    {"transitions", w.transitions()},
                    {"outputs", digits(w.head())}};
    }
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json checks(const CheckReport& r) {
    Json j;
    j["passed"] = r.passed();
    j["count"] = r.checks.size();
    j["failures"] = Json::array();
    for (const Check& c : r.checks)
        if (!c.pass) j["failures"].push_back({{"name", c.name}, {"index", c.index}});
    return j;
}

inline Json triple(const WuvTriple& t) {
    return {{"w", t.w}, {"u", t.u}, {"v", t.v}, {"ratio", rational(t.ratio())}};
}

inline Json wuv(const WUVDecomposition& d) {
    Json j;
    j["mode"] = d.mode == WuvMode::square ? "square" : "club";
    j["horizon"] = d.horizon;
    j["triples"] = Json::array();
    for (const WuvTriple& t : d.triples) j["triples"].push_back(triple(t));
    j["max_ratio"] = d.empty() ? Json(nullptr) : rational(d.max_ratio());
    j["u_strictly_increasing"] = d.u_strictly_increasing();
    return j;
}

inline Json rep_profile(const RepProfile& p) {
    Json j;
    j["n_values"] = Json::array();
    for (const auto& [n, r] : p.n_values) j["n_values"].push_back(Json::array({n, r}));
    j["warmup"] = p.warmup;
    j["estimate"] = rational(p.estimate);
    j["estimate_approx"] = p.estimate.get_d();
    j["note"] = "finite-horizon estimate, not the liminf";
    return j;
}

inline Json bad_certificate(const BadCertificate& c) {
    Json j;
    j["max_digit_norm"] = integer(c.max_digit_norm);
    j["M"] = interval(c.M);
    j["C"] = interval(c.C);
    j["reverse_M"] = interval(c.reverse_M);
    j["gamma"] = interval(gamma_constant(c.bits > 0 ? c.bits : 64));
    j["growth_flagged"] = c.growth_flagged;
    j["checked"] = c.checked;
    j["violations"] = c.violations;
    j["bits"] = c.bits;
    j["consistent"] = c.consistent();
    j["verdict"] = c.consistent() ? "consistent with bounded quotients on examined range"
                                  : (c.growth_flagged ? "digit growth flagged, no certificate" : "violations found");
    return j;
}

inline Json lemma51(const Lemma51Report& r) {
    Json j;
    j["M"] = r.M;
    j["N"] = r.N;
    j["N_exact"] = rational(r.N_exact);
    j["epsilon"] = r.epsilon;
    j["bits"] = r.bits;
    j["entries"] = Json::array();
    for (const Lemma51Entry& e : r.entries) {
        Json t = triple(e.triple);
        t["holds"] = e.holds;
        j["entries"].push_back(t);
    }
    j["passed"] = r.passed();
    return j;
}

inline Json hypotheses(const HypothesisReport& r) {
    Json j;
    j["horizon"] = r.horizon;
    j["valid_prefix"] = r.valid_prefix;
    j["digits_at_least_sqrt8"] = r.digits_at_least_sqrt8;
    j["non_periodic"] = r.non_periodic();
    if (r.periodic) j["period_witness"] = {{"period", r.periodic->period}, {"start", r.periodic->start}};
    j["chain_found"] = r.chain_found;
    j["chain_length"] = r.chain.triples.size();
    j["chain_max_ratio"] = r.chain_found ? rational(r.chain_max_ratio) : Json(nullptr);
    j["repeated_w"] = r.repeated_w;
    j["w_increasing"] = r.w_increasing;
    j["distinct_preceding_letters"] = r.distinct_preceding_letters;
    j["evidence"] = to_string(r.evidence);
    j["failed"] = r.failed;
    j["note"] = "evidence report, not a proof";
    return j;
}

inline Json submultiplicativity(const SubmultiplicativityReport& r) {
    return {{"q_a", gaussian(r.qa)},
            {"q_b", gaussian(r.qb)},
            {"q_ab", gaussian(r.qab)},
            {"ratio_squared", rational(r.ratio_squared)},
            {"kappa", "2+sqrt(2)"},
            {"kappa_status", "empirical working bound"},
            {"within_working_bound", r.within_working_bound}};
}

inline Json sufficient(const SufficientReport& r) {
    Json j;
    j["abs_above_one"] = r.abs_above_one;
    j["conjugate_in_square"] = r.conjugate_in_square;
    j["digits_large"] = r.digits_large;
    j["hypotheses_hold"] = r.hypotheses_hold();
    j["purely_periodic"] = r.purely_periodic;
    j["expansion"] = periodic(r.expansion);
    j["checks"] = checks(r.checks);
    return j;
}

inline Json counterexample(const CounterexampleReport& r) {
    Json j;
    j["family"] = to_string(r.family);
    j["xi"] = surd(r.xi);
    j["eta"] = surd(r.eta);
    j["expansion"] = periodic(r.expansion);
    j["seed_valid"] = r.seed_valid;
    j["conjugate_in_square"] = r.conjugate_in_square;
    j["conjugate_in_unit_disk"] = r.conjugate_in_unit_disk;
    j["abs_above_one"] = r.abs_above_one;
    j["has_small_digit"] = r.has_small_digit;
    j["purely_periodic"] = r.purely_periodic;
    j["matches_closed_form"] = r.matches_closed_form;
    j["advertised"] = r.advertised();
    j["passed"] = r.passed();
    return j;
}

}  // namespace hcf::json
