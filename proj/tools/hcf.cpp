// hcf: command-line front end for the Hurwitz continued fraction library.
//
// Results go to stdout, diagnostics to stderr. Exit status: 0 success,
// 1 failed check or exhausted precision/budget, 2 usage error.

#include "hcf/hcf.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using hcf::json::Json;

/// Bad user input; reported with exit status 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string surd;
    std::string input;
    std::string digits;
    std::string preperiod = "[]";
    std::string period;
    std::string word;
    std::string p, q;
    std::string family = "a";
    std::string M = "2-2i", N = "2-2i";
    std::string format = "json";
    std::size_t length = 20;
    std::size_t budget = hcf::kDefaultCycleBudget;
    std::size_t horizon = 64;
    std::size_t n = 0;
    long cap = hcf::kDefaultNormCap;
    long bits = 128;
    long max_norm = 50;
    std::size_t points = 64;
    std::uint64_t seed = 42;
};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream is(text);
    while (std::getline(is, part, sep)) out.push_back(part);
    return out;
}

Json parse_json(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw usage_error(std::string("cannot parse ") + what + ": " + e.what());
    }
}

hcf::GaussianInt parse_gaussian_arg(const std::string& text) {
    try {
        if (!text.empty() && text.front() == '[') return hcf::json::to_gaussian(parse_json(text, "digit"));
        return hcf::parse_gaussian(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

/// "a,b,d" is a + b sqrt(d); "a,b,d,c" is (a + b sqrt(d)) / c; fields are Gaussian literals.
hcf::Surd parse_surd_arg(const std::string& text) {
    const std::vector<std::string> f = split(text, ',');
    if (f.size() < 3 || f.size() > 4) throw usage_error("--surd expects \"a,b,d\" or \"a,b,d,c\"");
    const hcf::GaussianInt c = f.size() == 4 ? parse_gaussian_arg(f[3]) : hcf::GaussianInt(1);
    if (c.is_zero()) throw usage_error("--surd denominator is zero");
    const hcf::RatGauss inv = hcf::RatGauss(c).inverse();
    return hcf::Surd::make(hcf::RatGauss(parse_gaussian_arg(f[0])) * inv, hcf::RatGauss(parse_gaussian_arg(f[1])) * inv,
                           parse_gaussian_arg(f[2]));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Value from --surd or from a JSON surd in --input.
hcf::Surd value_arg(const Options& o) {
    if (!o.surd.empty()) return parse_surd_arg(o.surd);
    if (!o.input.empty()) {
        try {
            return hcf::json::to_surd(parse_json(read_file(o.input), "input"));
        } catch (const Json::exception& e) {
            throw usage_error(std::string("malformed surd JSON: ") + e.what());
        }
    }
    throw usage_error("a value is required (--surd or --input)");
}

hcf::Digits digits_arg(const std::string& text, const char* what) {
    try {
        return hcf::json::to_digits(parse_json(text, what));
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

hcf::Word word_arg(const Options& o) {
    if (o.word.empty()) throw usage_error("--word is required");
    const std::string text = o.word.front() == '{' ? o.word : read_file(o.word);
    try {
        return hcf::json::to_word(parse_json(text, "word"));
    } catch (const Json::exception& e) {
        throw usage_error(std::string("malformed word spec: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

/// [0; a_1 a_2 ...] over the first `count` letters.
hcf::Expansion word_expansion(const hcf::Word& w, std::size_t count) {
    hcf::Digits digits{hcf::GaussianInt(0)};
    const hcf::Digits head = w.prefix(count);
    digits.insert(digits.end(), head.begin(), head.end());
    return hcf::from_digits(digits);
}

void emit(const Options& o, const Json& j) {
    if (o.format == "text" && j.is_object()) {
        for (const auto& [key, value] : j.items())
            std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        return;
    }
    std::cout << j.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_expand(const Options& o) {
    const hcf::Surd x = value_arg(o);
    Json j = hcf::json::expansion(hcf::expand(x, o.length));
    j["value"] = hcf::json::surd(x);
    emit(o, j);
    return 0;
}

int cmd_validate(const Options& o) {
    const hcf::Digits d = digits_arg(o.digits, "--digits");
    if (d.empty()) throw usage_error("--digits must be nonempty");
    const bool valid = hcf::is_valid_prefix(d);
    emit(o, {{"digits", hcf::json::digits(d)}, {"valid", valid}});
    return valid ? 0 : 1;
}

int cmd_eval_periodic(const Options& o) {
    if (o.period.empty()) throw usage_error("--period is required");
    const hcf::PeriodicCF cf = hcf::make_periodic(digits_arg(o.preperiod, "--preperiod"), digits_arg(o.period, "--period"));
    const hcf::Surd x = hcf::eval_periodic(cf);
    Json j = hcf::json::periodic(cf);
    j["value"] = hcf::json::surd(x);
    j["value_kind"] = cf.valid ? "expansion" : "formal limit";
    emit(o, j);
    return 0;
}

int cmd_cycle(const Options& o) {
    const hcf::PeriodicCF cf = hcf::expand_to_cycle(value_arg(o), o.budget);
    emit(o, hcf::json::periodic(cf));
    return 0;
}

int cmd_pure_periodic(const Options& o) {
    const hcf::Surd x = value_arg(o);
    const hcf::SufficientReport r = hcf::check_sufficient(x, o.budget);
    Json j;
    j["purely_periodic"] = r.purely_periodic;
    j["report"] = hcf::json::sufficient(r);
    if (r.purely_periodic) j["necessary"] = hcf::json::checks(hcf::check_necessary(x));
    emit(o, j);
    return r.purely_periodic && r.passed() ? 0 : 1;
}

int cmd_good_approx(const Options& o) {
    if (o.p.empty() || o.q.empty()) throw usage_error("--p and --q are required");
    const hcf::GaussianInt p = parse_gaussian_arg(o.p), q = parse_gaussian_arg(o.q);
    const bool good = hcf::is_good_approximation(value_arg(o), p, q, o.cap);
    emit(o, {{"p", hcf::json::gaussian(p)}, {"q", hcf::json::gaussian(q)}, {"cap", o.cap}, {"good", good}});
    return good ? 0 : 1;
}

int cmd_bad_cert(const Options& o) {
    const hcf::Expansion e =
        o.digits.empty() ? hcf::expand(value_arg(o), o.length) : hcf::from_digits(digits_arg(o.digits, "--digits"));
    if (e.size() < 2) throw usage_error("bad-cert needs at least two digits");
    const hcf::BadCertificate c = hcf::badly_approximable_certificate(e, o.cap);
    Json j = hcf::json::bad_certificate(c);
    j["digits"] = hcf::json::digits(e.digits);
    emit(o, j);
    return c.consistent() ? 0 : 1;
}

int cmd_rep(const Options& o) {
    const hcf::Word w = word_arg(o);
    if (o.n > 0) {
        emit(o, {{"n", o.n}, {"r", hcf::repetition(w, o.n)}});
        return 0;
    }
    if (o.horizon < 4) throw usage_error("--horizon must be at least 4");
    emit(o, hcf::json::rep_profile(hcf::rep_exponent_estimate(w, o.horizon)));
    return 0;
}

int cmd_wuv(const Options& o, hcf::WuvMode mode) {
    if (o.horizon < 8) throw usage_error("--horizon must be at least 8");
    emit(o, hcf::json::wuv(hcf::find_wuv(word_arg(o), o.horizon, mode)));
    return 0;
}

int cmd_lemma51(const Options& o) {
    if (o.horizon < 8) throw usage_error("--horizon must be at least 8");
    const hcf::Word w = word_arg(o);
    const hcf::WUVDecomposition d = hcf::find_wuv(w, o.horizon, hcf::WuvMode::square);
    const hcf::Lemma51Report r = hcf::lemma51_check(word_expansion(w, o.horizon + 1), d);
    Json j = hcf::json::lemma51(r);
    j["hypotheses"] = hcf::json::hypotheses(hcf::transcendence_hypothesis_check(w, std::max<std::size_t>(o.horizon, 16)));
    emit(o, j);
    return r.passed() ? 0 : 1;
}

int cmd_counterexample(const Options& o) {
    hcf::CounterexampleFamily family;
    if (o.family == "a") family = hcf::CounterexampleFamily::a;
    else if (o.family == "b") family = hcf::CounterexampleFamily::b;
    else if (o.family == "c") family = hcf::CounterexampleFamily::c;
    else throw usage_error("--family must be a, b or c");
    hcf::CounterexampleParams params;
    params.M = parse_gaussian_arg(o.M);
    params.N = parse_gaussian_arg(o.N);
    if (family == hcf::CounterexampleFamily::c && o.M == "2-2i") params.M = hcf::GaussianInt(3);
    if (!o.period.empty()) params.period = digits_arg(o.period, "--period");
    const hcf::CounterexampleReport r = hcf::generate_counterexample(family, params);
    emit(o, hcf::json::counterexample(r));
    return r.passed() ? 0 : 1;
}

int cmd_partition_dump(const Options& o) {
    std::cout << "digit_re,digit_im,arc_index,point_re,point_im\n";
    const long bound = static_cast<long>(std::sqrt(static_cast<double>(o.max_norm))) + 1;
    char line[160];
    for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y) {
            const hcf::GaussianInt a(x, y);
            if (a.norm() < 2 || a.norm() > o.max_norm) continue;
            const hcf::Region cell = hcf::first_digit_cell(a);
            for (const hcf::BoundaryPoint& p : hcf::sample_boundary(cell, o.points)) {
                std::snprintf(line, sizeof line, "%ld,%ld,%zu,%.12g,%.12g\n", x, y, p.arc, p.re, p.im);
                std::cout << line;
            }
        }
    return 0;
}

int cmd_verify_all(const Options& o) {
    hcf::harness::Harness h(o.seed);
    bool all = true;
    std::cout << "seed " << o.seed << '\n';
    for (int id = 1; id <= 10; ++id) {
        const hcf::harness::CriterionResult r = h.run(id);
        all = all && r.pass;
        std::cout << hcf::harness::format_row(r, false) << std::endl;
        std::cerr << "[" << id << "] " << r.seconds << " s\n";
    }
    std::cout << (all ? "all checks passed" : "some checks failed") << '\n';
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz continued fractions: exact expansion, validity and certificates"};
    app.require_subcommand(1);
    Options o;

    auto precision = [&](CLI::App* c) {
        c->add_option("--bits", o.bits, "working precision in bits")->check(CLI::Range(32L, 1L << 20));
        c->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };
    auto value = [&](CLI::App* c) {
        c->add_option("--surd", o.surd, "\"a,b,d[,c]\" meaning (a + b sqrt(d)) / c");
        c->add_option("--input", o.input, "JSON file with {a, b, d, branch}");
    };
    auto word = [&](CLI::App* c) {
        c->add_option("--word", o.word, "word spec JSON, inline or a file path")->required();
        c->add_option("--horizon", o.horizon, "prefix length examined")->check(CLI::PositiveNumber);
    };

    auto* expand = app.add_subcommand("expand", "digits and Q-pair of a quadratic value");
    value(expand);
    precision(expand);
    expand->add_option("--length", o.length, "number of digits")->check(CLI::PositiveNumber);

    auto* validate = app.add_subcommand("validate", "is the digit word a valid prefix");
    validate->add_option("--digits", o.digits, "JSON array of [re, im]")->required();
    precision(validate);

    auto* eval = app.add_subcommand("eval-periodic", "value of an eventually periodic word");
    eval->add_option("--preperiod", o.preperiod, "JSON array of [re, im]");
    eval->add_option("--period", o.period, "JSON array of [re, im]")->required();
    precision(eval);

    auto* cycle = app.add_subcommand("cycle", "expand until a remainder repeats");
    value(cycle);
    precision(cycle);
    cycle->add_option("--budget", o.budget, "digit budget")->check(CLI::PositiveNumber);

    auto* pure = app.add_subcommand("pure-periodic", "pure periodicity with the conjugate criteria");
    value(pure);
    precision(pure);
    pure->add_option("--budget", o.budget, "digit budget")->check(CLI::PositiveNumber);

    auto* good = app.add_subcommand("good-approx", "is p/q a good approximation");
    value(good);
    precision(good);
    good->add_option("--p", o.p, "numerator")->required();
    good->add_option("--q", o.q, "denominator")->required();
    good->add_option("--cap", o.cap, "largest |q|^2 enumerated")->check(CLI::PositiveNumber);

    auto* bad = app.add_subcommand("bad-cert", "bounded-quotient certificate on a finite range");
    value(bad);
    precision(bad);
    bad->add_option("--digits", o.digits, "explicit digits instead of a value");
    bad->add_option("--length", o.length, "digits expanded from the value")->check(CLI::PositiveNumber);
    bad->add_option("--cap", o.cap, "largest |q|^2 enumerated")->check(CLI::PositiveNumber);

    auto* rep = app.add_subcommand("rep", "repetition function and exponent estimate");
    word(rep);
    precision(rep);
    rep->add_option("--n", o.n, "single r(n) instead of a profile")->check(CLI::PositiveNumber);

    auto* wuv = app.add_subcommand("wuv", "square-pattern W U V U prefixes");
    word(wuv);
    precision(wuv);
    auto* club = app.add_subcommand("club", "mirror-pattern W U V reverse(U) prefixes");
    word(club);
    precision(club);

    auto* lemma = app.add_subcommand("lemma51", "growth inequality over the square-pattern chain");
    word(lemma);
    precision(lemma);

    auto* counter = app.add_subcommand("counterexample", "conjugate-criterion counterexample families");
    counter->add_option("--family", o.family, "a, b or c")->check(CLI::IsMember({"a", "b", "c"}));
    counter->add_option("--M", o.M, "parameter M");
    counter->add_option("--N", o.N, "parameter N (family a)");
    counter->add_option("--period", o.period, "period for family b, JSON");
    precision(counter);

    auto* partition = app.add_subcommand("partition-dump", "first-digit cell boundaries as CSV");
    partition->add_option("--max-norm", o.max_norm, "largest |a|^2")->check(CLI::Range(2L, 10000L));
    partition->add_option("--points", o.points, "samples per curve")->check(CLI::Range(1, 100000));

    auto* verify = app.add_subcommand("verify-all", "seeded end-to-end check table");
    verify->add_option("--seed", o.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) return cmd_expand(o);
        if (*validate) return cmd_validate(o);
        if (*eval) return cmd_eval_periodic(o);
        if (*cycle) return cmd_cycle(o);
        if (*pure) return cmd_pure_periodic(o);
        if (*good) return cmd_good_approx(o);
        if (*bad) return cmd_bad_cert(o);
        if (*rep) return cmd_rep(o);
        if (*wuv) return cmd_wuv(o, hcf::WuvMode::square);
        if (*club) return cmd_wuv(o, hcf::WuvMode::club);
        if (*lemma) return cmd_lemma51(o);
        if (*counter) return cmd_counterexample(o);
        if (*partition) return cmd_partition_dump(o);
        if (*verify) return cmd_verify_all(o);
    } catch (const usage_error& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
