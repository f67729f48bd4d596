// wptri command-line interface: exact lattice-point counts on weighted
// rational triangles, with the correction-term / resolution toolbox around
// them. All subcommands support --json (integers as decimal strings,
// rationals as {"num","den"} objects).
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wptri/correction.hpp"
#include "wptri/ehrhart.hpp"
#include "wptri/hj.hpp"
#include "wptri/selfcheck.hpp"
#include "wptri/unity.hpp"
#include "wptri/weights.hpp"

using json = nlohmann::json;
using namespace wptri;

namespace {

BigInt parse_bigint(const std::string& s, const char* what) {
    BigInt v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw CLI::ValidationError(std::string(what) + ": not an integer: '" +
                                   s + "'");
    return v;
}

BigInt parse_nonneg(const std::string& s, const char* what) {
    BigInt v = parse_bigint(s, what);
    if (v < 0)
        throw CLI::ValidationError(std::string(what) + ": must be >= 0, got " +
                                   s);
    return v;
}

BigInt parse_positive(const std::string& s, const char* what) {
    BigInt v = parse_bigint(s, what);
    if (v < 1)
        throw CLI::ValidationError(std::string(what) + ": must be >= 1, got " +
                                   s);
    return v;
}

json j_int(const BigInt& v) { return v.get_str(); }

json j_rat(const Rational& x) {
    return json{{"num", x.num().get_str()}, {"den", x.den().get_str()}};
}

json j_ints(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const BigInt& x : v) a.push_back(j_int(x));
    return a;
}

std::string join_ints(const std::vector<BigInt>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

std::string approx(const Rational& x) {
    if (x.is_integer()) return {};
    std::ostringstream os;
    os.precision(6);
    os << " (~" << x.to_double() << ")";
    return os.str();
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// Deferred action: callbacks only capture parsed arguments; the work runs
// after parsing so domain errors are distinguishable from usage errors.
std::function<int()> g_action;

struct CountArgs {
    std::vector<std::string> raw;
    bool explain = false;
    bool as_json = false;
};

int run_count(const CountArgs& args) {
    WeightVector w(parse_positive(args.raw[0], "w0"),
                   parse_positive(args.raw[1], "w1"),
                   parse_positive(args.raw[2], "w2"));
    BigInt d = parse_nonneg(args.raw[3], "d");
    BigInt result = count(w, d);
    if (!args.explain) {
        if (args.as_json)
            emit({{"command", "count"},
                  {"w", j_ints({w.w0, w.w1, w.w2})},
                  {"d", j_int(d)},
                  {"count", j_int(result)}});
        else
            std::cout << result << "\n";
        return 0;
    }

    BigInt g = w.total_gcd();
    WeightVector wn = w;
    BigInt dn = d;
    bool divisible = true;
    if (g > 1) {
        if (dn % g != 0)
            divisible = false;
        else {
            wn = WeightVector(w.w0 / g, w.w1 / g, w.w2 / g);
            dn /= g;
        }
    }

    json j{{"command", "count"},
           {"w", j_ints({w.w0, w.w1, w.w2})},
           {"d", j_int(d)},
           {"total_gcd", j_int(g)},
           {"count", j_int(result)}};
    std::ostringstream text;
    text << "w = (" << w.w0 << ", " << w.w1 << ", " << w.w2 << ")   d = " << d
         << "\n";
    if (!divisible) {
        text << "total gcd " << g << " does not divide d: count = 0\n";
    } else {
        if (g > 1)
            text << "total gcd " << g << ": reduced to w = (" << wn.w0 << ", "
                 << wn.w1 << ", " << wn.w2 << "), d = " << dn << "\n";
        ReductionData red = reduce(wn, dn);
        text << "pairwise gcds: w01 = " << red.gcds.w01
             << "  w02 = " << red.gcds.w02 << "  w12 = " << red.gcds.w12
             << "\n";
        text << "v = (" << red.v.w0 << ", " << red.v.w1 << ", " << red.v.w2
             << ")\n";
        text << "r = (" << red.r0 << ", " << red.r1 << ", " << red.r2 << ")\n";
        text << "e = " << red.e << "\n";
        j["reduction"] = {{"w01", j_int(red.gcds.w01)},
                          {"w02", j_int(red.gcds.w02)},
                          {"w12", j_int(red.gcds.w12)},
                          {"v", j_ints({red.v.w0, red.v.w1, red.v.w2})},
                          {"r", j_ints({red.r0, red.r1, red.r2})},
                          {"e", j_int(red.e)}};
        if (red.e < 0) {
            text << "e < 0: the triangle is empty, count = 0\n";
        } else {
            Rational quad = quadratic_term(red.v, red.e);
            text << "quadratic term = " << quad << approx(quad) << "\n";
            json locals = json::array();
            text << "local corrections:\n";
            Rational total;
            const BigInt* vs[3] = {&red.v.w0, &red.v.w1, &red.v.w2};
            for (int i = 0; i < 3; ++i) {
                const BigInt& order = *vs[i];
                const BigInt& a = *vs[i == 0 ? 1 : 0];
                const BigInt& b = *vs[i == 2 ? 1 : 2];
                Rational local =
                    order == 1
                        ? Rational(0)
                        : correction_r(CyclicQuotient(order, a, b), red.e);
                total += local;
                text << "  R(" << order << "; " << a << "," << b << ")(" << red.e
                     << ") = " << local << "\n";
                locals.push_back({{"order", j_int(order)},
                                  {"weights", j_ints({a, b})},
                                  {"value", j_rat(local)}});
            }
            text << "R_w(" << red.e << ") = " << total << approx(total) << "\n";
            Rational chi = Rational(1) + quad + total;
            text << "count = 1 + " << quad << " + (" << total
                 << ") = " << chi << "\n";
            j["quadratic_term"] = j_rat(quad);
            j["local_corrections"] = locals;
            j["correction_total"] = j_rat(total);
        }
    }
    if (args.as_json)
        emit(j);
    else
        std::cout << text.str();
    return 0;
}

struct TypeArgs {
    std::vector<std::string> raw;
    bool explain = false;
    bool as_json = false;
};

int run_correction(const TypeArgs& args) {
    CyclicQuotient x(parse_positive(args.raw[0], "d"),
                     parse_bigint(args.raw[1], "a"),
                     parse_bigint(args.raw[2], "b"));
    BigInt k = parse_bigint(args.raw[3], "k");
    NormalizedType n = normalize_type(x, k);
    CorrectionChain chain = correction_chain(n.d, n.q, n.k);
    if (args.as_json) {
        json steps = json::array();
        for (const RecursionStep& s : chain.steps)
            steps.push_back({{"d", j_int(s.d)},
                             {"q", j_int(s.q)},
                             {"k", j_int(s.k)},
                             {"term", j_rat(s.term)},
                             {"contribution", j_rat(s.contribution)}});
        json j{{"command", "correction"},
               {"type", j_ints({x.d, x.a, x.b})},
               {"k", j_int(k)},
               {"r", j_rat(chain.value)}};
        if (args.explain) {
            j["normalized"] = {{"d", j_int(n.d)}, {"q", j_int(n.q)},
                               {"k", j_int(n.k)}};
            j["steps"] = steps;
        }
        emit(j);
        return 0;
    }
    if (args.explain) {
        std::cout << "X(" << x.d << ";" << x.a << "," << x.b << ") k=" << k
                  << "  ->  X(" << n.d << ";1," << n.q << ") k=" << n.k
                  << "\n";
        for (std::size_t i = 0; i < chain.steps.size(); ++i) {
            const RecursionStep& s = chain.steps[i];
            std::cout << "step " << i + 1 << ": (d,q,k) = (" << s.d << ","
                      << s.q << "," << s.k << ")  contributes "
                      << s.contribution << "\n";
        }
        std::cout << "R = " << chain.value << "\n";
    } else {
        std::cout << chain.value << "\n";
    }
    return 0;
}

int run_delta(const TypeArgs& args) {
    CyclicQuotient x(parse_positive(args.raw[0], "d"),
                     parse_bigint(args.raw[1], "a"),
                     parse_bigint(args.raw[2], "b"));
    BigInt k = parse_bigint(args.raw[3], "k");
    Rational v = delta_invariant(x, k);
    if (args.as_json)
        emit({{"command", "delta"},
              {"type", j_ints({x.d, x.a, x.b})},
              {"k", j_int(k)},
              {"delta", j_rat(v)}});
    else
        std::cout << v << "\n";
    return 0;
}

int run_chi(const TypeArgs& args) {
    WeightVector w(parse_positive(args.raw[0], "w0"),
                   parse_positive(args.raw[1], "w1"),
                   parse_positive(args.raw[2], "w2"));
    BigInt d = parse_bigint(args.raw[3], "d");
    Rational chi = euler_characteristic(w, d);
    if (args.as_json)
        emit({{"command", "chi"},
              {"w", j_ints({w.w0, w.w1, w.w2})},
              {"d", j_int(d)},
              {"chi", j_int(chi.num())}});
    else
        std::cout << chi << "\n";
    return 0;
}

int run_reduce(const TypeArgs& args) {
    WeightVector w(parse_positive(args.raw[0], "w0"),
                   parse_positive(args.raw[1], "w1"),
                   parse_positive(args.raw[2], "w2"));
    BigInt d = parse_nonneg(args.raw[3], "d");
    ReductionData red = reduce(w, d);
    if (args.as_json) {
        emit({{"command", "reduce"},
              {"w", j_ints({w.w0, w.w1, w.w2})},
              {"d", j_int(d)},
              {"w01", j_int(red.gcds.w01)},
              {"w02", j_int(red.gcds.w02)},
              {"w12", j_int(red.gcds.w12)},
              {"v", j_ints({red.v.w0, red.v.w1, red.v.w2})},
              {"r", j_ints({red.r0, red.r1, red.r2})},
              {"e", j_int(red.e)}});
    } else {
        std::cout << "w01 = " << red.gcds.w01 << "  w02 = " << red.gcds.w02
                  << "  w12 = " << red.gcds.w12 << "\n"
                  << "v = (" << red.v.w0 << ", " << red.v.w1 << ", "
                  << red.v.w2 << ")\n"
                  << "r = (" << red.r0 << ", " << red.r1 << ", " << red.r2
                  << ")\n"
                  << "e = " << red.e << "\n";
    }
    return 0;
}

struct DqArgs {
    std::string d, q;
    bool as_json = false;
};

int run_hj(const DqArgs& args) {
    HJData h = hj_expand(parse_positive(args.d, "d"),
                         parse_positive(args.q, "q"));
    if (args.as_json)
        emit({{"command", "hj"},
              {"d", j_int(h.d)},
              {"c", j_ints(h.c)},
              {"q", j_ints(h.q)},
              {"qbar", j_ints(h.qbar)}});
    else
        std::cout << "c=[" << join_ints(h.c) << "] q=[" << join_ints(h.q)
                  << "] qbar=[" << join_ints(h.qbar) << "]\n";
    return 0;
}

int run_lct(const DqArgs& args) {
    Rational v = lct(parse_positive(args.d, "d"), parse_positive(args.q, "q"));
    if (args.as_json)
        emit({{"command", "lct"}, {"lct", j_rat(v)}});
    else
        std::cout << v << "\n";
    return 0;
}

int run_blache(const DqArgs& args) {
    BigInt d = parse_positive(args.d, "d");
    BigInt q = parse_positive(args.q, "q");
    BlacheBoundReport bound = blache_bound_report(d, q);
    BlacheDiffReport diff = blache_diff_report(d, q);
    if (args.as_json) {
        json bound_entries = json::array();
        for (const BlacheBoundEntry& e : bound.entries)
            bound_entries.push_back({{"ell", j_int(e.ell)},
                                     {"r", j_rat(e.r)},
                                     {"bound", j_rat(e.bound)},
                                     {"holds", e.holds}});
        json diff_entries = json::array();
        for (const BlacheDiffEntry& e : diff.entries)
            diff_entries.push_back({{"ell", j_int(e.ell)},
                                    {"diff", j_rat(e.diff)},
                                    {"attains_bound", e.attains_bound}});
        emit({{"command", "blache"},
              {"d", j_int(d)},
              {"q", j_int(q)},
              {"gorenstein_index", j_int(bound.index)},
              {"lct", j_rat(lct(d, q))},
              {"parabola_bound", {{"holds", bound.holds},
                                  {"entries", bound_entries}}},
              {"difference_bound", {{"bound", j_rat(diff.bound)},
                                    {"max_diff", j_rat(diff.max_diff)},
                                    {"holds", diff.holds},
                                    {"entries", diff_entries}}}});
        return 0;
    }
    std::cout << "X(" << d << ";1," << q << "): I = " << bound.index
              << "  lct = " << lct(d, q) << "\n";
    std::cout << "|R(lK)| <= (l-1)(I-l)/I for l = 2.." << bound.index - 1
              << ": " << (bound.holds ? "holds" : "FAILS") << "\n";
    std::cout << "|R((l+1)K) - R(lK)| <= " << diff.bound << ": "
              << (diff.holds ? "holds" : "FAILS");
    std::vector<BigInt> attained;
    for (const BlacheDiffEntry& e : diff.entries)
        if (e.attains_bound) attained.push_back(e.ell);
    if (!attained.empty())
        std::cout << ", attained at l = " << join_ints(attained);
    std::cout << "\n";
    std::cout << "differences:";
    for (const BlacheDiffEntry& e : diff.entries) std::cout << " " << e.diff;
    std::cout << "\n";
    return 0;
}

struct PickArgs {
    std::string i, b;
    bool as_json = false;
};

int run_pick(const PickArgs& args) {
    Rational area = pick_area(parse_nonneg(args.i, "interior"),
                              parse_nonneg(args.b, "boundary"));
    if (args.as_json)
        emit({{"command", "pick"}, {"area", j_rat(area)}});
    else
        std::cout << area << "\n";
    return 0;
}

struct VerifyArgs {
    long max_weight = 30;
    long max_degree = 500;
    unsigned long long seed = 1;
    long cases = 400;
    bool as_json = false;
};

int run_verify_cmd(const VerifyArgs& args) {
    selfcheck::VerifyOptions opts;
    opts.max_weight = args.max_weight;
    opts.max_degree = args.max_degree;
    opts.seed = args.seed;
    opts.oracle_cases = args.cases;
    selfcheck::VerifyReport report = selfcheck::run_verify(opts);
    if (args.as_json) {
        json checks = json::array();
        for (const auto& c : report.checks)
            checks.push_back({{"name", c.name},
                              {"cases", c.cases},
                              {"failures", c.failures},
                              {"detail", c.detail}});
        emit({{"command", "verify"},
              {"ok", report.ok()},
              {"total_cases", report.total_cases()},
              {"worst_float_error", report.worst_float_error},
              {"checks", checks}});
    } else {
        for (const auto& c : report.checks) {
            std::cout << (c.ok() ? "[ OK ] " : "[FAIL] ") << c.name << " ("
                      << c.cases << " cases)";
            if (!c.ok())
                std::cout << " - " << c.failures << " failures, first: "
                          << c.detail;
            std::cout << "\n";
        }
        std::cout << (report.ok() ? "PASS" : "FAIL") << ": "
                  << report.total_cases()
                  << " cases checked, worst float error "
                  << report.worst_float_error << "\n";
    }
    return report.ok() ? 0 : 1;
}

struct BenchArgs {
    long fib = 0;
    bool random = false;
    std::string max_weight = "1000";
    std::string degree = "1000000";
    long cases = 50;
    bool as_json = false;
};

long euclid_divisions(BigInt a, BigInt b) {
    long n = 0;
    while (b != 0) {
        BigInt r = canonical_residue(a, b);
        a = b;
        b = r;
        ++n;
    }
    return n;
}

int run_bench(const BenchArgs& args) {
    using clock = std::chrono::steady_clock;
    json rows = json::array();
    bool ok = true;
    if (args.fib > 0) {
        BigInt prev = 1, cur = 1; // F_1, F_2
        for (long n = 2; n <= args.fib; ++n) {
            BigInt next = prev + cur; // F_{n+1}
            auto t0 = clock::now();
            CorrectionChain chain = correction_chain(next, cur, next - 1);
            auto t1 = clock::now();
            long steps = (long)chain.steps.size();
            long divisions = euclid_divisions(next, cur);
            bool match = steps == divisions && steps == n - 1;
            ok = ok && match;
            double us =
                std::chrono::duration<double, std::micro>(t1 - t0).count();
            if (args.as_json)
                rows.push_back({{"n", n},
                                {"d", j_int(next)},
                                {"q", j_int(cur)},
                                {"steps", steps},
                                {"euclid_divisions", divisions},
                                {"match", match},
                                {"microseconds", us}});
            else
                std::cout << "n=" << n << "  (d,q)=(F_" << n + 1 << ",F_" << n
                          << ")=(" << next << "," << cur << ")  steps=" << steps
                          << " euclid=" << divisions
                          << (match ? "" : "  MISMATCH") << "  " << us
                          << " us\n";
            prev = cur;
            cur = next;
        }
    } else if (args.random) {
        BigInt max_w = parse_positive(args.max_weight, "max-weight");
        BigInt max_d = parse_nonneg(args.degree, "degree");
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(42);
        double fast_total_us = 0;
        double series_total_us = 0;
        long series_cases = 0;
        for (long c = 0; c < args.cases; ++c) {
            WeightVector w(rng.get_z_range(max_w) + 1,
                           rng.get_z_range(max_w) + 1,
                           rng.get_z_range(max_w) + 1);
            BigInt d = rng.get_z_range(max_d + 1);
            auto t0 = clock::now();
            BigInt fast = count(w, d);
            auto t1 = clock::now();
            fast_total_us +=
                std::chrono::duration<double, std::micro>(t1 - t0).count();
            if (d <= 200000) {
                auto t2 = clock::now();
                BigInt slow = count_series(w, d);
                auto t3 = clock::now();
                series_total_us +=
                    std::chrono::duration<double, std::micro>(t3 - t2).count();
                ++series_cases;
                if (slow != fast) {
                    ok = false;
                    std::cerr << "disagreement at w=(" << w.w0 << "," << w.w1
                              << "," << w.w2 << ") d=" << d << "\n";
                }
            }
        }
        if (args.as_json) {
            rows.push_back(
                {{"cases", args.cases},
                 {"fast_mean_us", fast_total_us / (double)args.cases},
                 {"series_cases", series_cases},
                 {"series_mean_us",
                  series_cases ? series_total_us / (double)series_cases : 0}});
        } else {
            std::cout << "count: " << args.cases << " calls, mean "
                      << fast_total_us / (double)args.cases << " us\n";
            if (series_cases)
                std::cout << "count_series: " << series_cases
                          << " calls, mean "
                          << series_total_us / (double)series_cases << " us\n";
        }
    } else {
        throw CLI::ValidationError("bench: pass --fib N or --random");
    }
    if (args.as_json) emit({{"command", "bench"}, {"ok", ok}, {"runs", rows}});
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-point counts on weighted rational triangles"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* sub_count = app.add_subcommand(
        "count", "number of lattice points on w0*x+w1*y+w2*z = d");
    sub_count->add_option("args", count_args.raw, "w0 w1 w2 d")
        ->expected(4)
        ->required();
    sub_count->add_flag("--explain", count_args.explain,
                        "show reduction, quadratic term and local corrections");
    sub_count->add_flag("--json", count_args.as_json, "JSON output");
    sub_count->callback([&] { g_action = [&] { return run_count(count_args); }; });

    TypeArgs corr_args;
    auto* sub_corr = app.add_subcommand(
        "correction", "correction term R_{X(d;a,b)}(k)");
    sub_corr->add_option("args", corr_args.raw, "d a b k")
        ->expected(4)
        ->required();
    sub_corr->add_flag("--explain", corr_args.explain,
                       "show the normalized type and every recursion step");
    sub_corr->add_flag("--json", corr_args.as_json, "JSON output");
    sub_corr->callback(
        [&] { g_action = [&] { return run_correction(corr_args); }; });

    TypeArgs delta_args;
    auto* sub_delta = app.add_subcommand(
        "delta", "Delta-invariant of X(d;a,b) at k");
    sub_delta->add_option("args", delta_args.raw, "d a b k")
        ->expected(4)
        ->required();
    sub_delta->add_flag("--json", delta_args.as_json, "JSON output");
    sub_delta->callback([&] { g_action = [&] { return run_delta(delta_args); }; });

    TypeArgs chi_args;
    auto* sub_chi = app.add_subcommand(
        "chi", "Euler characteristic for pairwise-coprime weights (any "
               "integer degree)");
    sub_chi->add_option("args", chi_args.raw, "w0 w1 w2 d")
        ->expected(4)
        ->required();
    sub_chi->add_flag("--json", chi_args.as_json, "JSON output");
    sub_chi->callback([&] { g_action = [&] { return run_chi(chi_args); }; });

    TypeArgs reduce_args;
    auto* sub_reduce = app.add_subcommand(
        "reduce", "rewrite arbitrary weights as a pairwise-coprime problem");
    sub_reduce->add_option("args", reduce_args.raw, "w0 w1 w2 d")
        ->expected(4)
        ->required();
    sub_reduce->add_flag("--json", reduce_args.as_json, "JSON output");
    sub_reduce->callback(
        [&] { g_action = [&] { return run_reduce(reduce_args); }; });

    DqArgs hj_args;
    auto* sub_hj = app.add_subcommand(
        "hj", "Hirzebruch-Jung continued fraction data of d/q");
    sub_hj->add_option("d", hj_args.d, "order")->required();
    sub_hj->add_option("q", hj_args.q, "weight, coprime to d")->required();
    sub_hj->add_flag("--json", hj_args.as_json, "JSON output");
    sub_hj->callback([&] { g_action = [&] { return run_hj(hj_args); }; });

    DqArgs lct_args;
    auto* sub_lct = app.add_subcommand(
        "lct", "log-canonical threshold of X(d;1,q)");
    sub_lct->add_option("d", lct_args.d, "order")->required();
    sub_lct->add_option("q", lct_args.q, "weight, coprime to d")->required();
    sub_lct->add_flag("--json", lct_args.as_json, "JSON output");
    sub_lct->callback([&] { g_action = [&] { return run_lct(lct_args); }; });

    DqArgs blache_args;
    auto* sub_blache = app.add_subcommand(
        "blache", "bounds on R(l*K) for X(d;1,q) and the difference sweep");
    sub_blache->add_option("d", blache_args.d, "order")->required();
    sub_blache->add_option("q", blache_args.q, "weight, coprime to d")
        ->required();
    sub_blache->add_flag("--json", blache_args.as_json, "JSON output");
    sub_blache->callback(
        [&] { g_action = [&] { return run_blache(blache_args); }; });

    PickArgs pick_args;
    auto* sub_pick = app.add_subcommand("pick", "Pick area i + b/2 - 1");
    sub_pick->add_option("interior", pick_args.i, "interior points")
        ->required();
    sub_pick->add_option("boundary", pick_args.b, "boundary points")
        ->required();
    sub_pick->add_flag("--json", pick_args.as_json, "JSON output");
    sub_pick->callback([&] { g_action = [&] { return run_pick(pick_args); }; });

    VerifyArgs verify_args;
    auto* sub_verify = app.add_subcommand(
        "verify", "run the property/oracle suites; exit 1 on any failure");
    sub_verify->add_option("--max-weight", verify_args.max_weight,
                           "weight bound for random cases");
    sub_verify->add_option("--max-degree", verify_args.max_degree,
                           "degree bound for random cases");
    sub_verify->add_option("--seed", verify_args.seed, "RNG seed");
    sub_verify->add_option("--cases", verify_args.cases,
                           "number of oracle-equivalence cases");
    sub_verify->add_flag("--json", verify_args.as_json, "JSON output");
    sub_verify->callback(
        [&] { g_action = [&] { return run_verify_cmd(verify_args); }; });

    BenchArgs bench_args;
    auto* sub_bench = app.add_subcommand(
        "bench", "Fibonacci worst-case step counts or random timing");
    sub_bench->add_option("--fib", bench_args.fib,
                          "run (F_{n+1}, F_n) for n = 2..N");
    sub_bench->add_flag("--random", bench_args.random,
                        "time count() on random instances");
    sub_bench->add_option("--max-weight", bench_args.max_weight,
                          "weight bound for --random");
    sub_bench->add_option("--degree", bench_args.degree,
                          "degree bound for --random");
    sub_bench->add_option("--count", bench_args.cases,
                          "number of random instances");
    sub_bench->add_flag("--json", bench_args.as_json, "JSON output");
    sub_bench->callback([&] { g_action = [&] { return run_bench(bench_args); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // 0 covers --help
    }
    try {
        return g_action ? g_action() : 2;
    } catch (const CLI::ParseError& e) {
        // argument values are validated lazily, inside the action
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
