#include "wptri/selfcheck.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "wptri/correction.hpp"
#include "wptri/ehrhart.hpp"
#include "wptri/unity.hpp"
#include "wptri/weights.hpp"

namespace wptri::selfcheck {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// GMP has no unsigned long long constructor; go through unsigned long
BigInt big_u64(std::uint64_t v) {
    return BigInt((unsigned long)v);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt random_unit(Rng& rng, const BigInt& d) {
    if (d == 1) return 0;
    long dd = d.get_si();
    for (;;) {
        BigInt u = uniform(rng, 1, dd - 1);
        if (gcd(u, d) == 1) return u;
    }
}

// Wraps the production recursion or the injected replacement.
struct Engine {
    LocalCorrectionFn local;

    explicit Engine(const VerifyOptions& opts) {
        local = opts.local_correction
                    ? opts.local_correction
                    : [](const BigInt& d, const BigInt& q, const BigInt& k) {
                          return correction_r_1q(d, q, k);
                      };
    }

    Rational r(const CyclicQuotient& x, const BigInt& k) const {
        NormalizedType n = normalize_type(x, k);
        return local(n.d, n.q, n.k);
    }

    Rational r_global(const WeightVector& w, const BigInt& d) const {
        Rational total;
        const BigInt* ws[3] = {&w.w0, &w.w1, &w.w2};
        for (int i = 0; i < 3; ++i) {
            if (*ws[i] == 1) continue;
            total += r(CyclicQuotient(*ws[i], *ws[i == 0 ? 1 : 0],
                                      *ws[i == 2 ? 1 : 2]),
                       d);
        }
        return total;
    }

    Rational chi(const WeightVector& w, const BigInt& d) const {
        return Rational(1) + quadratic_term(w, d) + r_global(w, d);
    }

    // Full pipeline on top of the (possibly corrupted) local correction.
    // Returns the assembled chi after reduction; integer-ness is the
    // caller's check.
    Rational pipeline_count(const WeightVector& w, const BigInt& d) const {
        if (d < 0) return Rational(0);
        BigInt g = w.total_gcd();
        WeightVector wn = w;
        BigInt dn = d;
        if (g > 1) {
            if (dn % g != 0) return Rational(0);
            wn = WeightVector(w.w0 / g, w.w1 / g, w.w2 / g);
            dn /= g;
        }
        ReductionData red = reduce(wn, dn);
        if (red.e < 0) return Rational(0);
        return chi(red.v, red.e);
    }
};

// Per-check bookkeeping: count cases, remember the first failure.
struct Recorder {
    CheckOutcome out;

    explicit Recorder(std::string name) { out.name = std::move(name); }

    void expect(bool ok, const std::function<std::string()>& describe) {
        ++out.cases;
        if (!ok) {
            ++out.failures;
            if (out.detail.empty()) out.detail = describe();
        }
    }

    void expect(bool ok, const std::string& label) {
        expect(ok, [&label] { return label; });
    }
};

template <typename Body>
CheckOutcome run_check(const std::string& name, Body&& body) {
    Recorder rec(name);
    try {
        body(rec);
    } catch (const std::exception& e) {
        ++rec.out.cases;
        ++rec.out.failures;
        if (rec.out.detail.empty())
            rec.out.detail = std::string("exception: ") + e.what();
    }
    return rec.out;
}

std::string show(const WeightVector& w, const BigInt& d) {
    std::ostringstream os;
    os << "w=(" << w.w0 << "," << w.w1 << "," << w.w2 << ") d=" << d;
    return os.str();
}

WeightVector random_weights(Rng& rng, long max_weight, bool structured) {
    long w_cap = std::max<long>(1, max_weight);
    if (structured) {
        for (int attempt = 0; attempt < 10; ++attempt) {
            long g01 = uniform(rng, 1, 3), g02 = uniform(rng, 1, 3),
                 g12 = uniform(rng, 1, 3);
            long v0 = uniform(rng, 1, 4), v1 = uniform(rng, 1, 4),
                 v2 = uniform(rng, 1, 4);
            long t = uniform(rng, 1, 3); // shared total factor
            long w0 = v0 * g01 * g02 * t;
            long w1 = v1 * g01 * g12 * t;
            long w2 = v2 * g02 * g12 * t;
            if (w0 <= w_cap && w1 <= w_cap && w2 <= w_cap)
                return WeightVector(w0, w1, w2);
        }
    }
    return WeightVector(uniform(rng, 1, w_cap), uniform(rng, 1, w_cap),
                        uniform(rng, 1, w_cap));
}

WeightVector random_pairwise_coprime(Rng& rng, long max_weight) {
    long w_cap = std::max<long>(1, max_weight);
    for (;;) {
        WeightVector w(uniform(rng, 1, w_cap), uniform(rng, 1, w_cap),
                       uniform(rng, 1, w_cap));
        if (w.pairwise_coprime()) return w;
    }
}

// Fixed anchors for the global chi checks; small bars keep the exhaustive
// windows cheap.
const std::vector<WeightVector>& chi_anchors() {
    static const std::vector<WeightVector> anchors = {
        WeightVector(1, 1, 1),  WeightVector(1, 2, 3), WeightVector(2, 3, 5),
        WeightVector(3, 4, 5),  WeightVector(5, 6, 7),
        WeightVector(19, 77, 12)};
    return anchors;
}

CheckOutcome check_primitives(const VerifyOptions& opts) {
    return run_check("euclidean-primitives", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0x9e3779b97f4a7c15ULL);
        std::uniform_int_distribution<std::uint64_t> bits;
        for (long c = 0; c < 300; ++c) {
            // 128-bit operands
            BigInt a = big_u64(bits(rng)) * big_u64(bits(rng));
            BigInt b = big_u64(bits(rng)) * big_u64(bits(rng));
            if (uniform(rng, 0, 1)) a = -a;
            if (uniform(rng, 0, 1)) b = -b;
            GcdExt e = gcd_ext(a, b);
            rec.expect(a * e.x + b * e.y == e.g && e.g >= 0 &&
                           (e.g == 0 || (a % e.g == 0 && b % e.g == 0)),
                       "gcd_ext identity on " + a.get_str() + ", " + b.get_str());

            BigInt m = big_u64(bits(rng) % 1000000007ULL) + 1;
            BigInt u = random_unit(rng, m);
            if (m > 1)
                rec.expect(canonical_residue(mod_inverse(u, m) * u, m) == 1,
                           "mod_inverse roundtrip mod " + m.get_str());

            BigInt k = big_u64(bits(rng)) - big_u64(bits(rng));
            BigInt res = canonical_residue(k, m);
            rec.expect(res >= 0 && res < m && (k - res) % m == 0,
                       "canonical_residue range");

            Rational x(k, m);
            rec.expect(frac_part(x) + Rational(x.floor()) == x &&
                           frac_part(x) >= Rational(0) &&
                           frac_part(x) < Rational(1),
                       "frac_part/floor identity");

            Rational y(big_u64(bits(rng) % 999983ULL) - 499991,
                       big_u64(bits(rng) % 4999ULL) + 1);
            Rational z(big_u64(bits(rng) % 999983ULL) - 499991,
                       big_u64(bits(rng) % 4999ULL) + 1);
            Rational s = x + y;
            rec.expect((x + y) + z == x + (y + z) && x * y == y * x &&
                           x * (y + z) == x * y + x * z && s.den() > 0 &&
                           gcd(s.num(), s.den()) == 1,
                       "rational field axioms");
        }
    });
}

CheckOutcome check_golden_anchor(const Engine& eng) {
    return run_check("golden-anchor", [&](Recorder& rec) {
        WeightVector w(19, 77, 12);
        Rational chi = eng.pipeline_count(w, 1528);
        rec.expect(chi.is_integer() && chi.num() == 70,
                   "pipeline count for " + show(w, 1528) + " = " + chi.str());
        rec.expect(count_bruteforce(w, 1528) == 70, "brute force anchor");
    });
}

CheckOutcome oracle_equivalence_impl(const VerifyOptions& opts,
                                     const Engine& eng) {
    return run_check("oracle-equivalence", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0xda3e39cb94b95bdbULL);
        for (long c = 0; c < opts.oracle_cases; ++c) {
            WeightVector w = random_weights(rng, opts.max_weight, c % 2 == 0);
            BigInt d = uniform(rng, 0, std::max<long>(0, opts.max_degree));
            if (c % 7 == 0) d = uniform(rng, 0, 8); // exercise tiny degrees
            if (c % 5 == 0) d *= w.total_gcd();     // hit divisible degrees
            BigInt brute = count_bruteforce(w, d);
            BigInt series = count_series(w, d);
            BigInt fast = count(w, d);
            Rational engine = eng.pipeline_count(w, d);
            bool ok = brute == series && brute == fast &&
                      engine.is_integer() && engine.num() == brute;
            rec.expect(ok, [&] {
                std::ostringstream os;
                os << show(w, d) << ": brute=" << brute << " series=" << series
                   << " count=" << fast << " engine=" << engine.str();
                return os.str();
            });
        }
    });
}

CheckOutcome check_bridge(const VerifyOptions& opts, const Engine& eng) {
    return run_check("correction-delta-bridge", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0xa0761d6478bd642fULL);
        long max_d = std::max<long>(2, std::min<long>(400, opts.max_degree));
        for (long c = 0; c < opts.type_cases; ++c) {
            BigInt d = uniform(rng, 1, max_d);
            CyclicQuotient x(d, random_unit(rng, d), random_unit(rng, d));
            BigInt k = uniform(rng, -2 * max_d, 2 * max_d);
            bool ok = eng.r(x, k) == -delta_invariant(x, -k);
            rec.expect(ok, [&] {
                std::ostringstream os;
                os << "X(" << x.d << ";" << x.a << "," << x.b << ") k=" << k
                   << ": R=" << eng.r(x, k).str() << " -Delta(-k)="
                   << (-delta_invariant(x, -k)).str();
                return os.str();
            });
        }
    });
}

CheckOutcome check_local_properties(const VerifyOptions& opts,
                                    const Engine& eng) {
    return run_check("local-correction-properties", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0xe7037ed1a0b428dbULL);
        long max_d = std::max<long>(2, std::min<long>(1000, opts.max_degree));
        for (long c = 0; c < opts.type_cases; ++c) {
            BigInt d = uniform(rng, 1, max_d);
            CyclicQuotient x(d, random_unit(rng, d), random_unit(rng, d));
            BigInt k = uniform(rng, -2 * max_d, 2 * max_d);
            rec.expect(eng.r(x, k) == eng.r(x, k + x.d),
                       "periodicity at X(" + x.d.get_str() + ";" +
                           x.a.get_str() + "," + x.b.get_str() + ")");
            rec.expect(eng.r(x, k) == eng.r(x, -(x.a + x.b) - k),
                       "duality at X(" + x.d.get_str() + ";" + x.a.get_str() +
                           "," + x.b.get_str() + ")");
            rec.expect(eng.r(x, x.d - x.a - x.b).is_zero(),
                       "zero point at X(" + x.d.get_str() + ";" +
                           x.a.get_str() + "," + x.b.get_str() + ")");

            // fractional-part identity: R_(d;1,q) + R_(d;1,d-q) + {k/d} = 0
            if (d >= 2) {
                BigInt q = random_unit(rng, d);
                Rational lhs = eng.local(d, q, canonical_residue(k, d)) +
                               eng.local(d, canonical_residue(-q, d),
                                         canonical_residue(k, d)) +
                               frac_part(Rational(k, d));
                rec.expect(lhs.is_zero(), "fpart identity at d=" +
                                              d.get_str() + " q=" + q.get_str());
            }

            // R_{X(q;p,1)}(-p) = -(q-1)/(2q)
            BigInt qv = uniform(rng, 2, max_d);
            BigInt pv = random_unit(rng, qv);
            rec.expect(eng.r(CyclicQuotient(qv, pv, 1), -pv) ==
                           Rational(-(qv - 1), 2 * qv),
                       "canonical value at (q,p)=(" + qv.get_str() + "," +
                           pv.get_str() + ")");
        }
    });
}

CheckOutcome check_count_vs_a_count(const VerifyOptions& opts,
                                    const Engine& eng) {
    return run_check("count-vs-corner-count", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0x589965cc75374cc3ULL);
        long cap = std::max<long>(2, std::min<long>(30, opts.max_weight));
        for (long c = 0; c < opts.type_cases; ++c) {
            BigInt p = uniform(rng, 1, cap);
            BigInt q = uniform(rng, 1, cap);
            if (gcd(p, q) != 1) continue;
            BigInt r = uniform(rng, 0, 30);
            Rational via_pipeline = eng.pipeline_count(
                WeightVector(p, q, 1), q * r - p - q);
            BigInt direct = a_count(p, q, r);
            bool ok = via_pipeline.is_integer() && via_pipeline.num() == direct;
            rec.expect(ok, [&] {
                std::ostringstream os;
                os << "(p,q,r)=(" << p << "," << q << "," << r
                   << "): count=" << via_pipeline.str() << " A=" << direct;
                return os.str();
            });

            // genus identity against the combinatorial delta
            Rational lhs = virtual_genus(WeightVector(p, q, 1), q * r + 1);
            Rational rhs = delta_comb(p, q, r) -
                           Rational(p + q, 2 * p * q) + Rational(1);
            rec.expect(lhs == rhs, "genus-delta identity");
        }
    });
}

CheckOutcome check_global_chi(const VerifyOptions& opts, const Engine& eng) {
    return run_check("global-chi-properties", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0x1d8e4e27c47d124fULL);
        std::vector<WeightVector> ws = chi_anchors();
        for (long i = 0; i < 6; ++i)
            ws.push_back(random_pairwise_coprime(rng, opts.max_weight));
        for (const WeightVector& w : ws) {
            BigInt absw = w.abs();
            BigInt bar = w.bar();
            // vanishing window, exhaustively
            for (BigInt d = -absw + 1; d < 0; ++d) {
                Rational chi = eng.chi(w, d);
                rec.expect(chi.is_zero(),
                           "chi != 0 inside the window at " + show(w, d));
            }
            for (long c = 0; c < 40; ++c) {
                BigInt d = uniform(rng, -3 * opts.max_degree,
                                   3 * opts.max_degree);
                Rational chi = eng.chi(w, d);
                rec.expect(chi.is_integer(),
                           "non-integer chi at " + show(w, d));
                rec.expect(chi == eng.chi(w, -absw - d),
                           "Serre duality fails at " + show(w, d));
                Rational step = eng.chi(w, d + bar) - chi;
                rec.expect(step == Rational(d) + Rational(bar + absw, 2),
                           "quasi-period step fails at " + show(w, d));
            }
        }
    });
}

CheckOutcome check_reduction(const VerifyOptions& opts) {
    return run_check("weight-reduction", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0xeb44accab455d165ULL);
        for (long c = 0; c < 300; ++c) {
            WeightVector w = random_weights(rng, opts.max_weight, true);
            BigInt g = w.total_gcd();
            if (g > 1) w = WeightVector(w.w0 / g, w.w1 / g, w.w2 / g);
            BigInt d = uniform(rng, 0, opts.max_degree);
            ReductionData red = reduce(w, d);
            BigInt prod = red.gcds.w01 * red.gcds.w02 * red.gcds.w12;
            rec.expect(w.w0 * red.r0 + w.w1 * red.r1 + w.w2 * red.r2 +
                               red.e * prod ==
                           d,
                       "reconstruction identity at " + show(w, d));
            rec.expect(red.v.pairwise_coprime(),
                       "reduced weights not pairwise coprime at " + show(w, d));
            if (red.e >= 0) {
                ReductionData again = reduce(red.v, red.e);
                rec.expect(again.v == red.v && again.e == red.e &&
                               again.r0 == 0 && again.r1 == 0 && again.r2 == 0,
                           "reduction not idempotent at " + show(w, d));
            }
            if (d <= 600) {
                BigInt lhs = count_bruteforce(w, d);
                BigInt rhs = red.e < 0 ? BigInt(0)
                                       : count_bruteforce(red.v, red.e);
                rec.expect(lhs == rhs,
                           "reduction does not preserve the count at " +
                               show(w, d));
            }
        }
    });
}

CheckOutcome check_fibonacci_depth() {
    return run_check("fibonacci-depth", [](Recorder& rec) {
        BigInt prev = 1, cur = 1; // F_1, F_2
        for (int n = 2; n <= 30; ++n) {
            // cur = F_n, next = F_{n+1}
            BigInt next = prev + cur;
            CorrectionChain chain = correction_chain(next, cur, next - 1);
            rec.expect((long)chain.steps.size() == n - 1,
                       "depth on (F_" + std::to_string(n + 1) + ", F_" +
                           std::to_string(n) + ") = " +
                           std::to_string(chain.steps.size()));
            prev = cur;
            cur = next;
        }
    });
}

CheckOutcome check_float(const VerifyOptions& opts, const Engine& eng,
                         double& worst) {
    return run_check("roots-of-unity-crosscheck", [&](Recorder& rec) {
        Rng rng(opts.seed ^ 0x2f2b7a52cf5cbb3dULL);
        for (long c = 0; c < opts.float_cases; ++c) {
            BigInt d = uniform(rng, 2, 2000);
            CyclicQuotient x(d, random_unit(rng, d), random_unit(rng, d));
            BigInt k = uniform(rng, -5000, 5000);
            double approx = r_via_roots(x.d, x.a, x.b, k);
            double exact = eng.r(x, k).to_double();
            double err = std::fabs(approx - exact) / (1.0 + std::fabs(exact));
            if (err > worst) worst = err;
            rec.expect(err < 1e-8, [&] {
                std::ostringstream os;
                os << "X(" << x.d << ";" << x.a << "," << x.b << ") k=" << k
                   << ": float=" << approx << " exact=" << exact;
                return os.str();
            });
        }
        for (long q : {2L, 7L, 360L, 5000L, 10000L}) {
            double err = std::fabs(unity_sum_identity(q) - (q - 1) / 2.0) /
                         (double)q;
            if (err > worst) worst = err;
            rec.expect(err < 1e-9,
                       "unity sum identity at q=" + std::to_string(q));
        }
    });
}

} // namespace

bool VerifyReport::ok() const {
    for (const CheckOutcome& c : checks)
        if (!c.ok()) return false;
    return true;
}

long VerifyReport::total_cases() const {
    long n = 0;
    for (const CheckOutcome& c : checks) n += c.cases;
    return n;
}

CheckOutcome check_oracle_equivalence(const VerifyOptions& opts) {
    Engine eng(opts);
    return oracle_equivalence_impl(opts, eng);
}

VerifyReport run_verify(const VerifyOptions& opts) {
    Engine eng(opts);
    VerifyReport report;
    report.checks.push_back(check_primitives(opts));
    report.checks.push_back(check_golden_anchor(eng));
    report.checks.push_back(oracle_equivalence_impl(opts, eng));
    report.checks.push_back(check_bridge(opts, eng));
    report.checks.push_back(check_local_properties(opts, eng));
    report.checks.push_back(check_count_vs_a_count(opts, eng));
    report.checks.push_back(check_global_chi(opts, eng));
    report.checks.push_back(check_reduction(opts));
    report.checks.push_back(check_fibonacci_depth());
    report.checks.push_back(check_float(opts, eng, report.worst_float_error));
    return report;
}

} // namespace wptri::selfcheck
