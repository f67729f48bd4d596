// selfcheck.hpp - randomized/property verification engine behind the CLI
// `verify` subcommand. The local correction implementation is injectable so
// a deliberately corrupted recursion can be shown to fail the suite.
#ifndef WPTRI_SELFCHECK_HPP
#define WPTRI_SELFCHECK_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wptri/exact.hpp"

namespace wptri::selfcheck {

/// Evaluates the local correction term R_{X(d;1,q)}(k). Defaults to the
/// production recursion when unset.
using LocalCorrectionFn =
    std::function<Rational(const BigInt&, const BigInt&, const BigInt&)>;

struct VerifyOptions {
    long max_weight = 30;
    long max_degree = 500;
    std::uint64_t seed = 1;
    long oracle_cases = 400; // random count == brute == series comparisons
    long type_cases = 250;   // random cyclic quotient types per property
    long float_cases = 150;  // roots-of-unity cross-checks
    LocalCorrectionFn local_correction{};
};

struct CheckOutcome {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string detail; // first failing case, empty when clean

    bool ok() const { return failures == 0; }
};

struct VerifyReport {
    std::vector<CheckOutcome> checks;
    double worst_float_error = 0.0;

    bool ok() const;
    long total_cases() const;
};

/// Runs every check; never throws (check-level exceptions are recorded as
/// failures).
VerifyReport run_verify(const VerifyOptions& opts = {});

/// The oracle-equivalence check alone (count == brute force == power
/// series, mixed weight-gcd structures). Exposed separately so callers can
/// time it at a chosen scale.
CheckOutcome check_oracle_equivalence(const VerifyOptions& opts);

} // namespace wptri::selfcheck

#endif
