#pragma once

#include <limits>
#include <string>
#include <vector>

namespace chiralq {

/// One measured quantity with its admissible interval [lower, upper].
struct Metric {
    std::string name;
    double value = 0.0;
    double lower = -std::numeric_limits<double>::infinity();
    double upper = std::numeric_limits<double>::infinity();

    bool passed() const { return value >= lower && value <= upper; } // NaN fails
};

struct CheckResult {
    std::string id;
    std::string title;
    std::vector<Metric> metrics;
    double seconds = 0.0;
    double time_limit = std::numeric_limits<double>::infinity();
    std::string error; ///< message of an exception thrown by the suite

    bool passed() const;
};

struct VerifyOptions {
    unsigned threads = 1;
};

using CheckFunction = CheckResult (*)(const VerifyOptions&);

struct Suite {
    const char* id;
    CheckFunction run;
};

CheckResult check_kernel_annihilation(const VerifyOptions& opt);  // A1
CheckResult check_fourier_oracle(const VerifyOptions& opt);       // A2
CheckResult check_series_resummation(const VerifyOptions& opt);   // A3
CheckResult check_equivalence(const VerifyOptions& opt);          // A4
CheckResult check_factorization(const VerifyOptions& opt);        // A5
CheckResult check_radiation_decay(const VerifyOptions& opt);      // A6
CheckResult check_sourced_solve(const VerifyOptions& opt);        // A7
CheckResult check_causality(const VerifyOptions& opt);            // A8

/// A1 to A8 in order.
const std::vector<Suite>& verification_suites();

/// Runs the suites whose ids are listed (all when empty). Unknown ids throw
/// ConfigError. A suite that throws is reported as failed with its message.
std::vector<CheckResult> run_verification(const VerifyOptions& opt, const std::vector<std::string>& ids = {});

} // namespace chiralq
