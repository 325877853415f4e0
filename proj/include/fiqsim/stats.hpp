// Randomness and equivalence testing for emitted digit streams: frequency,
// block, serial-correlation and Borel-normality checks, plus a chi-squared
// two-sample homogeneity test between stream ensembles.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fiqsim {

struct DigitStream {
    std::vector<std::uint8_t> bits;
    std::string label;
};

struct TestReport {
    std::string test;
    int k = 0;                // block length / lag / max_k; 0 when not applicable
    std::string params;       // e.g. "k=3", "lag=1"
    double statistic = 0.0;
    std::string reference;    // distribution or bound the statistic is judged against
    double p_value = 1.0;
    double alpha = 0.001;
    bool reject = false;
    std::string verdict;
    std::uint64_t sample_size = 0;
};

inline constexpr double kDefaultAlpha = 0.001;

// Two-sided z-test of the ones count against Binomial(n, 1/2); n >= 100.
TestReport monobit_test(const DigitStream& s, double alpha = kDefaultAlpha);

// Chi-squared over non-overlapping k-blocks against uniform 2^-k;
// requires 1 <= k <= 8 and length >= 20 * 2^k.
TestReport block_frequency_test(const DigitStream& s, int k, double alpha = kDefaultAlpha);

// Sample autocorrelation at `lag` with a normal-approximation p-value;
// requires length > 10 * lag; throws on zero variance.
TestReport serial_correlation(const DigitStream& s, int lag, double alpha = kDefaultAlpha);

// For each k <= max_k, the maximum deviation of overlapping k-block
// frequencies from 2^-k. The verdict applies the Borel-style bound
// sqrt(log2(n) / n) (a documented convention); the p-value is an approximate
// Bonferroni tail probability of the worst deviation, reported for context.
TestReport borel_normality(const DigitStream& s, int max_k, double alpha = kDefaultAlpha);

// Pooled k-block contingency table between two stream ensembles, chi-squared
// homogeneity test. Requires non-empty ensembles of equal-length streams.
TestReport two_sample_equivalence(const std::vector<DigitStream>& a,
                                  const std::vector<DigitStream>& b, int k,
                                  double alpha = kDefaultAlpha);

std::string reports_to_json(const std::vector<TestReport>& reports);
std::string reports_to_csv(const std::vector<TestReport>& reports);

}  // namespace fiqsim
