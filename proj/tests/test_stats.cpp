#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fiqsim/dynamics.hpp"
#include "fiqsim/random.hpp"
#include "fiqsim/stats.hpp"
#include "fiqsim/tape.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

using namespace fiqsim;

namespace {

DigitStream alternating(std::size_t n) {
    DigitStream s{{}, "alternating"};
    for (std::size_t i = 0; i < n; ++i) s.bits.push_back(i % 2 == 0 ? 0 : 1);
    return s;
}

DigitStream constant(std::size_t n, std::uint8_t b) {
    return {std::vector<std::uint8_t>(n, b), "constant"};
}

DigitStream seeded(std::uint64_t seed, std::size_t n) {
    DigitStream s{{}, "seed-" + std::to_string(seed)};
    RandomSource rng(seed);
    for (std::size_t i = 0; i < n; ++i) s.bits.push_back(static_cast<std::uint8_t>(rng.next_bit()));
    return s;
}

// Kolmogorov asymptotic survival function.
double ks_p_value(double d, std::size_t n) {
    const double lambda = (std::sqrt(static_cast<double>(n)) + 0.12 + 0.11 / std::sqrt(static_cast<double>(n))) * d;
    double sum = 0.0;
    for (int j = 1; j <= 100; ++j) {
        const double term = 2.0 * std::pow(-1.0, j - 1) * std::exp(-2.0 * j * j * lambda * lambda);
        sum += term;
    }
    return std::clamp(sum, 0.0, 1.0);
}

double ks_distance_from_uniform(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    double d = 0.0;
    const double n = static_cast<double>(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        d = std::max(d, std::abs((i + 1) / n - xs[i]));
        d = std::max(d, std::abs(xs[i] - i / n));
    }
    return d;
}

}  // namespace

TEST_CASE("monobit on balanced, biased and short streams") {
    auto r = monobit_test(alternating(1000));
    CHECK(r.statistic == 0.0);
    CHECK(r.p_value == 1.0);
    CHECK(!r.reject);

    auto all1 = monobit_test(constant(1000, 1));
    CHECK(all1.p_value < 1e-100);
    CHECK(all1.reject);

    CHECK_THROWS_AS(monobit_test(constant(99, 1)), std::invalid_argument);
}

TEST_CASE("block frequency at k=1 agrees with the monobit counts") {
    auto s = seeded(11, 4000);
    auto mono = monobit_test(s);
    auto blk = block_frequency_test(s, 1);
    // chi-squared with one degree of freedom is the squared z-statistic
    CHECK(blk.statistic == doctest::Approx(mono.statistic * mono.statistic).epsilon(1e-9));
    CHECK(!blk.reject);
}

TEST_CASE("block frequency rejects a period-2 stream at k=2") {
    auto r = block_frequency_test(alternating(2000), 2);
    CHECK(r.reject);
    CHECK(r.p_value < 1e-6);

    CHECK_THROWS_AS(block_frequency_test(alternating(100), 4), std::invalid_argument);
    CHECK_THROWS_AS(block_frequency_test(alternating(2000), 9), std::invalid_argument);
}

TEST_CASE("serial correlation catches anticorrelation and degenerate variance") {
    auto r = serial_correlation(alternating(2000), 1);
    CHECK(r.statistic == doctest::Approx(-1.0).epsilon(1e-2));
    CHECK(r.reject);
    CHECK(r.p_value < 1e-6);

    CHECK_THROWS_AS(serial_correlation(constant(2000, 1), 1), std::domain_error);
    CHECK_THROWS_AS(serial_correlation(alternating(10), 1), std::invalid_argument);

    auto iid = serial_correlation(seeded(5, 100000), 1);
    CHECK(std::abs(iid.statistic) < 4.0 / std::sqrt(100000.0));
}

TEST_CASE("borel normality: construct-and-count on the Champernowne prefix") {
    // Concatenate binary 0, 1, 10, 11, 100, ... out to 10^4 bits.
    DigitStream s{{}, "champernowne"};
    for (std::uint64_t v = 0; s.bits.size() < 10000; ++v) {
        std::vector<std::uint8_t> digits;
        std::uint64_t w = v;
        do {
            digits.push_back(static_cast<std::uint8_t>(w & 1));
            w >>= 1;
        } while (w);
        for (auto it = digits.rbegin(); it != digits.rend() && s.bits.size() < 10000; ++it) {
            s.bits.push_back(*it);
        }
    }
    std::uint64_t ones = 0;
    for (auto b : s.bits) ones += b;
    CHECK(ones == 5400);  // counted independently; short prefixes over-represent leading 1s

    auto r = borel_normality(s, 1);
    CHECK(r.statistic == doctest::Approx(0.04).epsilon(1e-9));
    // 0.04 exceeds sqrt(log2(1e4)/1e4) ~ 0.0365, so the finite prefix fails
    // the bound at this length even though the full sequence is normal.
    CHECK(r.reject);
}

TEST_CASE("borel normality: degenerate and seeded streams") {
    auto zeros = borel_normality(constant(1000, 0), 2);
    CHECK(zeros.reject);
    CHECK(zeros.statistic == doctest::Approx(0.75).epsilon(1e-12));  // k=2 deviation 2^-k(2^k-1)

    auto good = borel_normality(seeded(123, 10000), 4);
    CHECK(!good.reject);

    CHECK_THROWS_AS(borel_normality(seeded(1, 100), 4), std::invalid_argument);
}

TEST_CASE("two-sample equivalence: null resplits stay quiet") {
    std::vector<DigitStream> pool;
    for (std::uint64_t s = 1; s <= 60; ++s) pool.push_back(seeded(s, 1000));
    RandomSource shuffler(9);
    int rejections = 0;
    for (int split = 0; split < 100; ++split) {
        std::vector<DigitStream> a, b;
        for (auto& s : pool) (shuffler.next_bit() ? a : b).push_back(s);
        if (a.empty() || b.empty()) continue;
        auto r = two_sample_equivalence(a, b, 2, 0.001);
        rejections += r.reject ? 1 : 0;
    }
    CHECK(rejections <= 2);
}

TEST_CASE("two-sample equivalence: detects a biased alternative") {
    std::vector<DigitStream> fair, biased;
    RandomSource rng(1001);
    for (int i = 0; i < 20; ++i) {
        fair.push_back(seeded(2000 + static_cast<std::uint64_t>(i), 500));
        DigitStream s{{}, "bern06"};
        for (int j = 0; j < 500; ++j) {
            s.bits.push_back(static_cast<std::uint8_t>(rng.bernoulli(Rational(3, 5))));
        }
        biased.push_back(std::move(s));
    }
    auto r = two_sample_equivalence(fair, biased, 1, 0.001);
    CHECK(r.reject);
    CHECK(r.verdict == "distinguished");

    auto sym = two_sample_equivalence(biased, fair, 1, 0.001);
    CHECK(sym.statistic == doctest::Approx(r.statistic).epsilon(1e-12));

    std::vector<DigitStream> za = {constant(200, 0)}, zb = {constant(200, 0)};
    CHECK_THROWS_AS(two_sample_equivalence(za, zb, 1, 0.001), std::domain_error);
    CHECK_THROWS_AS(two_sample_equivalence({}, zb, 1, 0.001), std::invalid_argument);
}

TEST_CASE("reports are pure functions of the stream") {
    auto s = seeded(42, 5000);
    auto a = monobit_test(s);
    auto b = monobit_test(s);
    CHECK(a.statistic == b.statistic);
    CHECK(a.p_value == b.p_value);
    CHECK(a.verdict == b.verdict);
}

TEST_CASE("p-values are approximately uniform under the null") {
    std::vector<double> mono_ps, block_ps, serial_ps;
    for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
        auto s = seeded(seed, 20000);
        mono_ps.push_back(monobit_test(s).p_value);
        block_ps.push_back(block_frequency_test(s, 2).p_value);
        serial_ps.push_back(serial_correlation(s, 1).p_value);
    }
    CHECK(ks_p_value(ks_distance_from_uniform(mono_ps), mono_ps.size()) > 0.001);
    CHECK(ks_p_value(ks_distance_from_uniform(block_ps), block_ps.size()) > 0.001);
    CHECK(ks_p_value(ks_distance_from_uniform(serial_ps), serial_ps.size()) > 0.001);
}

TEST_CASE("report serialization carries the battery") {
    std::vector<TestReport> reports = {monobit_test(seeded(3, 1000)),
                                       block_frequency_test(seeded(3, 1000), 2)};
    auto json = reports_to_json(reports);
    CHECK(json.find("\"monobit\"") != std::string::npos);
    CHECK(json.find("p_value") != std::string::npos);
    auto csv = reports_to_csv(reports);
    CHECK(csv.rfind("test,k,statistic,p_value,verdict\n", 0) == 0);
}

TEST_CASE("trajectory bits from the dynamics module pass the battery") {
    // Block frequency over a 10^4-bit fiq-model doubling trajectory.
    RandomSource rng(40404);
    auto traj = evolve(MapSpec::doubling(), FiqState::all_tail(MapSpec::doubling()), 10000, 1, rng, 64);
    DigitStream fiq_bits{traj.emitted_stream(), "fiq-doubling"};
    for (int k : {2, 3, 4}) {
        CHECK(!block_frequency_test(fiq_bits, k, 0.001).reject);
    }

    // Borel normality over a 10^4-bit tape-model doubling trajectory.
    BitTape tape = BitTape::from_seed(50505);
    auto tt = evolve_supplemented(MapSpec::doubling(), tape, 10000, 1, 64);
    DigitStream tape_bits{tt.emitted_stream(), "tape-doubling"};
    auto borel = borel_normality(tape_bits, 4, 0.001);
    CHECK(!borel.reject);
}

TEST_CASE("power sanity: designed degenerates reject below 1e-6") {
    CHECK(monobit_test(constant(1000, 1)).p_value < 1e-6);
    CHECK(block_frequency_test(alternating(2000), 2).p_value < 1e-6);
    CHECK(serial_correlation(alternating(2000), 1).p_value < 1e-6);

    std::vector<DigitStream> fair, biased;
    RandomSource rng(77001);
    for (int i = 0; i < 20; ++i) {
        fair.push_back(seeded(9000 + static_cast<std::uint64_t>(i), 500));
        DigitStream s{{}, "bern06"};
        for (int j = 0; j < 500; ++j) {
            s.bits.push_back(static_cast<std::uint8_t>(rng.bernoulli(Rational(3, 5))));
        }
        biased.push_back(std::move(s));
    }
    CHECK(two_sample_equivalence(fair, biased, 1, 0.001).p_value < 1e-6);
}
