#include "fiqsim/stats.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace fiqsim {

namespace {

double two_sided_normal_p(double z) {
    return std::erfc(std::abs(z) / std::sqrt(2.0));
}

double chi_squared_p(double statistic, double df) {
    if (statistic <= 0.0) return 1.0;
    return boost::math::gamma_q(df / 2.0, statistic / 2.0);
}

void require_bits(const DigitStream& s) {
    if (s.bits.empty()) throw std::invalid_argument("digit stream is empty");
    for (auto b : s.bits) {
        if (b > 1) throw std::invalid_argument("digit stream contains a non-bit value");
    }
}

std::string pass_fail(bool reject) { return reject ? "reject" : "pass"; }

}  // namespace

TestReport monobit_test(const DigitStream& s, double alpha) {
    require_bits(s);
    const std::size_t n = s.bits.size();
    if (n < 100) throw std::invalid_argument("monobit test needs at least 100 bits");
    std::uint64_t ones = 0;
    for (auto b : s.bits) ones += b;
    const double z = (2.0 * static_cast<double>(ones) - static_cast<double>(n)) /
                     std::sqrt(static_cast<double>(n));
    TestReport r;
    r.test = "monobit";
    r.statistic = z;
    r.reference = "normal(0,1)";
    r.p_value = two_sided_normal_p(z);
    r.alpha = alpha;
    r.reject = r.p_value < alpha;
    r.verdict = pass_fail(r.reject);
    r.sample_size = n;
    return r;
}

TestReport block_frequency_test(const DigitStream& s, int k, double alpha) {
    require_bits(s);
    if (k < 1 || k > 8) throw std::invalid_argument("block length k must be in [1,8]");
    const std::size_t n = s.bits.size();
    const std::size_t cells = std::size_t(1) << k;
    if (n < 20 * cells) {
        throw std::invalid_argument("stream too short for block length " + std::to_string(k));
    }
    const std::size_t blocks = n / static_cast<std::size_t>(k);
    std::vector<std::uint64_t> counts(cells, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
        std::size_t v = 0;
        for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
            v = (v << 1) | s.bits[b * k + j];
        }
        ++counts[v];
    }
    const double expected = static_cast<double>(blocks) / static_cast<double>(cells);
    double chi2 = 0.0;
    for (auto c : counts) {
        const double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    const double df = static_cast<double>(cells - 1);
    TestReport r;
    r.test = "block_frequency";
    r.k = k;
    r.params = "k=" + std::to_string(k);
    r.statistic = chi2;
    r.reference = "chi_squared(df=" + std::to_string(cells - 1) + ")";
    r.p_value = chi_squared_p(chi2, df);
    r.alpha = alpha;
    r.reject = r.p_value < alpha;
    r.verdict = pass_fail(r.reject);
    r.sample_size = n;
    return r;
}

TestReport serial_correlation(const DigitStream& s, int lag, double alpha) {
    require_bits(s);
    if (lag < 1) throw std::invalid_argument("lag must be >= 1");
    const std::size_t n = s.bits.size();
    if (n <= 10 * static_cast<std::size_t>(lag)) {
        throw std::invalid_argument("stream too short for lag " + std::to_string(lag));
    }
    double mean = 0.0;
    for (auto b : s.bits) mean += b;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (auto b : s.bits) {
        const double d = b - mean;
        var += d * d;
    }
    if (var == 0.0) {
        throw std::domain_error("serial correlation undefined: stream has zero variance");
    }
    double cov = 0.0;
    const std::size_t m = n - static_cast<std::size_t>(lag);
    for (std::size_t i = 0; i < m; ++i) {
        cov += (s.bits[i] - mean) * (s.bits[i + lag] - mean);
    }
    const double corr = cov / var;
    const double z = corr * std::sqrt(static_cast<double>(m));
    TestReport r;
    r.test = "serial_correlation";
    r.k = lag;
    r.params = "lag=" + std::to_string(lag);
    r.statistic = corr;
    r.reference = "normal(0, 1/sqrt(n-lag))";
    r.p_value = two_sided_normal_p(z);
    r.alpha = alpha;
    r.reject = r.p_value < alpha;
    r.verdict = pass_fail(r.reject);
    r.sample_size = n;
    return r;
}

TestReport borel_normality(const DigitStream& s, int max_k, double alpha) {
    require_bits(s);
    if (max_k < 1 || max_k > 16) throw std::invalid_argument("max_k must be in [1,16]");
    const std::size_t n = s.bits.size();
    if (n < 20 * (std::size_t(1) << max_k)) {
        throw std::invalid_argument("stream too short for max block length " + std::to_string(max_k));
    }
    const double bound = std::sqrt(std::log2(static_cast<double>(n)) / static_cast<double>(n));
    double worst_dev = 0.0;
    double worst_z = 0.0;
    double worst_cells = 2.0;
    bool ok = true;
    for (int k = 1; k <= max_k; ++k) {
        const std::size_t cells = std::size_t(1) << k;
        const std::size_t windows = n - static_cast<std::size_t>(k) + 1;
        std::vector<std::uint64_t> counts(cells, 0);
        std::size_t v = 0;
        const std::size_t mask = cells - 1;
        for (std::size_t i = 0; i < n; ++i) {
            v = ((v << 1) | s.bits[i]) & mask;
            if (i + 1 >= static_cast<std::size_t>(k)) ++counts[v];
        }
        const double p0 = 1.0 / static_cast<double>(cells);
        for (auto c : counts) {
            const double dev = std::abs(static_cast<double>(c) / static_cast<double>(windows) - p0);
            if (dev > worst_dev) {
                worst_dev = dev;
                worst_z = dev / std::sqrt(p0 * (1.0 - p0) / static_cast<double>(windows));
                worst_cells = static_cast<double>(cells);
            }
            if (dev >= bound) ok = false;
        }
    }
    TestReport r;
    r.test = "borel_normality";
    r.k = max_k;
    r.params = "max_k=" + std::to_string(max_k);
    r.statistic = worst_dev;
    r.reference = "max block deviation < sqrt(log2(n)/n) = " + std::to_string(bound);
    // Approximate Bonferroni tail of the worst deviation, for context only;
    // the verdict follows the deviation bound above.
    r.p_value = std::min(1.0, worst_cells * two_sided_normal_p(worst_z));
    r.alpha = alpha;
    r.reject = !ok;
    r.verdict = pass_fail(r.reject);
    r.sample_size = n;
    return r;
}

TestReport two_sample_equivalence(const std::vector<DigitStream>& a,
                                  const std::vector<DigitStream>& b, int k, double alpha) {
    if (a.empty() || b.empty()) throw std::invalid_argument("ensembles must be non-empty");
    if (k < 1 || k > 8) throw std::invalid_argument("block length k must be in [1,8]");
    const std::size_t len = a.front().bits.size();
    for (const auto& s : a) {
        require_bits(s);
        if (s.bits.size() != len) throw std::invalid_argument("ensemble streams differ in length");
    }
    for (const auto& s : b) {
        require_bits(s);
        if (s.bits.size() != len) throw std::invalid_argument("ensemble streams differ in length");
    }
    const std::size_t cells = std::size_t(1) << k;
    auto pooled_counts = [&](const std::vector<DigitStream>& ens) {
        std::vector<std::uint64_t> counts(cells, 0);
        for (const auto& s : ens) {
            const std::size_t blocks = s.bits.size() / static_cast<std::size_t>(k);
            for (std::size_t bi = 0; bi < blocks; ++bi) {
                std::size_t v = 0;
                for (std::size_t j = 0; j < static_cast<std::size_t>(k); ++j) {
                    v = (v << 1) | s.bits[bi * k + j];
                }
                ++counts[v];
            }
        }
        return counts;
    };
    const auto ca = pooled_counts(a);
    const auto cb = pooled_counts(b);
    double total_a = 0.0, total_b = 0.0;
    for (auto c : ca) total_a += static_cast<double>(c);
    for (auto c : cb) total_b += static_cast<double>(c);
    const double total = total_a + total_b;

    // Drop block values absent from both ensembles; the test is conditional on
    // the observed support.
    double chi2 = 0.0;
    std::size_t used = 0;
    for (std::size_t v = 0; v < cells; ++v) {
        const double col = static_cast<double>(ca[v] + cb[v]);
        if (col == 0.0) continue;
        ++used;
        const double ea = total_a * col / total;
        const double eb = total_b * col / total;
        const double da = static_cast<double>(ca[v]) - ea;
        const double db = static_cast<double>(cb[v]) - eb;
        chi2 += da * da / ea + db * db / eb;
    }
    if (used < 2) {
        throw std::domain_error("degenerate contingency table: all blocks in one cell");
    }
    const double df = static_cast<double>(used - 1);
    TestReport r;
    r.test = "two_sample_equivalence";
    r.k = k;
    r.params = "k=" + std::to_string(k);
    r.statistic = chi2;
    r.reference = "chi_squared(df=" + std::to_string(used - 1) + ")";
    r.p_value = chi_squared_p(chi2, df);
    r.alpha = alpha;
    r.reject = r.p_value < alpha;
    r.verdict = r.reject ? "distinguished" : "indistinguishable at alpha=" + std::to_string(alpha);
    r.sample_size = static_cast<std::uint64_t>(total);
    return r;
}

std::string reports_to_json(const std::vector<TestReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"test", r.test},
                       {"k", r.k},
                       {"params", r.params},
                       {"statistic", r.statistic},
                       {"reference", r.reference},
                       {"p_value", r.p_value},
                       {"alpha", r.alpha},
                       {"reject", r.reject},
                       {"verdict", r.verdict},
                       {"sample_size", r.sample_size}});
    }
    return arr.dump(2);
}

std::string reports_to_csv(const std::vector<TestReport>& reports) {
    std::ostringstream out;
    out << "test,k,statistic,p_value,verdict\n";
    out.precision(17);
    for (const auto& r : reports) {
        out << r.test << "," << r.k << "," << r.statistic << "," << r.p_value << "," << r.verdict
            << "\n";
    }
    return out.str();
}

}  // namespace fiqsim
