#include "fiqsim/qmodel.hpp"

#include <cmath>

namespace fiqsim {

QState QState::make(std::vector<std::complex<double>> amplitudes) {
    if (amplitudes.size() < 2) throw std::invalid_argument("state dimension must be >= 2");
    double norm2 = 0.0;
    for (const auto& a : amplitudes) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-12) {
        throw std::invalid_argument("state not normalized: |psi|^2 = " + std::to_string(norm2));
    }
    return QState{std::move(amplitudes)};
}

BinaryMeasurement BinaryMeasurement::make(std::size_t dim, std::vector<std::complex<double>> projector) {
    if (dim < 2) throw std::invalid_argument("projector dimension must be >= 2");
    if (projector.size() != dim * dim) {
        throw std::invalid_argument("projector must be a dim x dim matrix");
    }
    BinaryMeasurement p{dim, std::move(projector)};
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if (std::abs(p.at(i, j) - std::conj(p.at(j, i))) > 1e-10) {
                throw std::invalid_argument("projector is not Hermitian at entry (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            std::complex<double> sum = 0.0;
            for (std::size_t k = 0; k < dim; ++k) sum += p.at(i, k) * p.at(k, j);
            if (std::abs(sum - p.at(i, j)) > 1e-10) {
                throw std::invalid_argument("projector is not idempotent at entry (" +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    return p;
}

double born_probability(const QState& psi, const BinaryMeasurement& meas) {
    if (psi.dim() != meas.dim) {
        throw std::invalid_argument("state and projector dimensions differ");
    }
    std::complex<double> value = 0.0;
    for (std::size_t i = 0; i < meas.dim; ++i) {
        for (std::size_t j = 0; j < meas.dim; ++j) {
            value += std::conj(psi.amplitudes[i]) * meas.at(i, j) * psi.amplitudes[j];
        }
    }
    if (std::abs(value.imag()) > 1e-10) {
        throw std::invalid_argument("born probability has imaginary residue " +
                                    std::to_string(value.imag()));
    }
    double p = value.real();
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

Rational HiddenVar::prefix_value(std::uint32_t n_bits) const {
    BigInt num = 0;
    for (std::uint32_t k = 1; k <= n_bits; ++k) num = (num << 1) | bit(k);
    return Rational(num, BigInt(1) << n_bits);
}

std::pair<HiddenVar, HiddenVar> split_bits(const HiddenVar& r, std::uint32_t depth) {
    if (depth < 2 || depth % 2 != 0) {
        throw std::invalid_argument("split depth must be even and >= 2");
    }
    return r.split();
}

MeasurementResult measure_binary(const Rational& p, const HiddenVar& r, std::uint32_t limit) {
    if (p < 0 || p > 1) {
        throw std::invalid_argument("probability outside [0,1]: " + rational_str(p));
    }
    auto [r1, r2] = r.split();
    if (p == 1) return {+1, r2};

    // Compare r1 against p digit by digit; the first differing bit decides.
    Rational rem = p;
    for (std::uint32_t k = 1; k <= limit; ++k) {
        rem *= 2;
        int pb = 0;
        if (rem >= 1) {
            pb = 1;
            rem -= 1;
        }
        int rb = r1.bit(k);
        if (rb != pb) return {rb < pb ? +1 : -1, r2};
    }
    throw UndecidedError(limit);
}

std::vector<int> run_measurement_sequence(const std::vector<Rational>& ps, const HiddenVar& r0,
                                          std::uint32_t limit) {
    std::vector<int> outcomes;
    outcomes.reserve(ps.size());
    HiddenVar r = r0;
    for (const auto& p : ps) {
        MeasurementResult res = measure_binary(p, r, limit);
        outcomes.push_back(res.outcome);
        r = res.next;
    }
    return outcomes;
}

}  // namespace fiqsim
