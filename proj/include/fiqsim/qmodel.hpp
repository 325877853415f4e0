// Hidden-variable supplement for binary quantum measurements: outcome +1 iff
// the odd-position bits of the hidden variable, read as a number, do not
// exceed the Born probability; the even-position bits carry forward.
#pragma once

#include "fiqsim/numeric.hpp"
#include "fiqsim/tape.hpp"

#include <complex>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fiqsim {

class UndecidedError : public std::runtime_error {
public:
    explicit UndecidedError(std::uint32_t limit)
        : std::runtime_error("hidden-variable comparison undecided after " + std::to_string(limit) +
                             " bits") {}
};

// Normalized state vector; dimension >= 2.
struct QState {
    std::vector<std::complex<double>> amplitudes;

    static QState make(std::vector<std::complex<double>> amplitudes);
    std::size_t dim() const { return amplitudes.size(); }
};

// Hermitian idempotent projector, row-major d x d.
struct BinaryMeasurement {
    std::size_t dim = 0;
    std::vector<std::complex<double>> projector;

    static BinaryMeasurement make(std::size_t dim, std::vector<std::complex<double>> projector);
    const std::complex<double>& at(std::size_t i, std::size_t j) const { return projector[i * dim + j]; }
};

// <psi|P|psi>, checked real to 1e-10 and clamped to [0,1].
double born_probability(const QState& psi, const BinaryMeasurement& meas);

// A number in [0,1) whose bits come lazily from a tape through an affine index
// map; splitting into odd/even sub-sequences composes the map.
class HiddenVar {
public:
    explicit HiddenVar(std::shared_ptr<const BitTape> tape, std::uint64_t start = 1,
                       std::uint64_t stride = 1)
        : tape_(std::move(tape)), start_(start), stride_(stride) {}

    static HiddenVar from_seed(std::uint64_t seed) {
        return HiddenVar(std::make_shared<BitTape>(BitTape::from_seed(seed)));
    }

    int bit(std::uint64_t k) const { return tape_->bit(start_ + (k - 1) * stride_); }
    Rational prefix_value(std::uint32_t n_bits) const;

    // (odd-position bits, even-position bits)
    std::pair<HiddenVar, HiddenVar> split() const {
        return {HiddenVar(tape_, start_, 2 * stride_), HiddenVar(tape_, start_ + stride_, 2 * stride_)};
    }

private:
    std::shared_ptr<const BitTape> tape_;
    std::uint64_t start_;
    std::uint64_t stride_;
};

// Validated split: depth must be even and >= 2 (the halves keep lazy access to
// bits beyond depth through the shared tape).
std::pair<HiddenVar, HiddenVar> split_bits(const HiddenVar& r, std::uint32_t depth);

struct MeasurementResult {
    int outcome = 0;  // +1 or -1
    HiddenVar next;
};

// Outcome +1 iff r1 <= p, decided by exact prefix comparison; the comparison
// extends r1 bit by bit and raises UndecidedError past `limit` bits.
MeasurementResult measure_binary(const Rational& p, const HiddenVar& r, std::uint32_t limit = 256);

std::vector<int> run_measurement_sequence(const std::vector<Rational>& ps, const HiddenVar& r0,
                                          std::uint32_t limit = 256);

}  // namespace fiqsim
