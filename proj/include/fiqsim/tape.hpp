// Deterministic hidden-variable bit tape: a seed-reproducible, lazily extended
// bit sequence standing in for the inaccessible digits of a "real number".
#pragma once

#include "fiqsim/dynamics.hpp"
#include "fiqsim/random.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fiqsim {

// Bit n (1-based) is a pure function of (seed, n); the cached prefix only ever
// grows, so concurrent readers are safe alongside a single extender.
class BitTape {
public:
    static BitTape from_seed(std::uint64_t seed) { return BitTape(seed); }

    // Explicit prefix, PRF-extended beyond it when extend_seed is given;
    // without one, reads past the prefix throw (useful for coupling checks).
    static BitTape from_bits(const std::vector<int>& bits);
    static BitTape from_bits(const std::vector<int>& bits, std::uint64_t extend_seed);

    int bit(std::uint64_t position) const;  // 1-based
    std::uint64_t seed() const { return seed_; }
    std::uint64_t generated_length() const { return words_.size() * 64; }

private:
    explicit BitTape(std::uint64_t seed) : seed_(seed), extendable_(true) {}

    std::uint64_t word(std::uint64_t index) const;

    std::uint64_t seed_ = 0;
    bool extendable_ = true;
    std::uint64_t prefix_len_ = 0;
    std::vector<int> prefix_;
    mutable std::vector<std::uint64_t> words_;
};

inline int tape_bit(const BitTape& tape, std::uint64_t n) { return tape.bit(n); }

// Actualization that ignores propensities and reads the tape at the bit's own
// position: the deterministic supplement of the fiq model.
class TapeActualizer final : public ActualizeSource {
public:
    explicit TapeActualizer(const BitTape& tape) : tape_(&tape) {}
    int draw_bit(std::uint64_t position, const Rational&) override { return tape_->bit(position); }

private:
    const BitTape* tape_;
};

// Same algorithm as evolve, with every would-be actualization of input bit n
// replaced by tape_bit(tape, n). Fully deterministic given the tape seed.
Trajectory evolve_supplemented(const MapSpec& map, const BitTape& tape, std::uint64_t steps, int m,
                               int budget);
Trajectory evolve_supplemented(const MapSpec& map, const BitTape& tape, std::uint64_t steps, int m,
                               int budget, const FiqState& x0);

}  // namespace fiqsim
