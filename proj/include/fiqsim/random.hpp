// Seeded, counter-addressable randomness and the bit-actualization source interface.
#pragma once

#include "fiqsim/numeric.hpp"

#include <cstdint>

namespace fiqsim {

// SplitMix64-style finalizer.
std::uint64_t mix64(std::uint64_t x);

// Word `index` of the stream keyed by (seed, domain); pure function, platform independent.
std::uint64_t stream_word(std::uint64_t seed, std::uint64_t index, std::uint64_t domain);

// Domain tags keep RandomSource streams and BitTape streams decoupled even when
// a run reuses the same numeric seed for both models.
inline constexpr std::uint64_t kDomainRng = 0x243F6A8885A308D3ull;
inline constexpr std::uint64_t kDomainTape = 0x13198A2E03707344ull;

class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t position() const { return counter_; }

    std::uint64_t next_word() { return stream_word(seed_, counter_++, kDomainRng); }
    int next_bit() { return static_cast<int>(next_word() >> 63); }

    // Returns 1 with probability exactly p (lazy binary-expansion comparison).
    // A draw with p = 1/2 consumes exactly one bit and returns it unchanged.
    int bernoulli(const Rational& p);

private:
    std::uint64_t seed_ = 0;
    std::uint64_t counter_ = 0;
};

// Where actualized bits come from. `position` is the global index of the bit being
// fixed; propensity-driven sources ignore it, tape-backed sources read exactly it.
class ActualizeSource {
public:
    virtual ~ActualizeSource() = default;
    virtual int draw_bit(std::uint64_t position, const Rational& propensity) = 0;
};

class RngActualizer final : public ActualizeSource {
public:
    explicit RngActualizer(RandomSource& rng) : rng_(&rng) {}
    int draw_bit(std::uint64_t, const Rational& propensity) override { return rng_->bernoulli(propensity); }

private:
    RandomSource* rng_;
};

// Shifts positions by a fixed offset before delegating; used when a state's local
// bit indices differ from the trajectory-global ones.
class OffsetActualizer final : public ActualizeSource {
public:
    OffsetActualizer(ActualizeSource& inner, std::uint64_t offset) : inner_(&inner), offset_(offset) {}
    int draw_bit(std::uint64_t position, const Rational& propensity) override {
        return inner_->draw_bit(position + offset_, propensity);
    }

private:
    ActualizeSource* inner_;
    std::uint64_t offset_;
};

}  // namespace fiqsim
