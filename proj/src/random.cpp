#include "fiqsim/random.hpp"

namespace fiqsim {

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t stream_word(std::uint64_t seed, std::uint64_t index, std::uint64_t domain) {
    return mix64(seed + domain + (index + 1) * 0x9E3779B97F4A7C15ull);
}

int RandomSource::bernoulli(const Rational& p) {
    if (p <= 0) return 0;
    if (p >= 1) return 1;
    if (p == Rational(1, 2)) return next_bit();

    // Compare a lazily drawn uniform u against p, bit by bit; outcome 1 iff u < p.
    // A tie needs 256 agreeing bits (probability 2^-256) and resolves to 0.
    Rational rem = p;
    for (int i = 0; i < 256; ++i) {
        rem *= 2;
        int pb = 0;
        if (rem >= 1) {
            pb = 1;
            rem -= 1;
        }
        int ub = next_bit();
        if (ub != pb) return ub < pb ? 1 : 0;
    }
    return 0;
}

}  // namespace fiqsim
