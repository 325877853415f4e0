#include "fiqsim/tape.hpp"

namespace fiqsim {

BitTape BitTape::from_bits(const std::vector<int>& bits) {
    BitTape t(0);
    t.extendable_ = false;
    t.prefix_ = bits;
    t.prefix_len_ = bits.size();
    return t;
}

BitTape BitTape::from_bits(const std::vector<int>& bits, std::uint64_t extend_seed) {
    BitTape t(extend_seed);
    t.prefix_ = bits;
    t.prefix_len_ = bits.size();
    return t;
}

std::uint64_t BitTape::word(std::uint64_t index) const {
    while (words_.size() <= index) {
        words_.push_back(stream_word(seed_, words_.size(), kDomainTape));
    }
    return words_[index];
}

int BitTape::bit(std::uint64_t position) const {
    if (position == 0) throw std::invalid_argument("tape positions are 1-based");
    if (position <= prefix_len_) return prefix_[position - 1];
    if (!extendable_) {
        throw std::out_of_range("tape read past fixed prefix at position " + std::to_string(position));
    }
    std::uint64_t offset = position - prefix_len_ - 1;
    return static_cast<int>((word(offset / 64) >> (63 - offset % 64)) & 1u);
}

Trajectory evolve_supplemented(const MapSpec& map, const BitTape& tape, std::uint64_t steps, int m,
                               int budget) {
    return evolve_supplemented(map, tape, steps, m, budget, FiqState::all_tail(map));
}

Trajectory evolve_supplemented(const MapSpec& map, const BitTape& tape, std::uint64_t steps, int m,
                               int budget, const FiqState& x0) {
    TapeActualizer src(tape);
    return evolve_with_source(map, x0, steps, m, src, budget, "tape", tape.seed());
}

}  // namespace fiqsim
