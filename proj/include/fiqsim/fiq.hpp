// Finite-information quantities: binary expansions whose digits are either
// determined bits or rational propensities, with an implicit all-1/2 tail.
#pragma once

#include "fiqsim/numeric.hpp"
#include "fiqsim/random.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fiqsim {

// Probability that an undetermined digit eventually settles at 1. Stored exactly.
class Propensity {
public:
    Propensity() : value_(1, 2) {}
    explicit Propensity(Rational v) : value_(std::move(v)) {
        if (value_ < 0 || value_ > 1) {
            throw std::invalid_argument("propensity outside [0,1]: " + rational_str(value_));
        }
    }

    const Rational& value() const { return value_; }
    bool is_half() const { return value_ == Rational(1, 2); }
    bool operator==(const Propensity&) const = default;

private:
    Rational value_;
};

// 1 - h(q) with h the binary entropy; 0*log2(0) taken as 0.
double bit_information(const Propensity& q);

struct DyadicInterval {
    Dyadic low;
    Dyadic high;

    Rational width() const { return high.as_rational() - low.as_rational(); }
    RatInterval as_rat() const { return {low.as_rational(), high.as_rational()}; }
};

class FiqParseError : public std::runtime_error {
public:
    FiqParseError(const std::string& what, std::size_t column)
        : std::runtime_error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

// A number-as-process on (0,1). Positions are 1-based; positions not explicitly
// stored are undetermined with propensity 1/2 (the tail), so the explicit cell
// map has finite support and the information content is a finite sum.
// Determined cells never revert: actualization is the only mutation.
class Fiq {
public:
    struct Cell {
        bool det = false;
        int bit = 0;         // meaningful when det
        Propensity prop{};   // meaningful when !det

        bool operator==(const Cell&) const = default;
    };
    using CellMap = std::map<std::uint32_t, Cell>;

    Fiq() = default;

    static Fiq make(const std::vector<std::pair<std::uint32_t, int>>& determined,
                    const std::vector<std::pair<std::uint32_t, Propensity>>& propensities);
    static Fiq from_bits(const std::vector<int>& bits);

    // Literal syntax: '0'/'1' determined, '?' propensity 1/2, '?(p/q)' explicit
    // propensity, trailing '*' the all-1/2 tail. parse(str(x)) == x.
    static Fiq parse(std::string_view literal);
    std::string str() const;

    bool is_determined(std::uint32_t pos) const;
    int determined_bit(std::uint32_t pos) const;
    Propensity propensity(std::uint32_t pos) const;
    std::uint32_t explicit_len() const { return explicit_len_; }
    std::uint32_t determined_count() const;

    // Smallest undetermined position; the tail guarantees one exists.
    std::uint32_t lowest_undetermined() const;

    double information_content() const;

    // Tightest dyadic hull of the values reachable by assigning the undetermined
    // positions <= depth and extending arbitrarily beyond depth.
    DyadicInterval possible_interval(std::uint32_t depth) const;

    // Fixes the bit at `pos` to a value drawn from its propensity; returns it.
    // Throws if the position is already determined.
    int actualize_bit(std::uint32_t pos, ActualizeSource& src);

    // Actualizes every undetermined position <= n_bits in order, then returns
    // the determined prefix as an exact dyadic.
    Dyadic sample_value(std::uint32_t n_bits, ActualizeSource& src);

    // Drops the first k positions and renumbers (the exact doubling-map shift).
    Fiq suffix(std::uint32_t k) const;

    // Shifts every position up by one and installs a determined leading bit.
    Fiq shifted_in(int leading_bit) const;

    const CellMap& cells() const { return cells_; }
    bool operator==(const Fiq&) const = default;

private:
    CellMap cells_;
    std::uint32_t explicit_len_ = 0;
};

inline Fiq make_fiq(const std::vector<std::pair<std::uint32_t, int>>& determined,
                    const std::vector<std::pair<std::uint32_t, Propensity>>& propensities) {
    return Fiq::make(determined, propensities);
}

inline double information_content(const Fiq& x) { return x.information_content(); }

}  // namespace fiqsim
