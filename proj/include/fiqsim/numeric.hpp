// Exact arithmetic primitives: arbitrary-precision rationals and dyadic values.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fiqsim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// num / 2^exp, exact.
struct Dyadic {
    BigInt num;
    std::uint32_t exp = 0;

    Rational as_rational() const { return Rational(num, BigInt(1) << exp); }
    std::string str() const;

    bool operator==(const Dyadic& other) const { return as_rational() == other.as_rational(); }
};

struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// floor(x * 2^bits) for x >= 0.
BigInt floor_scaled(const Rational& x, std::uint32_t bits);

// Bucket index floor(x * 2^m) clamped to [0, 2^m - 1]; x = 1 lands in the top bucket.
BigInt bucket_index(const Rational& x, int m);

// The first m binary digits of x in [0,1], most significant first.
std::vector<int> value_bits(const Rational& x, int m);

// m low-order bits of j, most significant first.
std::vector<int> index_bits(const BigInt& j, int m);

std::string bits_str(const std::vector<int>& bits);

std::string rational_str(const Rational& q);     // "num/den"
Rational parse_rational(std::string_view text);  // accepts "3/10", "7", "0.25"

}  // namespace fiqsim
