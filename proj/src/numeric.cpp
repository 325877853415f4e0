#include "fiqsim/numeric.hpp"

#include <stdexcept>

namespace fiqsim {

std::string Dyadic::str() const {
    return rational_str(as_rational());
}

BigInt floor_scaled(const Rational& x, std::uint32_t bits) {
    // cpp_int division truncates toward zero; x >= 0 makes that a floor.
    return (numerator(x) << bits) / denominator(x);
}

BigInt bucket_index(const Rational& x, int m) {
    BigInt j = floor_scaled(x, static_cast<std::uint32_t>(m));
    BigInt top = (BigInt(1) << m) - 1;
    if (j > top) j = top;
    return j;
}

std::vector<int> value_bits(const Rational& x, int m) {
    return index_bits(bucket_index(x, m), m);
}

std::vector<int> index_bits(const BigInt& j, int m) {
    std::vector<int> bits(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        bits[static_cast<std::size_t>(i)] = bit_test(j, static_cast<unsigned>(m - 1 - i)) ? 1 : 0;
    }
    return bits;
}

std::string bits_str(const std::vector<int>& bits) {
    std::string s;
    s.reserve(bits.size());
    for (int b : bits) s.push_back(b ? '1' : '0');
    return s;
}

std::string rational_str(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

BigInt parse_digits(std::string_view text, std::size_t& i) {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') {
        throw std::invalid_argument("expected digits in rational: '" + std::string(text) + "'");
    }
    BigInt value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        value = value * 10 + (text[i] - '0');
        ++i;
    }
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::size_t i = 0;
    BigInt intpart = parse_digits(text, i);
    if (i == text.size()) return Rational(intpart);
    if (text[i] == '/') {
        ++i;
        std::size_t start = i;
        BigInt den = parse_digits(text, i);
        if (i != text.size() || den == 0) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        (void)start;
        return Rational(intpart, den);
    }
    if (text[i] == '.') {
        ++i;
        std::size_t start = i;
        BigInt frac = parse_digits(text, i);
        if (i != text.size()) {
            throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
        }
        std::size_t places = i - start;
        BigInt den = 1;
        for (std::size_t k = 0; k < places; ++k) den *= 10;
        return Rational(intpart * den + frac, den);
    }
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
}

}  // namespace fiqsim
