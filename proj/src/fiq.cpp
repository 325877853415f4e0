#include "fiqsim/fiq.hpp"

#include <cmath>

namespace fiqsim {

double bit_information(const Propensity& q) {
    if (q.value() == 0 || q.value() == 1) return 1.0;
    double b = q.value().convert_to<double>();
    return 1.0 + b * std::log2(b) + (1.0 - b) * std::log2(1.0 - b);
}

Fiq Fiq::make(const std::vector<std::pair<std::uint32_t, int>>& determined,
              const std::vector<std::pair<std::uint32_t, Propensity>>& propensities) {
    Fiq x;
    auto insert = [&x](std::uint32_t pos, Cell cell) {
        if (pos == 0) throw std::invalid_argument("bit positions are 1-based");
        if (!x.cells_.emplace(pos, std::move(cell)).second) {
            throw std::invalid_argument("duplicate bit position " + std::to_string(pos));
        }
        if (pos > x.explicit_len_) x.explicit_len_ = pos;
    };
    for (const auto& [pos, bit] : determined) {
        if (bit != 0 && bit != 1) throw std::invalid_argument("determined bit must be 0 or 1");
        insert(pos, Cell{true, bit, Propensity{}});
    }
    for (const auto& [pos, prop] : propensities) {
        insert(pos, Cell{false, 0, prop});
    }
    return x;
}

Fiq Fiq::from_bits(const std::vector<int>& bits) {
    Fiq x;
    std::uint32_t pos = 1;
    for (int b : bits) {
        if (b != 0 && b != 1) throw std::invalid_argument("determined bit must be 0 or 1");
        x.cells_.emplace(pos, Cell{true, b, Propensity{}});
        ++pos;
    }
    x.explicit_len_ = pos - 1;
    return x;
}

Fiq Fiq::parse(std::string_view literal) {
    Fiq x;
    std::uint32_t pos = 1;
    std::size_t i = 0;
    const auto column = [&i] { return i + 1; };
    while (i < literal.size()) {
        char c = literal[i];
        if (c == '0' || c == '1') {
            x.cells_.emplace(pos++, Cell{true, c - '0', Propensity{}});
            ++i;
        } else if (c == '?') {
            ++i;
            Propensity prop;
            if (i < literal.size() && literal[i] == '(') {
                std::size_t open = i;
                std::size_t close = literal.find(')', i);
                if (close == std::string_view::npos) {
                    throw FiqParseError("unterminated propensity", open + 1);
                }
                std::string inner(literal.substr(open + 1, close - open - 1));
                Rational q;
                try {
                    q = parse_rational(inner);
                } catch (const std::invalid_argument&) {
                    throw FiqParseError("malformed propensity '" + inner + "'", open + 2);
                }
                if (q < 0 || q > 1) {
                    throw FiqParseError("propensity outside [0,1]: " + inner, open + 2);
                }
                prop = Propensity(q);
                i = close + 1;
            }
            x.cells_.emplace(pos++, Cell{false, 0, prop});
        } else if (c == '*') {
            if (i + 1 != literal.size()) {
                throw FiqParseError("'*' must terminate the literal", column());
            }
            ++i;
        } else {
            throw FiqParseError(std::string("unexpected character '") + c + "'", column());
        }
    }
    x.explicit_len_ = pos - 1;
    return x;
}

std::string Fiq::str() const {
    std::string out;
    for (std::uint32_t pos = 1; pos <= explicit_len_; ++pos) {
        auto it = cells_.find(pos);
        if (it == cells_.end() || (!it->second.det && it->second.prop.is_half())) {
            out.push_back('?');
        } else if (it->second.det) {
            out.push_back(static_cast<char>('0' + it->second.bit));
        } else {
            out += "?(" + rational_str(it->second.prop.value()) + ")";
        }
    }
    out.push_back('*');
    return out;
}

bool Fiq::is_determined(std::uint32_t pos) const {
    auto it = cells_.find(pos);
    return it != cells_.end() && it->second.det;
}

int Fiq::determined_bit(std::uint32_t pos) const {
    auto it = cells_.find(pos);
    if (it == cells_.end() || !it->second.det) {
        throw std::invalid_argument("bit " + std::to_string(pos) + " is undetermined");
    }
    return it->second.bit;
}

Propensity Fiq::propensity(std::uint32_t pos) const {
    auto it = cells_.find(pos);
    if (it == cells_.end()) return Propensity{};
    if (it->second.det) return Propensity(Rational(it->second.bit));
    return it->second.prop;
}

std::uint32_t Fiq::determined_count() const {
    std::uint32_t n = 0;
    for (const auto& [pos, cell] : cells_) {
        (void)pos;
        if (cell.det) ++n;
    }
    return n;
}

std::uint32_t Fiq::lowest_undetermined() const {
    std::uint32_t expect = 1;
    for (const auto& [pos, cell] : cells_) {
        if (pos > expect) return expect;  // gap: implicit 1/2 cell
        if (!cell.det) return pos;
        expect = pos + 1;
    }
    return expect;
}

double Fiq::information_content() const {
    double total = 0.0;
    for (const auto& [pos, cell] : cells_) {
        (void)pos;
        total += cell.det ? 1.0 : bit_information(cell.prop);
    }
    return total;
}

DyadicInterval Fiq::possible_interval(std::uint32_t depth) const {
    if (depth == 0) throw std::invalid_argument("interval depth must be >= 1");
    BigInt lo = 0;
    BigInt hi = BigInt(1) << depth;  // all-ones completion plus the all-ones tail
    for (const auto& [pos, cell] : cells_) {
        if (pos > depth) break;
        if (!cell.det) continue;
        if (cell.bit == 1) {
            lo += BigInt(1) << (depth - pos);
        } else {
            hi -= BigInt(1) << (depth - pos);
        }
    }
    return {Dyadic{lo, depth}, Dyadic{hi, depth}};
}

int Fiq::actualize_bit(std::uint32_t pos, ActualizeSource& src) {
    if (pos == 0) throw std::invalid_argument("bit positions are 1-based");
    auto it = cells_.find(pos);
    if (it != cells_.end() && it->second.det) {
        throw std::invalid_argument("bit " + std::to_string(pos) + " is already determined");
    }
    Rational q = it == cells_.end() ? Rational(1, 2) : it->second.prop.value();
    int bit = src.draw_bit(pos, q);
    cells_[pos] = Cell{true, bit, Propensity{}};
    if (pos > explicit_len_) explicit_len_ = pos;
    return bit;
}

Dyadic Fiq::sample_value(std::uint32_t n_bits, ActualizeSource& src) {
    if (n_bits == 0) throw std::invalid_argument("n_bits must be >= 1");
    BigInt num = 0;
    for (std::uint32_t pos = 1; pos <= n_bits; ++pos) {
        int bit = is_determined(pos) ? determined_bit(pos) : actualize_bit(pos, src);
        if (bit) num += BigInt(1) << (n_bits - pos);
    }
    return Dyadic{num, n_bits};
}

Fiq Fiq::suffix(std::uint32_t k) const {
    Fiq out;
    for (const auto& [pos, cell] : cells_) {
        if (pos <= k) continue;
        out.cells_.emplace(pos - k, cell);
    }
    out.explicit_len_ = explicit_len_ > k ? explicit_len_ - k : 0;
    return out;
}

Fiq Fiq::shifted_in(int leading_bit) const {
    if (leading_bit != 0 && leading_bit != 1) throw std::invalid_argument("bit must be 0 or 1");
    Fiq out;
    out.cells_.emplace(1, Cell{true, leading_bit, Propensity{}});
    for (const auto& [pos, cell] : cells_) {
        out.cells_.emplace(pos + 1, cell);
    }
    out.explicit_len_ = explicit_len_ + 1;
    return out;
}

}  // namespace fiqsim
