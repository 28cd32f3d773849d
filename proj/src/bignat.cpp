#include "treeideal/bignat.hpp"
#include "treeideal/errors.hpp"

#include <algorithm>
#include <bit>

namespace treeideal {

BigNat::BigNat(std::uint64_t v) {
    if (v != 0) limbs_.push_back(v);
}

void BigNat::normalize() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::power_of_two(std::size_t k) {
    BigNat r;
    r.limbs_.assign(k / 64 + 1, 0);
    r.limbs_.back() = std::uint64_t{1} << (k % 64);
    return r;
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return (limbs_.size() - 1) * 64 + std::bit_width(limbs_.back());
}

bool BigNat::bit(std::size_t i) const {
    std::size_t limb = i / 64;
    if (limb >= limbs_.size()) return false;
    return (limbs_[limb] >> (i % 64)) & 1;
}

std::size_t BigNat::popcount() const {
    std::size_t n = 0;
    for (auto w : limbs_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::vector<std::size_t> BigNat::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t w = limbs_[i];
        while (w != 0) {
            unsigned b = static_cast<unsigned>(std::countr_zero(w));
            out.push_back(i * 64 + b);
            w &= w - 1;
        }
    }
    return out;
}

std::optional<std::size_t> BigNat::lowest_set_bit() const {
    for (std::size_t i = 0; i < limbs_.size(); ++i)
        if (limbs_[i] != 0)
            return i * 64 + static_cast<std::size_t>(std::countr_zero(limbs_[i]));
    return std::nullopt;
}

bool BigNat::is_power_of_two() const {
    return popcount() == 1;
}

BigNat& BigNat::operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    unsigned char carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t rhs = i < o.limbs_.size() ? o.limbs_[i] : 0;
        if (rhs == 0 && carry == 0) continue;
        std::uint64_t s = limbs_[i] + rhs;
        unsigned char c1 = s < rhs;
        std::uint64_t s2 = s + carry;
        carry = static_cast<unsigned char>(c1 + (s2 < s));
        limbs_[i] = s2;
    }
    if (carry) limbs_.push_back(1);
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (*this < o) throw ArgumentError("BigNat subtraction underflow");
    unsigned char borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t rhs = i < o.limbs_.size() ? o.limbs_[i] : 0;
        std::uint64_t d = limbs_[i] - rhs;
        unsigned char b1 = limbs_[i] < rhs;
        std::uint64_t d2 = d - borrow;
        borrow = static_cast<unsigned char>(b1 + (d < borrow));
        limbs_[i] = d2;
    }
    normalize();
    return *this;
}

std::uint64_t BigNat::mod_small(std::uint64_t m) const {
    if (m == 0) throw ArgumentError("modulo by zero");
    unsigned __int128 acc = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        acc = (acc << 64) | limbs_[i];
        acc %= m;
    }
    return static_cast<std::uint64_t>(acc);
}

BigNat BigNat::div_small(std::uint64_t d) const {
    if (d == 0) throw ArgumentError("division by zero");
    BigNat q;
    q.limbs_.assign(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem = (rem << 64) | limbs_[i];
        q.limbs_[i] = static_cast<std::uint64_t>(rem / d);
        rem %= d;
    }
    q.normalize();
    return q;
}

std::uint64_t BigNat::to_uint64() const {
    if (limbs_.size() > 1) throw CapacityError("value does not fit in 64 bits");
    return limbs_.empty() ? 0 : limbs_[0];
}

void BigNat::mul_small_add(std::uint64_t mul, std::uint64_t add) {
    unsigned __int128 carry = add;
    for (auto& w : limbs_) {
        unsigned __int128 p = static_cast<unsigned __int128>(w) * mul + carry;
        w = static_cast<std::uint64_t>(p);
        carry = p >> 64;
    }
    while (carry != 0) {
        limbs_.push_back(static_cast<std::uint64_t>(carry));
        carry >>= 64;
    }
    normalize();
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw ParseError("empty number");
    BigNat r;
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in number: " + std::string(s));
        r.mul_small_add(10, static_cast<std::uint64_t>(c - '0'));
    }
    return r;
}

std::string BigNat::to_decimal() const {
    if (limbs_.empty()) return "0";
    BigNat t = *this;
    std::string out;
    while (!t.is_zero()) {
        std::uint64_t digit = t.mod_small(10);
        out.push_back(static_cast<char>('0' + digit));
        t = t.div_small(10);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() <=> b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;)
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
    return std::strong_ordering::equal;
}

} // namespace treeideal
