#ifndef TREEIDEAL_BIGNAT_HPP
#define TREEIDEAL_BIGNAT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treeideal {

// Arbitrary-precision natural number. Only the operations the reductions
// actually use: addition, subtraction (a >= b), comparison, powers of two,
// bit inspection, small-divisor arithmetic, decimal I/O. Values like 4^n for
// n in the hundreds are routine, so fixed-width integers are not an option.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v);

    static BigNat power_of_two(std::size_t k);
    static BigNat from_decimal(std::string_view s); // throws ParseError

    bool is_zero() const { return limbs_.empty(); }

    // Number of binary digits; 0 for zero.
    std::size_t bit_length() const;
    bool bit(std::size_t i) const;
    std::size_t popcount() const;
    // Positions of set bits, ascending. Position 0 = least significant.
    std::vector<std::size_t> set_bits() const;
    std::optional<std::size_t> lowest_set_bit() const;
    bool is_power_of_two() const;

    BigNat& operator+=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
    // Requires *this >= o; throws ArgumentError on underflow.
    BigNat& operator-=(const BigNat& o);
    friend BigNat operator-(BigNat a, const BigNat& b) { a -= b; return a; }

    std::uint64_t mod_small(std::uint64_t m) const;
    BigNat div_small(std::uint64_t d) const;

    bool fits_uint64() const { return limbs_.size() <= 1; }
    std::uint64_t to_uint64() const; // throws CapacityError if too wide

    std::string to_decimal() const;

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b);
    friend bool operator==(const BigNat& a, const BigNat& b) = default;

private:
    // Little-endian 64-bit limbs; no trailing zero limb; empty means 0.
    std::vector<std::uint64_t> limbs_;

    void normalize();
    void mul_small_add(std::uint64_t mul, std::uint64_t add);
};

} // namespace treeideal

#endif
