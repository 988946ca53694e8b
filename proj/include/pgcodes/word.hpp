#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pgcodes {

// A vector over F_p indexed by the global point order of one geometry.
class Word {
public:
    Word() = default;
    Word(int p, std::size_t length);
    Word(int p, std::vector<std::uint8_t> entries);

    int p() const noexcept { return p_; }
    std::size_t size() const noexcept { return entries_.size(); }
    std::uint8_t operator[](std::size_t i) const noexcept { return entries_[i]; }
    void set(std::size_t i, int value);
    std::span<const std::uint8_t> entries() const noexcept { return entries_; }

    std::size_t weight() const noexcept;
    bool is_zero() const noexcept;
    std::vector<std::size_t> support() const;

    // One character per entry, '0'..'9'.
    std::string digits() const;
    static Word from_digits(int p, std::string_view digits);

    Word& operator+=(const Word& o);
    Word& operator-=(const Word& o);
    Word scaled(int a) const;
    Word negated() const { return scaled(p_ - 1); }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.p_ <=> b.p_; c != 0)
            return c;
        return a.entries_ <=> b.entries_;
    }

private:
    int p_ = 2;
    std::vector<std::uint8_t> entries_;
};

inline Word operator+(Word a, const Word& b) { return a += b; }
inline Word operator-(Word a, const Word& b) { return a -= b; }

// sum a_i b_i mod p.
int inner_product(const Word& a, const Word& b);

} // namespace pgcodes
