#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pgcodes {

// Fixed-size packed bit vector; used for point sets and binary words.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : size_(n), blocks_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }
    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }
    std::span<std::uint64_t> blocks() noexcept { return blocks_; }

    bool test(std::size_t i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { blocks_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { blocks_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept
    {
        std::size_t c = 0;
        for (auto b : blocks_)
            c += static_cast<std::size_t>(std::popcount(b));
        return c;
    }

    bool none() const noexcept
    {
        for (auto b : blocks_)
            if (b != 0)
                return false;
        return true;
    }

    std::size_t intersection_count(const Bits& o) const noexcept
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(blocks_[i] & o.blocks_[i]));
        return c;
    }

    bool intersects(const Bits& o) const noexcept
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & o.blocks_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bits& o) const noexcept
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i] & ~o.blocks_[i])
                return false;
        return true;
    }

    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            auto b = blocks_[i];
            while (b != 0) {
                out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
                b &= b - 1;
            }
        }
        return out;
    }

    Bits& operator&=(const Bits& o) noexcept
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= o.blocks_[i];
        return *this;
    }
    Bits& operator|=(const Bits& o) noexcept
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] |= o.blocks_[i];
        return *this;
    }
    Bits& operator^=(const Bits& o) noexcept
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] ^= o.blocks_[i];
        return *this;
    }
    // Set difference.
    Bits& operator-=(const Bits& o) noexcept
    {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            blocks_[i] &= ~o.blocks_[i];
        return *this;
    }

    friend Bits operator&(Bits a, const Bits& b) noexcept { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) noexcept { return a |= b; }
    friend Bits operator^(Bits a, const Bits& b) noexcept { return a ^= b; }
    friend Bits operator-(Bits a, const Bits& b) noexcept { return a -= b; }
    friend bool operator==(const Bits&, const Bits&) = default;

    // Complement within [0, size).
    Bits complement() const
    {
        Bits r(size_);
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            r.blocks_[i] = ~blocks_[i];
        if (size_ % 64 != 0)
            r.blocks_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
        return r;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> blocks_;
};

} // namespace pgcodes
