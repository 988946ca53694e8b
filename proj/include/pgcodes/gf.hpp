#pragma once

// Arithmetic in GF(p^h).
//
// An element is stored by its coefficient vector (c_0, ..., c_{h-1}) over F_p
// in the polynomial basis 1, x, ..., x^{h-1}. Hot paths use the integer code
//     code = c_0 + c_1 p + ... + c_{h-1} p^{h-1},
// which is also the total order on elements used by every enumeration in the
// library. Codes 0 and 1 are always the field's zero and one.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace pgcodes::gf {

using Elem = std::uint16_t;

bool is_prime(std::int64_t n) noexcept;

// Exhaustive check that a monic polynomial over F_p has no monic factor of
// degree 1..deg/2. Coefficients are little-endian, leading coefficient last.
bool is_irreducible(int p, std::span<const int> monic);

class Field {
public:
    int p() const noexcept;
    int h() const noexcept;
    int q() const noexcept;
    // c_0 .. c_h, monic.
    const std::vector<int>& modulus() const noexcept;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    // Embeds an integer through the prime subfield.
    Elem from_int(long long v) const;
    std::vector<int> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const int> c) const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    friend Field make_field(int p, int h, std::optional<std::vector<int>> modulus);

    std::shared_ptr<const Impl> impl_;
};

// When no modulus is given, the smallest monic irreducible of degree h is
// chosen, ordering candidates by the integer code of (c_0, ..., c_{h-1}).
Field make_field(int p, int h, std::optional<std::vector<int>> modulus = std::nullopt);

class FieldElement {
public:
    FieldElement(Field field, Elem code);
    static FieldElement from_coeffs(const Field& field, std::span<const int> coeffs);

    const Field& field() const noexcept { return field_; }
    Elem code() const noexcept { return code_; }
    std::vector<int> coeffs() const { return field_.coeffs(code_); }
    bool is_zero() const noexcept { return code_ == 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept
    {
        return a.code_ == b.code_ && a.field_ == b.field_;
    }

private:
    Field field_;
    Elem code_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return sub(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

} // namespace pgcodes::gf
