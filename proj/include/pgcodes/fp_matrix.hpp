#pragma once

#include "pgcodes/word.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pgcodes::fp {

int inv_mod(int a, int p);

// Dense row-major matrix over the prime field F_p.
class Matrix {
public:
    Matrix(int p, std::size_t rows, std::size_t cols);
    static Matrix from_words(int p, std::span<const Word> rows, std::size_t cols);

    int p() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    std::uint8_t at(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
    std::uint8_t& at(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    std::span<const std::uint8_t> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    std::span<std::uint8_t> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    Word row_word(std::size_t r) const;

    Matrix transposed() const;
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b);

struct Echelon {
    std::vector<Word> rows; // nonzero RREF rows
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; pivot is the leftmost nonzero column.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of { x : M x^T = 0 }.
std::vector<Word> nullspace(const Matrix& m);

} // namespace pgcodes::fp
