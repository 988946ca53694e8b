#include "pgcodes/fp_matrix.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>

namespace pgcodes::fp {

int inv_mod(int a, int p)
{
    a = ((a % p) + p) % p;
    if (a == 0)
        throw Error(Errc::ZeroInverse, "zero has no inverse mod p");
    for (int b = 1; b < p; ++b)
        if ((a * b) % p == 1)
            return b;
    throw Error(Errc::NotPrime, "modulus is not prime");
}

Matrix::Matrix(int p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_words(int p, std::span<const Word> rows, std::size_t cols)
{
    Matrix m(p, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols || rows[r].p() != p)
            throw Error(Errc::LengthMismatch, "row does not fit the matrix");
        std::copy(rows[r].entries().begin(), rows[r].entries().end(), m.row(r).begin());
    }
    return m;
}

Word Matrix::row_word(std::size_t r) const
{
    auto s = row(r);
    return Word(p_, std::vector<std::uint8_t>(s.begin(), s.end()));
}

Matrix Matrix::transposed() const
{
    Matrix t(p_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows() || a.p() != b.p())
        throw Error(Errc::LengthMismatch, "matrix shapes do not compose");
    const int p = a.p();
    Matrix out(p, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            long s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a.at(i, k) * b.at(k, j);
            out.at(i, j) = static_cast<std::uint8_t>(s % p);
        }
    return out;
}

Echelon row_reduce(const Matrix& input)
{
    Matrix m = input;
    const int p = m.p();
    std::size_t rank = 0;
    Echelon e;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t sel = rank;
        while (sel < m.rows() && m.at(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != rank)
            std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(rank).begin());
        const int s = inv_mod(m.at(rank, col), p);
        for (auto& x : m.row(rank))
            x = static_cast<std::uint8_t>((x * s) % p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || m.at(r, col) == 0)
                continue;
            const int f = p - m.at(r, col);
            auto dst = m.row(r);
            auto src = m.row(rank);
            for (std::size_t c = col; c < m.cols(); ++c)
                dst[c] = static_cast<std::uint8_t>((dst[c] + f * src[c]) % p);
        }
        e.pivots.push_back(col);
        ++rank;
    }
    for (std::size_t r = 0; r < rank; ++r)
        e.rows.push_back(m.row_word(r));
    return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Word> nullspace(const Matrix& m)
{
    const auto e = row_reduce(m);
    const int p = m.p();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::vector<Word> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Word x(p, m.cols());
        x.set(f, 1);
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            x.set(e.pivots[i], p - e.rows[i][f]);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace pgcodes::fp
