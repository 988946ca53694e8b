#include "pgcodes/word.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>

namespace pgcodes {

Word::Word(int p, std::size_t length) : p_(p), entries_(length, 0)
{
    if (p < 2 || p > 10)
        throw Error(Errc::InvalidArgument, "word alphabet must be F_p with 2 <= p <= 10");
}

Word::Word(int p, std::vector<std::uint8_t> entries) : p_(p), entries_(std::move(entries))
{
    if (p < 2 || p > 10)
        throw Error(Errc::InvalidArgument, "word alphabet must be F_p with 2 <= p <= 10");
    for (auto e : entries_)
        if (e >= p)
            throw Error(Errc::InvalidArgument, "word entry outside F_p");
}

void Word::set(std::size_t i, int value)
{
    entries_.at(i) = static_cast<std::uint8_t>(((value % p_) + p_) % p_);
}

std::size_t Word::weight() const noexcept
{
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](std::uint8_t e) { return e != 0; }));
}

bool Word::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](std::uint8_t e) { return e == 0; });
}

std::vector<std::size_t> Word::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] != 0)
            s.push_back(i);
    return s;
}

std::string Word::digits() const
{
    std::string s(entries_.size(), '0');
    for (std::size_t i = 0; i < entries_.size(); ++i)
        s[i] = static_cast<char>('0' + entries_[i]);
    return s;
}

Word Word::from_digits(int p, std::string_view digits)
{
    std::vector<std::uint8_t> e;
    e.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9' || c - '0' >= p)
            throw Error(Errc::ParseError, "invalid digit in word string");
        e.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(p, std::move(e));
}

namespace {

void check_compatible(const Word& a, const Word& b)
{
    if (a.size() != b.size())
        throw Error(Errc::LengthMismatch, "words have different lengths");
    if (a.p() != b.p())
        throw Error(Errc::FieldMismatch, "words live over different prime fields");
}

} // namespace

Word& Word::operator+=(const Word& o)
{
    check_compatible(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        int v = entries_[i] + o.entries_[i];
        entries_[i] = static_cast<std::uint8_t>(v >= p_ ? v - p_ : v);
    }
    return *this;
}

Word& Word::operator-=(const Word& o)
{
    check_compatible(*this, o);
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        int v = entries_[i] - o.entries_[i];
        entries_[i] = static_cast<std::uint8_t>(v < 0 ? v + p_ : v);
    }
    return *this;
}

Word Word::scaled(int a) const
{
    a = ((a % p_) + p_) % p_;
    Word r = *this;
    for (auto& e : r.entries_)
        e = static_cast<std::uint8_t>((e * a) % p_);
    return r;
}

int inner_product(const Word& a, const Word& b)
{
    check_compatible(a, b);
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return static_cast<int>(s % a.p());
}

} // namespace pgcodes
