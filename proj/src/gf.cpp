#include "pgcodes/gf.hpp"

#include "pgcodes/error.hpp"

#include <string>

namespace pgcodes::gf {

namespace {

constexpr int kTableLimit = 256;

// Remainder of a modulo the monic polynomial m, coefficients mod p.
std::vector<int> poly_mod(std::vector<int> a, std::span<const int> m, int p)
{
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back() % p;
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i <= dm; ++i)
                a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        }
        a.pop_back();
    }
    return a;
}

bool all_zero(const std::vector<int>& v)
{
    for (int c : v)
        if (c != 0)
            return false;
    return true;
}

} // namespace

bool is_prime(std::int64_t n) noexcept
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool is_irreducible(int p, std::span<const int> monic)
{
    if (monic.size() < 2 || monic.back() != 1)
        throw Error(Errc::DegreeMismatch, "irreducibility test needs a monic polynomial of degree >= 1");
    const int deg = static_cast<int>(monic.size()) - 1;
    std::vector<int> a(monic.begin(), monic.end());
    for (int k = 1; 2 * k <= deg; ++k) {
        long long count = 1;
        for (int i = 0; i < k; ++i)
            count *= p;
        std::vector<int> f(k + 1, 0);
        f[k] = 1;
        for (long long code = 0; code < count; ++code) {
            long long c = code;
            for (int i = 0; i < k; ++i) {
                f[i] = static_cast<int>(c % p);
                c /= p;
            }
            if (all_zero(poly_mod(a, f, p)))
                return false;
        }
    }
    return true;
}

struct Field::Impl {
    int p = 0;
    int h = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<int> pw; // p^i
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;
    std::vector<Elem> inv_table;

    std::vector<int> digits(Elem a) const
    {
        std::vector<int> c(h);
        for (int i = 0; i < h; ++i) {
            c[i] = a % p;
            a = static_cast<Elem>(a / p);
        }
        return c;
    }

    Elem pack(const std::vector<int>& c) const
    {
        int v = 0;
        for (int i = h - 1; i >= 0; --i)
            v = v * p + c[i];
        return static_cast<Elem>(v);
    }

    Elem add_slow(Elem a, Elem b) const
    {
        int v = 0;
        for (int i = 0; i < h; ++i) {
            const int d = (a % p + b % p) % p;
            v += d * pw[i];
            a = static_cast<Elem>(a / p);
            b = static_cast<Elem>(b / p);
        }
        return static_cast<Elem>(v);
    }

    Elem mul_slow(Elem a, Elem b) const
    {
        const auto ca = digits(a);
        const auto cb = digits(b);
        std::vector<int> prod(2 * h - 1, 0);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j)
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
        auto r = poly_mod(std::move(prod), modulus, p);
        r.resize(h, 0);
        return pack(r);
    }

    Elem add(Elem a, Elem b) const
    {
        return add_table.empty() ? add_slow(a, b) : add_table[a * q + b];
    }

    Elem mul(Elem a, Elem b) const
    {
        return mul_table.empty() ? mul_slow(a, b) : mul_table[a * q + b];
    }

    Elem pow(Elem a, std::uint64_t e) const
    {
        Elem r = 1;
        while (e != 0) {
            if (e & 1U)
                r = mul(r, a);
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }
};

Field make_field(int p, int h, std::optional<std::vector<int>> modulus)
{
    if (!is_prime(p))
        throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (h < 1)
        throw Error(Errc::DegreeMismatch, "extension degree must be >= 1");
    long long q = 1;
    for (int i = 0; i < h; ++i) {
        q *= p;
        if (q > 65535)
            throw Error(Errc::InvalidArgument, "field order exceeds 65535");
    }

    auto impl = std::make_shared<Field::Impl>();
    impl->p = p;
    impl->h = h;
    impl->q = static_cast<int>(q);
    impl->pw.resize(h + 1);
    impl->pw[0] = 1;
    for (int i = 1; i <= h; ++i)
        impl->pw[i] = impl->pw[i - 1] * p;

    if (modulus) {
        auto& m = *modulus;
        if (static_cast<int>(m.size()) != h + 1 || m.back() != 1)
            throw Error(Errc::DegreeMismatch, "modulus must be monic of degree " + std::to_string(h));
        for (int c : m)
            if (c < 0 || c >= p)
                throw Error(Errc::DegreeMismatch, "modulus coefficient out of range");
        if (!is_irreducible(p, m))
            throw Error(Errc::ReducibleModulus, "modulus is reducible over F_" + std::to_string(p));
        impl->modulus = m;
    } else {
        std::vector<int> m(h + 1, 0);
        m[h] = 1;
        bool found = false;
        for (long long code = 0; code < q && !found; ++code) {
            long long c = code;
            for (int i = 0; i < h; ++i) {
                m[i] = static_cast<int>(c % p);
                c /= p;
            }
            found = is_irreducible(p, m);
        }
        // An irreducible of every degree exists, so the search cannot fail.
        impl->modulus = m;
    }

    const int qi = impl->q;
    if (qi <= kTableLimit) {
        impl->add_table.resize(static_cast<std::size_t>(qi) * qi);
        impl->mul_table.resize(static_cast<std::size_t>(qi) * qi);
        for (int a = 0; a < qi; ++a)
            for (int b = 0; b < qi; ++b) {
                impl->add_table[a * qi + b] = impl->add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
                impl->mul_table[a * qi + b] = impl->mul_slow(static_cast<Elem>(a), static_cast<Elem>(b));
            }
    }
    impl->neg_table.resize(qi);
    impl->inv_table.resize(qi);
    for (int a = 0; a < qi; ++a) {
        auto c = impl->digits(static_cast<Elem>(a));
        for (int& d : c)
            d = (p - d) % p;
        impl->neg_table[a] = impl->pack(c);
        impl->inv_table[a] = a == 0 ? 0 : impl->pow(static_cast<Elem>(a), static_cast<std::uint64_t>(qi - 2));
    }
    return Field(std::move(impl));
}

int Field::p() const noexcept { return impl_->p; }
int Field::h() const noexcept { return impl_->h; }
int Field::q() const noexcept { return impl_->q; }
const std::vector<int>& Field::modulus() const noexcept { return impl_->modulus; }

Elem Field::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem Field::neg(Elem a) const { return impl_->neg_table[a]; }
Elem Field::sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg_table[b]); }
Elem Field::mul(Elem a, Elem b) const { return impl_->mul(a, b); }
Elem Field::pow(Elem a, std::uint64_t e) const { return impl_->pow(a, e); }

Elem Field::inv(Elem a) const
{
    if (a == 0)
        throw Error(Errc::ZeroInverse, "zero has no multiplicative inverse");
    return impl_->inv_table[a];
}

Elem Field::from_int(long long v) const
{
    const long long p = impl_->p;
    return static_cast<Elem>(((v % p) + p) % p);
}

std::vector<int> Field::coeffs(Elem a) const { return impl_->digits(a); }

Elem Field::from_coeffs(std::span<const int> c) const
{
    if (static_cast<int>(c.size()) != impl_->h)
        throw Error(Errc::FieldMismatch, "expected " + std::to_string(impl_->h) + " coefficients");
    for (int d : c)
        if (d < 0 || d >= impl_->p)
            throw Error(Errc::FieldMismatch, "coefficient out of range");
    return impl_->pack(std::vector<int>(c.begin(), c.end()));
}

bool operator==(const Field& a, const Field& b) noexcept
{
    if (a.impl_ == b.impl_)
        return true;
    return a.impl_->p == b.impl_->p && a.impl_->h == b.impl_->h && a.impl_->modulus == b.impl_->modulus;
}

FieldElement::FieldElement(Field field, Elem code) : field_(std::move(field)), code_(code)
{
    if (code_ >= field_.q())
        throw Error(Errc::FieldMismatch, "element code out of range");
}

FieldElement FieldElement::from_coeffs(const Field& field, std::span<const int> coeffs)
{
    return FieldElement(field, field.from_coeffs(coeffs));
}

namespace {

const Field& common_field(const FieldElement& a, const FieldElement& b)
{
    if (!(a.field() == b.field()))
        throw Error(Errc::FieldMismatch, "operands belong to different fields");
    return a.field();
}

} // namespace

FieldElement add(const FieldElement& a, const FieldElement& b)
{
    const auto& f = common_field(a, b);
    return FieldElement(f, f.add(a.code(), b.code()));
}

FieldElement sub(const FieldElement& a, const FieldElement& b)
{
    const auto& f = common_field(a, b);
    return FieldElement(f, f.sub(a.code(), b.code()));
}

FieldElement mul(const FieldElement& a, const FieldElement& b)
{
    const auto& f = common_field(a, b);
    return FieldElement(f, f.mul(a.code(), b.code()));
}

FieldElement inv(const FieldElement& a) { return FieldElement(a.field(), a.field().inv(a.code())); }

} // namespace pgcodes::gf
