#include "pgcodes/pointset_io.hpp"

#include "pgcodes/error.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pgcodes::io {

namespace {

std::string trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void bad(std::size_t line, const std::string& why)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + why);
}

} // namespace

Bits read_point_set(const geom::Space& space, std::istream& in)
{
    const auto& f = space.field();
    const auto len = static_cast<std::size_t>(space.n() + 1);
    Bits out(space.num_points());
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto line = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (line.empty())
            continue;
        geom::Vec v;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            std::istringstream parts(cell);
            std::vector<int> coeffs;
            std::string tok;
            while (parts >> tok) {
                int x = 0;
                auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
                if (ec != std::errc() || ptr != tok.data() + tok.size())
                    bad(lineno, "'" + tok + "' is not an integer");
                if (x < 0 || x >= f.p())
                    bad(lineno, "coefficient " + tok + " outside F_" + std::to_string(f.p()));
                coeffs.push_back(x);
            }
            if (coeffs.size() != static_cast<std::size_t>(f.h()))
                bad(lineno, "each coordinate needs " + std::to_string(f.h()) + " coefficient(s)");
            v.push_back(f.from_coeffs(coeffs));
        }
        if (v.size() != len)
            bad(lineno, "expected " + std::to_string(len) + " coordinates, got " + std::to_string(v.size()));
        const auto idx = space.find(v);
        if (!idx)
            bad(lineno, "the zero vector is not a point");
        out.set(*idx);
    }
    return out;
}

Bits parse_point_set(const geom::Space& space, const std::string& text)
{
    std::istringstream in(text);
    return read_point_set(space, in);
}

std::string format_point(const geom::Space& space, std::size_t index)
{
    const auto& f = space.field();
    std::string out;
    for (auto x : space.points().at(index).coords) {
        if (!out.empty())
            out += ", ";
        const auto c = f.coeffs(x);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i != 0)
                out += ' ';
            out += std::to_string(c[i]);
        }
    }
    return out;
}

std::string write_point_set(const geom::Space& space, const Bits& points)
{
    std::string out;
    for (auto i : points.indices())
        out += format_point(space, i) + '\n';
    return out;
}

} // namespace pgcodes::io
