#pragma once

#include "pgcodes/code.hpp"
#include "pgcodes/geometry.hpp"
#include "pgcodes/gf.hpp"

#include <map>
#include <memory>
#include <set>
#include <tuple>
#include <vector>

namespace testing {

using namespace pgcodes;

inline std::shared_ptr<const geom::Space> space(int p, int h, int n)
{
    static std::map<std::tuple<int, int, int>, std::shared_ptr<const geom::Space>> cache;
    auto& s = cache[{p, h, n}];
    if (!s)
        s = std::make_shared<const geom::Space>(geom::make_geometry(gf::make_field(p, h), n));
    return s;
}

inline const code::CodeModel& model(int p, int h, int n)
{
    static std::map<std::tuple<int, int, int>, std::unique_ptr<code::CodeModel>> cache;
    auto& m = cache[{p, h, n}];
    if (!m)
        m = std::make_unique<code::CodeModel>(code::CodeModel::build(space(p, h, n)));
    return *m;
}

// Every F_p-combination of the incidence-matrix rows, by closure under
// adding rows. Independent of the RREF bases inside CodeModel.
inline std::set<Word> brute_force_code(const geom::Space& s)
{
    std::vector<Word> rows;
    for (std::size_t i = 0; i < s.hyperplanes().size(); ++i) {
        Word w(s.p(), s.num_points());
        for (auto j : s.hyperplane_points(i).indices())
            w.set(j, 1);
        rows.push_back(w);
    }
    std::set<Word> code{Word(s.p(), s.num_points())};
    std::vector<Word> frontier(code.begin(), code.end());
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const auto& w : frontier)
            for (const auto& r : rows) {
                auto v = w + r;
                if (code.insert(v).second)
                    next.push_back(std::move(v));
            }
        frontier = std::move(next);
    }
    return code;
}

} // namespace testing
