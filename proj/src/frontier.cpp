#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "tiling/counter.hpp"

namespace tiling {

namespace {

struct Forward {
    long offset;
    Rational weight;
};

/// partners later in scan order, as index offsets
std::vector<std::vector<Forward>> forward_partners(const Region& r, const std::vector<TriCell>& cells)
{
    std::vector<std::vector<Forward>> out(cells.size());
    for (std::size_t k = 0; k < cells.size(); ++k)
        for (const TriCell& n : neighbors(cells[k])) {
            if (!(cells[k] < n))
                continue;
            auto it = std::lower_bound(cells.begin() + static_cast<long>(k), cells.end(), n);
            if (it == cells.end() || *it != n)
                continue;
            out[k].push_back({static_cast<long>(it - cells.begin()) - static_cast<long>(k), r.weight(Lozenge::of(cells[k], n))});
        }
    return out;
}

} // namespace

long frontier_width(const Region& r)
{
    std::vector<TriCell> cells(r.cells().begin(), r.cells().end());
    long w = 0;
    for (const auto& fw : forward_partners(r, cells))
        for (const auto& f : fw)
            w = std::max(w, f.offset);
    return w;
}

Rational count_tilings(const Region& r)
{
    if (r.empty())
        return 1;
    if (!is_balanced(r))
        return 0;
    std::vector<TriCell> cells(r.cells().begin(), r.cells().end());
    auto fwd = forward_partners(r, cells);
    for (const auto& fw : fwd)
        for (const auto& f : fw)
            if (f.offset >= kFrontierCap)
                throw CapacityError("frontier width " + std::to_string(f.offset) + " exceeds cap " + std::to_string(kFrontierCap));

    // bit t of a state: cell k+t is already covered
    std::unordered_map<std::uint64_t, Rational> states{{0, Rational(1)}}, next;
    for (std::size_t k = 0; k < cells.size(); ++k) {
        next.clear();
        for (const auto& [s, v] : states) {
            if (s & 1u) {
                next[s >> 1] += v;
                continue;
            }
            for (const auto& f : fwd[k]) {
                std::uint64_t bit = std::uint64_t{1} << f.offset;
                if (s & bit)
                    continue;
                next[(s | bit) >> 1] += v * f.weight;
            }
        }
        std::swap(states, next);
        if (states.empty())
            return 0;
    }
    auto it = states.find(0);
    return it == states.end() ? Rational(0) : it->second;
}

TilingList enumerate_tilings(const Region& r, long limit)
{
    TilingList out;
    if (!is_balanced(r))
        return out;
    std::vector<TriCell> cells(r.cells().begin(), r.cells().end());
    auto fwd = forward_partners(r, cells);
    std::vector<char> covered(cells.size(), 0);
    Tiling current;
    auto rec = [&](auto&& self, std::size_t k) -> bool {
        while (k < cells.size() && covered[k])
            ++k;
        if (k == cells.size()) {
            if (static_cast<long>(out.tilings.size()) >= limit) {
                out.truncated = true;
                return false;
            }
            out.tilings.push_back(current);
            return true;
        }
        covered[k] = 1;
        for (const auto& f : fwd[k]) {
            std::size_t m = k + static_cast<std::size_t>(f.offset);
            if (covered[m])
                continue;
            covered[m] = 1;
            current.push_back(Lozenge::of(cells[k], cells[m]));
            bool go_on = self(self, k + 1);
            current.pop_back();
            covered[m] = 0;
            if (!go_on) {
                covered[k] = 0;
                return false;
            }
        }
        covered[k] = 0;
        return true;
    };
    rec(rec, 0);
    if (out.truncated)
        out.tilings.clear();
    return out;
}

Rational tiling_weight(const Region& r, const Tiling& t)
{
    Rational w = 1;
    for (const Lozenge& l : t)
        w *= r.weight(l);
    return w;
}

} // namespace tiling
