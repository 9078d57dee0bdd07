#include "tiling/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <random>

namespace tiling {

std::string to_string(const TriCell& c)
{
    return std::string(c.is_up() ? "Up" : "Down") + "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

std::array<TriCell, 3> neighbors(const TriCell& c)
{
    if (c.is_up())
        return {TriCell::down(c.i, c.j), TriCell::down(c.i - 1, c.j), TriCell::down(c.i, c.j - 1)};
    return {TriCell::up(c.i, c.j), TriCell::up(c.i + 1, c.j), TriCell::up(c.i, c.j + 1)};
}

bool adjacent(const TriCell& a, const TriCell& b)
{
    for (const TriCell& n : neighbors(a))
        if (n == b)
            return true;
    return false;
}

Lozenge Lozenge::of(const TriCell& a, const TriCell& b)
{
    if (!adjacent(a, b))
        throw ParameterError("cells " + to_string(a) + " and " + to_string(b) + " do not form a lozenge");
    return a.is_up() ? Lozenge{a, b} : Lozenge{b, a};
}

bool Lozenge::vertical() const { return down.i == up.i && up.j == down.j + 1; }

Lozenge vertical_lozenge_at(const Point& v)
{
    return {TriCell::up(v.p, v.q), TriCell::down(v.p, v.q - 1)};
}

long Region::up_count() const
{
    return static_cast<long>(std::count_if(cells_.begin(), cells_.end(), [](const TriCell& c) { return c.is_up(); }));
}

long Region::down_count() const { return static_cast<long>(cells_.size()) - up_count(); }

Rational Region::weight(const Lozenge& l) const
{
    auto it = weights_.find(l);
    return it == weights_.end() ? Rational(1) : it->second;
}

void Region::set_weight(const Lozenge& l, const Rational& w)
{
    if (!contains(l.up) || !contains(l.down))
        throw ParameterError("weighted lozenge outside the region");
    if (w <= 0)
        throw ParameterError("lozenge weights must be positive");
    if (w == 1)
        weights_.erase(l);
    else
        weights_[l] = w;
}

Region Region::without(const std::vector<TriCell>& removed) const
{
    Region r = *this;
    for (const TriCell& c : removed)
        r.cells_.erase(c);
    for (auto it = r.weights_.begin(); it != r.weights_.end();) {
        if (!r.contains(it->first.up) || !r.contains(it->first.down))
            it = r.weights_.erase(it);
        else
            ++it;
    }
    return r;
}

bool is_balanced(const Region& r) { return 2 * r.up_count() == static_cast<long>(r.size()); }

namespace {

ForcedReduction reduce_forced(const Region& r, std::deque<TriCell> work)
{
    std::set<TriCell> alive = r.cells();
    ForcedReduction out;
    std::vector<TriCell> removed;
    auto live_neighbors = [&](const TriCell& c) {
        std::vector<TriCell> v;
        for (const TriCell& n : neighbors(c))
            if (alive.count(n))
                v.push_back(n);
        return v;
    };
    while (!work.empty()) {
        TriCell c = work.front();
        work.pop_front();
        if (!alive.count(c))
            continue;
        auto nb = live_neighbors(c);
        if (nb.empty()) {
            out.untileable = true;
            out.multiplier = 0;
            out.reduced = r;
            return out;
        }
        if (nb.size() != 1)
            continue;
        TriCell partner = nb.front();
        out.multiplier *= r.weight(Lozenge::of(c, partner));
        alive.erase(c);
        alive.erase(partner);
        removed.push_back(c);
        removed.push_back(partner);
        for (const TriCell& n : neighbors(partner))
            if (alive.count(n))
                work.push_back(n);
    }
    out.reduced = r.without(removed);
    return out;
}

} // namespace

ForcedReduction remove_forced(const Region& r) { return reduce_forced(r, {r.cells().begin(), r.cells().end()}); }

ForcedReduction remove_forced(const Region& r, std::uint64_t order_seed)
{
    std::vector<TriCell> order(r.cells().begin(), r.cells().end());
    std::shuffle(order.begin(), order.end(), std::mt19937_64(order_seed));
    return reduce_forced(r, {order.begin(), order.end()});
}

DualGraph dual_graph(const Region& r)
{
    DualGraph g;
    g.vertices.assign(r.cells().begin(), r.cells().end());
    g.incidence.resize(g.vertices.size());
    auto index = [&](const TriCell& c) {
        auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), c);
        return (it != g.vertices.end() && *it == c) ? static_cast<int>(it - g.vertices.begin()) : -1;
    };
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        const TriCell& c = g.vertices[k];
        if (!c.is_up())
            continue;
        for (const TriCell& n : neighbors(c)) {
            int d = index(n);
            if (d < 0)
                continue;
            int id = static_cast<int>(g.edges.size());
            g.edges.push_back({static_cast<int>(k), d, r.weight(Lozenge{c, n})});
            g.incidence[k].push_back(id);
            g.incidence[static_cast<std::size_t>(d)].push_back(id);
        }
    }
    return g;
}

std::pair<double, double> centroid(const TriCell& c)
{
    const double h = std::sqrt(3.0) / 2.0;
    double x = static_cast<double>(c.i) + static_cast<double>(c.j) / 2.0 + (c.is_up() ? 0.5 : 1.0);
    double y = (static_cast<double>(c.j) + (c.is_up() ? 1.0 / 3.0 : 2.0 / 3.0)) * h;
    return {x, y};
}

std::vector<std::vector<std::vector<int>>> dual_faces(const DualGraph& g)
{
    const std::size_t nv = g.vertices.size();
    auto other = [&](int e, int v) { return g.edges[static_cast<std::size_t>(e)].up == v ? g.edges[static_cast<std::size_t>(e)].down : g.edges[static_cast<std::size_t>(e)].up; };
    // incident edges in clockwise order around each vertex
    std::vector<std::vector<int>> rot(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        rot[v] = g.incidence[v];
        auto [cx, cy] = centroid(g.vertices[v]);
        auto angle = [&](int e) {
            auto [x, y] = centroid(g.vertices[static_cast<std::size_t>(other(e, static_cast<int>(v)))]);
            return std::atan2(y - cy, x - cx);
        };
        std::sort(rot[v].begin(), rot[v].end(), [&](int a, int b) { return angle(a) > angle(b); });
    }
    // dart 2e runs up->down, 2e+1 runs down->up
    auto head = [&](int d) { const auto& e = g.edges[static_cast<std::size_t>(d / 2)]; return d % 2 == 0 ? e.down : e.up; };
    auto tail = [&](int d) { const auto& e = g.edges[static_cast<std::size_t>(d / 2)]; return d % 2 == 0 ? e.up : e.down; };
    auto dart_from = [&](int e, int v) { return g.edges[static_cast<std::size_t>(e)].up == v ? 2 * e : 2 * e + 1; };
    auto next = [&](int d) {
        int v = head(d);
        const auto& r = rot[static_cast<std::size_t>(v)];
        auto pos = std::find(r.begin(), r.end(), d / 2) - r.begin();
        int e = r[static_cast<std::size_t>((pos + 1) % static_cast<long>(r.size()))];
        return dart_from(e, v);
    };

    std::vector<int> comp(nv, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < nv; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<std::size_t> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (int e : g.incidence[v]) {
                auto w = static_cast<std::size_t>(other(e, static_cast<int>(v)));
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
            }
        }
        ++ncomp;
    }

    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(ncomp));
    std::vector<double> outer_area(static_cast<std::size_t>(ncomp), 0.0);
    std::vector<bool> used(2 * g.edges.size(), false);
    for (std::size_t v = 0; v < nv; ++v)
        if (g.incidence[v].empty())
            out[static_cast<std::size_t>(comp[v])].push_back({static_cast<int>(v)});
    for (std::size_t d0 = 0; d0 < used.size(); ++d0) {
        if (used[d0])
            continue;
        std::vector<int> face;
        double area = 0;
        int d = static_cast<int>(d0);
        while (!used[static_cast<std::size_t>(d)]) {
            used[static_cast<std::size_t>(d)] = true;
            face.push_back(tail(d));
            auto [x1, y1] = centroid(g.vertices[static_cast<std::size_t>(tail(d))]);
            auto [x2, y2] = centroid(g.vertices[static_cast<std::size_t>(head(d))]);
            area += x1 * y2 - x2 * y1;
            d = next(d);
        }
        auto& faces = out[static_cast<std::size_t>(comp[static_cast<std::size_t>(face.front())])];
        auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(face.front())]);
        if (faces.empty() || area < outer_area[c]) {
            faces.insert(faces.begin(), face);
            outer_area[c] = area;
        } else {
            faces.push_back(face);
        }
    }
    return out;
}

// ---- geometry ----

Point step(const Point& a, Dir d, long n)
{
    switch (d) {
    case Dir::E: return {a.p + n, a.q};
    case Dir::NE: return {a.p, a.q + n};
    case Dir::NW: return {a.p - n, a.q + n};
    case Dir::W: return {a.p - n, a.q};
    case Dir::SW: return {a.p, a.q - n};
    case Dir::SE: return {a.p + n, a.q - n};
    }
    return a;
}

Dir opposite_zig(Dir d) { return d == Dir::NW ? Dir::NE : Dir::NW; }

const char* dir_name(Dir d)
{
    switch (d) {
    case Dir::E: return "E";
    case Dir::NE: return "NE";
    case Dir::NW: return "NW";
    case Dir::W: return "W";
    case Dir::SW: return "SW";
    case Dir::SE: return "SE";
    }
    return "?";
}

std::vector<Point> walk(const Point& start, const Moves& moves)
{
    std::vector<Point> pts{start};
    for (const auto& [d, n] : moves)
        for (long k = 0; k < n; ++k)
            pts.push_back(step(pts.back(), d));
    return pts;
}

Moves zigzag(long n, Dir first)
{
    Moves m;
    Dir d = first;
    for (long k = 0; k < n; ++k) {
        m.push_back({d, 1});
        d = opposite_zig(d);
    }
    return m;
}

namespace {

/// ray casting at (X,Y) in lattice coordinates scaled by 3
bool inside(const std::vector<Point>& poly, long long X, long long Y)
{
    bool c = false;
    const std::size_t n = poly.size();
    for (std::size_t k = 0; k < n; ++k) {
        long long x1 = 3 * poly[k].p, y1 = 3 * poly[k].q;
        long long x2 = 3 * poly[(k + 1) % n].p, y2 = 3 * poly[(k + 1) % n].q;
        if ((y1 > Y) == (y2 > Y))
            continue;
        long long num = (Y - y1) * (x2 - x1), den = y2 - y1;
        bool right = den > 0 ? x1 * den + num > X * den : x1 * den + num < X * den;
        if (right)
            c = !c;
    }
    return c;
}

} // namespace

std::set<TriCell> cells_in(const std::vector<Point>& polygon)
{
    std::set<TriCell> out;
    if (polygon.size() < 3)
        return out;
    long pmin = polygon[0].p, pmax = pmin, qmin = polygon[0].q, qmax = qmin;
    for (const Point& pt : polygon) {
        pmin = std::min(pmin, pt.p);
        pmax = std::max(pmax, pt.p);
        qmin = std::min(qmin, pt.q);
        qmax = std::max(qmax, pt.q);
    }
    for (long j = qmin - 1; j <= qmax; ++j)
        for (long i = pmin - 1; i <= pmax; ++i) {
            if (inside(polygon, 3 * i + 1, 3 * j + 1))
                out.insert(TriCell::up(i, j));
            if (inside(polygon, 3 * i + 2, 3 * j + 2))
                out.insert(TriCell::down(i, j));
        }
    return out;
}

std::set<TriCell> up_triangle(long p, long q, long k)
{
    if (k <= 0)
        return {};
    return cells_in({{p, q}, {p + k, q}, {p, q + k}});
}

std::set<TriCell> down_triangle(long p, long q, long k)
{
    if (k <= 0)
        return {};
    return cells_in({{p, q}, {p + k, q}, {p + k, q - k}});
}

std::vector<Point> outward_vertices(const std::vector<Point>& path)
{
    std::vector<Point> out;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
        Point d1{path[k].p - path[k - 1].p, path[k].q - path[k - 1].q};
        Point d2{path[k + 1].p - path[k].p, path[k + 1].q - path[k].q};
        if (d1 == Point{-1, 1} && d2 == Point{0, 1})
            out.push_back(path[k]);
    }
    return out;
}

std::map<std::pair<Point, Point>, int> boundary_edges(const std::set<TriCell>& cells)
{
    std::map<std::pair<Point, Point>, int> out;
    for (const TriCell& c : cells) {
        long i = c.i, j = c.j;
        // clockwise edges paired with the neighbour across each edge
        std::array<std::pair<std::pair<Point, Point>, TriCell>, 3> edges =
            c.is_up() ? std::array<std::pair<std::pair<Point, Point>, TriCell>, 3>{{
                            {{{i, j}, {i, j + 1}}, TriCell::down(i - 1, j)},
                            {{{i, j + 1}, {i + 1, j}}, TriCell::down(i, j)},
                            {{{i + 1, j}, {i, j}}, TriCell::down(i, j - 1)},
                        }}
                      : std::array<std::pair<std::pair<Point, Point>, TriCell>, 3>{{
                            {{{i, j + 1}, {i + 1, j + 1}}, TriCell::up(i, j + 1)},
                            {{{i + 1, j + 1}, {i + 1, j}}, TriCell::up(i + 1, j)},
                            {{{i + 1, j}, {i, j + 1}}, TriCell::up(i, j)},
                        }};
        for (const auto& [e, n] : edges)
            if (!cells.count(n))
                out[e] += 1;
    }
    return out;
}

std::map<std::pair<Point, Point>, int> contour_edges(const std::vector<Point>& polygon)
{
    std::map<std::pair<Point, Point>, int> out;
    const std::size_t n = polygon.size();
    for (std::size_t k = 0; k < n; ++k) {
        Point a = polygon[k], b = polygon[(k + 1) % n];
        if (a == b)
            continue;
        auto rev = out.find({b, a});
        if (rev != out.end()) {
            if (--rev->second == 0)
                out.erase(rev);
        } else {
            out[{a, b}] += 1;
        }
    }
    return out;
}

} // namespace tiling
