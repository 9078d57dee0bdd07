#include <Eigen/Core>

#include <algorithm>
#include <deque>

#include "tiling/counter.hpp"

namespace Eigen {

template<>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 9
    };
};

} // namespace Eigen

namespace tiling {

namespace {

using IntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// fraction-free elimination; returns |det|
Integer abs_determinant(IntMatrix m)
{
    const Eigen::Index n = m.rows();
    Integer prev = 1;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index piv = k;
        while (piv < n && m(piv, k) == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != k)
            m.row(k).swap(m.row(piv));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = t;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Integer d = n == 0 ? Integer(1) : Integer(m(n - 1, n - 1));
    return abs(d);
}

/// Kasteleyn signs: every bounded face walk of length L gets sign product (-1)^(L/2+1)
std::vector<int> kasteleyn_signs(const DualGraph& g, const std::vector<std::vector<std::vector<int>>>& faces)
{
    std::vector<int> sign(g.edges.size(), 0);
    std::vector<char> in_tree(g.edges.size(), 0);
    std::vector<char> seen(g.vertices.size(), 0);
    for (std::size_t s = 0; s < g.vertices.size(); ++s) {
        if (seen[s])
            continue;
        seen[s] = 1;
        std::deque<std::size_t> q{s};
        while (!q.empty()) {
            std::size_t v = q.front();
            q.pop_front();
            for (int e : g.incidence[v]) {
                const auto& ed = g.edges[static_cast<std::size_t>(e)];
                auto w = static_cast<std::size_t>(ed.up == static_cast<int>(v) ? ed.down : ed.up);
                if (!seen[w]) {
                    seen[w] = 1;
                    in_tree[static_cast<std::size_t>(e)] = 1;
                    sign[static_cast<std::size_t>(e)] = 1;
                    q.push_back(w);
                }
            }
        }
    }

    auto edge_between = [&](int a, int b) {
        for (int e : g.incidence[static_cast<std::size_t>(a)]) {
            const auto& ed = g.edges[static_cast<std::size_t>(e)];
            if ((ed.up == a && ed.down == b) || (ed.up == b && ed.down == a))
                return e;
        }
        return -1;
    };

    for (const auto& comp : faces) {
        const std::size_t nf = comp.size();
        // edge walks per face, and faces on each side of every non-tree edge
        std::vector<std::vector<int>> walks(nf);
        std::map<int, std::vector<std::size_t>> sides;
        for (std::size_t f = 0; f < nf; ++f) {
            const auto& vs = comp[f];
            if (vs.size() < 2)
                continue;
            for (std::size_t k = 0; k < vs.size(); ++k) {
                int e = edge_between(vs[k], vs[(k + 1) % vs.size()]);
                walks[f].push_back(e);
                if (!in_tree[static_cast<std::size_t>(e)])
                    sides[e].push_back(f);
            }
        }
        std::vector<std::vector<std::pair<std::size_t, int>>> adj(nf);
        for (const auto& [e, fs] : sides) {
            if (fs.size() != 2 || fs[0] == fs[1])
                throw std::logic_error("non-tree edge does not separate two faces");
            adj[fs[0]].push_back({fs[1], e});
            adj[fs[1]].push_back({fs[0], e});
        }
        std::vector<long> parent_edge(nf, -1);
        std::vector<char> visited(nf, 0);
        std::vector<std::size_t> order;
        std::deque<std::size_t> q{0};
        visited[0] = 1;
        while (!q.empty()) {
            std::size_t f = q.front();
            q.pop_front();
            order.push_back(f);
            for (const auto& [h, e] : adj[f])
                if (!visited[h]) {
                    visited[h] = 1;
                    parent_edge[h] = e;
                    q.push_back(h);
                }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            std::size_t f = *it;
            if (f == 0)
                continue;
            int product = 1;
            for (int e : walks[f])
                if (e != parent_edge[f])
                    product *= sign[static_cast<std::size_t>(e)];
            int target = ((walks[f].size() / 2 + 1) % 2 == 0) ? 1 : -1;
            sign[static_cast<std::size_t>(parent_edge[f])] = target * product;
        }
    }
    return sign;
}

} // namespace

Rational count_tilings_determinant(const Region& r)
{
    if (r.empty())
        return 1;
    if (!is_balanced(r))
        return 0;
    DualGraph g = dual_graph(r);
    auto faces = dual_faces(g);
    auto sign = kasteleyn_signs(g, faces);

    Rational total = 1;
    for (const auto& comp : faces) {
        std::vector<int> members;
        for (const auto& f : comp)
            members.insert(members.end(), f.begin(), f.end());
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        std::vector<int> ups, downs;
        for (int v : members)
            (g.vertices[static_cast<std::size_t>(v)].is_up() ? ups : downs).push_back(v);
        if (ups.size() != downs.size())
            return 0;
        auto pos = [](const std::vector<int>& v, int x) {
            return static_cast<Eigen::Index>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
        };
        // weights are scaled to integers row by row
        const auto n = static_cast<Eigen::Index>(ups.size());
        IntMatrix m(n, n);
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index b = 0; b < n; ++b)
                m(a, b) = 0;
        Integer scale = 1;
        for (Eigen::Index a = 0; a < n; ++a) {
            Integer den = 1;
            for (int e : g.incidence[static_cast<std::size_t>(ups[static_cast<std::size_t>(a)])])
                den = lcm(den, g.edges[static_cast<std::size_t>(e)].weight.get_den());
            for (int e : g.incidence[static_cast<std::size_t>(ups[static_cast<std::size_t>(a)])]) {
                const auto& ed = g.edges[static_cast<std::size_t>(e)];
                Rational w = ed.weight * den * sign[static_cast<std::size_t>(e)];
                m(a, pos(downs, ed.down)) = w.get_num();
            }
            scale *= den;
        }
        Rational factor(abs_determinant(std::move(m)), scale);
        factor.canonicalize();
        total *= factor;
        if (total == 0)
            return 0;
    }
    return total;
}

} // namespace tiling
