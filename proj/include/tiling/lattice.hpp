#ifndef TILING_LATTICE_HPP
#define TILING_LATTICE_HPP

#include <array>
#include <cstdint>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tiling/special_products.hpp"

namespace tiling {

enum class Orient : unsigned char { Up = 0, Down = 1 };

/// Unit triangle of the triangular lattice.
/// Up(i,j) has corners (i,j), (i+1,j), (i,j+1); Down(i,j) has corners (i+1,j), (i,j+1), (i+1,j+1).
/// Lattice point (p,q) sits at (p + q/2, q*sqrt(3)/2), so rows of constant j are horizontal.
struct TriCell {
    long i = 0;
    long j = 0;
    Orient o = Orient::Up;

    static TriCell up(long i, long j) { return {i, j, Orient::Up}; }
    static TriCell down(long i, long j) { return {i, j, Orient::Down}; }
    bool is_up() const { return o == Orient::Up; }

    bool operator==(const TriCell&) const = default;
    /// scan order: row j, then i, then Up before Down
    std::strong_ordering operator<=>(const TriCell& other) const
    {
        if (auto c = j <=> other.j; c != 0)
            return c;
        if (auto c = i <=> other.i; c != 0)
            return c;
        return static_cast<int>(o) <=> static_cast<int>(other.o);
    }
};

std::string to_string(const TriCell& c);

/// lattice point
struct Point {
    long p = 0;
    long q = 0;
    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

/// two adjacent cells, stored Up first
struct Lozenge {
    TriCell up;
    TriCell down;

    /// throws ParameterError unless a and b share an edge
    static Lozenge of(const TriCell& a, const TriCell& b);
    /// shared edge horizontal: {Down(i,j), Up(i,j+1)}
    bool vertical() const;

    bool operator==(const Lozenge&) const = default;
    auto operator<=>(const Lozenge&) const = default;
};

/// the vertical lozenge whose left corner is the lattice point v
Lozenge vertical_lozenge_at(const Point& v);

/// Up(i,j) -> Down(i,j), Down(i-1,j), Down(i,j-1); Down(i,j) -> Up(i,j), Up(i+1,j), Up(i,j+1)
std::array<TriCell, 3> neighbors(const TriCell& c);

bool adjacent(const TriCell& a, const TriCell& b);

/// Finite set of cells with optional lozenge weights (absent weight means 1).
class Region {
public:
    Region() = default;
    explicit Region(std::set<TriCell> cells) : cells_(std::move(cells)) {}

    const std::set<TriCell>& cells() const { return cells_; }
    const std::map<Lozenge, Rational>& weights() const { return weights_; }

    bool contains(const TriCell& c) const { return cells_.count(c) != 0; }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    long up_count() const;
    long down_count() const;

    Rational weight(const Lozenge& l) const;
    /// both cells must lie in the region and w must be positive
    void set_weight(const Lozenge& l, const Rational& w);

    /// copy without the given cells; weights touching them are dropped
    Region without(const std::vector<TriCell>& removed) const;

    bool operator==(const Region&) const = default;

private:
    std::set<TriCell> cells_;
    std::map<Lozenge, Rational> weights_;
};

bool is_balanced(const Region& r);

struct ForcedReduction {
    Region reduced;
    Rational multiplier = 1;
    /// set when some cell is left with no partner; reduced is then the input and multiplier 0
    bool untileable = false;
};

/// strip lozenges forced by degree-one cells, multiplying their weights together
ForcedReduction remove_forced(const Region& r);
/// the same reduction started from a shuffled worklist; the result does not depend on the seed
ForcedReduction remove_forced(const Region& r, std::uint64_t order_seed);

/// Bipartite dual graph; edges run from an Up vertex to a Down vertex.
struct DualGraph {
    struct Edge {
        int up;
        int down;
        Rational weight;
    };
    std::vector<TriCell> vertices;
    std::vector<Edge> edges;
    /// incident edge ids per vertex
    std::vector<std::vector<int>> incidence;
};

DualGraph dual_graph(const Region& r);

/// Face boundary walks of the dual graph (vertex ids), one list per connected component;
/// the first walk of each component is its unbounded face.
std::vector<std::vector<std::vector<int>>> dual_faces(const DualGraph& g);

/// Cartesian centroid of a cell
std::pair<double, double> centroid(const TriCell& c);

// ---- lattice geometry used by the region builders ----

enum class Dir { E, NE, NW, W, SW, SE };

Point step(const Point& a, Dir d, long n = 1);
Dir opposite_zig(Dir d);
const char* dir_name(Dir d);

using Moves = std::vector<std::pair<Dir, long>>;

/// lattice points visited by the moves, starting point included
std::vector<Point> walk(const Point& start, const Moves& moves);

/// n unit moves alternating NW/NE, starting with first
Moves zigzag(long n, Dir first);

/// cells whose centroid lies inside the closed polygon
std::set<TriCell> cells_in(const std::vector<Point>& polygon);

/// up-pointing triangle of side k with lower-left corner (p,q)
std::set<TriCell> up_triangle(long p, long q, long k);
/// down-pointing triangle of side k with upper-left corner (p,q)
std::set<TriCell> down_triangle(long p, long q, long k);

/// vertices of a path where a NW move is followed by a NE move
std::vector<Point> outward_vertices(const std::vector<Point>& path);

/// directed boundary edges of a cell set, traversed clockwise
std::map<std::pair<Point, Point>, int> boundary_edges(const std::set<TriCell>& cells);
/// directed unit edges of a closed polygon with back-and-forth pairs cancelled
std::map<std::pair<Point, Point>, int> contour_edges(const std::vector<Point>& polygon);

// ---- rendering and serialization ----

std::string render_ascii(const Region& r);
std::string render_svg(const Region& r);
/// format is "ascii" or "svg"; anything else is a UsageError
std::string render(const Region& r, const std::string& format);

std::string region_to_json(const Region& r);
/// throws UsageError on malformed input
Region region_from_json(const std::string& text);

} // namespace tiling

#endif
