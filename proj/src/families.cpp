#include "tiling/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace tiling {

namespace {

const std::array<std::string, 16> kTagNames{"H1", "H2", "W1", "W2", "R1", "R2", "RW1", "RW2",
                                            "N1", "N2", "N3", "N4", "NR1", "NR2", "NR3", "NR4"};

void require_nonnegative(long v, const char* what)
{
    if (v < 0)
        throw ParameterError(std::string("negative side length: ") + what + " = " + std::to_string(v));
}

/// contour from a west path followed by the four east runs, closing at the start of the path
std::vector<Point> close_contour(const std::vector<Point>& west, const Moves& east)
{
    auto rest = walk(west.back(), east);
    if (rest.back() != west.front())
        throw ParameterError("contour does not close");
    std::vector<Point> contour = west;
    if (rest.size() > 2)
        contour.insert(contour.end(), rest.begin() + 1, rest.end() - 1);
    if (contour.size() > 1 && contour.back() == contour.front())
        contour.pop_back();
    return contour;
}

Construction finish(std::vector<Point> contour, const std::set<TriCell>& holes)
{
    Construction c;
    c.contour = std::move(contour);
    std::set<TriCell> filled = cells_in(c.contour);
    std::set<TriCell> kept;
    for (const TriCell& t : filled)
        (holes.count(t) ? c.removed : kept).insert(t);
    c.region = Region(std::move(kept));
    return c;
}

void weight_outward(Construction& c, const std::vector<Point>& path)
{
    for (const Point& v : outward_vertices(path)) {
        Lozenge l = vertical_lozenge_at(v);
        if (c.region.contains(l.up) && c.region.contains(l.down))
            c.region.set_weight(l, Rational(1, 2));
    }
}

/// triangles along row q, alternating orientation; leftward ferns grow to the left of start
std::set<TriCell> fern_cells(long q, long start, const std::vector<long>& sides, bool first_up, bool leftward)
{
    std::set<TriCell> out;
    long p = start;
    bool up = first_up;
    for (long s : sides) {
        long lo = leftward ? p - s : p;
        auto tri = up ? up_triangle(lo, q, s) : down_triangle(lo, q, s);
        out.insert(tri.begin(), tri.end());
        p = leftward ? lo : p + s;
        up = !up;
    }
    return out;
}

std::vector<long> tail_entries(const FernSequence& f)
{
    if (f.size() <= 1)
        return {};
    return {f.entries().begin() + 1, f.entries().end()};
}

enum class WestWeights { None, All, Lower, Upper };

/// Contour adjustments of each halved family relative to the plain halved hexagon of its orientation.
struct HalvedShape {
    int d_ne;
    int d_se;
    int d_lower;
    int d_upper;
    int mid_extra;
    int jog;
    Dir upper_first;
    WestWeights weights;
};

HalvedShape halved_shape(FamilyTag t)
{
    using W = WestWeights;
    switch (t) {
    case FamilyTag::H1: return {0, 0, 0, 0, 0, 0, Dir::NW, W::None};
    case FamilyTag::H2: return {-1, -1, -1, -1, 0, 0, Dir::NE, W::None};
    case FamilyTag::W1: return {0, 0, 0, 0, 0, 0, Dir::NW, W::All};
    case FamilyTag::W2: return {-1, -1, -1, -1, 0, 0, Dir::NE, W::All};
    case FamilyTag::R1: return {0, 0, 0, 0, 0, 0, Dir::NW, W::None};
    case FamilyTag::R2: return {-1, -1, -1, -1, 0, 0, Dir::NE, W::None};
    case FamilyTag::RW1: return {0, 0, 0, 0, 0, 0, Dir::NW, W::All};
    case FamilyTag::RW2: return {-1, -1, -1, -1, 0, 0, Dir::NE, W::All};
    case FamilyTag::N1: return {1, 0, 0, 0, 1, 0, Dir::NW, W::Upper};
    case FamilyTag::N2: return {0, -1, -1, 0, 0, 0, Dir::NW, W::Upper};
    case FamilyTag::N3: return {-1, 0, 0, -1, 0, 0, Dir::NE, W::Lower};
    case FamilyTag::N4: return {-2, -1, -1, -1, -1, 0, Dir::NE, W::Lower};
    case FamilyTag::NR1: return {0, 1, 1, 0, 0, 1, Dir::NW, W::Lower};
    case FamilyTag::NR2: return {-1, 0, 0, -1, 0, 0, Dir::NE, W::Lower};
    case FamilyTag::NR3: return {0, -1, -1, 0, 0, 0, Dir::NW, W::Upper};
    case FamilyTag::NR4: return {-1, -2, -2, -1, 0, -1, Dir::NE, W::Upper};
    }
    throw std::logic_error("unknown family tag");
}

} // namespace

const std::array<FamilyTag, 16>& all_family_tags()
{
    static const std::array<FamilyTag, 16> tags{FamilyTag::H1, FamilyTag::H2, FamilyTag::W1, FamilyTag::W2,
                                                FamilyTag::R1, FamilyTag::R2, FamilyTag::RW1, FamilyTag::RW2,
                                                FamilyTag::N1, FamilyTag::N2, FamilyTag::N3, FamilyTag::N4,
                                                FamilyTag::NR1, FamilyTag::NR2, FamilyTag::NR3, FamilyTag::NR4};
    return tags;
}

std::string tag_name(FamilyTag t) { return kTagNames[static_cast<std::size_t>(t)]; }

std::string kind_name(QuarteredKind k)
{
    switch (k) {
    case QuarteredKind::Q: return "Q";
    case QuarteredKind::Qp: return "Qp";
    case QuarteredKind::K: return "K";
    case QuarteredKind::Kp: return "Kp";
    }
    return "?";
}

std::string kind_name(SymmetricKind k) { return k == SymmetricKind::S1 ? "S1" : "S2"; }

FamilyTag parse_family_tag(const std::string& s)
{
    for (std::size_t k = 0; k < kTagNames.size(); ++k)
        if (kTagNames[k] == s)
            return all_family_tags()[k];
    throw UsageError("unknown family '" + s + "'");
}

QuarteredKind parse_quartered_kind(const std::string& s)
{
    for (auto k : {QuarteredKind::Q, QuarteredKind::Qp, QuarteredKind::K, QuarteredKind::Kp})
        if (kind_name(k) == s)
            return k;
    throw UsageError("unknown quartered kind '" + s + "'");
}

SymmetricKind parse_symmetric_kind(const std::string& s)
{
    if (s == "S1")
        return SymmetricKind::S1;
    if (s == "S2")
        return SymmetricKind::S2;
    throw UsageError("unknown symmetric kind '" + s + "'");
}

bool is_reflected(FamilyTag t)
{
    switch (t) {
    case FamilyTag::R1:
    case FamilyTag::R2:
    case FamilyTag::RW1:
    case FamilyTag::RW2:
    case FamilyTag::NR1:
    case FamilyTag::NR2:
    case FamilyTag::NR3:
    case FamilyTag::NR4: return true;
    default: return false;
    }
}

std::string format_params(const FamilyParams& p)
{
    std::ostringstream os;
    os << "x=" << p.x << " y=" << p.y << " z=" << p.z << " a=" << format_fern(p.a) << " b=" << format_fern(p.b);
    return os.str();
}

// ---- hexagon ----

Construction construct_hexagon(long a, long b, long c)
{
    require_nonnegative(a, "a");
    require_nonnegative(b, "b");
    require_nonnegative(c, "c");
    auto west = walk({0, 0}, {{Dir::NW, b}, {Dir::NE, c}});
    return finish(close_contour(west, {{Dir::E, a}, {Dir::SE, b}, {Dir::SW, c}, {Dir::W, a}}), {});
}

Region build_hexagon(long a, long b, long c) { return construct_hexagon(a, b, c).region; }

SideList expected_sides_hexagon(long a, long b, long c)
{
    return {{{Dir::E, a}, {Dir::SE, b}, {Dir::SW, c}, {Dir::W, a}}, b + c, 0};
}

// ---- staircase-cut hexagon ----

Construction construct_proctor(ProctorKind kind, long a, long b, long c)
{
    require_nonnegative(a, "a");
    require_nonnegative(c, "c");
    if (a > b)
        throw ParameterError("staircase region needs a <= b");
    auto west = walk({0, 0}, {{Dir::NW, b - a}});
    auto zig_start = west.size() - 1;
    auto zig = walk(west.back(), zigzag(2 * a, Dir::NW));
    west.insert(west.end(), zig.begin() + 1, zig.end());
    Construction out = finish(close_contour(west, {{Dir::E, c}, {Dir::SE, b}, {Dir::SW, a}, {Dir::W, c}}), {});
    if (kind == ProctorKind::Pp)
        weight_outward(out, std::vector<Point>(west.begin() + static_cast<long>(zig_start), west.end()));
    return out;
}

Region build_proctor(ProctorKind kind, long a, long b, long c) { return construct_proctor(kind, a, b, c).region; }

SideList expected_sides_proctor(long a, long b, long c)
{
    return {{{Dir::E, c}, {Dir::SE, b}, {Dir::SW, a}, {Dir::W, c}}, b + a, 0};
}

// ---- quartered hexagons ----

namespace {

FernSequence padded(const FernSequence& t)
{
    if (t.size() % 2 == 0)
        return t;
    auto v = t.entries();
    v.push_back(0);
    return FernSequence(std::move(v));
}

bool k_type(QuarteredKind k) { return k == QuarteredKind::K || k == QuarteredKind::Kp; }

} // namespace

Construction construct_quartered(QuarteredKind kind, const FernSequence& t0)
{
    FernSequence t = padded(t0);
    FernSums s = fern_sums(t);
    long rows = k_type(kind) ? 2 * s.even_sum - 1 : 2 * s.even_sum;
    if (rows < 0)
        return {};
    auto west = walk({0, 0}, zigzag(rows, k_type(kind) ? Dir::NE : Dir::NW));
    std::set<TriCell> holes;
    long p = 0;
    for (long k = 1; k <= t.size(); k += 2) {
        p += t.at(k);
        auto tri = up_triangle(p, 0, t.at(k + 1));
        holes.insert(tri.begin(), tri.end());
        p += t.at(k + 1);
    }
    Construction out = finish(close_contour(west, {{Dir::E, s.odd_sum}, {Dir::SE, rows}, {Dir::W, s.total}}), holes);
    out.fern_line = 0;
    out.has_fern_line = true;
    if (kind == QuarteredKind::Qp || kind == QuarteredKind::Kp)
        weight_outward(out, west);
    return out;
}

Region build_quartered(QuarteredKind kind, const FernSequence& t) { return construct_quartered(kind, t).region; }

SideList expected_sides_quartered(QuarteredKind kind, const FernSequence& t0)
{
    FernSums s = fern_sums(padded(t0));
    long rows = k_type(kind) ? 2 * s.even_sum - 1 : 2 * s.even_sum;
    if (rows < 0)
        return {};
    return {{{Dir::E, s.odd_sum}, {Dir::SE, rows}, {Dir::W, s.even_sum + s.odd_sum}}, rows, 0};
}

// ---- halved hexagons with two ferns ----

Construction construct_halved(FamilyTag tag, const FamilyParams& p)
{
    if (p.x < 0 || p.y < 0 || p.z < 0)
        throw ParameterError("x, y, z must be nonnegative");
    const bool refl = is_reflected(tag);
    const HalvedShape sh = halved_shape(tag);
    const FernSums fa = fern_sums(p.a), fb = fern_sums(p.b);
    const long a1 = p.a.at(1);
    if ((tag == FamilyTag::N4 || tag == FamilyTag::NR4) && a1 < 1)
        throw ParameterError(tag_name(tag) + " needs a1 >= 1");

    long ne, se, south, lower, upper;
    if (!refl) {
        ne = 2 * p.y + p.z + 2 * fa.odd_sum + 2 * fb.odd_sum;
        se = 2 * p.y + p.z + 2 * fa.even_sum + 2 * fb.even_sum;
        south = p.x + fa.odd_sum + fb.odd_sum;
        lower = 2 * (p.y + p.z + fa.even_sum + fb.even_sum);
        upper = 2 * (p.y + fa.odd_sum - a1 + fb.odd_sum);
    } else {
        ne = 2 * p.y + p.z + 2 * fa.even_sum + 2 * fb.odd_sum;
        se = 2 * p.y + p.z + 2 * fa.odd_sum + 2 * fb.even_sum;
        south = p.x + fa.even_sum + fb.odd_sum;
        lower = 2 * (p.y + p.z + fa.odd_sum - a1 + fb.even_sum);
        upper = 2 * (p.y + fa.even_sum + fb.odd_sum);
    }
    ne += sh.d_ne;
    se += sh.d_se;
    lower += sh.d_lower;
    upper += sh.d_upper;
    const long mid = 2 * a1 + sh.mid_extra;
    require_nonnegative(ne, "northeast");
    require_nonnegative(se, "southeast");
    require_nonnegative(south, "south");
    require_nonnegative(lower, "lower west");
    require_nonnegative(upper, "upper west");
    require_nonnegative(mid, "middle west");

    // west side: lower zigzag, the straight stretch past the half triangle, an optional jog, upper zigzag
    Moves moves = zigzag(lower, Dir::NW);
    Dir next = moves.empty() ? Dir::NW : opposite_zig(moves.back().first);
    Moves middle = zigzag(mid, next);
    moves.insert(moves.end(), middle.begin(), middle.end());
    auto path = walk({0, 0}, moves);
    if (sh.jog != 0) {
        auto j = walk(path.back(), {{sh.jog > 0 ? Dir::E : Dir::W, std::labs(sh.jog)}});
        path.insert(path.end(), j.begin() + 1, j.end());
    }
    auto up_path = walk(path.back(), zigzag(upper, sh.upper_first));
    path.insert(path.end(), up_path.begin() + 1, up_path.end());

    const Point top = path.back();
    if (top.q != ne + se)
        throw ParameterError("west side height does not match the slanted sides");
    const long north = south - ne - top.p;
    require_nonnegative(north, "north");
    auto contour = close_contour(path, {{Dir::E, north}, {Dir::SE, ne}, {Dir::SW, se}, {Dir::W, south}});

    const Point w0 = refl ? path[static_cast<std::size_t>(lower + mid + std::labs(sh.jog))] : path[static_cast<std::size_t>(lower)];
    const long line = w0.q;
    std::set<TriCell> holes;
    auto add = [&](const std::set<TriCell>& s) { holes.insert(s.begin(), s.end()); };
    if (a1 > 0)
        add(refl ? down_triangle(w0.p - a1, line, 2 * a1) : up_triangle(w0.p - a1, line, 2 * a1));
    if (refl && sh.jog > 0)
        add(down_triangle(w0.p - sh.jog, line, sh.jog));

    const Point east = step(step(top, Dir::E, north), Dir::SE, ne);
    const Point r0{east.p - p.z, east.q + p.z};
    if (r0.q != line)
        throw ParameterError("fern line does not meet the northeast side");
    if (r0.p - w0.p != p.x + p.y + fa.total + fb.total)
        throw ParameterError("ferns do not fit on the fern line");
    add(fern_cells(line, w0.p + a1, tail_entries(p.a), refl, false));
    add(fern_cells(line, r0.p, p.b.entries(), true, true));

    Construction out = finish(std::move(contour), holes);
    out.fern_line = line;
    out.has_fern_line = true;
    switch (sh.weights) {
    case WestWeights::None: break;
    case WestWeights::All: weight_outward(out, path); break;
    case WestWeights::Lower: weight_outward(out, std::vector<Point>(path.begin(), path.begin() + lower + 1)); break;
    case WestWeights::Upper: weight_outward(out, up_path); break;
    }
    return out;
}

Region build_halved(FamilyTag tag, const FamilyParams& p) { return construct_halved(tag, p).region; }

SideList expected_sides_halved(FamilyTag tag, const FamilyParams& p)
{
    const FernSums fa = fern_sums(p.a), fb = fern_sums(p.b);
    const bool refl = is_reflected(tag);
    long north = refl ? p.x + fa.odd_sum + fb.even_sum : p.x + fa.even_sum + fb.even_sum;
    long ne = 2 * p.y + p.z + 2 * (refl ? fa.even_sum : fa.odd_sum) + 2 * fb.odd_sum;
    long se = 2 * p.y + p.z + 2 * (refl ? fa.odd_sum : fa.even_sum) + 2 * fb.even_sum;
    long south = refl ? p.x + fa.even_sum + fb.odd_sum : p.x + fa.odd_sum + fb.odd_sum;
    long jog = 0;
    switch (tag) {
    case FamilyTag::H2:
    case FamilyTag::W2:
    case FamilyTag::R2:
    case FamilyTag::RW2: --ne; --se; break;
    // a layer along the north side of H1 / H2
    case FamilyTag::N1: ++ne; break;
    case FamilyTag::N2: --se; break;
    // the north layer taken off W1 / W2
    case FamilyTag::N3: --ne; break;
    case FamilyTag::N4: ne -= 2; --se; break;
    // a layer along the south side of R1 / R2
    case FamilyTag::NR1: ++se; jog = 1; break;
    case FamilyTag::NR2: --ne; break;
    // the south layer taken off RW1 / RW2
    case FamilyTag::NR3: --se; break;
    case FamilyTag::NR4: --ne; se -= 2; jog = 1; break;
    default: break;
    }
    return {{{Dir::E, north}, {Dir::SE, ne}, {Dir::SW, se}, {Dir::W, south}}, ne + se, jog};
}

// ---- symmetric hexagons with three ferns ----

namespace {

struct SymmetricSides {
    long north, ne, se, south;
};

SymmetricSides symmetric_sides(SymmetricKind kind, const FamilyParams& p)
{
    const FernSums fa = fern_sums(p.a), fb = fern_sums(p.b);
    const long a1 = p.a.at(1);
    const long rest_odd = fa.odd_sum - a1;
    if (kind == SymmetricKind::S1)
        return {p.x + 2 * fa.even_sum + 2 * fb.even_sum, p.y + p.z + a1 + 2 * rest_odd + 2 * fb.odd_sum,
                p.y + p.z + 2 * fa.even_sum + 2 * fb.even_sum, p.x + a1 + 2 * rest_odd + 2 * fb.odd_sum};
    return {p.x + a1 + 2 * rest_odd + 2 * fb.even_sum, p.y + p.z + 2 * fa.even_sum + 2 * fb.odd_sum,
            p.y + p.z + a1 + 2 * rest_odd + 2 * fb.even_sum, p.x + 2 * fa.even_sum + 2 * fb.odd_sum};
}

} // namespace

Construction construct_symmetric(SymmetricKind kind, const FamilyParams& p)
{
    if (p.x < 0 || p.y < 0 || p.z < 0)
        throw ParameterError("x, y, z must be nonnegative");
    if ((p.x - p.y) % 2 != 0)
        throw ParameterError("x and y must have the same parity");
    const SymmetricSides s = symmetric_sides(kind, p);
    require_nonnegative(s.north, "north");
    require_nonnegative(s.ne, "northeast");
    require_nonnegative(s.se, "southeast");
    require_nonnegative(s.south, "south");
    auto west = walk({0, 0}, {{Dir::NW, s.se}, {Dir::NE, s.ne}});
    auto contour = close_contour(west, {{Dir::E, s.north}, {Dir::SE, s.ne}, {Dir::SW, s.se}, {Dir::W, s.south}});

    const Point wv = west[static_cast<std::size_t>(s.se)];
    const Point ev = step(step(west.back(), Dir::E, s.north), Dir::SE, s.ne);
    const long line = s.se + p.z;
    const Point l0{wv.p, wv.q + p.z};
    const Point r0{ev.p - p.z, ev.q + p.z};
    const long width = r0.p - l0.p;
    const long a1 = p.a.at(1);
    const FernSums fa = fern_sums(p.a), fb = fern_sums(p.b);
    if (width - (a1 + 2 * (fa.total - a1)) - 2 * fb.total < 0)
        throw ParameterError("ferns do not fit on the fern line");
    if ((width - a1) % 2 != 0)
        throw ParameterError("middle fern cannot be centred");
    const long centre_lo = l0.p + (width - a1) / 2;
    const bool first_up = kind == SymmetricKind::S1;

    std::set<TriCell> holes;
    auto add = [&](const std::set<TriCell>& t) { holes.insert(t.begin(), t.end()); };
    if (a1 > 0)
        add(first_up ? up_triangle(centre_lo, line, a1) : down_triangle(centre_lo, line, a1));
    add(fern_cells(line, centre_lo + a1, tail_entries(p.a), !first_up, false));
    add(fern_cells(line, centre_lo, tail_entries(p.a), !first_up, true));
    add(fern_cells(line, r0.p, p.b.entries(), true, true));
    add(fern_cells(line, l0.p, p.b.entries(), true, false));

    Construction out = finish(std::move(contour), holes);
    out.fern_line = line;
    out.has_fern_line = true;
    return out;
}

Region build_symmetric(SymmetricKind kind, const FamilyParams& p) { return construct_symmetric(kind, p).region; }

SideList expected_sides_symmetric(SymmetricKind kind, const FamilyParams& p)
{
    const SymmetricSides s = symmetric_sides(kind, p);
    return {{{Dir::E, s.north}, {Dir::SE, s.ne}, {Dir::SW, s.se}, {Dir::W, s.south}}, s.ne + s.se, 0};
}

// ---- audit ----

AuditResult boundary_audit(const Construction& c, const SideList& expected)
{
    AuditResult r;
    std::ostringstream why;

    std::set<TriCell> filled = c.region.cells();
    filled.insert(c.removed.begin(), c.removed.end());
    r.boundary_matches = boundary_edges(filled) == contour_edges(c.contour);
    if (!r.boundary_matches)
        why << "cells do not fill the contour; ";

    // unit moves of the contour, split into the west part and the listed runs
    std::vector<Dir> moves;
    const std::size_t n = c.contour.size();
    for (std::size_t k = 0; k < n && n > 1; ++k) {
        Point a = c.contour[k], b = c.contour[(k + 1) % n];
        for (Dir d : {Dir::E, Dir::NE, Dir::NW, Dir::W, Dir::SW, Dir::SE})
            if (step(a, d) == b)
                moves.push_back(d);
    }
    long east_total = 0;
    for (const auto& [d, len] : expected.east)
        east_total += len;
    if (static_cast<long>(moves.size()) < east_total) {
        r.sides_match = false;
    } else {
        std::size_t split = moves.size() - static_cast<std::size_t>(east_total);
        long rows = 0, jog = 0;
        for (std::size_t k = 0; k < split; ++k) {
            if (moves[k] == Dir::NW || moves[k] == Dir::NE)
                ++rows;
            else if (moves[k] == Dir::E || moves[k] == Dir::W)
                ++jog;
            else
                rows = -1000000;
        }
        Moves runs;
        for (std::size_t k = split; k < moves.size(); ++k) {
            if (!runs.empty() && runs.back().first == moves[k])
                ++runs.back().second;
            else
                runs.push_back({moves[k], 1});
        }
        Moves want;
        for (const auto& run : expected.east)
            if (run.second != 0)
                want.push_back(run);
        r.sides_match = runs == want && rows == expected.west_rows && jog == expected.west_jog;
    }
    if (!r.sides_match)
        why << "side lengths differ from the listed ones; ";

    r.balanced = is_balanced(c.region);
    if (!r.balanced)
        why << "unbalanced; ";

    r.weights_vertical = std::all_of(c.region.weights().begin(), c.region.weights().end(),
                                     [](const auto& kv) { return kv.first.vertical() && kv.second == Rational(1, 2); });
    if (!r.weights_vertical)
        why << "a weighted lozenge is not a vertical half-weight lozenge; ";

    // every removed cell belongs to a triangle standing on or hanging from the fern line
    r.ferns_on_line = c.removed.empty() || c.has_fern_line;
    if (c.has_fern_line) {
        std::set<TriCell> pending = c.removed;
        std::set<TriCell> seen;
        std::vector<TriCell> stack;
        for (const TriCell& t : c.removed)
            if ((t.j == c.fern_line && t.is_up()) || (t.j == c.fern_line - 1 && !t.is_up()))
                stack.push_back(t);
        while (!stack.empty()) {
            TriCell t = stack.back();
            stack.pop_back();
            if (!seen.insert(t).second)
                continue;
            for (const TriCell& u : neighbors(t))
                if (c.removed.count(u) && !seen.count(u))
                    stack.push_back(u);
        }
        r.ferns_on_line = seen.size() == c.removed.size();
    }
    if (!r.ferns_on_line)
        why << "a removed cell is detached from the fern line; ";

    r.detail = why.str();
    return r;
}

} // namespace tiling
