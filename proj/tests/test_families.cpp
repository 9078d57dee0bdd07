#include <doctest.h>

#include <algorithm>

#include "tiling/counter.hpp"
#include "tiling/families.hpp"
#include "tiling/verify.hpp"

using namespace tiling;

namespace {

/// reflection about a vertical line, in units of a sixth of the lattice spacing
bool mirror_symmetric(const Region& r)
{
    if (r.empty())
        return true;
    auto sx = [](const TriCell& c) { return 6 * c.i + 3 * c.j + (c.is_up() ? 3 : 6); };
    long lo = sx(*r.cells().begin()), hi = lo;
    for (const TriCell& c : r.cells()) {
        lo = std::min(lo, sx(c));
        hi = std::max(hi, sx(c));
    }
    for (const TriCell& c : r.cells()) {
        const long target = lo + hi - sx(c);
        const long shift = c.is_up() ? 3 : 6;
        if ((target - 3 * c.j - shift) % 6 != 0)
            return false;
        if (!r.contains(TriCell{(target - 3 * c.j - shift) / 6, c.j, c.o}))
            return false;
    }
    return true;
}

void require_clean(const Construction& c, const SideList& sides)
{
    AuditResult a = boundary_audit(c, sides);
    INFO(a.detail);
    CHECK(a.ok());
}

} // namespace

TEST_CASE("tag names round trip")
{
    for (FamilyTag t : all_family_tags())
        CHECK(parse_family_tag(tag_name(t)) == t);
    CHECK_THROWS_AS(parse_family_tag("H3"), UsageError);
    CHECK(parse_quartered_kind("Kp") == QuarteredKind::Kp);
    CHECK(parse_symmetric_kind("S2") == SymmetricKind::S2);
    CHECK(is_reflected(FamilyTag::NR3));
    CHECK_FALSE(is_reflected(FamilyTag::N3));
}

TEST_CASE("hexagons")
{
    CHECK(count_tilings(build_hexagon(0, 3, 2)) == 1);
    Region one = build_hexagon(1, 1, 1);
    CHECK(one.size() == 6);
    CHECK(is_balanced(one));
    Region two = build_hexagon(2, 2, 2);
    CHECK(two.size() == 24);
    CHECK(is_balanced(two));
    require_clean(construct_hexagon(3, 1, 2), expected_sides_hexagon(3, 1, 2));
    CHECK_THROWS_AS(build_hexagon(-1, 1, 1), ParameterError);
}

TEST_CASE("staircase regions")
{
    CHECK(count_tilings(build_proctor(ProctorKind::P, 0, 5, 3)) == 1);
    Region p = build_proctor(ProctorKind::P, 1, 1, 1);
    CHECK(is_balanced(p));
    CHECK(count_tilings(p) == 2);
    Region pp = build_proctor(ProctorKind::Pp, 1, 1, 1);
    CHECK(pp.cells() == p.cells());
    CHECK(pp.weights().size() == 1);
    CHECK_THROWS_AS(build_proctor(ProctorKind::P, 3, 2, 1), ParameterError);
    for (long b = 0; b <= 3; ++b)
        for (long a = 0; a <= b; ++a)
            require_clean(construct_proctor(ProctorKind::Pp, a, b, 2), expected_sides_proctor(a, b, 2));
}

TEST_CASE("quartered regions")
{
    CHECK(build_quartered(QuarteredKind::Q, {}).empty());
    Region q = build_quartered(QuarteredKind::Q, {2, 1, 2, 2});
    CHECK(is_balanced(q));
    CHECK_FALSE(q.empty());
    Region k = build_quartered(QuarteredKind::K, {3, 1, 2, 2});
    CHECK(is_balanced(k));
    Region kp = build_quartered(QuarteredKind::Kp, {3, 1, 2, 2});
    CHECK(kp.cells() == k.cells());
    CHECK_FALSE(kp.weights().empty());
    for (auto kind : {QuarteredKind::Q, QuarteredKind::Qp, QuarteredKind::K, QuarteredKind::Kp})
        for (auto t : {FernSequence{2, 1, 2, 2}, FernSequence{0, 1, 1, 1, 2, 2}, FernSequence{1}, FernSequence{0, 2, 1, 1, 2, 2}})
            require_clean(construct_quartered(kind, t), expected_sides_quartered(kind, t));
}

TEST_CASE("halved regions")
{
    Region empty = build_halved(FamilyTag::H1, {});
    CHECK(empty.empty());
    CHECK(count_tilings(empty) == 1);

    const FamilyParams fig{2, 1, 2, {2, 2, 3}, {2, 2}};
    Construction h = construct_halved(FamilyTag::H1, fig);
    CHECK(is_balanced(h.region));
    SideList sides = expected_sides_halved(FamilyTag::H1, fig);
    CHECK(sides.east.front().second == fig.x + fig.a.at(2) + fig.b.at(2));
    require_clean(h, sides);

    Construction w = construct_halved(FamilyTag::W1, fig);
    CHECK(w.region.cells() == h.region.cells());
    CHECK_FALSE(w.region.weights().empty());
    for (const auto& [loz, weight] : w.region.weights()) {
        CHECK(loz.vertical());
        CHECK(weight == Rational(1, 2));
    }
    CHECK_THROWS_AS(build_halved(FamilyTag::H1, {-1, 0, 0, {}, {}}), ParameterError);
    CHECK_THROWS_AS(build_halved(FamilyTag::N4, {1, 1, 1, {}, {}}), ParameterError);
}

TEST_CASE("every halved construction on a grid passes its audit")
{
    long audited = 0;
    for (const auto& p : ParameterGrid::box(2, 2, 1, standard_ferns()).points())
        for (FamilyTag tag : all_family_tags()) {
            Construction c;
            try {
                c = construct_halved(tag, p);
            } catch (const ParameterError&) {
                continue;
            }
            ++audited;
            AuditResult a = boundary_audit(c, expected_sides_halved(tag, p));
            INFO(tag_name(tag) << " " << format_params(p) << " " << a.detail);
            CHECK(a.ok());
        }
    CHECK(audited > 1000);
}

TEST_CASE("weight placement by family")
{
    const FamilyParams p{1, 1, 1, {1}, {1}};
    for (FamilyTag tag : all_family_tags()) {
        Region r = build_halved(tag, p);
        const bool plain = tag == FamilyTag::H1 || tag == FamilyTag::H2 || tag == FamilyTag::R1 || tag == FamilyTag::R2;
        INFO(tag_name(tag));
        CHECK(r.weights().empty() == plain);
    }
}

TEST_CASE("audit notices a wrong side list")
{
    Construction c = construct_hexagon(2, 2, 2);
    CHECK_FALSE(boundary_audit(c, expected_sides_hexagon(2, 2, 3)).ok());
    Construction broken = c;
    broken.region = c.region.without({*c.region.cells().begin()});
    CHECK_FALSE(boundary_audit(broken, expected_sides_hexagon(2, 2, 2)).boundary_matches);
}

TEST_CASE("symmetric regions")
{
    CHECK(build_symmetric(SymmetricKind::S1, {}).empty());
    const FamilyParams fig1{2, 2, 2, {3, 2}, {2, 2, 3}};
    Construction s1 = construct_symmetric(SymmetricKind::S1, fig1);
    CHECK(is_balanced(s1.region));
    CHECK(mirror_symmetric(s1.region));
    require_clean(s1, expected_sides_symmetric(SymmetricKind::S1, fig1));
    const FamilyParams fig2{2, 2, 2, {3, 2}, {3, 2, 2}};
    Construction s2 = construct_symmetric(SymmetricKind::S2, fig2);
    CHECK(is_balanced(s2.region));
    CHECK(mirror_symmetric(s2.region));
    require_clean(s2, expected_sides_symmetric(SymmetricKind::S2, fig2));
    CHECK_THROWS_AS(build_symmetric(SymmetricKind::S1, {1, 0, 0, {1}, {}}), ParameterError);

    for (auto kind : {SymmetricKind::S1, SymmetricKind::S2})
        for (const auto& p : ParameterGrid::box(2, 2, 2, {FernSequence{0}, FernSequence{1}, FernSequence{2}, FernSequence{1, 1}}).points()) {
            if ((p.x - p.y) % 2 != 0)
                continue;
            Region r = build_symmetric(kind, p);
            CHECK(is_balanced(r));
            CHECK(mirror_symmetric(r));
        }
}
