#include <doctest.h>

#include "tiling/counter.hpp"
#include "tiling/families.hpp"
#include "tiling/formulas.hpp"

using namespace tiling;

namespace {

Rational enumerated_sum(const Region& r)
{
    TilingList list = enumerate_tilings(r, 100000);
    REQUIRE_FALSE(list.truncated);
    Rational sum = 0;
    for (const auto& t : list.tilings)
        sum += tiling_weight(r, t);
    return sum;
}

Region half_lozenge()
{
    Region r({TriCell::up(0, 0), TriCell::down(0, 0)});
    r.set_weight(Lozenge::of(TriCell::up(0, 0), TriCell::down(0, 0)), Rational(1, 2));
    return r;
}

} // namespace

TEST_CASE("counts of small regions")
{
    CHECK(count_tilings(Region{}) == 1);
    CHECK(count_tilings(half_lozenge()) == Rational(1, 2));
    CHECK(count_tilings(build_hexagon(1, 1, 1)) == 2);
    CHECK(count_tilings(Region({TriCell::up(0, 0)})) == 0);
}

TEST_CASE("determinant counts")
{
    CHECK(count_tilings_determinant(Region{}) == 1);
    CHECK(count_tilings_determinant(build_hexagon(2, 2, 2)) == 20);
    CHECK(count_tilings_determinant(build_proctor(ProctorKind::P, 1, 1, 1)) == 2);
    CHECK(count_tilings_determinant(half_lozenge()) == Rational(1, 2));
    CHECK(count_tilings_determinant(Region({TriCell::up(0, 0)})) == 0);
}

TEST_CASE("enumeration")
{
    auto empty = enumerate_tilings(Region{}, 10);
    REQUIRE(empty.tilings.size() == 1);
    CHECK(empty.tilings[0].empty());
    CHECK(enumerate_tilings(build_hexagon(1, 1, 1), 10).tilings.size() == 2);
    CHECK(enumerate_tilings(Region({TriCell::up(0, 0)}), 10).tilings.empty());
    auto capped = enumerate_tilings(build_hexagon(2, 2, 2), 5);
    CHECK(capped.truncated);
    for (const auto& t : enumerate_tilings(build_hexagon(2, 2, 2), 100).tilings)
        CHECK(t.size() == 12);
}

TEST_CASE("seed regions fix the determinant sign convention")
{
    for (const Region& r : {build_hexagon(2, 3, 2), build_proctor(ProctorKind::P, 2, 3, 2), build_quartered(QuarteredKind::Q, {2, 1, 2, 2})})
        CHECK(count_tilings_determinant(r) == count_tilings(r));
}

TEST_CASE("three oracles agree")
{
    std::vector<Region> regions;
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= 2; ++c)
                regions.push_back(build_hexagon(a, b, c));
    regions.push_back(build_proctor(ProctorKind::Pp, 2, 2, 2));
    regions.push_back(build_quartered(QuarteredKind::Kp, {3, 1, 2, 2}));
    regions.push_back(build_halved(FamilyTag::W2, {1, 1, 1, {1}, {1}}));
    regions.push_back(build_halved(FamilyTag::NR1, {1, 0, 1, {1}, {1}}));
    regions.push_back(build_symmetric(SymmetricKind::S2, {1, 1, 1, {1}, {1}}));
    for (const Region& r : regions) {
        const Rational dp = count_tilings(r);
        CHECK(count_tilings_determinant(r) == dp);
        if (!enumerate_tilings(r, 2000).truncated)
            CHECK(enumerated_sum(r) == dp);
    }
}

TEST_CASE("disconnected regions multiply")
{
    Region two({TriCell::up(0, 0), TriCell::down(0, 0), TriCell::up(5, 5), TriCell::down(5, 5)});
    CHECK(count_tilings(two) == 1);
    CHECK(count_tilings_determinant(two) == 1);
    std::set<TriCell> cells = build_hexagon(1, 1, 1).cells();
    for (const TriCell& c : build_hexagon(1, 1, 1).cells())
        cells.insert(TriCell{c.i + 10, c.j, c.o});
    CHECK(count_tilings(Region(cells)) == 4);
    CHECK(count_tilings_determinant(Region(cells)) == 4);
}

TEST_CASE("unweighted counts are integers and weighted counts dyadic")
{
    for (long a = 0; a <= 3; ++a)
        for (long c = 0; c <= 3; ++c) {
            Rational plain = count_tilings(build_proctor(ProctorKind::P, a, 3, c));
            CHECK(plain.get_den() == 1);
            CHECK(plain >= 0);
            Region w = build_proctor(ProctorKind::Pp, a, 3, c);
            Rational v = count_tilings(w);
            Integer bound = 1;
            mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), w.weights().size());
            CHECK(mpz_divisible_p(bound.get_mpz_t(), v.get_den().get_mpz_t()) != 0);
        }
}

TEST_CASE("frontier capacity")
{
    CHECK(frontier_width(Region{}) == 0);
    CHECK(frontier_width(build_hexagon(3, 3, 3)) < kFrontierCap);
    CHECK_THROWS_AS(count_tilings(build_hexagon(70, 1, 1)), CapacityError);
}
