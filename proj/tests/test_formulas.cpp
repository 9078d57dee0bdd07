#include <doctest.h>

#include "tiling/counter.hpp"
#include "tiling/formulas.hpp"

using namespace tiling;

TEST_CASE("boxed plane partitions")
{
    CHECK(macmahon(3, 2, 0) == 1);
    CHECK(macmahon(1, 1, 1) == 2);
    CHECK(macmahon(2, 2, 2) == 20);
    for (long a = 0; a <= 3; ++a)
        for (long b = 0; b <= 3; ++b)
            for (long c = 0; c <= 3; ++c) {
                CHECK(macmahon(a, b, c) == macmahon(b, c, a));
                CHECK(macmahon(a, b, c) == count_tilings(build_hexagon(a, b, c)));
            }
}

TEST_CASE("staircase counts")
{
    CHECK(proctor_count(0, 5, 3) == 1);
    CHECK(proctor_count(1, 1, 1) == 2);
    CHECK(proctor_weighted_count(1, 1, 1) == count_tilings(build_proctor(ProctorKind::Pp, 1, 1, 1)));
    CHECK_THROWS_AS(proctor_count(3, 2, 1), ParameterError);
    for (long b = 0; b <= 3; ++b)
        for (long a = 0; a <= b; ++a)
            for (long c = 0; c <= 3; ++c) {
                CHECK(proctor_count(a, b, c) == count_tilings(build_proctor(ProctorKind::P, a, b, c)));
                CHECK(proctor_weighted_count(a, b, c) == count_tilings(build_proctor(ProctorKind::Pp, a, b, c)));
            }
}

TEST_CASE("quartered counts")
{
    CHECK(quartered_count(QuarteredKind::Q, {}) == 1);
    for (auto kind : {QuarteredKind::Q, QuarteredKind::Qp, QuarteredKind::K, QuarteredKind::Kp})
        for (auto t : {FernSequence{2, 1, 2, 2}, FernSequence{3, 1, 2, 2}, FernSequence{1, 1}, FernSequence{0, 2, 1}}) {
            INFO(format_fern(t));
            CHECK(quartered_count(kind, t) == count_tilings(build_quartered(kind, t)));
        }
}

TEST_CASE("quartered shift ratios")
{
    const FernSequence t{1, 2, 2, 1};
    CHECK(quartered_ratio_q(t) == quartered_count(QuarteredKind::Q, {1, 2, 2, 2}) / quartered_count(QuarteredKind::Q, t));
    CHECK_THROWS(quartered_ratio_q({1, 2, 3}));
    CHECK_THROWS(quartered_ratio_kp({0, 0}));
}

TEST_CASE("splice arguments")
{
    SplicedArguments s = splice_arguments(FamilyTag::H1, {1, 1, 2, {2, 2}, {3, 1}});
    CHECK(s.upper == FernSequence{0, 2, 5, 3});
    SplicedArguments e = splice_arguments(FamilyTag::H1, {2, 3, 0, {}, {}});
    CHECK(e.upper == FernSequence{0, 0, 5});
    CHECK(quartered_count(QuarteredKind::Q, e.upper) == quartered_count(QuarteredKind::Q, {0, 5}));
    CHECK_THROWS(splice_arguments(FamilyTag::H1, {1, 1, 1, FernSequence{-1}, {}}));
}

TEST_CASE("halved counts")
{
    CHECK(halved_count(FamilyTag::H1, {}) == 1);
    const FamilyParams fig{2, 1, 2, {2, 2, 3}, {2, 2}};
    CHECK(halved_count(FamilyTag::H1, fig) == count_tilings(build_halved(FamilyTag::H1, fig)));
    const FamilyParams small{1, 1, 1, {1}, {1}};
    CHECK(halved_count(FamilyTag::W1, small) == count_tilings(build_halved(FamilyTag::W1, small)));
    for (FamilyTag tag : all_family_tags()) {
        Rational v;
        try {
            v = halved_count(tag, small);
        } catch (const PoleError&) {
            continue;
        }
        INFO(tag_name(tag));
        CHECK(v > 0);
        v *= 1 << 12;
        CHECK(v.get_den() == 1);
    }
    CHECK_THROWS_AS(halved_count(FamilyTag::H1, {-1, 0, 0, {}, {}}), ParameterError);
}

TEST_CASE("ratio form agrees with the product form")
{
    const FamilyParams p{0, 2, 1, {1}, {2}};
    CHECK(halved_count_ratio_form(FamilyTag::H1, p) == halved_count(FamilyTag::H1, p));
    const FamilyParams q{1, 1, 1, {1}, {2}};
    CHECK(halved_count_ratio_form(FamilyTag::R2, q) == halved_count(FamilyTag::R2, q));
    CHECK(halved_count_ratio_form(FamilyTag::R2, q) == count_tilings(build_halved(FamilyTag::R2, q)));
}

TEST_CASE("symmetric counts")
{
    CHECK(symmetric_count(SymmetricKind::S1, {0, 0, 0, {0}, {}}) == 1);
    const FamilyParams a{2, 2, 2, {2}, {1}};
    CHECK(symmetric_count(SymmetricKind::S1, a) == count_tilings(build_symmetric(SymmetricKind::S1, a)));
    const FamilyParams b{1, 1, 1, {1}, {1}};
    CHECK(symmetric_count(SymmetricKind::S2, b) == count_tilings(build_symmetric(SymmetricKind::S2, b)));
    CHECK_THROWS_AS(symmetric_split(SymmetricKind::S1, {1, 0, 0, {}, {}}), ParameterError);

    SymmetricSplit even = symmetric_split(SymmetricKind::S1, a);
    CHECK(even.first == FamilyTag::H2);
    CHECK(even.second == FamilyTag::W1);
    SymmetricSplit odd = symmetric_split(SymmetricKind::S1, {2, 2, 2, {3}, {1}});
    CHECK(odd.first == FamilyTag::N4);
    CHECK(odd.second == FamilyTag::N1);
}
