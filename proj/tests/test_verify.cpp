#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "tiling/counter.hpp"
#include "tiling/verify.hpp"

using namespace tiling;

namespace {

std::string without_timings(std::string csv)
{
    std::string out;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);) {
        // ms is the second to last column; reasons here never contain commas
        auto last = line.rfind(',');
        auto before = line.rfind(',', last - 1);
        out += line.substr(0, before) + line.substr(last) + '\n';
    }
    return out;
}

} // namespace

TEST_CASE("sweep of single points")
{
    ParameterGrid zero{{0}, {0}, {0}, {FernSequence{}}, {FernSequence{}}};
    auto recs = sweep({FamilyTag::H1}, zero);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].match);
    CHECK(*recs[0].formula == 1);

    ParameterGrid fig{{2}, {1}, {2}, {FernSequence{2, 2, 3}}, {FernSequence{2, 2}}};
    SweepOptions opt;
    opt.cross_check = true;
    auto f = sweep({FamilyTag::H1, FamilyTag::R1}, fig, opt);
    REQUIRE(f.size() == 2);
    for (const auto& r : f) {
        INFO(r.family << " " << r.reason);
        CHECK(r.match);
        CHECK(r.cells > 0);
    }
    CHECK(f[0].family == "H1");
    CHECK(f[1].family == "R1");
}

TEST_CASE("sweep order does not depend on the number of jobs")
{
    auto grid = ParameterGrid::box(1, 1, 1, {FernSequence{}, FernSequence{1}});
    SweepOptions one, four;
    four.jobs = 4;
    auto a = sweep({FamilyTag::H1, FamilyTag::W1, FamilyTag::N2}, grid, one);
    auto b = sweep({FamilyTag::H1, FamilyTag::W1, FamilyTag::N2}, grid, four);
    CHECK(without_timings(records_to_csv(a)) == without_timings(records_to_csv(b)));
}

TEST_CASE("pole points are skipped")
{
    ParameterGrid grid{{1}, {1}, {1}, {FernSequence{}}, {FernSequence{}}};
    auto recs = sweep({FamilyTag::N4}, grid);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].skipped);
    CHECK_FALSE(recs[0].reason.empty());
}

TEST_CASE("condensation on boundary cells")
{
    for (Region r : {build_hexagon(1, 1, 1), build_hexagon(2, 3, 2), build_halved(FamilyTag::H1, {2, 1, 2, {2, 2, 3}, {2, 2}}),
                     build_halved(FamilyTag::W2, {1, 2, 1, {1}, {1}})}) {
        auto q = boundary_quad(r);
        REQUIRE(q);
        CHECK(q->u.is_up() == q->w.is_up());
        CHECK(q->v.is_up() == q->s.is_up());
        CHECK(q->u.is_up() != q->v.is_up());
        CHECK(kuo_check(r, q->u, q->v, q->w, q->s));
    }
    Region hex = build_hexagon(1, 1, 1);
    auto q = *boundary_quad(hex);
    CHECK_THROWS_AS(kuo_check(hex, q.u, q.w, q.v, q.s), ParameterError);
    CHECK_THROWS_AS(kuo_check(hex, TriCell::up(40, 40), q.v, q.w, q.s), ParameterError);
    CHECK_FALSE(boundary_quad(Region{}));
}

TEST_CASE("recurrence")
{
    CHECK(recurrence_check(FamilyTag::H1, {1, 1, 1, {1}, {1}}));
    CHECK(recurrence_check(FamilyTag::R1, {1, 1, 1, {1}, {2}}));
    CHECK(recurrence_check(FamilyTag::H1, {2, 1, 2, {2, 2}, {2}}));
    CHECK(recurrence_check(FamilyTag::W1, {1, 2, 1, {}, {1, 1}}));
    CHECK_THROWS_AS(recurrence_check(FamilyTag::H1, {0, 1, 1, {1}, {1}}), ParameterError);
    CHECK_THROWS_AS(recurrence_check(FamilyTag::H1, {1, 1, 1, {1}, {}}), ParameterError);
    CHECK_THROWS_AS(recurrence_check(FamilyTag::H1, {1, 1, 1, {1}, {1, 0}}), ParameterError);
}

TEST_CASE("base splits")
{
    CHECK(base_split_check(FamilyTag::H1, {0, 2, 1, {1}, {2}}));
    CHECK(base_split_check(FamilyTag::H1, {2, 0, 1, {1, 1}, {1}}));
    CHECK(base_split_check(FamilyTag::R1, {0, 1, 2, {2}, {1}}));
    CHECK(base_split_check(FamilyTag::R1, {3, 0, 1, {}, {1, 2}}));
    SplicedArguments s = base_split_lists(FamilyTag::H1, {0, 0, 0, {}, {}});
    CHECK_FALSE(s.upper.empty());
    CHECK_THROWS_AS(base_split_check(FamilyTag::W1, {0, 1, 1, {}, {}}), ParameterError);
    CHECK_THROWS_AS(base_split_check(FamilyTag::H1, {1, 1, 1, {}, {}}), ParameterError);
}

TEST_CASE("symmetric factorization")
{
    CHECK(factorization_check(SymmetricKind::S1, {0, 0, 0, {0}, {}}));
    CHECK(factorization_check(SymmetricKind::S1, {2, 2, 1, {2}, {1}}));
    CHECK(factorization_check(SymmetricKind::S1, {1, 1, 1, {1}, {1}}));
    CHECK(factorization_check(SymmetricKind::S2, {1, 1, 1, {1}, {1}}));
    CHECK_THROWS_AS(factorization_check(SymmetricKind::S1, {1, 0, 0, {}, {}}), ParameterError);
}

TEST_CASE("identity fuzz")
{
    CHECK(algebraic_identity_fuzz(0, 7).empty());
    auto recs = algebraic_identity_fuzz(100, 7);
    CHECK(recs.size() == 600);
    Tally t = tally(recs);
    CHECK(t.matched == 600);
    CHECK(t.mismatched == 0);
    auto again = algebraic_identity_fuzz(100, 7);
    CHECK(without_timings(records_to_csv(recs)) == without_timings(records_to_csv(again)));
    std::set<std::string> names;
    for (const auto& r : recs)
        names.insert(r.family);
    CHECK(names == std::set<std::string>{"T-shift", "T-peel", "V-shift", "V-peel", "Q-ratio", "Kp-ratio"});
}

TEST_CASE("report formats")
{
    VerificationRecord ok;
    ok.check = "halved";
    ok.family = "H1";
    ok.params = {1, 2, 3, {1, 2}, {}};
    ok.formula = Rational(3, 2);
    ok.oracle = Rational(3, 2);
    ok.match = true;
    ok.cells = 10;
    ok.ms = 1.25;
    VerificationRecord skip = ok;
    skip.skipped = true;
    skip.match = false;
    skip.formula.reset();
    skip.reason = "pole: zero denominator";
    const std::string csv = records_to_csv({ok, skip});
    CHECK(csv ==
          "check,family,x,y,z,a,b,formula,oracle,match,cells,ms,reason\n"
          "halved,H1,1,2,3,\"(1,2)\",(),3/2,3/2,true,10,1.250,\n"
          "halved,H1,1,2,3,\"(1,2)\",(),,3/2,skip,10,1.250,pole: zero denominator\n");

    auto j = nlohmann::json::parse(records_to_json({ok, skip}));
    CHECK(j["records"].size() == 2);
    CHECK(j["summary"]["matched"] == 1);
    CHECK(j["summary"]["skipped"] == 1);
    CHECK(j["summary"]["mismatched"] == 0);
    Tally t = tally({ok, skip});
    CHECK(t.matched == 1);
    CHECK(t.skipped == 1);
}
