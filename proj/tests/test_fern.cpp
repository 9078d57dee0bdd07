#include <doctest.h>

#include "tiling/errors.hpp"
#include "tiling/fern.hpp"

using namespace tiling;

TEST_CASE("fern sums")
{
    CHECK(fern_sums(FernSequence{}) == FernSums{0, 0, 0, 0});
    CHECK(fern_sums(FernSequence{2, 3, 1}) == FernSums{6, 3, 3, 3});
    CHECK(fern_sums(FernSequence{0, 4}) == FernSums{4, 4, 0, 1});
}

TEST_CASE("partial sums")
{
    FernSequence f{2, 3, 1};
    CHECK(partial_sum(f, 0) == 0);
    CHECK(partial_sum(f, 2) == 5);
    CHECK(partial_sum(f, 5) == 6);
    CHECK(partial_sum(f, f.size()) == fern_sums(f).total);
    for (long k = 0; k <= 6; ++k) {
        long step = partial_sum(f, k + 1) - partial_sum(f, k);
        CHECK((step == f.at(k + 1) || step == 0));
    }
}

TEST_CASE("entries past the end read as zero")
{
    FernSequence f{4, 5};
    CHECK(f.at(1) == 4);
    CHECK(f.at(2) == 5);
    CHECK(f.at(3) == 0);
    CHECK(f.at(0) == 0);
}

TEST_CASE("plus one")
{
    CHECK(plus_one(FernSequence{2, 3}) == FernSequence{2, 4});
    CHECK(plus_one(FernSequence{2, 3, 1}) == FernSequence{2, 3, 1, 1});
    CHECK(plus_one(FernSequence{}) == FernSequence{1});
    for (auto f : {FernSequence{}, FernSequence{1}, FernSequence{0, 0}, FernSequence{3, 1, 2}})
        CHECK(fern_sums(plus_one(f)).total == fern_sums(f).total + 1);
}

TEST_CASE("negative entries are rejected")
{
    CHECK_THROWS_AS(FernSequence({1, -1}), ParameterError);
}

TEST_CASE("fern text")
{
    CHECK(parse_fern("2,3,1") == FernSequence{2, 3, 1});
    CHECK(parse_fern("(2,3)") == FernSequence{2, 3});
    CHECK(parse_fern("") == FernSequence{});
    CHECK(parse_fern("()") == FernSequence{});
    CHECK(format_fern(FernSequence{2, 3, 1}) == "(2,3,1)");
    CHECK(format_fern(FernSequence{}) == "()");
    CHECK_THROWS_AS(parse_fern("2,x"), UsageError);
    CHECK_THROWS_AS(parse_fern("1,-2"), UsageError);
    auto list = parse_fern_list("(),(1),(2),(1,1),(2,1)");
    REQUIRE(list.size() == 5);
    CHECK(list[0] == FernSequence{});
    CHECK(list[4] == FernSequence{2, 1});
}
