#include <doctest.h>

#include <functional>

#include "tiling/special_products.hpp"

using namespace tiling;

TEST_CASE("hyperfactorial values")
{
    CHECK(hyperfactorial(0) == 1);
    CHECK(hyperfactorial(1) == 1);
    CHECK(hyperfactorial(4) == 12);
    CHECK_THROWS_AS(hyperfactorial(-1), DomainError);
}

TEST_CASE("hyperfactorial recursion")
{
    for (long n = 1; n <= 20; ++n)
        CHECK(hyperfactorial(n) == hyperfactorial(n - 1) * factorial(n - 1));
}

TEST_CASE("skipping hyperfactorial values")
{
    CHECK(hyperfactorial_skip(0) == 1);
    CHECK(hyperfactorial_skip(5) == 6);
    CHECK(hyperfactorial_skip(6) == 48);
    CHECK_THROWS_AS(hyperfactorial_skip(-2), DomainError);
}

TEST_CASE("pochhammer values")
{
    CHECK(pochhammer(3, 4) == 360);
    CHECK(pochhammer(7, 0) == 1);
    CHECK(pochhammer(5, -2) == Rational(1, 12));
    CHECK_THROWS_AS(pochhammer(2, -2), PoleError);
}

TEST_CASE("step-two pochhammer values")
{
    CHECK(pochhammer_skip(3, 3) == 105);
    CHECK(pochhammer_skip(-1, 0) == 1);
    CHECK(pochhammer_skip(7, -2) == Rational(1, 15));
}

TEST_CASE("pochhammer inverse extension")
{
    for (long x = -4; x <= 6; ++x)
        for (long n = -4; n <= 4; ++n) {
            Rational lhs, rhs;
            try {
                lhs = pochhammer(x, n);
                rhs = pochhammer(x + n, -n);
            } catch (const PoleError&) {
                continue;
            }
            CHECK(lhs * rhs == 1);
        }
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
}

TEST_CASE("T and V products")
{
    CHECK(product_T(5, 3, 0) == 1);
    CHECK(product_T(1, 3, 1) == 6);
    CHECK(product_T(2, 4, 2) == 1440);
    CHECK(product_V(9, 5, 0) == 1);
    CHECK(product_V(1, 3, 1) == 15);
    CHECK(product_V(2, 5, 2) == 737280);
}

TEST_CASE("T shift identity at a spot value")
{
    Rational lhs = product_T(3, 4, 2) / product_T(2, 4, 2);
    Rational rhs = pochhammer(3 + 4 - 2, 2) / pochhammer(2, 2);
    CHECK(lhs == 5);
    CHECK(rhs == 5);
}

TEST_CASE("T and V identities on a grid")
{
    // a pole on either side skips the point
    auto holds = [](const std::function<std::pair<Rational, Rational>()>& sides) {
        try {
            auto [lhs, rhs] = sides();
            return lhs == rhs;
        } catch (const PoleError&) {
            return true;
        }
    };
    for (long x = 2; x <= 6; ++x)
        for (long n = 0; n <= 7; ++n)
            for (long m = 0; m <= 3; ++m) {
                const long v = x + 1;
                CAPTURE(x);
                CAPTURE(n);
                CAPTURE(m);
                CHECK(holds([=] {
                    return std::pair<Rational, Rational>{product_T(x, n, m) / product_T(x - 1, n, m),
                                                         pochhammer(x + n - m, m) / pochhammer(x - 1, m)};
                }));
                CHECK(holds([=] {
                    return std::pair<Rational, Rational>{product_V(v, n, m) / product_V(v - 2, n, m),
                                                         pochhammer_skip(v + 2 * n - 2 * m, m) / pochhammer_skip(v - 2, m)};
                }));
                if (m >= 1) {
                    CHECK(holds([=] {
                        return std::pair<Rational, Rational>{product_T(x, n, m), pochhammer(x, n) * product_T(x + 1, n - 2, m - 1)};
                    }));
                    CHECK(holds([=] {
                        return std::pair<Rational, Rational>{product_V(v, n, m),
                                                             pochhammer_skip(v, n) * product_V(v + 2, n - 2, m - 1)};
                    }));
                }
            }
}

TEST_CASE("double factorial")
{
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK_THROWS_AS(double_factorial(-2), DomainError);
}

TEST_CASE("factorial and powers of two")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK_THROWS_AS(factorial(-1), DomainError);
    CHECK(power_of_two(3) == 8);
    CHECK(power_of_two(-3) == Rational(1, 8));
    CHECK(power_of_two(0) == 1);
}

TEST_CASE("fraction text")
{
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK(to_string(Rational(-1, 3)) == "-1/3");
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("7") == 7);
    CHECK(parse_rational("-5/10") == Rational(-1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), UsageError);
    CHECK_THROWS_AS(parse_rational("0.5"), UsageError);
    CHECK_THROWS_AS(parse_rational(""), UsageError);
    for (auto r : {Rational(0), Rational(17, 64), Rational(-3, 7)})
        CHECK(parse_rational(to_string(r)) == r);
}
