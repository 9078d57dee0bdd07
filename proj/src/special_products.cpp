#include "tiling/special_products.hpp"

#include <cctype>

namespace tiling {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& value)
{
    Rational r = value;
    r.canonicalize();
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    auto digits = [](const std::string& s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t k = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            k = 1;
        if (k == s.size())
            return false;
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                return false;
        return true;
    };
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
        throw UsageError("not a fraction: '" + text + "'");
    Rational r{Integer(num[0] == '+' ? num.substr(1) : num), Integer(den)};
    if (r.get_den() == 0)
        throw UsageError("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

Integer factorial(long n)
{
    if (n < 0)
        throw DomainError("factorial of negative number " + std::to_string(n));
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer hyperfactorial(long n)
{
    if (n < 0)
        throw DomainError("hyperfactorial of negative number " + std::to_string(n));
    Integer r = 1, f = 1;
    for (long k = 1; k < n; ++k) {
        f *= k;
        r *= f;
    }
    return r;
}

Integer hyperfactorial_skip(long n)
{
    if (n < 0)
        throw DomainError("skipping hyperfactorial of negative number " + std::to_string(n));
    Integer r = 1;
    for (long k = n - 2; k >= 0; k -= 2)
        r *= factorial(k);
    return r;
}

namespace {

Rational rising(const Rational& x, long n, long step)
{
    Rational r = 1;
    if (n >= 0) {
        for (long k = 0; k < n; ++k)
            r *= x + k * step;
        return r;
    }
    for (long k = 1; k <= -n; ++k) {
        Rational f = x - k * step;
        if (f == 0)
            throw PoleError("vanishing factor in Pochhammer symbol");
        r /= f;
    }
    return r;
}

} // namespace

Rational pochhammer(const Rational& x, long n) { return rising(x, n, 1); }

Rational pochhammer_skip(const Rational& x, long n) { return rising(x, n, 2); }

Rational product_T(const Rational& x, long n, long m)
{
    if (m < 0)
        throw DomainError("product_T with negative length");
    Rational r = 1;
    for (long i = 0; i < m; ++i)
        r *= pochhammer(x + i, n - 2 * i);
    return r;
}

Rational product_V(const Rational& x, long n, long m)
{
    if (m < 0)
        throw DomainError("product_V with negative length");
    Rational r = 1;
    for (long i = 0; i < m; ++i)
        r *= pochhammer_skip(x + 2 * i, n - 2 * i);
    return r;
}

Integer double_factorial(long n)
{
    if (n < -1)
        throw DomainError("double factorial of " + std::to_string(n));
    Integer r = 1;
    for (long k = n; k > 1; k -= 2)
        r *= k;
    return r;
}

Rational power_of_two(long e)
{
    Integer p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0)
        return Rational(p);
    return Rational(Integer(1), p);
}

} // namespace tiling
