#ifndef TILING_SPECIAL_PRODUCTS_HPP
#define TILING_SPECIAL_PRODUCTS_HPP

#include <gmpxx.h>

#include <string>

#include "tiling/errors.hpp"

namespace tiling {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q", or "p" when the denominator is 1
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);
/// inverse of to_string; throws UsageError on malformed text
Rational parse_rational(const std::string& text);

Integer factorial(long n);

/// H(n) = 0! 1! ... (n-1)!
Integer hyperfactorial(long n);

/// H2(n) = (n-2)! (n-4)! ... down to 0! or 1!
Integer hyperfactorial_skip(long n);

/// rising factorial, extended to negative n by (x)_n = 1/((x-1)(x-2)...(x+n))
Rational pochhammer(const Rational& x, long n);

/// step-two rising factorial x(x+2)...(x+2n-2), same extension to n < 0
Rational pochhammer_skip(const Rational& x, long n);

/// prod_{i<m} (x+i)_{n-2i}
Rational product_T(const Rational& x, long n, long m);

/// prod_{i<m} [x+2i]_{n-2i}
Rational product_V(const Rational& x, long n, long m);

/// n!!, with 0!! = (-1)!! = 1
Integer double_factorial(long n);

/// 2^e for any integer e
Rational power_of_two(long e);

} // namespace tiling

#endif
