#include "tiling/formulas.hpp"

#include <vector>

namespace tiling {

namespace {

/// H(n) with H(-1) read as an empty product
Integer hf(long n) { return n == -1 ? Integer(1) : hyperfactorial(n); }
Integer hf2(long n) { return n == -1 ? Integer(1) : hyperfactorial_skip(n); }

Rational quotient(const Rational& num, const Rational& den)
{
    if (den == 0)
        throw PoleError("vanishing denominator");
    return num / den;
}

Rational fraction(const Integer& num, const Integer& den) { return quotient(Rational(num), Rational(den)); }

std::vector<long> partial_sums(const FernSequence& t)
{
    std::vector<long> s(static_cast<std::size_t>(t.size()) + 1, 0);
    for (long k = 1; k <= t.size(); ++k)
        s[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k - 1)] + t.at(k);
    return s;
}

FernSequence even_length(const FernSequence& t)
{
    if (t.size() % 2 == 0)
        return t;
    auto v = t.entries();
    v.push_back(0);
    return FernSequence(std::move(v));
}

} // namespace

Rational macmahon(long a, long b, long c)
{
    if (a < 0 || b < 0 || c < 0)
        throw ParameterError("box sides must be nonnegative");
    Rational r = 1;
    for (long i = 1; i <= a; ++i)
        for (long j = 1; j <= b; ++j)
            for (long k = 1; k <= c; ++k)
                r *= Rational(i + j + k - 1, i + j + k - 2);
    r.canonicalize();
    return r;
}

Rational proctor_count(long a, long b, long c)
{
    if (a < 0 || c < 0)
        throw ParameterError("staircase parameters must be nonnegative");
    if (a > b)
        throw ParameterError("staircase count needs a <= b");
    Rational r = 1;
    for (long i = 1; i <= a; ++i) {
        for (long j = 1; j <= b - a + 1; ++j)
            r *= Rational(c + i + j - 1, i + j - 1);
        for (long j = b - a + 2; j <= b - a + i; ++j)
            r *= Rational(2 * c + i + j - 1, i + j - 1);
        r.canonicalize();
    }
    return r;
}

Rational proctor_weighted_count_with_limit(long a, long b, long c, long limit)
{
    Rational r = proctor_count(a, b, c) * power_of_two(-a);
    for (long i = 1; i <= limit; ++i)
        r *= quotient(Rational(2 * c + b - a + i), Rational(c + b - a + i));
    r.canonicalize();
    return r;
}

Rational proctor_weighted_count(long a, long b, long c) { return proctor_weighted_count_with_limit(a, b, c, a); }

Rational quartered_count(QuarteredKind kind, const FernSequence& t0)
{
    const FernSequence t = even_length(t0);
    const long l = t.size() / 2;
    const auto s = partial_sums(t);
    const long e = fern_sums(t).even_sum;
    auto S = [&](long k) { return s[static_cast<std::size_t>(k)]; };

    Rational r = 1;
    long d = 0;
    switch (kind) {
    case QuarteredKind::Q:
        r = fraction(1, hf2(2 * e + 1));
        for (long i = 1; i <= l; ++i)
            r *= fraction(factorial(S(2 * i)), factorial(S(2 * i - 1))) * hf2(2 * S(2 * i) + 1) * hf2(2 * S(2 * i - 1) + 2);
        d = 1;
        break;
    case QuarteredKind::Qp:
        r = power_of_two(-e) / Rational(hf2(2 * e + 1));
        for (long i = 1; i <= l; ++i)
            r *= Rational(hf2(2 * S(2 * i) + 1) * hf2(2 * S(2 * i - 1)));
        d = 0;
        break;
    case QuarteredKind::K:
        r = fraction(1, hf2(2 * e));
        for (long i = 1; i <= l; ++i)
            r *= Rational(hf2(2 * S(2 * i)) * hf2(2 * S(2 * i - 1) + 1));
        d = 0;
        break;
    case QuarteredKind::Kp:
        r = fraction(1, hf2(2 * e));
        for (long i = 1; i <= l; ++i)
            r *= Rational(hf2(2 * S(2 * i) - 1) * hf2(2 * S(2 * i - 1)));
        d = -1;
        break;
    }
    for (long i = 1; i <= 2 * l; ++i)
        for (long j = i + 1; j <= 2 * l; ++j) {
            if ((j - i) % 2 != 0)
                r *= fraction(hf(S(j) - S(i)), hf(S(j) + S(i) + d));
            else
                r *= fraction(hf(S(j) + S(i) + d), hf(S(j) - S(i)));
        }
    r.canonicalize();
    return r;
}

Rational quartered_ratio_q(const FernSequence& t)
{
    if (t.size() % 2 != 0)
        throw ParameterError("ratio form needs an even number of entries");
    const long l = t.size() / 2;
    const auto s = partial_sums(t);
    auto P = [&](long k) { return s[static_cast<std::size_t>(k)]; };
    const long top = P(2 * l);
    const long e = fern_sums(t).even_sum;
    Rational r = fraction((top + 1) * factorial(2 * top + 1), factorial(2 * e + 1));
    for (long i = 1; i <= l; ++i)
        r *= fraction(factorial(top - P(2 * i - 1)), factorial(top + P(2 * i - 1) + 1));
    for (long i = 1; i < l; ++i)
        r *= fraction(factorial(top + P(2 * i) + 1), factorial(top - P(2 * i)));
    return r;
}

Rational quartered_ratio_kp(const FernSequence& t)
{
    if (t.size() % 2 != 0)
        throw ParameterError("ratio form needs an even number of entries");
    const long l = t.size() / 2;
    const auto s = partial_sums(t);
    auto P = [&](long k) { return s[static_cast<std::size_t>(k)]; };
    const long top = P(2 * l);
    if (top < 1)
        throw DomainError("ratio form needs a positive total");
    const long e = fern_sums(t).even_sum;
    Rational r = fraction(factorial(2 * top - 1), factorial(2 * e));
    for (long i = 1; i <= l; ++i)
        r *= fraction(factorial(top - P(2 * i - 1)), factorial(top + P(2 * i - 1) - 1));
    for (long i = 1; i < l; ++i)
        r *= fraction(factorial(top + P(2 * i) - 1), factorial(top - P(2 * i)));
    return r;
}

// ---- halved hexagons ----

namespace {

enum class Extra { None, DoubleDown, DoubleUp, FactUp, FactDown };
enum class Tail { V3, V1, TT };

/// one row per family: every formula is a power of two, an optional extra factor, two quartered
/// factors, an H2 block, an H block and a tail
struct FormulaRow {
    int two_y;  ///< coefficient of y in the exponent of 2
    int two_a1; ///< coefficient of a1
    int two_c;  ///< constant
    Extra extra;
    QuarteredKind upper, lower;
    int upper_a1, lower_a1;
    int c1, c2;
    int d;
    Tail tail;
};

FormulaRow formula_row(FamilyTag t)
{
    using K = QuarteredKind;
    switch (t) {
    case FamilyTag::H1:
    case FamilyTag::R1: return {-1, 0, 0, Extra::None, K::Q, K::Q, 0, 0, 1, 1, 1, Tail::V3};
    case FamilyTag::H2:
    case FamilyTag::R2: return {0, 0, 0, Extra::DoubleDown, K::K, K::K, 0, 0, 0, 0, 0, Tail::V3};
    case FamilyTag::W1:
    case FamilyTag::RW1: return {-2, 1, 0, Extra::DoubleUp, K::Qp, K::Qp, 0, 0, 1, 1, 0, Tail::V1};
    case FamilyTag::W2:
    case FamilyTag::RW2: return {-1, 1, -1, Extra::None, K::Kp, K::Kp, 0, 0, 0, 0, -1, Tail::V1};
    case FamilyTag::N1: return {-1, 1, 0, Extra::FactUp, K::Kp, K::Q, 1, 0, 2, 1, 1, Tail::TT};
    case FamilyTag::N2: return {-1, 1, 0, Extra::None, K::Qp, K::K, 0, 0, 1, 0, 0, Tail::TT};
    case FamilyTag::N3: return {-1, 0, 0, Extra::None, K::K, K::Qp, 0, 0, 0, 1, 0, Tail::TT};
    case FamilyTag::N4: return {-1, 0, 0, Extra::FactDown, K::Q, K::Kp, -1, 0, -1, 0, -1, Tail::TT};
    case FamilyTag::NR1: return {-1, 1, 0, Extra::FactUp, K::Q, K::Kp, 0, 1, 1, 2, 1, Tail::TT};
    case FamilyTag::NR2: return {-1, 1, 0, Extra::None, K::K, K::Qp, 0, 0, 0, 1, 0, Tail::TT};
    case FamilyTag::NR3: return {-1, 0, 0, Extra::None, K::Qp, K::K, 0, 0, 1, 0, 0, Tail::TT};
    case FamilyTag::NR4: return {-1, 0, 0, Extra::FactDown, K::Kp, K::Q, 0, -1, 0, -1, -1, Tail::TT};
    }
    throw std::logic_error("unknown family tag");
}

long round_up_even(long k) { return k + (k % 2); }
long round_down_even(long k) { return k - (k % 2); }

/// an empty a-fern behaves as a single triangle of side 0
FernSequence normalized_a(const FernSequence& a) { return a.empty() ? FernSequence{0} : a; }

/// [lead 0] a_1 .. a_{ka-1}, a_{ka} + x + y + b_{kb}, b_{kb-1} .. b_1 [z]
FernSequence splice_one(const FernSequence& a, const FernSequence& b, long ka, long kb, long middle, int a1_shift,
                        bool lead_zero, const long* tail)
{
    std::vector<long> v;
    if (lead_zero)
        v.push_back(0);
    for (long i = 1; i < ka; ++i)
        v.push_back(a.at(i) + (i == 1 ? a1_shift : 0));
    v.push_back(a.at(ka) + (ka == 1 ? a1_shift : 0) + middle + b.at(kb));
    for (long i = kb - 1; i >= 1; --i)
        v.push_back(b.at(i));
    if (tail)
        v.push_back(*tail);
    for (long e : v)
        if (e < 0)
            throw DomainError("negative entry in a spliced argument list");
    return FernSequence(std::move(v));
}

Rational tail_factor(const FormulaRow& row, long x, long y, long z, long A, long B)
{
    const long dd = row.d - 1;
    const long n1 = 2 * A + B + 2 * y + z + dd;
    Rational r = quotient(product_T(x + 1, n1, y), product_T(1, n1, y));
    switch (row.tail) {
    case Tail::V3: {
        const long n2 = B + 2 * y + z - 1 + dd;
        r *= quotient(product_V(2 * x + 2 * A + 3, n2, y), product_V(2 * A + 3, n2, y));
        break;
    }
    case Tail::V1: {
        const long n2 = B + 2 * y + z + row.d;
        r *= quotient(product_V(2 * x + 2 * A + 1, n2, y), product_V(2 * A + 1, n2, y));
        break;
    }
    case Tail::TT: {
        const long n2 = B + 2 * y + z + dd;
        r *= quotient(product_T(x + A + 1, n2, y), product_T(A + 1, n2, y));
        break;
    }
    }
    return r;
}

} // namespace

SplicedArguments splice_arguments(FamilyTag tag, const FamilyParams& p)
{
    const FormulaRow row = formula_row(tag);
    const FernSequence a = normalized_a(p.a);
    const FernSequence& b = p.b;
    const long m = a.size(), n = b.size();
    const long middle = p.x + p.y;
    SplicedArguments out;
    if (!is_reflected(tag)) {
        out.upper = splice_one(a, b, round_up_even(m), round_up_even(n), middle, row.upper_a1, true, nullptr);
        out.lower = splice_one(a, b, round_down_even(m) + 1, round_down_even(n) + 1, middle, 0, false, &p.z);
    } else {
        out.upper = splice_one(a, b, round_down_even(m) + 1, round_up_even(n), middle, 0, false, nullptr);
        out.lower = splice_one(a, b, round_up_even(m), round_down_even(n) + 1, middle, row.lower_a1, true, &p.z);
    }
    return out;
}

Rational halved_count(FamilyTag tag, const FamilyParams& p)
{
    if (p.x < 0 || p.y < 0 || p.z < 0)
        throw ParameterError("x, y, z must be nonnegative");
    const FormulaRow row = formula_row(tag);
    const long x = p.x, y = p.y, z = p.z;
    const FernSums fa = fern_sums(p.a), fb = fern_sums(p.b);
    const long A = fa.total, B = fb.total, a1 = p.a.at(1);

    Rational r = power_of_two(row.two_y * y + row.two_a1 * a1 + row.two_c);
    switch (row.extra) {
    case Extra::None: break;
    case Extra::DoubleDown: r *= fraction(double_factorial(2 * A - 1), double_factorial(2 * A + 2 * y - 1)); break;
    case Extra::DoubleUp: r *= fraction(double_factorial(2 * A + 2 * y - 1), double_factorial(2 * A - 1)); break;
    case Extra::FactUp: r *= fraction(factorial(A + y), factorial(A)); break;
    case Extra::FactDown:
        if (A == 0)
            throw PoleError("factorial of -1 in the prefactor");
        r *= fraction(factorial(A - 1), factorial(A + y - 1));
        break;
    }

    const SplicedArguments s = splice_arguments(tag, p);
    r *= quartered_count(row.upper, s.upper) * quartered_count(row.lower, s.lower);

    long A1, A2;
    if (!is_reflected(tag)) {
        A1 = 2 * fa.odd_sum + 2 * fb.odd_sum;
        A2 = 2 * fa.even_sum + 2 * fb.even_sum;
    } else {
        A1 = 2 * fa.even_sum + 2 * fb.odd_sum;
        A2 = 2 * fa.odd_sum + 2 * fb.even_sum;
    }
    r *= fraction(hf2(A1 + row.c1) * hf2(A2 + 2 * z + row.c2), hf2(A1 + 2 * y + row.c1) * hf2(A2 + 2 * y + 2 * z + row.c2));
    r *= fraction(hf(2 * A + B + 2 * y + z + row.d) * hf(B + y + z), hf(2 * A + B + y + z + row.d) * hf(B + z));
    r *= tail_factor(row, x, y, z, A, B);
    r.canonicalize();
    return r;
}

Rational halved_count_ratio_form(FamilyTag tag, const FamilyParams& p)
{
    if (p.x < 0 || p.y < 0 || p.z < 0)
        throw ParameterError("x, y, z must be nonnegative");
    auto at = [&](long x, long y) {
        FamilyParams q = p;
        q.x = x;
        q.y = y;
        return halved_count(tag, q);
    };
    const FernSums fa = fern_sums(p.a), fb = fern_sums(p.b);
    Rational r = quotient(at(p.x + p.y, 0) * at(0, p.y), at(p.y, 0));
    r *= tail_factor(formula_row(tag), p.x, p.y, p.z, fa.total, fb.total);
    r.canonicalize();
    return r;
}

// ---- symmetric hexagons ----

SymmetricSplit symmetric_split(SymmetricKind kind, const FamilyParams& p)
{
    if (p.x < 0 || p.y < 0 || p.z < 0)
        throw ParameterError("x, y, z must be nonnegative");
    if ((p.x - p.y) % 2 != 0)
        throw ParameterError("x and y must have the same parity");
    const FernSequence a = normalized_a(p.a);
    const long a1 = a.at(1);
    const FernSums fa = fern_sums(a), fb = fern_sums(p.b);
    const bool odd = a1 % 2 != 0;

    auto with_first = [&](long first) {
        auto v = a.entries();
        v[0] = first;
        return FernSequence(std::move(v));
    };
    SymmetricSplit s;
    s.two_power = p.y + p.z + fa.total + fb.total - a1;
    s.first_params = {p.x / 2, (p.y + 1) / 2, p.z, with_first(odd ? (a1 + 1) / 2 : a1 / 2), p.b};
    s.second_params = {(p.x + 1) / 2, p.y / 2, p.z, with_first(odd ? (a1 - 1) / 2 : a1 / 2), p.b};
    if (kind == SymmetricKind::S1) {
        s.first = odd ? FamilyTag::N4 : FamilyTag::H2;
        s.second = odd ? FamilyTag::N1 : FamilyTag::W1;
    } else {
        s.first = odd ? FamilyTag::NR4 : FamilyTag::R2;
        s.second = odd ? FamilyTag::NR1 : FamilyTag::RW1;
    }
    return s;
}

Rational symmetric_count(SymmetricKind kind, const FamilyParams& p)
{
    const SymmetricSplit s = symmetric_split(kind, p);
    Rational r = power_of_two(s.two_power) * halved_count(s.first, s.first_params) * halved_count(s.second, s.second_params);
    r.canonicalize();
    return r;
}

} // namespace tiling
