#ifndef TILING_FORMULAS_HPP
#define TILING_FORMULAS_HPP

#include "tiling/families.hpp"
#include "tiling/fern.hpp"
#include "tiling/special_products.hpp"

namespace tiling {

/// number of plane partitions in an a x b x c box
Rational macmahon(long a, long b, long c);

/// tilings of the hexagon with a staircase cut of a steps; throws ParameterError if a > b
Rational proctor_count(long a, long b, long c);
/// weighted count of the same region with half weights on the staircase
Rational proctor_weighted_count(long a, long b, long c);
/// the weighted product with an explicit upper limit on its last single product
Rational proctor_weighted_count_with_limit(long a, long b, long c, long limit);

/// closed form for the quartered hexagons; odd-length t is padded with a zero
Rational quartered_count(QuarteredKind kind, const FernSequence& t);

/// Q(t with last entry + 1) / Q(t) in partial sums; t must have even length
Rational quartered_ratio_q(const FernSequence& t);
/// the same ratio for Kp; needs a positive total
Rational quartered_ratio_kp(const FernSequence& t);

struct SplicedArguments {
    FernSequence upper;
    FernSequence lower;
};

/// the two sequences passed to the quartered factors of a halved-hexagon formula
SplicedArguments splice_arguments(FamilyTag tag, const FamilyParams& p);

/// product form of the halved-hexagon count
Rational halved_count(FamilyTag tag, const FamilyParams& p);
/// the count written as a ratio of three degenerate counts times a correction
Rational halved_count_ratio_form(FamilyTag tag, const FamilyParams& p);

/// the pair of halved families a symmetric region splits into
struct SymmetricSplit {
    FamilyTag first;
    FamilyParams first_params;
    FamilyTag second;
    FamilyParams second_params;
    long two_power = 0;
};

/// throws ParameterError unless x and y have the same parity
SymmetricSplit symmetric_split(SymmetricKind kind, const FamilyParams& p);
Rational symmetric_count(SymmetricKind kind, const FamilyParams& p);

} // namespace tiling

#endif
