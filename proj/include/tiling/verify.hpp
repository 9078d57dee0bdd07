#ifndef TILING_VERIFY_HPP
#define TILING_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tiling/counter.hpp"
#include "tiling/families.hpp"
#include "tiling/formulas.hpp"

namespace tiling {

/// One compared pair of values. A skipped record carries a reason and counts as neither match nor mismatch.
struct VerificationRecord {
    std::string check;
    std::string family;
    FamilyParams params;
    std::optional<Rational> formula;
    std::optional<Rational> oracle;
    bool match = false;
    bool skipped = false;
    std::string reason;
    long cells = 0;
    double ms = 0;
};

struct ParameterGrid {
    std::vector<long> xs;
    std::vector<long> ys;
    std::vector<long> zs;
    std::vector<FernSequence> a_ferns;
    std::vector<FernSequence> b_ferns;

    /// x, y, z in 0..max_x etc., the same fern list for a and b
    static ParameterGrid box(long max_x, long max_y, long max_z, const std::vector<FernSequence>& ferns);
    std::vector<FamilyParams> points() const;
};

/// the fern list of the standard sweep: (), (1), (2), (1,1), (2,1)
std::vector<FernSequence> standard_ferns();

struct SweepOptions {
    int jobs = 1;
    /// also count every region with the determinant and require the two oracles to agree
    bool cross_check = false;
};

/// halved_count against the oracle for each tag and grid point, ordered by tag then grid order
std::vector<VerificationRecord> sweep(const std::vector<FamilyTag>& tags, const ParameterGrid& grid,
                                      const SweepOptions& options = {});

/// product form against ratio form, no regions built
std::vector<VerificationRecord> ratio_form_sweep(const std::vector<FamilyTag>& tags, const ParameterGrid& grid);

/// quartered_count against the oracle
VerificationRecord quartered_record(QuarteredKind kind, const FernSequence& t);

/// u, w of one orientation and v, s of the other, met in this order along the outer boundary
struct CellQuad {
    TriCell u, v, w, s;
};

/// four cells spread around the unbounded face of the dual graph; nullopt if there are too few boundary cells
std::optional<CellQuad> boundary_quad(const Region& r);

/// M(G) M(G-uvws) = M(G-uv) M(G-ws) + M(G-us) M(G-vw); throws ParameterError on a bad placement
bool kuo_check(const Region& r, const TriCell& u, const TriCell& v, const TriCell& w, const TriCell& s);

/// the three-term recurrence between six halved regions; needs x, y, z >= 1 and a nonempty b with positive last entry
bool recurrence_check(FamilyTag tag, const FamilyParams& p);
VerificationRecord recurrence_record(FamilyTag tag, const FamilyParams& p);

/// the two quartered regions a degenerate H1 or R1 region splits into along its fern line
SplicedArguments base_split_lists(FamilyTag tag, const FamilyParams& p);
/// needs tag H1 or R1 and x = 0 or y = 0
bool base_split_check(FamilyTag tag, const FamilyParams& p);
VerificationRecord base_split_record(FamilyTag tag, const FamilyParams& p);

/// the symmetric region against the two halves and the power of two
bool factorization_check(SymmetricKind kind, const FamilyParams& p);
VerificationRecord factorization_record(SymmetricKind kind, const FamilyParams& p);

/// six records per trial: four product identities for T and V, two quartered ratio identities
std::vector<VerificationRecord> algebraic_identity_fuzz(long trials, std::uint64_t seed);

struct Tally {
    long matched = 0;
    long mismatched = 0;
    long skipped = 0;
};
Tally tally(const std::vector<VerificationRecord>& records);

/// columns: check, family, x, y, z, a, b, formula, oracle, match, cells, ms, reason
std::string records_to_csv(const std::vector<VerificationRecord>& records);
std::string records_to_json(const std::vector<VerificationRecord>& records);

} // namespace tiling

#endif
