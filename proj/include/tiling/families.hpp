#ifndef TILING_FAMILIES_HPP
#define TILING_FAMILIES_HPP

#include <array>
#include <string>

#include "tiling/fern.hpp"
#include "tiling/lattice.hpp"

namespace tiling {

enum class FamilyTag { H1, H2, W1, W2, R1, R2, RW1, RW2, N1, N2, N3, N4, NR1, NR2, NR3, NR4 };
enum class QuarteredKind { Q, Qp, K, Kp };
enum class ProctorKind { P, Pp };
enum class SymmetricKind { S1, S2 };

const std::array<FamilyTag, 16>& all_family_tags();
std::string tag_name(FamilyTag t);
std::string kind_name(QuarteredKind k);
std::string kind_name(SymmetricKind k);
/// throws UsageError for unknown names
FamilyTag parse_family_tag(const std::string& s);
QuarteredKind parse_quartered_kind(const std::string& s);
SymmetricKind parse_symmetric_kind(const std::string& s);

/// R, RW and NR families: the half triangle on the west side points down
bool is_reflected(FamilyTag t);

struct FamilyParams {
    long x = 0;
    long y = 0;
    long z = 0;
    FernSequence a;
    FernSequence b;
};

std::string format_params(const FamilyParams& p);

/// A built region together with the closed contour it was cut from.
struct Construction {
    Region region;
    /// closed lattice walk, clockwise, last point not repeated
    std::vector<Point> contour;
    /// cells inside the contour that were cut out as fern triangles
    std::set<TriCell> removed;
    /// row of the fern line, when the family has one
    long fern_line = 0;
    bool has_fern_line = false;
};

Construction construct_hexagon(long a, long b, long c);
Construction construct_proctor(ProctorKind kind, long a, long b, long c);
Construction construct_quartered(QuarteredKind kind, const FernSequence& t);
Construction construct_halved(FamilyTag tag, const FamilyParams& p);
Construction construct_symmetric(SymmetricKind kind, const FamilyParams& p);

Region build_hexagon(long a, long b, long c);
Region build_proctor(ProctorKind kind, long a, long b, long c);
Region build_quartered(QuarteredKind kind, const FernSequence& t);
Region build_halved(FamilyTag tag, const FamilyParams& p);
Region build_symmetric(SymmetricKind kind, const FamilyParams& p);

/// Side lengths as listed for a family: the runs after the west side, clockwise from the north side,
/// plus the number of rows climbed by the west side and its horizontal jog.
struct SideList {
    Moves east;
    long west_rows = 0;
    long west_jog = 0;
};

SideList expected_sides_hexagon(long a, long b, long c);
SideList expected_sides_proctor(long a, long b, long c);
SideList expected_sides_quartered(QuarteredKind kind, const FernSequence& t);
SideList expected_sides_halved(FamilyTag tag, const FamilyParams& p);
SideList expected_sides_symmetric(SymmetricKind kind, const FamilyParams& p);

struct AuditResult {
    bool boundary_matches = false;
    bool sides_match = false;
    bool balanced = false;
    bool weights_vertical = false;
    bool ferns_on_line = false;
    std::string detail;
    bool ok() const { return boundary_matches && sides_match && balanced && weights_vertical && ferns_on_line; }
};

/// compare a construction with a side list and check its cells against its contour
AuditResult boundary_audit(const Construction& c, const SideList& expected);

} // namespace tiling

#endif
