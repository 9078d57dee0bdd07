#include "tiling/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace tiling {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

VerificationRecord skip(VerificationRecord r, const std::string& reason)
{
    r.skipped = true;
    r.match = false;
    r.reason = reason;
    return r;
}

/// run body(k) for k in [0, n) on up to jobs threads
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body)
{
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), n));
    if (workers <= 1) {
        for (std::size_t k = 0; k < n; ++k)
            body(k);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t k = next++; k < n; k = next++)
                body(k);
        });
    for (auto& t : pool)
        t.join();
}

Rational oracle_halved(FamilyTag tag, const FamilyParams& p) { return count_tilings(build_halved(tag, p)); }

VerificationRecord halved_record(FamilyTag tag, const FamilyParams& p, bool cross_check)
{
    VerificationRecord r;
    r.check = "halved";
    r.family = tag_name(tag);
    r.params = p;
    const auto start = Clock::now();
    Region region;
    try {
        region = build_halved(tag, p);
    } catch (const ParameterError& e) {
        return skip(r, std::string("infeasible: ") + e.what());
    }
    r.cells = static_cast<long>(region.size());
    try {
        r.formula = halved_count(tag, p);
    } catch (const PoleError& e) {
        return skip(r, std::string("pole: ") + e.what());
    } catch (const DomainError& e) {
        return skip(r, std::string("pole: ") + e.what());
    }
    try {
        r.oracle = count_tilings(region);
    } catch (const CapacityError& e) {
        return skip(r, std::string("capacity: ") + e.what());
    }
    r.match = *r.formula == *r.oracle;
    if (cross_check) {
        Rational det = count_tilings_determinant(region);
        if (det != *r.oracle) {
            r.match = false;
            r.reason = "oracles disagree: determinant gives " + to_string(det);
        }
    }
    r.ms = elapsed_ms(start);
    return r;
}

std::string quote(const std::string& s)
{
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::vector<FernSequence> standard_ferns() { return {FernSequence{}, FernSequence{1}, FernSequence{2}, FernSequence{1, 1}, FernSequence{2, 1}}; }

ParameterGrid ParameterGrid::box(long max_x, long max_y, long max_z, const std::vector<FernSequence>& ferns)
{
    ParameterGrid g;
    for (long v = 0; v <= max_x; ++v)
        g.xs.push_back(v);
    for (long v = 0; v <= max_y; ++v)
        g.ys.push_back(v);
    for (long v = 0; v <= max_z; ++v)
        g.zs.push_back(v);
    g.a_ferns = ferns;
    g.b_ferns = ferns;
    return g;
}

std::vector<FamilyParams> ParameterGrid::points() const
{
    std::vector<FamilyParams> out;
    for (long x : xs)
        for (long y : ys)
            for (long z : zs)
                for (const auto& a : a_ferns)
                    for (const auto& b : b_ferns)
                        out.push_back({x, y, z, a, b});
    return out;
}

std::vector<VerificationRecord> sweep(const std::vector<FamilyTag>& tags, const ParameterGrid& grid, const SweepOptions& options)
{
    const auto pts = grid.points();
    std::vector<VerificationRecord> out(tags.size() * pts.size());
    parallel_for(out.size(), options.jobs, [&](std::size_t k) {
        out[k] = halved_record(tags[k / pts.size()], pts[k % pts.size()], options.cross_check);
    });
    return out;
}

std::vector<VerificationRecord> ratio_form_sweep(const std::vector<FamilyTag>& tags, const ParameterGrid& grid)
{
    std::vector<VerificationRecord> out;
    for (FamilyTag tag : tags)
        for (const auto& p : grid.points()) {
            VerificationRecord r;
            r.check = "ratio-form";
            r.family = tag_name(tag);
            r.params = p;
            const auto start = Clock::now();
            try {
                r.formula = halved_count(tag, p);
                r.oracle = halved_count_ratio_form(tag, p);
                r.match = *r.formula == *r.oracle;
            } catch (const PoleError& e) {
                r = skip(r, std::string("pole: ") + e.what());
            } catch (const DomainError& e) {
                r = skip(r, std::string("pole: ") + e.what());
            }
            r.ms = elapsed_ms(start);
            out.push_back(std::move(r));
        }
    return out;
}

VerificationRecord quartered_record(QuarteredKind kind, const FernSequence& t)
{
    VerificationRecord r;
    r.check = "quartered";
    r.family = kind_name(kind);
    r.params.a = t;
    const auto start = Clock::now();
    Region region = build_quartered(kind, t);
    r.cells = static_cast<long>(region.size());
    try {
        r.formula = quartered_count(kind, t);
        r.oracle = count_tilings(region);
        r.match = *r.formula == *r.oracle;
    } catch (const CapacityError& e) {
        r = skip(r, std::string("capacity: ") + e.what());
    }
    r.ms = elapsed_ms(start);
    return r;
}

// ---- Kuo condensation ----

std::optional<CellQuad> boundary_quad(const Region& r)
{
    const DualGraph g = dual_graph(r);
    const auto faces = dual_faces(g);
    if (faces.empty() || faces.front().empty())
        return std::nullopt;
    std::vector<int> order;
    std::vector<char> seen(g.vertices.size(), 0);
    for (int v : faces.front().front())
        if (!seen[static_cast<std::size_t>(v)]) {
            seen[static_cast<std::size_t>(v)] = 1;
            order.push_back(v);
        }
    const std::size_t n = order.size();
    if (n < 4)
        return std::nullopt;
    std::vector<TriCell> picked;
    std::size_t k = 0;
    for (int slot = 0; slot < 4; ++slot) {
        const bool want_up = slot % 2 == 0;
        k = std::max(k, slot * n / 4);
        while (k < n && g.vertices[static_cast<std::size_t>(order[k])].is_up() != want_up)
            ++k;
        if (k >= n)
            return std::nullopt;
        picked.push_back(g.vertices[static_cast<std::size_t>(order[k])]);
        ++k;
    }
    return CellQuad{picked[0], picked[1], picked[2], picked[3]};
}

bool kuo_check(const Region& r, const TriCell& u, const TriCell& v, const TriCell& w, const TriCell& s)
{
    for (const TriCell& c : {u, v, w, s})
        if (!r.contains(c))
            throw ParameterError("cell " + to_string(c) + " is not in the region");
    if (u.is_up() != w.is_up() || v.is_up() != s.is_up() || u.is_up() == v.is_up())
        throw ParameterError("u, w and v, s must have opposite orientations");
    if (u == w || v == s)
        throw ParameterError("the four cells must be distinct");
    auto m = [&](std::vector<TriCell> cut) { return count_tilings(r.without(cut)); };
    return m({}) * m({u, v, w, s}) == m({u, v}) * m({w, s}) + m({u, s}) * m({v, w});
}

// ---- recurrence ----

namespace {

struct RecurrenceValues {
    Rational lhs, rhs;
};

RecurrenceValues recurrence_values(FamilyTag tag, const FamilyParams& p)
{
    if (p.x < 1 || p.y < 1 || p.z < 1)
        throw ParameterError("recurrence needs x, y, z >= 1");
    if (p.b.empty() || p.b.at(p.b.size()) <= 0)
        throw ParameterError("recurrence needs a nonempty b with positive last entry");
    const FernSequence bp = plus_one(p.b);
    auto m = [&](long dx, long dy, long dz, const FernSequence& b) {
        return oracle_halved(tag, {p.x + dx, p.y + dy, p.z + dz, p.a, b});
    };
    return {m(0, 0, 0, p.b) * m(0, -1, -1, bp),
            m(0, -1, 0, bp) * m(0, 0, -1, p.b) + m(1, -1, 0, p.b) * m(-1, 0, -1, bp)};
}

} // namespace

bool recurrence_check(FamilyTag tag, const FamilyParams& p)
{
    auto v = recurrence_values(tag, p);
    return v.lhs == v.rhs;
}

VerificationRecord recurrence_record(FamilyTag tag, const FamilyParams& p)
{
    VerificationRecord r;
    r.check = "recurrence";
    r.family = tag_name(tag);
    r.params = p;
    const auto start = Clock::now();
    try {
        auto v = recurrence_values(tag, p);
        r.formula = v.lhs;
        r.oracle = v.rhs;
        r.match = v.lhs == v.rhs;
    } catch (const ParameterError& e) {
        r = skip(r, std::string("infeasible: ") + e.what());
    } catch (const CapacityError& e) {
        r = skip(r, std::string("capacity: ") + e.what());
    }
    r.ms = elapsed_ms(start);
    return r;
}

// ---- base splits ----

namespace {

/// [0] a (last merged) + middle + (last merged) b reversed [z]
FernSequence merged_list(const FernSequence& a, const FernSequence& b, bool lead_zero, bool merge_a, bool merge_b,
                         long middle, const long* tail)
{
    std::vector<long> v;
    if (lead_zero)
        v.push_back(0);
    const auto& av = a.entries();
    const auto& bv = b.entries();
    v.insert(v.end(), av.begin(), merge_a ? av.end() - 1 : av.end());
    v.push_back((merge_a ? av.back() : 0) + middle + (merge_b ? bv.back() : 0));
    for (long k = static_cast<long>(bv.size()) - (merge_b ? 2 : 1); k >= 0; --k)
        v.push_back(bv[static_cast<std::size_t>(k)]);
    if (tail)
        v.push_back(*tail);
    return FernSequence(std::move(v));
}

} // namespace

SplicedArguments base_split_lists(FamilyTag tag, const FamilyParams& p)
{
    if (tag != FamilyTag::H1 && tag != FamilyTag::R1)
        throw ParameterError("base splits are listed for H1 and R1 only");
    if (p.x != 0 && p.y != 0)
        throw ParameterError("base split needs x = 0 or y = 0");
    const FernSequence a = p.a.empty() ? FernSequence{0} : p.a;
    const FernSequence b = p.b.empty() ? FernSequence{0} : p.b;
    const bool me = a.size() % 2 == 0, ne = b.size() % 2 == 0;
    const bool x_zero = p.x == 0;
    const long mid = x_zero ? p.y : p.x;
    const long* z = &p.z;
    if (tag == FamilyTag::H1) {
        if (x_zero)
            return {merged_list(a, b, true, !me, !ne, mid, nullptr), merged_list(a, b, false, me, ne, mid, z)};
        return {merged_list(a, b, true, me, ne, mid, nullptr), merged_list(a, b, false, !me, !ne, mid, z)};
    }
    if (x_zero)
        return {merged_list(a, b, false, me, !ne, mid, nullptr), merged_list(a, b, true, !me, ne, mid, z)};
    return {merged_list(a, b, false, !me, ne, mid, nullptr), merged_list(a, b, true, me, !ne, mid, z)};
}

VerificationRecord base_split_record(FamilyTag tag, const FamilyParams& p)
{
    VerificationRecord r;
    r.check = "base-split";
    r.family = tag_name(tag);
    r.params = p;
    const auto start = Clock::now();
    const SplicedArguments lists = base_split_lists(tag, p);
    r.formula = quartered_count(QuarteredKind::Q, lists.upper) * quartered_count(QuarteredKind::Q, lists.lower);
    try {
        Region region = build_halved(tag, p);
        r.cells = static_cast<long>(region.size());
        r.oracle = count_tilings(region);
        r.match = *r.formula == *r.oracle;
    } catch (const ParameterError& e) {
        r = skip(r, std::string("infeasible: ") + e.what());
    } catch (const CapacityError& e) {
        r = skip(r, std::string("capacity: ") + e.what());
    }
    r.ms = elapsed_ms(start);
    return r;
}

bool base_split_check(FamilyTag tag, const FamilyParams& p)
{
    VerificationRecord r = base_split_record(tag, p);
    if (r.skipped)
        throw ParameterError(r.reason);
    return r.match;
}

// ---- factorization ----

VerificationRecord factorization_record(SymmetricKind kind, const FamilyParams& p)
{
    VerificationRecord r;
    r.check = "factorization";
    r.family = kind_name(kind);
    r.params = p;
    const auto start = Clock::now();
    const SymmetricSplit split = symmetric_split(kind, p);
    try {
        Region whole = build_symmetric(kind, p);
        r.cells = static_cast<long>(whole.size());
        r.oracle = count_tilings(whole);
        // an empty region is cut into two empty halves
        if (whole.empty())
            r.formula = power_of_two(split.two_power);
        else
            r.formula = power_of_two(split.two_power) * oracle_halved(split.first, split.first_params) *
                        oracle_halved(split.second, split.second_params);
        r.match = *r.formula == *r.oracle;
    } catch (const ParameterError& e) {
        r = skip(r, std::string("infeasible: ") + e.what());
    } catch (const CapacityError& e) {
        r = skip(r, std::string("capacity: ") + e.what());
    }
    r.ms = elapsed_ms(start);
    return r;
}

bool factorization_check(SymmetricKind kind, const FamilyParams& p)
{
    VerificationRecord r = factorization_record(kind, p);
    if (r.skipped)
        throw ParameterError(r.reason);
    return r.match;
}

// ---- algebraic identities ----

std::vector<VerificationRecord> algebraic_identity_fuzz(long trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    auto draw = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto record = [](const std::string& family, long x, long y, long z, const FernSequence& a,
                     const std::function<std::pair<Rational, Rational>()>& sides) {
        VerificationRecord r;
        r.check = "identity";
        r.family = family;
        r.params = {x, y, z, a, {}};
        const auto start = Clock::now();
        auto [lhs, rhs] = sides();
        r.formula = lhs;
        r.oracle = rhs;
        r.match = lhs == rhs;
        r.ms = elapsed_ms(start);
        return r;
    };
    // draw until the identity has no vanishing factor
    auto pole_free = [&](const std::function<VerificationRecord()>& attempt) {
        for (;;) {
            try {
                return attempt();
            } catch (const PoleError&) {
            }
        }
    };

    std::vector<VerificationRecord> out;
    for (long trial = 0; trial < trials; ++trial) {
        out.push_back(pole_free([&] {
            long x = draw(2, 7), n = draw(0, 8), m = draw(0, 3);
            return record("T-shift", x, n, m, {}, [=] {
                return std::pair<Rational, Rational>{product_T(x, n, m) / product_T(x - 1, n, m),
                                 pochhammer(x + n - m, m) / pochhammer(x - 1, m)};
            });
        }));
        out.push_back(pole_free([&] {
            long x = draw(1, 7), n = draw(0, 8), m = draw(1, 3);
            return record("T-peel", x, n, m, {}, [=] {
                return std::pair<Rational, Rational>{product_T(x, n, m), pochhammer(x, n) * product_T(x + 1, n - 2, m - 1)};
            });
        }));
        out.push_back(pole_free([&] {
            long x = draw(3, 10), n = draw(0, 8), m = draw(0, 3);
            return record("V-shift", x, n, m, {}, [=] {
                return std::pair<Rational, Rational>{product_V(x, n, m) / product_V(x - 2, n, m),
                                 pochhammer_skip(x + 2 * n - 2 * m, m) / pochhammer_skip(x - 2, m)};
            });
        }));
        out.push_back(pole_free([&] {
            long x = draw(1, 10), n = draw(0, 8), m = draw(1, 3);
            return record("V-peel", x, n, m, {}, [=] {
                return std::pair<Rational, Rational>{product_V(x, n, m), pochhammer_skip(x, n) * product_V(x + 2, n - 2, m - 1)};
            });
        }));
        auto random_fern = [&](bool positive_total) {
            for (;;) {
                const long len = 2 * draw(1, 3);
                std::vector<long> v;
                long total = 0;
                for (long k = 0; k < len; ++k) {
                    v.push_back(draw(0, 3));
                    total += v.back();
                }
                if (!positive_total || total > 0)
                    return FernSequence(std::move(v));
            }
        };
        auto bumped = [](const FernSequence& t) {
            auto v = t.entries();
            ++v.back();
            return FernSequence(std::move(v));
        };
        {
            FernSequence t = random_fern(false);
            out.push_back(record("Q-ratio", 0, 0, 0, t, [=] {
                return std::pair<Rational, Rational>{quartered_count(QuarteredKind::Q, bumped(t)) / quartered_count(QuarteredKind::Q, t),
                                 quartered_ratio_q(t)};
            }));
        }
        {
            FernSequence t = random_fern(true);
            out.push_back(record("Kp-ratio", 0, 0, 0, t, [=] {
                return std::pair<Rational, Rational>{quartered_count(QuarteredKind::Kp, bumped(t)) / quartered_count(QuarteredKind::Kp, t),
                                 quartered_ratio_kp(t)};
            }));
        }
    }
    return out;
}

// ---- reports ----

Tally tally(const std::vector<VerificationRecord>& records)
{
    Tally t;
    for (const auto& r : records)
        (r.skipped ? t.skipped : r.match ? t.matched : t.mismatched)++;
    return t;
}

std::string records_to_csv(const std::vector<VerificationRecord>& records)
{
    std::ostringstream os;
    os << "check,family,x,y,z,a,b,formula,oracle,match,cells,ms,reason\n";
    for (const auto& r : records) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", r.ms);
        os << r.check << ',' << r.family << ',' << r.params.x << ',' << r.params.y << ',' << r.params.z << ','
           << quote(format_fern(r.params.a)) << ',' << quote(format_fern(r.params.b)) << ','
           << (r.formula ? to_string(*r.formula) : "") << ',' << (r.oracle ? to_string(*r.oracle) : "") << ','
           << (r.skipped ? "skip" : r.match ? "true" : "false") << ',' << r.cells << ',' << ms << ','
           << quote(r.reason) << '\n';
    }
    return os.str();
}

std::string records_to_json(const std::vector<VerificationRecord>& records)
{
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : records) {
        nlohmann::json j;
        j["check"] = r.check;
        j["family"] = r.family;
        j["x"] = r.params.x;
        j["y"] = r.params.y;
        j["z"] = r.params.z;
        j["a"] = r.params.a.entries();
        j["b"] = r.params.b.entries();
        j["formula"] = r.formula ? nlohmann::json(to_string(*r.formula)) : nlohmann::json(nullptr);
        j["oracle"] = r.oracle ? nlohmann::json(to_string(*r.oracle)) : nlohmann::json(nullptr);
        j["match"] = r.match;
        j["skipped"] = r.skipped;
        j["reason"] = r.reason;
        j["cells"] = r.cells;
        j["ms"] = r.ms;
        list.push_back(std::move(j));
    }
    const Tally t = tally(records);
    nlohmann::json doc;
    doc["records"] = std::move(list);
    doc["summary"] = {{"matched", t.matched}, {"mismatched", t.mismatched}, {"skipped", t.skipped}};
    return doc.dump(2) + "\n";
}

} // namespace tiling
