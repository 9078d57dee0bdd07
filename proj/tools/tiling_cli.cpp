#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tiling/verify.hpp"

using namespace tiling;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParameter = 3;
constexpr int kExitCapacity = 4;

struct RegionArgs {
    std::string family;
    long x = 0, y = 0, z = 0;
    std::string a, b, t, abc;
};

void add_region_options(CLI::App* cmd, RegionArgs& r)
{
    cmd->add_option("--family", r.family, "H1..NR4, Q, Qp, K, Kp, P, Pp, S1, S2 or HEX")->required();
    cmd->add_option("--x", r.x);
    cmd->add_option("--y", r.y);
    cmd->add_option("--z", r.z);
    cmd->add_option("--a", r.a, "a-fern, e.g. \"2,2\"");
    cmd->add_option("--b", r.b, "b-fern");
    cmd->add_option("--t", r.t, "sequence of a quartered region");
    cmd->add_option("--abc", r.abc, "three sides of a hexagon or staircase region, e.g. \"2,2,2\"");
}

std::array<long, 3> parse_abc(const std::string& text)
{
    FernSequence f = parse_fern(text);
    if (f.size() != 3)
        throw UsageError("--abc needs three numbers");
    return {f.at(1), f.at(2), f.at(3)};
}

FamilyParams halved_params(const RegionArgs& r) { return {r.x, r.y, r.z, parse_fern(r.a), parse_fern(r.b)}; }

bool is_quartered(const std::string& f) { return f == "Q" || f == "Qp" || f == "K" || f == "Kp"; }

Region build_from_args(const RegionArgs& r)
{
    if (r.family == "HEX") {
        auto [a, b, c] = parse_abc(r.abc);
        return build_hexagon(a, b, c);
    }
    if (r.family == "P" || r.family == "Pp") {
        auto [a, b, c] = parse_abc(r.abc);
        return build_proctor(r.family == "P" ? ProctorKind::P : ProctorKind::Pp, a, b, c);
    }
    if (is_quartered(r.family))
        return build_quartered(parse_quartered_kind(r.family), parse_fern(r.t));
    if (r.family == "S1" || r.family == "S2")
        return build_symmetric(parse_symmetric_kind(r.family), halved_params(r));
    return build_halved(parse_family_tag(r.family), halved_params(r));
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

void print_mismatches(const std::vector<VerificationRecord>& recs)
{
    for (const auto& r : recs)
        if (!r.skipped && !r.match)
            std::cout << "  mismatch " << r.check << ' ' << r.family << ' ' << format_params(r.params) << " formula "
                      << (r.formula ? to_string(*r.formula) : "-") << " oracle " << (r.oracle ? to_string(*r.oracle) : "-")
                      << (r.reason.empty() ? "" : " (" + r.reason + ")") << '\n';
}

void print_tally(const std::string& name, const std::vector<VerificationRecord>& recs)
{
    Tally t = tally(recs);
    std::cout << name << ": " << t.matched << " matched, " << t.mismatched << " mismatched, " << t.skipped << " skipped\n";
}

int run(int argc, char** argv)
{
    CLI::App app{"lozenge tilings of halved hexagons with ferns: regions, counts, product formulas"};
    app.require_subcommand(1);

    RegionArgs build_args;
    std::string build_out;
    auto* build_cmd = app.add_subcommand("region-build", "build a region and write it as JSON");
    add_region_options(build_cmd, build_args);
    build_cmd->add_option("--out", build_out, "output file (default: standard output)");

    std::string render_in, render_format = "ascii", render_out;
    auto* render_cmd = app.add_subcommand("render", "draw a region file");
    render_cmd->add_option("--in", render_in)->required();
    render_cmd->add_option("--format", render_format)->check(CLI::IsMember({"svg", "ascii"}));
    render_cmd->add_option("--out", render_out);

    std::string count_in, count_oracle = "dp";
    auto* count_cmd = app.add_subcommand("count", "weighted number of tilings of a region file");
    count_cmd->add_option("--in", count_in)->required();
    count_cmd->add_option("--oracle", count_oracle)->check(CLI::IsMember({"dp", "det", "enum"}));

    RegionArgs formula_args;
    bool ratio_form = false;
    auto* formula_cmd = app.add_subcommand("formula", "evaluate the closed form for a family");
    add_region_options(formula_cmd, formula_args);
    formula_cmd->add_flag("--ratio-form", ratio_form, "also evaluate the ratio form (halved families)");

    std::string families = "all", ferns = "(),(1),(2),(1,1),(2,1)", report, json_report;
    long max_x = 2, max_y = 2, max_z = 2;
    int jobs = 1;
    bool cross_check = false;
    auto* verify_cmd = app.add_subcommand("verify", "formula against oracle sweeps and the structural checks");
    verify_cmd->add_option("--families", families, "\"all\" or a comma list of H1..NR4, S1, S2");
    verify_cmd->add_option("--max-x", max_x)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-y", max_y)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--max-z", max_z)->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--ferns", ferns, "fern list used for both a and b");
    verify_cmd->add_option("--report", report, "CSV report file");
    verify_cmd->add_option("--json", json_report, "JSON report file");
    verify_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--cross-check", cross_check, "also count every region with the determinant");

    long trials = 100;
    std::uint64_t seed = 7;
    auto* identities_cmd = app.add_subcommand("identities", "random checks of the product and ratio identities");
    identities_cmd->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    identities_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (*build_cmd) {
        write_output(build_out, region_to_json(build_from_args(build_args)));
        return 0;
    }
    if (*render_cmd) {
        write_output(render_out, render(region_from_json(read_file(render_in)), render_format));
        return 0;
    }
    if (*count_cmd) {
        Region r = region_from_json(read_file(count_in));
        Rational v;
        if (count_oracle == "dp") {
            v = count_tilings(r);
        } else if (count_oracle == "det") {
            v = count_tilings_determinant(r);
        } else {
            TilingList list = enumerate_tilings(r, 1000000);
            if (list.truncated)
                throw CapacityError("more than 1000000 tilings to enumerate");
            v = 0;
            for (const auto& t : list.tilings)
                v += tiling_weight(r, t);
        }
        std::cout << to_string(v) << '\n';
        return 0;
    }
    if (*formula_cmd) {
        const RegionArgs& f = formula_args;
        Rational v;
        std::optional<Rational> ratio;
        if (f.family == "HEX") {
            auto [a, b, c] = parse_abc(f.abc);
            v = macmahon(a, b, c);
        } else if (f.family == "P" || f.family == "Pp") {
            auto [a, b, c] = parse_abc(f.abc);
            v = f.family == "P" ? proctor_count(a, b, c) : proctor_weighted_count(a, b, c);
        } else if (is_quartered(f.family)) {
            v = quartered_count(parse_quartered_kind(f.family), parse_fern(f.t));
        } else if (f.family == "S1" || f.family == "S2") {
            v = symmetric_count(parse_symmetric_kind(f.family), halved_params(f));
        } else {
            FamilyTag tag = parse_family_tag(f.family);
            v = halved_count(tag, halved_params(f));
            if (ratio_form)
                ratio = halved_count_ratio_form(tag, halved_params(f));
        }
        if (ratio_form && !ratio)
            throw UsageError("--ratio-form applies to the halved families only");
        if (ratio)
            std::cout << "product " << to_string(v) << "\nratio " << to_string(*ratio) << '\n';
        else
            std::cout << to_string(v) << '\n';
        return 0;
    }
    if (*verify_cmd) {
        std::vector<FamilyTag> tags;
        std::vector<SymmetricKind> kinds;
        if (families == "all") {
            tags.assign(all_family_tags().begin(), all_family_tags().end());
            kinds = {SymmetricKind::S1, SymmetricKind::S2};
        } else {
            std::stringstream ss(families);
            std::string item;
            while (std::getline(ss, item, ','))
                if (item == "S1" || item == "S2")
                    kinds.push_back(parse_symmetric_kind(item));
                else
                    tags.push_back(parse_family_tag(item));
        }
        const ParameterGrid grid = ParameterGrid::box(max_x, max_y, max_z, parse_fern_list(ferns));
        SweepOptions opt;
        opt.jobs = jobs;
        opt.cross_check = cross_check;

        std::vector<VerificationRecord> all = sweep(tags, grid, opt);
        print_tally("halved sweep", all);

        std::vector<VerificationRecord> rec, split, fact;
        for (FamilyTag tag : tags)
            for (const auto& p : grid.points()) {
                if (p.x >= 1 && p.y >= 1 && p.z >= 1 && !p.b.empty() && p.b.at(p.b.size()) > 0)
                    rec.push_back(recurrence_record(tag, p));
                if ((tag == FamilyTag::H1 || tag == FamilyTag::R1) && (p.x == 0 || p.y == 0))
                    split.push_back(base_split_record(tag, p));
            }
        for (SymmetricKind kind : kinds)
            for (const auto& p : grid.points())
                if ((p.x - p.y) % 2 == 0)
                    fact.push_back(factorization_record(kind, p));
        print_tally("recurrence", rec);
        print_tally("base split", split);
        print_tally("factorization", fact);
        for (auto* part : {&rec, &split, &fact})
            all.insert(all.end(), part->begin(), part->end());
        print_mismatches(all);

        if (!report.empty())
            write_output(report, records_to_csv(all));
        if (!json_report.empty())
            write_output(json_report, records_to_json(all));
        return tally(all).mismatched == 0 ? 0 : kExitMismatch;
    }
    if (*identities_cmd) {
        auto recs = algebraic_identity_fuzz(trials, seed);
        print_tally("identities", recs);
        print_mismatches(recs);
        return tally(recs).mismatched == 0 ? 0 : kExitMismatch;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv)
{
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity exceeded: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const ParameterError& e) {
        std::cerr << "bad parameters: " << e.what() << '\n';
        return kExitParameter;
    } catch (const DomainError& e) {
        std::cerr << "bad parameters: " << e.what() << '\n';
        return kExitParameter;
    } catch (const PoleError& e) {
        std::cerr << "bad parameters: " << e.what() << '\n';
        return kExitParameter;
    }
}
