#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "json.hpp"
#include "tiling/lattice.hpp"

namespace tiling {

std::string render_ascii(const Region& r)
{
    if (r.empty())
        return "(empty)\n";
    std::set<TriCell> weighted;
    for (const auto& [l, w] : r.weights()) {
        weighted.insert(l.up);
        weighted.insert(l.down);
    }
    std::map<long, std::map<long, char>, std::greater<>> rows;
    long lo = 0, hi = 0;
    bool first = true;
    for (const TriCell& c : r.cells()) {
        long h = 2 * c.i + c.j + 1 + (c.is_up() ? 0 : 1);
        rows[c.j][h] = weighted.count(c) ? '*' : (c.is_up() ? '^' : 'v');
        lo = first ? h : std::min(lo, h);
        hi = first ? h : std::max(hi, h);
        first = false;
    }
    std::string out;
    char label[32];
    for (const auto& [j, row] : rows) {
        std::snprintf(label, sizeof label, "%4ld ", j);
        out += label;
        for (long h = lo; h <= hi; ++h) {
            auto it = row.find(h);
            out += it == row.end() ? '.' : it->second;
        }
        out += '\n';
    }
    return out;
}

namespace {

constexpr double kScale = 20.0;

std::pair<double, double> embed(long p, long q)
{
    return {kScale * (static_cast<double>(p) + static_cast<double>(q) / 2.0),
            -kScale * static_cast<double>(q) * std::sqrt(3.0) / 2.0};
}

std::array<Point, 3> corners(const TriCell& c)
{
    if (c.is_up())
        return {Point{c.i, c.j}, Point{c.i + 1, c.j}, Point{c.i, c.j + 1}};
    return {Point{c.i + 1, c.j}, Point{c.i, c.j + 1}, Point{c.i + 1, c.j + 1}};
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

} // namespace

std::string render_svg(const Region& r)
{
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    bool first = true;
    for (const TriCell& c : r.cells())
        for (const Point& pt : corners(c)) {
            auto [x, y] = embed(pt.p, pt.q);
            xmin = first ? x : std::min(xmin, x);
            xmax = first ? x : std::max(xmax, x);
            ymin = first ? y : std::min(ymin, y);
            ymax = first ? y : std::max(ymax, y);
            first = false;
        }
    const double m = kScale / 2;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt(xmin - m) << " " << fmt(ymin - m) << " "
       << fmt(xmax - xmin + 2 * m) << " " << fmt(ymax - ymin + 2 * m) << "\">\n";
    std::set<TriCell> weighted;
    for (const auto& [l, w] : r.weights()) {
        weighted.insert(l.up);
        weighted.insert(l.down);
    }
    for (const TriCell& c : r.cells()) {
        auto cs = corners(c);
        os << "<path d=\"";
        for (std::size_t k = 0; k < 3; ++k) {
            auto [x, y] = embed(cs[k].p, cs[k].q);
            os << (k == 0 ? "M" : " L") << fmt(x) << " " << fmt(y);
        }
        const char* fill = weighted.count(c) ? "#bbbbbb" : (c.is_up() ? "#ffffff" : "#eeeeee");
        os << " Z\" fill=\"" << fill << "\" stroke=\"#000000\" stroke-width=\"0.5\"/>\n";
    }
    for (const auto& [l, w] : r.weights()) {
        auto [x1, y1] = centroid(l.up);
        auto [x2, y2] = centroid(l.down);
        os << "<circle cx=\"" << fmt(kScale * (x1 + x2) / 2) << "\" cy=\"" << fmt(-kScale * (y1 + y2) / 2) << "\" r=\"3.000\" fill=\"#555555\"><title>"
           << to_string(w) << "</title></circle>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render(const Region& r, const std::string& format)
{
    if (format == "ascii")
        return render_ascii(r);
    if (format == "svg")
        return render_svg(r);
    throw UsageError("unsupported render format '" + format + "'");
}

namespace {

nlohmann::json cell_json(const TriCell& c)
{
    return {{"i", c.i}, {"j", c.j}, {"o", c.is_up() ? "U" : "D"}};
}

TriCell cell_from(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("i") || !j.contains("j") || !j.contains("o") || !j["i"].is_number_integer() ||
        !j["j"].is_number_integer() || !j["o"].is_string())
        throw UsageError("malformed cell: " + j.dump());
    std::string o = j["o"].get<std::string>();
    if (o != "U" && o != "D")
        throw UsageError("cell orientation must be U or D");
    return {j["i"].get<long>(), j["j"].get<long>(), o == "U" ? Orient::Up : Orient::Down};
}

} // namespace

std::string region_to_json(const Region& r)
{
    nlohmann::json doc;
    doc["cells"] = nlohmann::json::array();
    for (const TriCell& c : r.cells())
        doc["cells"].push_back(cell_json(c));
    doc["weights"] = nlohmann::json::array();
    for (const auto& [l, w] : r.weights())
        doc["weights"].push_back({{"a", cell_json(l.up)}, {"b", cell_json(l.down)}, {"w", to_string(w)}});
    return doc.dump(2) + "\n";
}

Region region_from_json(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("region file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array())
        throw UsageError("region file needs a \"cells\" array");
    std::set<TriCell> cells;
    for (const auto& c : doc["cells"])
        cells.insert(cell_from(c));
    Region r(std::move(cells));
    if (doc.contains("weights")) {
        if (!doc["weights"].is_array())
            throw UsageError("\"weights\" must be an array");
        for (const auto& w : doc["weights"]) {
            if (!w.is_object() || !w.contains("a") || !w.contains("b") || !w.contains("w") || !w["w"].is_string())
                throw UsageError("malformed weight entry: " + w.dump());
            TriCell a = cell_from(w["a"]), b = cell_from(w["b"]);
            if (!adjacent(a, b) || !r.contains(a) || !r.contains(b))
                throw UsageError("weight on a pair that is not a lozenge of the region");
            Rational value = parse_rational(w["w"].get<std::string>());
            if (value <= 0)
                throw UsageError("weights must be positive");
            r.set_weight(Lozenge::of(a, b), value);
        }
    }
    return r;
}

} // namespace tiling
