#include "gridbasis/json_io.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "gridbasis/errors.hpp"

namespace gridbasis {

namespace {

bool fits_int64(const Int& x) {
    static const Int lo = Int(std::to_string(INT64_MIN));
    static const Int hi = Int(std::to_string(INT64_MAX));
    return lo <= x && x <= hi;
}

long long to_int64(const Int& x) {
    return std::stoll(x.get_str());
}

int expect_small_int(const Json& j, const std::string& what) {
    if (!j.is_number_integer())
        throw ValueError(what + ": expected an integer");
    const long long v = j.get<long long>();
    if (v < INT32_MIN || v > INT32_MAX)
        throw ValueError(what + ": value out of range");
    return static_cast<int>(v);
}

const Json& expect_field(const Json& j, const std::string& key) {
    if (!j.is_object()) throw ValueError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ValueError("missing field \"" + key + "\"");
    return *it;
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValueError(std::string("invalid JSON: ") + e.what());
    }
}

Json int_to_json(const Int& x) {
    if (fits_int64(x)) return Json(to_int64(x));
    return Json(x.get_str());
}

Json rat_to_json(const Rat& q) {
    if (is_integer(q)) return int_to_json(q.get_num());
    return Json(rat_to_string(q));
}

Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ValueError("expected an integer or a \"p/q\" string");
}

Json to_json(const PointSet& m) {
    Json j;
    j["d"] = m.shape().dim();
    if (m.shape().is_uniform())
        j["n"] = m.shape().uniform_side();
    else
        j["sides"] = m.shape().sides();
    Json pts = Json::array();
    for (const Point& p : m.points()) pts.push_back(p.coords);
    j["points"] = pts;
    return j;
}

namespace {

GridShape shape_from_json(const Json& j) {
    const int d = expect_small_int(expect_field(j, "d"), "\"d\"");
    const bool has_n = j.contains("n");
    const bool has_sides = j.contains("sides");
    if (has_n == has_sides)
        throw ValueError("exactly one of \"n\" and \"sides\" is required");
    if (has_n) {
        const int n = expect_small_int(j["n"], "\"n\"");
        return GridShape::uniform(d, n);
    }
    const Json& sides_json = j["sides"];
    if (!sides_json.is_array() || static_cast<int>(sides_json.size()) != d)
        throw ValueError("\"sides\" must be an array of d integers");
    std::vector<int> sides;
    for (size_t i = 0; i < sides_json.size(); ++i)
        sides.push_back(expect_small_int(sides_json[i],
                                         "\"sides\"[" + std::to_string(i) + "]"));
    return GridShape(std::move(sides));
}

std::vector<Point> points_from_json(const Json& j, int d) {
    const Json& pts = expect_field(j, "points");
    if (!pts.is_array()) throw ValueError("\"points\" must be an array");
    std::vector<Point> out;
    out.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        const Json& pj = pts[i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (!pj.is_array() || static_cast<int>(pj.size()) != d)
            throw ValueError(where + ": expected " + std::to_string(d) +
                             " coordinates");
        std::vector<int> coords;
        for (size_t c = 0; c < pj.size(); ++c)
            coords.push_back(expect_small_int(
                pj[c], where + "[" + std::to_string(c + 1) + "]"));
        out.emplace_back(std::move(coords));
    }
    return out;
}

}  // namespace

PointSet point_set_from_json(const Json& j) {
    const GridShape shape = shape_from_json(j);
    return PointSet(shape, points_from_json(j, shape.dim()));
}

Json to_json(const WeightFunction& w) {
    Json j = to_json(w.base());
    Json values = Json::array();
    for (const Rat& v : w.values()) values.push_back(rat_to_json(v));
    j["values"] = values;
    return j;
}

WeightFunction weight_function_from_json(const Json& j) {
    const GridShape shape = shape_from_json(j);
    std::vector<Point> pts = points_from_json(j, shape.dim());
    const Json& vals = expect_field(j, "values");
    if (!vals.is_array() || vals.size() != pts.size())
        throw ValueError("\"values\" must be an array aligned with \"points\"");
    std::vector<std::pair<Point, Rat>> pairs;
    pairs.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        pairs.emplace_back(std::move(pts[i]), rat_from_json(vals[i]));
    return weight_from_pairs(shape, std::move(pairs));
}

Json to_json(const BasisVerdict& v) {
    Json j;
    j["basic"] = v.basic;
    j["rank"] = v.rank;
    if (v.certificate) j["certificate"] = to_json(*v.certificate);
    return j;
}

Json to_json(const CoordinateDecomposition& dec) {
    Json tables = Json::array();
    for (const auto& table : dec.tables) {
        Json t = Json::array();
        for (const Rat& v : table) t.push_back(rat_to_json(v));
        tables.push_back(t);
    }
    Json j;
    j["d"] = dec.shape.dim();
    if (dec.shape.is_uniform())
        j["n"] = dec.shape.uniform_side();
    else
        j["sides"] = dec.shape.sides();
    j["tables"] = tables;
    return j;
}

Json to_json(const DecompositionResult& result) {
    Json j;
    j["solvable"] = result.decomposition.has_value();
    if (result.decomposition) {
        j["decomposition"] = to_json(*result.decomposition);
    } else {
        j["certificate"] = to_json(*result.certificate);
        j["pairing"] = rat_to_json(result.pairing);
    }
    return j;
}

Json to_json(const TwoColoring& coloring) {
    Json j;
    j["subset"] = to_json(coloring.subset);
    Json colors = Json::array();
    for (int c : coloring.colors) colors.push_back(c > 0 ? "red" : "blue");
    j["colors"] = colors;
    return j;
}

Json to_json(const RectangleTerm& term) {
    Json j;
    j["axes"] = {term.axis1 + 1, term.axis2 + 1};
    j["values"] = {{term.lo1, term.hi1}, {term.lo2, term.hi2}};
    Json fixed = Json::object();
    for (const auto& [axis, value] : term.fixed)
        fixed[std::to_string(axis + 1)] = value;
    j["fixed"] = fixed;
    j["coeff"] = int_to_json(term.coeff);
    return j;
}

RectangleTerm rectangle_term_from_json(const Json& j) {
    RectangleTerm t;
    const Json& axes = expect_field(j, "axes");
    if (!axes.is_array() || axes.size() != 2)
        throw ValueError("\"axes\" must be a pair");
    t.axis1 = expect_small_int(axes[0], "\"axes\"[0]") - 1;
    t.axis2 = expect_small_int(axes[1], "\"axes\"[1]") - 1;
    const Json& values = expect_field(j, "values");
    if (!values.is_array() || values.size() != 2 || !values[0].is_array() ||
        values[0].size() != 2 || !values[1].is_array() || values[1].size() != 2)
        throw ValueError("\"values\" must be two pairs");
    t.lo1 = expect_small_int(values[0][0], "\"values\"[0][0]");
    t.hi1 = expect_small_int(values[0][1], "\"values\"[0][1]");
    t.lo2 = expect_small_int(values[1][0], "\"values\"[1][0]");
    t.hi2 = expect_small_int(values[1][1], "\"values\"[1][1]");
    if (j.contains("fixed")) {
        const Json& fixed = j["fixed"];
        if (!fixed.is_object()) throw ValueError("\"fixed\" must be an object");
        for (const auto& [key, value] : fixed.items()) {
            int axis;
            try {
                axis = std::stoi(key);
            } catch (...) {
                throw ValueError("\"fixed\" keys must be axis numbers");
            }
            t.fixed.emplace_back(axis - 1,
                                 expect_small_int(value, "\"fixed\"[" + key + "]"));
        }
        std::sort(t.fixed.begin(), t.fixed.end());
    }
    const Json& coeff = expect_field(j, "coeff");
    const Rat c = rat_from_json(coeff);
    if (!is_integer(c)) throw ValueError("\"coeff\" must be an integer");
    t.coeff = c.get_num();
    return t;
}

Json to_json(const MultiGraph& g) {
    Json j;
    j["vertices"] = g.vertex_count();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
    j["edges"] = edges;
    return j;
}

namespace {

std::vector<std::vector<int>> edge_lists_from_json(const Json& j) {
    const Json& edges = expect_field(j, "edges");
    if (!edges.is_array()) throw ValueError("\"edges\" must be an array");
    std::vector<std::vector<int>> out;
    for (size_t e = 0; e < edges.size(); ++e) {
        const Json& ej = edges[e];
        const std::string where = "edges[" + std::to_string(e) + "]";
        if (!ej.is_array() || ej.empty())
            throw ValueError(where + ": expected a nonempty vertex list");
        std::vector<int> edge;
        for (size_t i = 0; i < ej.size(); ++i)
            edge.push_back(
                expect_small_int(ej[i], where + "[" + std::to_string(i) + "]") - 1);
        out.push_back(std::move(edge));
    }
    return out;
}

}  // namespace

MultiGraph multigraph_from_json(const Json& j) {
    const int vertices = expect_small_int(expect_field(j, "vertices"), "\"vertices\"");
    std::vector<std::pair<int, int>> edges;
    for (auto& e : edge_lists_from_json(j)) {
        if (e.size() != 2)
            throw ValueError("graph edges must have exactly two endpoints");
        edges.emplace_back(e[0], e[1]);
    }
    return MultiGraph(vertices, std::move(edges));
}

Json to_json(const Hypergraph& h) {
    Json j;
    j["vertices"] = h.vertex_count();
    Json edges = Json::array();
    for (const auto& e : h.edges()) {
        Json edge = Json::array();
        for (int v : e) edge.push_back(v + 1);
        edges.push_back(edge);
    }
    j["edges"] = edges;
    return j;
}

Hypergraph hypergraph_from_json(const Json& j) {
    const int vertices = expect_small_int(expect_field(j, "vertices"), "\"vertices\"");
    return Hypergraph(vertices, edge_lists_from_json(j));
}

Json to_json(const GraphVerdict& v) {
    Json j;
    j["basic"] = v.basic;
    j["rank"] = v.rank;
    if (!v.basic) {
        Json dep = Json::array();
        for (const Int& x : v.dependence) dep.push_back(int_to_json(x));
        j["dependence"] = dep;
        if (!v.component.empty()) {
            Json comp = Json::array();
            for (int u : v.component) comp.push_back(u + 1);
            j["component"] = comp;
        }
    }
    return j;
}

Json to_json(const NamedFamily& fam) {
    Json j;
    j["family"] = fam.tag;
    j["n"] = fam.n;
    j["d"] = fam.d;
    if (fam.tag == "unbounded") j["m"] = fam.m;
    if (fam.added_point) j["point"] = fam.added_point->coords;
    j["set"] = to_json(fam.set);
    if (fam.claimed_annihilation)
        j["annihilation"] = to_json(*fam.claimed_annihilation);
    return j;
}

Json to_json(const ConjectureResult& r) {
    Json j;
    j["sum_abs"] = int_to_json(r.sum_abs);
    j["rhs"] = int_to_json(r.rhs);
    j["holds"] = r.holds;
    return j;
}

Json to_json(const SearchWitness& w) {
    Json j;
    j["set"] = to_json(w.set);
    j["annihilation"] = to_json(w.annihilation);
    return j;
}

Json to_json(const SizeReport& r) {
    Json j;
    j["size"] = r.size;
    j["realized"] = r.realized;
    if (r.raw_count >= 0) j["raw_count"] = r.raw_count;
    if (r.canonical_count >= 0) j["canonical_count"] = r.canonical_count;
    if (r.witness) j["witness"] = to_json(*r.witness);
    if (r.conjecture_pass >= 0) {
        Json c;
        c["pass"] = r.conjecture_pass;
        c["fail"] = r.conjecture_fail;
        Json bad = Json::array();
        for (const SearchWitness& w : r.counterexamples) bad.push_back(to_json(w));
        c["counterexamples"] = bad;
        j["conjecture"] = c;
    }
    return j;
}

Json to_json(const SearchReport& r) {
    Json j;
    Json grid;
    grid["d"] = r.grid.dim();
    if (r.grid.is_uniform())
        grid["n"] = r.grid.uniform_side();
    else
        grid["sides"] = r.grid.sides();
    j["grid"] = grid;
    j["mode"] = r.mode;
    j["layer_covering"] = r.layer_covering;
    if (r.mode != "exhaustive") {
        j["seed"] = r.seed;
        j["budget"] = r.budget;
    }
    j["jobs"] = r.jobs;
    Json sizes = Json::array();
    for (const SizeReport& s : r.sizes) sizes.push_back(to_json(s));
    j["sizes"] = sizes;
    return j;
}

}  // namespace gridbasis
