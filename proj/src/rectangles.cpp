#include "gridbasis/rectangles.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "gridbasis/errors.hpp"

namespace gridbasis {

namespace {

void check_term(const RectangleTerm& t, const GridShape& shape) {
    const int d = shape.dim();
    if (t.axis1 < 0 || t.axis2 >= d || t.axis1 >= t.axis2)
        throw ValueError("rectangle axes must satisfy 0 <= axis1 < axis2 < d");
    if (t.lo1 >= t.hi1 || t.lo2 >= t.hi2)
        throw ValueError("rectangle needs lo < hi on both axes");
    if (t.lo1 < 1 || t.hi1 > shape.side(t.axis1) || t.lo2 < 1 ||
        t.hi2 > shape.side(t.axis2))
        throw ValueError("rectangle vertex outside the grid");
    if (t.coeff == 0) throw ValueError("rectangle coefficient must be nonzero");
    std::vector<char> seen(static_cast<size_t>(d), 0);
    seen[static_cast<size_t>(t.axis1)] = 1;
    seen[static_cast<size_t>(t.axis2)] = 1;
    for (const auto& [axis, value] : t.fixed) {
        if (axis < 0 || axis >= d || seen[static_cast<size_t>(axis)])
            throw ValueError("fixed coordinates must cover each remaining axis once");
        if (value < 1 || value > shape.side(axis))
            throw ValueError("fixed coordinate outside the grid");
        seen[static_cast<size_t>(axis)] = 1;
    }
    for (char c : seen)
        if (!c) throw ValueError("fixed coordinates must cover each remaining axis once");
}

}  // namespace

std::array<Point, 4> RectangleTerm::vertices(const GridShape& shape) const {
    check_term(*this, shape);
    Point base(std::vector<int>(static_cast<size_t>(shape.dim()), 1));
    for (const auto& [axis, value] : fixed)
        base.coords[static_cast<size_t>(axis)] = value;
    auto corner = [&](int v1, int v2) {
        Point p = base;
        p.coords[static_cast<size_t>(axis1)] = v1;
        p.coords[static_cast<size_t>(axis2)] = v2;
        return p;
    };
    return {corner(lo1, lo2), corner(hi1, lo2), corner(hi1, hi2), corner(lo1, hi2)};
}

WeightFunction eval_rectangles(const std::vector<RectangleTerm>& terms,
                               const GridShape& shape) {
    std::map<Point, Rat> values;
    for (const RectangleTerm& t : terms) {
        const auto [p, q, r, s] = t.vertices(shape);
        values[p] += Rat(t.coeff);
        values[q] -= Rat(t.coeff);
        values[r] += Rat(t.coeff);
        values[s] -= Rat(t.coeff);
    }
    std::vector<std::pair<Point, Rat>> pairs(values.begin(), values.end());
    return weight_from_pairs(shape, std::move(pairs));
}

std::vector<RectangleTerm> decompose_into_rectangles(const WeightFunction& g) {
    if (!g.integer_valued())
        throw ValueError("rectangle decomposition needs integer values");
    if (auto bad = violated_layer(g)) {
        throw LayerError("not an annihilation function: layer (axis " +
                             std::to_string(bad->axis + 1) + ", value " +
                             std::to_string(bad->value) + ") has a nonzero sum",
                         bad->axis, bad->value);
    }
    const GridShape& shape = g.base().shape();
    const int d = shape.dim();

    std::map<Point, Int> work;
    for (size_t i = 0; i < g.base().points().size(); ++i) {
        const Rat& v = g.values()[i];
        if (v != 0) work[g.base().points()[i]] = v.get_num();
    }

    auto above_one = [](const Point& p) {
        int c = 0;
        for (int x : p.coords) c += x > 1;
        return c;
    };

    // Grid points with >= 2 coordinates above 1, processed from many such
    // coordinates down to two, lexicographic within a level. Each step zeroes
    // the current point and only touches points with strictly fewer
    // coordinates above 1 (which may enter the support), so the residue ends
    // up on the cross where annihilation forces it to vanish.
    std::vector<Point> order;
    Point cell(std::vector<int>(static_cast<size_t>(d), 1));
    for (;;) {
        if (above_one(cell) >= 2) order.push_back(cell);
        int i = d - 1;
        while (i >= 0 && cell.coords[static_cast<size_t>(i)] == shape.side(i)) {
            cell.coords[static_cast<size_t>(i)] = 1;
            --i;
        }
        if (i < 0) break;
        ++cell.coords[static_cast<size_t>(i)];
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](const Point& a, const Point& b) {
                         return above_one(a) > above_one(b);
                     });

    std::vector<RectangleTerm> terms;
    for (const Point& p : order) {
        const auto it = work.find(p);
        if (it == work.end() || it->second == 0) continue;
        const Int c = it->second;

        RectangleTerm t;
        t.axis1 = -1;
        for (int i = 0; i < d; ++i) {
            if (p[i] <= 1) continue;
            if (t.axis1 < 0) {
                t.axis1 = i;
            } else {
                t.axis2 = i;
                break;
            }
        }
        t.lo1 = 1;
        t.hi1 = p[t.axis1];
        t.lo2 = 1;
        t.hi2 = p[t.axis2];
        for (int i = 0; i < d; ++i)
            if (i != t.axis1 && i != t.axis2) t.fixed.emplace_back(i, p[i]);
        t.coeff = c;

        const auto [vp, vq, vr, vs] = t.vertices(shape);
        // vr == p carries +coeff, so subtracting the term zeroes p.
        work[vp] -= c;
        work[vq] += c;
        work[vr] -= c;
        work[vs] += c;
        terms.push_back(std::move(t));
    }

    for (const auto& [p, v] : work) {
        if (v != 0 && above_one(p) >= 2)
            throw std::logic_error("rectangle reduction left mass off the cross");
    }
    // The cross residue of an annihilation function is identically zero.
    for (const auto& [p, v] : work) {
        if (v != 0) throw std::logic_error("rectangle reduction left a nonzero residue");
    }
    return terms;
}

bool verify_decomposition(const WeightFunction& g,
                          const std::vector<RectangleTerm>& terms) {
    return equal_as_grid_functions(g, eval_rectangles(terms, g.base().shape()));
}

std::vector<RectangleTerm> expand_unit_coefficients(
    const std::vector<RectangleTerm>& terms) {
    std::vector<RectangleTerm> out;
    for (const RectangleTerm& t : terms) {
        RectangleTerm unit = t;
        unit.coeff = sgn(t.coeff) >= 0 ? 1 : -1;
        Int copies = abs(t.coeff);
        for (Int i = 0; i < copies; ++i) out.push_back(unit);
    }
    return out;
}

}  // namespace gridbasis
