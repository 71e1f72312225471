#include "gridbasis/basis.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gridbasis/errors.hpp"

namespace gridbasis {

namespace {

std::string layer_name(Layer layer) {
    return "(axis " + std::to_string(layer.axis + 1) + ", value " +
           std::to_string(layer.value) + ")";
}

WeightFunction kernel_vector_as_weights(const PointSet& m,
                                        const std::vector<Int>& v) {
    std::vector<Rat> values;
    values.reserve(v.size());
    for (const Int& x : v) values.emplace_back(x);
    return WeightFunction(m, std::move(values));
}

}  // namespace

Rat CoordinateDecomposition::evaluate(const Point& p) const {
    Rat s(0);
    for (int i = 0; i < shape.dim(); ++i)
        s += tables[static_cast<size_t>(i)][static_cast<size_t>(p[i] - 1)];
    return s;
}

ExactMatrix incidence_matrix(const PointSet& m) {
    const GridShape& shape = m.shape();
    ExactMatrix a(m.size(), shape.layer_count());
    for (int r = 0; r < m.size(); ++r) {
        const Point& p = m.points()[static_cast<size_t>(r)];
        for (int i = 0; i < shape.dim(); ++i)
            a.at(r, shape.layer_index({i, p[i]})) = 1;
    }
    return a;
}

BasisVerdict is_basic(const PointSet& m) {
    const Elimination e = bareiss_eliminate(incidence_matrix(m));
    BasisVerdict verdict;
    verdict.rank = e.rank;
    verdict.basic = e.rank == m.size();
    if (!verdict.basic) {
        std::vector<Int> v = e.transform.row(e.rank);
        make_primitive(v);
        verdict.certificate = kernel_vector_as_weights(m, v);
    }
    return verdict;
}

std::vector<WeightFunction> annihilation_basis(const PointSet& m) {
    const KernelBasis kernel = left_kernel_primitive(incidence_matrix(m));
    std::vector<WeightFunction> out;
    out.reserve(kernel.vectors.size());
    for (const auto& v : kernel.vectors)
        out.push_back(kernel_vector_as_weights(m, v));
    return out;
}

WeightFunction irreducible_annihilation(const PointSet& m) {
    const KernelBasis kernel = left_kernel_primitive(incidence_matrix(m));
    const int dim = static_cast<int>(kernel.vectors.size());
    if (dim == 0)
        throw KernelDimensionError("the set is basic: no annihilation function", 0);
    if (dim > 1)
        throw KernelDimensionError(
            "annihilation space has dimension " + std::to_string(dim) +
                "; the irreducible annihilation function is not unique",
            dim);
    return kernel_vector_as_weights(m, kernel.vectors[0]);
}

bool is_minimal_nonbasic(const PointSet& m) {
    if (is_basic(m).basic) return false;
    // Deleting one point at a time suffices: subsets of basic sets are basic.
    for (int skip = 0; skip < m.size(); ++skip) {
        std::vector<Point> rest;
        rest.reserve(static_cast<size_t>(m.size() - 1));
        for (int i = 0; i < m.size(); ++i)
            if (i != skip) rest.push_back(m.points()[static_cast<size_t>(i)]);
        if (!is_basic(PointSet::from_sorted_unique(m.shape(), std::move(rest))).basic)
            return false;
    }
    return true;
}

PointSet greedy_singleton_filter(const PointSet& m) {
    const GridShape& shape = m.shape();
    std::vector<Point> pts = m.points();
    while (!pts.empty()) {
        std::vector<int> count(static_cast<size_t>(shape.layer_count()), 0);
        for (const Point& p : pts)
            for (int i = 0; i < shape.dim(); ++i)
                ++count[static_cast<size_t>(shape.layer_index({i, p[i]}))];
        // Deleting all current singleton-layer points at once is equivalent to
        // deleting them one by one: removing one cannot un-singleton another.
        std::vector<Point> keep;
        for (const Point& p : pts) {
            bool alone = false;
            for (int i = 0; i < shape.dim() && !alone; ++i)
                alone = count[static_cast<size_t>(shape.layer_index({i, p[i]}))] == 1;
            if (!alone) keep.push_back(p);
        }
        if (keep.size() == pts.size()) break;
        pts = std::move(keep);
    }
    return PointSet::from_sorted_unique(shape, std::move(pts));
}

bool is_basic_2d_fast(const PointSet& m) {
    if (m.shape().dim() != 2)
        throw ValueError("the closed-array criterion needs d = 2, got d = " +
                         std::to_string(m.shape().dim()));
    // Union-find over row values + column values; a point is an edge. Distinct
    // points never produce parallel edges in 2D, so one cycle test suffices.
    const int n0 = m.shape().side(0);
    const int n1 = m.shape().side(1);
    std::vector<int> parent(static_cast<size_t>(n0 + n1));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const Point& p : m.points()) {
        const int u = find(p[0] - 1);
        const int v = find(n0 + p[1] - 1);
        if (u == v) return false;  // closed array
        parent[static_cast<size_t>(u)] = v;
    }
    return true;
}

DecompositionResult solve_additive_decomposition(const PointSet& m,
                                                 const WeightFunction& f) {
    if (f.base() != m)
        throw ValueError("weight function is not aligned with the point set");
    const GridShape& shape = m.shape();
    SolveOutcome outcome = solve_with_certificate(incidence_matrix(m), f.values());

    DecompositionResult result;
    result.pairing = 0;
    if (!outcome.solution) {
        WeightFunction g = kernel_vector_as_weights(m, *outcome.certificate);
        Rat pairing(0);
        for (size_t i = 0; i < g.values().size(); ++i)
            pairing += g.values()[i] * f.values()[i];
        result.certificate = std::move(g);
        result.pairing = pairing;
        return result;
    }

    CoordinateDecomposition dec;
    dec.shape = shape;
    dec.tables.resize(static_cast<size_t>(shape.dim()));
    for (int i = 0; i < shape.dim(); ++i) {
        auto& table = dec.tables[static_cast<size_t>(i)];
        table.resize(static_cast<size_t>(shape.side(i)));
        for (int v = 1; v <= shape.side(i); ++v)
            table[static_cast<size_t>(v - 1)] =
                (*outcome.solution)[static_cast<size_t>(shape.layer_index({i, v}))];
    }
    // Constants shift freely between axes; anchor tables[i][0] = 0 for every
    // axis but the last to make the output canonical.
    const int d = shape.dim();
    for (int i = 0; i + 1 < d; ++i) {
        const Rat c = dec.tables[static_cast<size_t>(i)][0];
        if (c == 0) continue;
        for (Rat& x : dec.tables[static_cast<size_t>(i)]) x -= c;
        for (Rat& x : dec.tables[static_cast<size_t>(d - 1)]) x += c;
    }
    result.decomposition = std::move(dec);
    return result;
}

std::optional<TwoColoring> two_coloring_criterion(const PointSet& m) {
    const GridShape& shape = m.shape();
    std::vector<int> count(static_cast<size_t>(shape.layer_count()), 0);
    for (const Point& p : m.points())
        for (int i = 0; i < shape.dim(); ++i)
            ++count[static_cast<size_t>(shape.layer_index({i, p[i]}))];
    for (int idx = 0; idx < shape.layer_count(); ++idx) {
        const int c = count[static_cast<size_t>(idx)];
        if (c != 0 && c != 2) {
            const Layer layer = shape.layer_at(idx);
            throw LayerError("layer " + layer_name(layer) + " contains " +
                                 std::to_string(c) + " points; need 0 or 2",
                             layer.axis, layer.value);
        }
    }

    const BasisVerdict verdict = is_basic(m);
    if (verdict.basic) return std::nullopt;

    // With two points per nonempty layer, the signs of any annihilation
    // function already balance every layer.
    const WeightFunction& f = *verdict.certificate;
    std::vector<Point> pts;
    std::vector<int> colors;
    for (size_t i = 0; i < f.values().size(); ++i) {
        const int s = sgn(f.values()[i]);
        if (s == 0) continue;
        pts.push_back(m.points()[i]);
        colors.push_back(s);
    }
    return TwoColoring{PointSet::from_sorted_unique(shape, std::move(pts)),
                       std::move(colors)};
}

}  // namespace gridbasis
