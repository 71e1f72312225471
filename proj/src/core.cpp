#include "gridbasis/core.hpp"

#include <algorithm>
#include <string>

#include "gridbasis/errors.hpp"

namespace gridbasis {

GridShape::GridShape(std::vector<int> sides) : sides_(std::move(sides)) {
    if (sides_.empty()) throw ValueError("grid needs at least one axis");
    for (size_t i = 0; i < sides_.size(); ++i)
        if (sides_[i] < 1)
            throw ValueError("side of axis " + std::to_string(i + 1) +
                             " must be at least 1");
}

GridShape GridShape::uniform(int d, int n) {
    if (d < 1) throw ValueError("d must be at least 1");
    if (n < 1) throw ValueError("n must be at least 1");
    return GridShape(std::vector<int>(static_cast<size_t>(d), n));
}

int GridShape::side(int axis) const {
    if (axis < 0 || axis >= dim())
        throw ValueError("axis " + std::to_string(axis + 1) + " out of range");
    return sides_[static_cast<size_t>(axis)];
}

bool GridShape::is_uniform() const {
    return std::all_of(sides_.begin(), sides_.end(),
                       [&](int s) { return s == sides_[0]; });
}

int GridShape::uniform_side() const {
    if (!is_uniform()) throw ValueError("grid sides are not uniform");
    return sides_[0];
}

int GridShape::layer_count() const {
    int total = 0;
    for (int s : sides_) total += s;
    return total;
}

int GridShape::layer_index(Layer layer) const {
    if (layer.axis < 0 || layer.axis >= dim() || layer.value < 1 ||
        layer.value > side(layer.axis))
        throw ValueError("layer (axis " + std::to_string(layer.axis + 1) +
                         ", value " + std::to_string(layer.value) +
                         ") out of range");
    int offset = 0;
    for (int i = 0; i < layer.axis; ++i) offset += sides_[static_cast<size_t>(i)];
    return offset + layer.value - 1;
}

Layer GridShape::layer_at(int index) const {
    int rest = index;
    for (int i = 0; i < dim(); ++i) {
        if (rest < sides_[static_cast<size_t>(i)]) return Layer{i, rest + 1};
        rest -= sides_[static_cast<size_t>(i)];
    }
    throw ValueError("layer index " + std::to_string(index) + " out of range");
}

long long GridShape::cell_count() const {
    long long total = 1;
    for (int s : sides_) total *= s;
    return total;
}

namespace {

void check_point(const GridShape& shape, const Point& p, size_t position) {
    const std::string where = "points[" + std::to_string(position) + "]";
    if (p.dim() != shape.dim())
        throw ValueError(where + ": expected " + std::to_string(shape.dim()) +
                         " coordinates, got " + std::to_string(p.dim()));
    for (int i = 0; i < p.dim(); ++i) {
        const int c = p[i];
        if (c < 1 || c > shape.side(i)) {
            std::string msg = where + "[" + std::to_string(i + 1) +
                              "] = " + std::to_string(c) + ": must lie in [1, " +
                              std::to_string(shape.side(i)) + "]";
            if (c == 0) msg += " (coordinates are 1-indexed)";
            throw ValueError(msg);
        }
    }
}

}  // namespace

PointSet::PointSet(GridShape shape, std::vector<Point> points)
    : shape_(std::move(shape)), points_(std::move(points)) {
    for (size_t i = 0; i < points_.size(); ++i) check_point(shape_, points_[i], i);
    std::sort(points_.begin(), points_.end());
    const auto dup = std::adjacent_find(points_.begin(), points_.end());
    if (dup != points_.end()) {
        std::string msg = "duplicate point (";
        for (int i = 0; i < dup->dim(); ++i)
            msg += (i ? "," : "") + std::to_string((*dup)[i]);
        throw ValueError(msg + ")");
    }
}

PointSet PointSet::from_sorted_unique(GridShape shape, std::vector<Point> points) {
    PointSet m;
    m.shape_ = std::move(shape);
    m.points_ = std::move(points);
    return m;
}

bool PointSet::contains(const Point& p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

int PointSet::index_of(const Point& p) const {
    const auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || *it != p) return -1;
    return static_cast<int>(it - points_.begin());
}

WeightFunction::WeightFunction(PointSet base, std::vector<Rat> values)
    : base_(std::move(base)), values_(std::move(values)) {
    if (values_.size() != base_.points().size())
        throw ValueError("expected " + std::to_string(base_.points().size()) +
                         " values, got " + std::to_string(values_.size()));
}

const Rat& WeightFunction::value_at(const Point& p) const {
    const int idx = base_.index_of(p);
    if (idx < 0) throw ValueError("point not in the base set");
    return values_[static_cast<size_t>(idx)];
}

Rat WeightFunction::value_or_zero(const Point& p) const {
    const int idx = base_.index_of(p);
    if (idx < 0) return Rat(0);
    return values_[static_cast<size_t>(idx)];
}

bool WeightFunction::integer_valued() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Rat& q) { return is_integer(q); });
}

PointSet WeightFunction::support() const {
    std::vector<Point> pts;
    for (size_t i = 0; i < values_.size(); ++i)
        if (values_[i] != 0) pts.push_back(base_.points()[i]);
    return PointSet::from_sorted_unique(base_.shape(), std::move(pts));
}

WeightFunction weight_from_pairs(const GridShape& shape,
                                 std::vector<std::pair<Point, Rat>> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Point> pts;
    std::vector<Rat> vals;
    pts.reserve(pairs.size());
    vals.reserve(pairs.size());
    for (auto& [p, v] : pairs) {
        pts.push_back(std::move(p));
        vals.push_back(std::move(v));
    }
    return WeightFunction(PointSet(shape, std::move(pts)), std::move(vals));
}

std::vector<Point> layer_members(const PointSet& m, Layer layer) {
    m.shape().layer_index(layer);  // validates the layer
    std::vector<Point> out;
    for (const Point& p : m.points())
        if (p[layer.axis] == layer.value) out.push_back(p);
    return out;
}

bool covers_all_layers(const PointSet& m) {
    std::vector<char> seen(static_cast<size_t>(m.shape().layer_count()), 0);
    for (const Point& p : m.points())
        for (int i = 0; i < m.shape().dim(); ++i)
            seen[static_cast<size_t>(m.shape().layer_index({i, p[i]}))] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

std::vector<Rat> layer_sums(const WeightFunction& w) {
    const GridShape& shape = w.base().shape();
    std::vector<Rat> sums(static_cast<size_t>(shape.layer_count()), Rat(0));
    const auto& pts = w.base().points();
    for (size_t j = 0; j < pts.size(); ++j)
        for (int i = 0; i < shape.dim(); ++i)
            sums[static_cast<size_t>(shape.layer_index({i, pts[j][i]}))] +=
                w.values()[j];
    return sums;
}

bool is_annihilation(const WeightFunction& w) {
    return !violated_layer(w).has_value();
}

std::optional<Layer> violated_layer(const WeightFunction& w) {
    const std::vector<Rat> sums = layer_sums(w);
    for (size_t idx = 0; idx < sums.size(); ++idx)
        if (sums[idx] != 0) return w.base().shape().layer_at(static_cast<int>(idx));
    return std::nullopt;
}

bool equal_as_grid_functions(const WeightFunction& a, const WeightFunction& b) {
    if (a.base().shape() != b.base().shape()) return false;
    for (size_t i = 0; i < a.base().points().size(); ++i)
        if (a.values()[i] != b.value_or_zero(a.base().points()[i])) return false;
    for (size_t i = 0; i < b.base().points().size(); ++i)
        if (b.values()[i] != a.value_or_zero(b.base().points()[i])) return false;
    return true;
}

}  // namespace gridbasis
