#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include "gridbasis/numbers.hpp"

namespace gridbasis {

// Conventions used throughout:
//   - coordinate values are 1-based, i.e. each coordinate lies in {1,...,n_i};
//   - axes are 0-based in this API (the JSON and text formats are 1-based).

/// The hyperplane x_axis = value.
struct Layer {
    int axis = 0;   // 0-based
    int value = 1;  // 1-based
    auto operator<=>(const Layer&) const = default;
};

/// Dimensions of a finite grid, one side length per axis.
class GridShape {
public:
    GridShape() = default;
    explicit GridShape(std::vector<int> sides);
    static GridShape uniform(int d, int n);

    int dim() const { return static_cast<int>(sides_.size()); }
    int side(int axis) const;
    const std::vector<int>& sides() const { return sides_; }

    bool is_uniform() const;
    int uniform_side() const;  // throws ValueError when sides differ

    /// n_1 + ... + n_d, the number of layers (= columns of an incidence matrix).
    int layer_count() const;

    /// Axis-major layer order: (0,1),...,(0,n_1),(1,1),...
    int layer_index(Layer layer) const;
    Layer layer_at(int index) const;

    long long cell_count() const;  // product of sides

    bool operator==(const GridShape&) const = default;

private:
    std::vector<int> sides_;
};

struct Point {
    std::vector<int> coords;  // 1-based values

    Point() = default;
    explicit Point(std::vector<int> c) : coords(std::move(c)) {}
    Point(std::initializer_list<int> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    int operator[](int axis) const { return coords[static_cast<size_t>(axis)]; }

    auto operator<=>(const Point&) const = default;
};

/// A finite set of grid points in canonical (lexicographic) order.
class PointSet {
public:
    PointSet() = default;

    /// Sorts into canonical order; rejects duplicates and out-of-grid points.
    PointSet(GridShape shape, std::vector<Point> points);

    /// Fast path for enumeration; the caller guarantees the invariants.
    static PointSet from_sorted_unique(GridShape shape, std::vector<Point> points);

    const GridShape& shape() const { return shape_; }
    const std::vector<Point>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    bool empty() const { return points_.empty(); }

    bool contains(const Point& p) const;
    /// Position in canonical order, or -1 when absent.
    int index_of(const Point& p) const;

    bool operator==(const PointSet&) const = default;

private:
    GridShape shape_;
    std::vector<Point> points_;  // sorted, unique
};

/// An exact value attached to every point of a set, aligned with its order.
class WeightFunction {
public:
    WeightFunction() = default;
    WeightFunction(PointSet base, std::vector<Rat> values);

    const PointSet& base() const { return base_; }
    const std::vector<Rat>& values() const { return values_; }
    const Rat& value_at(const Point& p) const;  // throws ValueError when absent
    /// Value with zero extension off the base set.
    Rat value_or_zero(const Point& p) const;

    bool integer_valued() const;
    PointSet support() const;

    bool operator==(const WeightFunction&) const = default;

private:
    PointSet base_;
    std::vector<Rat> values_;
};

/// Builds a weight function from unordered (point, value) pairs.
WeightFunction weight_from_pairs(const GridShape& shape,
                                 std::vector<std::pair<Point, Rat>> pairs);

/// Points of M lying in L, in canonical order. Throws on an invalid layer.
std::vector<Point> layer_members(const PointSet& m, Layer layer);

/// True iff every layer of the grid meets M.
bool covers_all_layers(const PointSet& m);

/// Sum of w over each layer, indexed by GridShape::layer_index.
std::vector<Rat> layer_sums(const WeightFunction& w);

/// True iff every layer sum is zero.
bool is_annihilation(const WeightFunction& w);

/// First layer (in axis-major order) with a nonzero sum, if any.
std::optional<Layer> violated_layer(const WeightFunction& w);

/// Pointwise equality as functions on the grid (zero extension off supports).
bool equal_as_grid_functions(const WeightFunction& a, const WeightFunction& b);

}  // namespace gridbasis
