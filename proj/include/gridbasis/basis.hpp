#pragma once

#include <optional>
#include <vector>

#include "gridbasis/core.hpp"
#include "gridbasis/exactlin.hpp"

namespace gridbasis {

/// Decision with a machine-checkable certificate: either the incidence rows
/// are independent (rank == |M|, so every right-hand side is solvable) or a
/// verified nonzero annihilation function witnesses the dependence.
struct BasisVerdict {
    bool basic = true;
    int rank = 0;
    std::optional<WeightFunction> certificate;  // present iff !basic
};

/// Per-axis value tables realizing f(x) = sum_i tables[i][x_i - 1].
struct CoordinateDecomposition {
    GridShape shape;
    std::vector<std::vector<Rat>> tables;
    Rat evaluate(const Point& p) const;
};

struct DecompositionResult {
    std::optional<CoordinateDecomposition> decomposition;
    /// On failure: an annihilation function g with <g, f> != 0.
    std::optional<WeightFunction> certificate;
    Rat pairing;  // <g, f> when infeasible, 0 otherwise
};

/// Subset K with a red/blue coloring balanced on every layer.
struct TwoColoring {
    PointSet subset;
    std::vector<int> colors;  // +1 red / -1 blue, aligned with subset order
};

/// |M| x layer_count 0/1 matrix; row of point p has ones exactly in the
/// columns of p's layers (axis-major column order).
ExactMatrix incidence_matrix(const PointSet& m);

BasisVerdict is_basic(const PointSet& m);

/// Primitive integer basis of all annihilation functions; empty iff basic.
std::vector<WeightFunction> annihilation_basis(const PointSet& m);

/// The unique primitive sign-normalized annihilation function. Throws
/// KernelDimensionError unless the annihilation space is one-dimensional.
WeightFunction irreducible_annihilation(const PointSet& m);

/// True iff M is non-basic and every single-point deletion is basic.
bool is_minimal_nonbasic(const PointSet& m);

/// Repeatedly deletes points that are alone in some layer. An empty residual
/// proves M basic; a nonempty one proves nothing.
PointSet greedy_singleton_filter(const PointSet& m);

/// d = 2 only: basic iff the row/column bipartite multigraph is acyclic.
bool is_basic_2d_fast(const PointSet& m);

/// Solves the layer system for f on M; on success the tables are normalized
/// so that tables[i][0] = 0 for every axis i except the last.
DecompositionResult solve_additive_decomposition(const PointSet& m,
                                                 const WeightFunction& f);

/// Requires every grid layer to contain 0 or 2 points of M (LayerError
/// otherwise). Returns nullopt when M is basic, else a balanced coloring.
std::optional<TwoColoring> two_coloring_criterion(const PointSet& m);

}  // namespace gridbasis
