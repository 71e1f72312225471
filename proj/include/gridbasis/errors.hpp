#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gridbasis {

/// Invalid values, ranges, or malformed input.
struct ValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A layer violates a cardinality or zero-sum requirement of the operation.
struct LayerError : std::invalid_argument {
    int axis;   // 0-based
    int value;  // 1-based
    LayerError(const std::string& msg, int axis_, int value_)
        : std::invalid_argument(msg), axis(axis_), value(value_) {}
};

/// The annihilation space has the wrong dimension for the request.
struct KernelDimensionError : std::invalid_argument {
    int dimension;
    KernelDimensionError(const std::string& msg, int dimension_)
        : std::invalid_argument(msg), dimension(dimension_) {}
};

/// A bipartite connected component blocks edge-weight solving.
struct BipartiteComponentError : std::invalid_argument {
    std::vector<int> component;  // 0-based vertex ids
    BipartiteComponentError(const std::string& msg, std::vector<int> component_)
        : std::invalid_argument(msg), component(std::move(component_)) {}
};

/// Search request beyond the hard-coded desk-scale limits (override with force).
struct FeasibilityError : std::runtime_error {
    std::string estimate;
    FeasibilityError(const std::string& msg, std::string estimate_)
        : std::runtime_error(msg), estimate(std::move(estimate_)) {}
};

}  // namespace gridbasis
