#pragma once

#include <optional>
#include <string>

#include "gridbasis/core.hpp"

namespace gridbasis {

/// A generated family instance together with the annihilation function it is
/// built to carry (absent for the basic cross family).
struct NamedFamily {
    std::string tag;  // "cross" | "staircase" | "cross_plus_point" | "unbounded"
    int n = 0;
    int d = 0;
    int m = 0;                       // unbounded parameter, 0 otherwise
    std::optional<Point> added_point;  // cross_plus_point only
    PointSet set;
    std::optional<WeightFunction> claimed_annihilation;
};

/// Union of the d axis arms through (1,...,1): dn - (d-1) points, basic, and
/// of maximum size among basic subsets of [n]^d.
NamedFamily cross_set(int n, int d);

/// The 2n-point minimal non-basic set covering every layer, with its
/// alternating +/-1 annihilation function. Requires n, d >= 2.
NamedFamily staircase_set(int n, int d);

/// cross_set(n, d) plus one point with all coordinates above 1; non-basic but
/// not minimal, carrying the (d-1, 1, -1, ..., -1) annihilation function whose
/// support is a non-basic subset of size d + 2. Requires d >= 2.
NamedFamily cross_plus_point(int n, int d, const Point& x);

/// 6m+2 points in [3m+2]^3 built from three linked 2m-cycles and two hubs;
/// minimal non-basic with irreducible annihilation values 1, -1, -m, m.
NamedFamily unbounded_family(int m);

}  // namespace gridbasis
