#pragma once

#include <string>

#include "gridbasis/basis.hpp"
#include "gridbasis/constructions.hpp"
#include "gridbasis/core.hpp"
#include "gridbasis/graphs.hpp"
#include "gridbasis/rectangles.hpp"
#include "gridbasis/search.hpp"

namespace gridbasis {

// Human-readable rendering: points as (x,y,z), weight functions in indicator
// notation like "2*1_(1,1,1) - 1_(2,1,1) + 1_(2,2,2)".

std::string format_point(const Point& p);
std::string format_point_set(const PointSet& m);
std::string format_weight_function(const WeightFunction& w);
std::string format_verdict(const BasisVerdict& v);
std::string format_decomposition(const CoordinateDecomposition& dec);
std::string format_decomposition_result(const DecompositionResult& r);
std::string format_rectangle_term(const RectangleTerm& t, const GridShape& shape);
std::string format_graph_verdict(const GraphVerdict& v);
std::string format_named_family(const NamedFamily& fam);
std::string format_conjecture(const ConjectureResult& r);
std::string format_search_report(const SearchReport& r);

}  // namespace gridbasis
