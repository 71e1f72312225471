#pragma once

#include <json.hpp>

#include "gridbasis/basis.hpp"
#include "gridbasis/constructions.hpp"
#include "gridbasis/core.hpp"
#include "gridbasis/graphs.hpp"
#include "gridbasis/rectangles.hpp"
#include "gridbasis/search.hpp"

namespace gridbasis {

/// Key order is part of the output contract (byte-identical runs).
using Json = nlohmann::ordered_json;

// Numbers: integers that fit in 64 bits serialize as JSON numbers, everything
// else (big integers, proper fractions) as strings "p" / "p/q".
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json int_to_json(const Int& x);

// {"d":3,"n":2,"points":[[1,1,1],...]} with "sides":[...] replacing "n" on
// non-uniform grids. Points are emitted in canonical order.
Json to_json(const PointSet& m);
PointSet point_set_from_json(const Json& j);

// PointSet keys plus "values" aligned with "points".
Json to_json(const WeightFunction& w);
WeightFunction weight_function_from_json(const Json& j);

Json to_json(const BasisVerdict& v);
Json to_json(const CoordinateDecomposition& dec);
Json to_json(const DecompositionResult& result);
Json to_json(const TwoColoring& coloring);

// {"axes":[1,3],"values":[[1,2],[1,2]],"fixed":{"2":1},"coeff":-1}; axes and
// fixed keys are 1-based in JSON.
Json to_json(const RectangleTerm& term);
RectangleTerm rectangle_term_from_json(const Json& j);

// {"vertices":4,"edges":[[1,2],...]}; vertex ids are 1-based in JSON, and a
// hypergraph edge may have any positive length.
Json to_json(const MultiGraph& g);
MultiGraph multigraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const GraphVerdict& v);

Json to_json(const NamedFamily& fam);
Json to_json(const ConjectureResult& r);
Json to_json(const SearchWitness& w);
Json to_json(const SizeReport& r);
Json to_json(const SearchReport& r);

/// Strict parse of a whole document; throws ValueError with a diagnostic.
Json parse_json(const std::string& text);

}  // namespace gridbasis
