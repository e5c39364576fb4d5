#pragma once

#include <string>

#include "json.hpp"

#include "partalg/blocks.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/diagram.hpp"
#include "partalg/element.hpp"
#include "partalg/jm.hpp"
#include "partalg/supersym.hpp"

namespace partalg {

// Insertion order is preserved so serialized output is byte-deterministic
// and fields appear in the documented order.
using Json = nlohmann::ordered_json;

// {"mode":"rational","value":"5/6"} or {"mode":"poly","coeffs":["1","-1/2","3"]}
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"k":5,"blocks":[[1,2,-2,3],[-3],[-1,4,-4],[5,-5]]}; negative = primed.
Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

// {"k":3,"mode":"poly","terms":[{"coeff":["0","1"],"diagram":[[1,-1],...]},...]}
// Rational mode adds a top-level "delta" and stores each coeff as one string.
Json element_to_json(const Element& e);
Element element_from_json(const Json& j);

// {"level":4,"pass":true,"checks":[{"relation":"...","indices":{"i":2},"pass":true},...]}
Json relation_report_to_json(const RelationReport& r);

// {"level":4,"nmax":3,"pass":true,"checks":[{"n":0,"pass":true},...]}
Json centrality_report_to_json(const CentralityReport& r);

// Shapes as plain part lists: [2,1]; the empty shape is [].
Json shape_to_json(const Shape& s);
Shape shape_from_json(const Json& j);

// {"shape":[2,1],"l":0}; the level is implied by the surrounding context.
Json vertex_to_json(const GraphVertex& v);

// A path as the array of its vertices, level 0 first.
Json path_to_json(const BranchPath& p);

// {"a":"-1","b":"-1/2"} meaning the exact value a + b*d.
Json content_to_json(const ContentValue& c);

// {"num":[0,1],"den":[-1,0]}: reduced factor indices of the balanced form.
Json genfun_to_json(const BlockGenFun& g);

// Classes as arrays of vertex objects, preserving enumeration order.
Json block_classes_to_json(const std::vector<std::vector<GraphVertex>>& classes);

}  // namespace partalg
