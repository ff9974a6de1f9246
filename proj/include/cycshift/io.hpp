#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cycshift/coxeter.hpp"
#include "cycshift/decomposition.hpp"
#include "cycshift/pieces.hpp"
#include "cycshift/shift_graph.hpp"

namespace cycshift::io {

using Json = nlohmann::ordered_json;

class ParseError : public CoxeterError {
 public:
  using CoxeterError::CoxeterError;
};

/// "1,2,1,3,2"; the empty string and "e" denote the identity.
Word parse_word(std::string_view text);
std::string format_word(const Word& word);

/// "1,3"; "", "∅", "empty" and "none" denote the empty set. "S" or "all"
/// denote every generator.
SimpleSubset parse_subset(std::string_view text, int rank);
std::string format_subset(SimpleSubset subset);

/// "id" or "1:3,2:2,3:1". Validated against the Coxeter matrix.
DiagramAutomorphism parse_automorphism(std::string_view text, const CoxeterGroup& g);
std::string format_automorphism(const DiagramAutomorphism& delta);

Element parse_element(std::string_view text, const CoxeterGroup& g);
std::string format_element(const CoxeterGroup& g, Element w);

/// Subscript notation: s_{12132}; the identity is "1". Letters are comma
/// separated once the rank reaches 10.
std::string subscript_label(const CoxeterGroup& g, Element w);

// JSON ----------------------------------------------------------------------

Json subset_json(SimpleSubset subset);
SimpleSubset subset_from_json(const Json& j, int rank);

Json to_json(const CoxeterGroup& g, const CombinatorialPiece& piece);
CombinatorialPiece piece_from_json(const Json& j, const CoxeterGroup& g);

Json to_json(const CoxeterGroup& g, const ShiftStep& step);
ShiftStep step_from_json(const Json& j, const CoxeterGroup& g);

Json to_json(const CoxeterGroup& g, const PartialDecomposition& d);
PartialDecomposition decomposition_from_json(const Json& j, const CoxeterGroup& g);

Json to_json(const CoxeterGroup& g, const CycCertificate& cert);
CycCertificate certificate_from_json(const Json& j, const CoxeterGroup& g);

Json to_json(const CoxeterGroup& g, const InductionDatum& d);
InductionDatum datum_from_json(const Json& j, const CoxeterGroup& g);

Json to_json(const CoxeterGroup& g, const HasseDiagram& h);

/// Graph restricted to `vertices`; edges leaving the set are dropped.
Json graph_json(const ShiftGraph& graph, const ElementSet& vertices);

// DOT -----------------------------------------------------------------------

std::string graph_dot(const ShiftGraph& graph, const ElementSet& vertices);
/// Bruhat covers solid, extra covers dashed.
std::string hasse_dot(const CoxeterGroup& g, const HasseDiagram& h);

}  // namespace cycshift::io
