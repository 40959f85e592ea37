#pragma once

#include <map>
#include <vector>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A generator symbol of the free *-algebra: a vertex, an edge, or a
/// starred edge.
struct RawGen {
  enum class Kind { Vertex, Edge, EdgeStar };
  Kind kind;
  std::uint32_t index;  // vertex or edge index, per kind

  static RawGen vertex(VertexIndex v) { return {Kind::Vertex, v}; }
  static RawGen edge(EdgeIndex e) { return {Kind::Edge, e}; }
  static RawGen edge_star(EdgeIndex e) { return {Kind::EdgeStar, e}; }
};

/// A pre-quotient term: a coefficient times a word of generator symbols.
struct RawTerm {
  Coeff k;
  std::vector<RawGen> word;
};

using RawTermList = std::vector<RawTerm>;

/// A formal combination of walk symbols X_p.
using WalkCombination = std::map<Walk, Coeff>;

/// Applies the shift operators factor by factor to the symbol X_p:
/// an edge prepends when composable, a starred edge strips a leading
/// edge, a vertex projects onto walks originating there. Defined on raw
/// terms only; it does not descend to the quotient algebra.
WalkCombination pi_action(const GraphPtr& g, const RawTermList& terms,
                          const Walk& p);

}  // namespace lpa
