#pragma once

#include <map>

#include "lpa/element.hpp"
#include "lpa/graph.hpp"

namespace lpa {

/// A Higman-Thompson representative: a terminal-preserving bijection
/// between two prefix bases, acting on longer walks by rewriting the
/// prefix. A group element is the equivalence class of a representative
/// under common refinement; all operations work through representatives.
class HTRep {
public:
  /// Throws unless domain/image walks form bases and the map is a
  /// terminal-preserving bijection.
  HTRep(GraphPtr g, std::map<Walk, Walk> map);

  static HTRep identity(const GraphPtr& g);

  const GraphPtr& graph() const { return graph_; }
  const std::map<Walk, Walk>& map() const { return map_; }
  PrefixBasis domain() const;
  PrefixBasis codomain() const;
  const Walk& image(const Walk& b) const;

private:
  HTRep() = default;
  GraphPtr graph_;
  std::map<Walk, Walk> map_;

  friend HTRep expand_rep_at(const HTRep& r, const Walk& q);
};

/// Report-valued validation of a candidate map (bases, bijectivity,
/// terminal preservation).
ValidationReport validate_rep(const GraphPtr& g,
                              const std::map<Walk, Walk>& map);

/// Refine the representative at q in its domain: q is replaced by its
/// one-edge extensions and each q.e maps to image(q).e. Same group element.
HTRep expand_rep_at(const HTRep& r, const Walk& q);

/// Apply to a walk in the domain cofinite subspace: p = b.s maps to
/// image(b).s. Throws when p has no prefix in the domain basis.
Walk apply_ht(const HTRep& r, const Walk& p);

HTRep inverse_ht(const HTRep& r);

/// Composition f after g: representatives are refined until g's codomain
/// equals f's domain, then composed pointwise.
HTRep compose_ht(const HTRep& f, const HTRep& g);

/// Equality of the represented group elements (refinement-based).
bool equals_ht(const HTRep& f, const HTRep& g);

/// The embedding into the rooted algebra: the sum of image(b).b* over the
/// domain basis. Constant on equivalence classes and lands in the unitary
/// group.
AlgebraElement embed_ht(const HTRep& r);

/// Merge families q.e whose images share the shape c.e back to q -> c,
/// repeatedly. Cosmetic: the result is equivalent to the input.
HTRep contract_minimal(const HTRep& r);

}  // namespace lpa
