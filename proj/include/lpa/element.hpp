#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

/// Exact coefficient. Integer mode keeps every value in Z; rational mode
/// allows arbitrary rationals (kept in lowest terms by GMP).
using Coeff = mpq_class;

enum class CoeffMode { Integer, Rational };

inline bool is_integer(const Coeff& c) { return c.get_den() == 1; }
std::string coeff_str(const Coeff& c);

/// A product p.q* of a walk and a reversed walk with matching terminals.
/// Rooted elements additionally have both origins at the root, but general
/// elements of the path algebra only need the terminal match.
class Monomial {
public:
  Monomial(Walk left, Walk right);

  const Walk& left() const { return left_; }
  const Walk& right() const { return right_; }
  const GraphPtr& graph() const { return left_.graph(); }
  bool rooted() const;

  bool operator==(const Monomial& o) const {
    return left_ == o.left_ && right_ == o.right_;
  }
  bool operator<(const Monomial& o) const {
    int c = left_.compare(o.left_);
    if (c != 0) return c < 0;
    return right_ < o.right_;
  }

private:
  Walk left_;
  Walk right_;
};

/// A finite exact linear combination of monomials over one graph, identified
/// up to the path-algebra relations. Stored as a map with no zero
/// coefficients; operations are pure and return new values.
class AlgebraElement {
public:
  using Terms = std::map<Monomial, Coeff>;

  explicit AlgebraElement(GraphPtr g, CoeffMode mode = CoeffMode::Integer);
  AlgebraElement(GraphPtr g, Terms terms, CoeffMode mode = CoeffMode::Integer);

  static AlgebraElement zero(GraphPtr g, CoeffMode mode = CoeffMode::Integer);
  static AlgebraElement from_monomial(Monomial m, Coeff k = 1,
                                      CoeffMode mode = CoeffMode::Integer);
  /// The walk w as an element: the monomial w.(empty at T(w))*.
  static AlgebraElement from_walk(const Walk& w,
                                  CoeffMode mode = CoeffMode::Integer);
  static AlgebraElement from_vertex(const GraphPtr& g, VertexIndex v,
                                    CoeffMode mode = CoeffMode::Integer);
  static AlgebraElement from_edge(const GraphPtr& g, EdgeIndex e,
                                  CoeffMode mode = CoeffMode::Integer);
  static AlgebraElement from_edge_star(const GraphPtr& g, EdgeIndex e,
                                       CoeffMode mode = CoeffMode::Integer);

  const GraphPtr& graph() const { return graph_; }
  CoeffMode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  bool is_zero_form() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Max |q| over stored monomials p.q*; 0 for the empty element.
  std::size_t right_degree() const;
  /// True iff every stored walk starts at the root.
  bool rooted() const;
  /// True iff every coefficient is an integer.
  bool integral() const;

  std::vector<Walk> left_walks() const;
  std::vector<Walk> right_walks() const;
  Coeff coeff(const Monomial& m) const;

  AlgebraElement with_mode(CoeffMode m) const;

private:
  GraphPtr graph_;
  CoeffMode mode_;
  Terms terms_;
};

/// Product of two monomials: zero or a single monomial, by the reduction
/// rule for q*.r.
AlgebraElement mul_monomial(const Monomial& m1, const Monomial& m2);

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement neg(const AlgebraElement& x);
AlgebraElement scalar_mul(const Coeff& k, const AlgebraElement& x);
AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y);
/// The involution: reverses every monomial.
AlgebraElement star(const AlgebraElement& x);

/// The unit of the rooted algebra, stored as the sum e.e* over the
/// out-edges of the root.
AlgebraElement unit(const GraphPtr& g, CoeffMode mode = CoeffMode::Integer);

/// Rewrite so that every right walk has length exactly target: each
/// monomial p.q* with |q| < target becomes the sum of (p.s)(q.s)* over all
/// extensions s of the matching length. Throws if target is below the
/// current right degree. Value-preserving.
AlgebraElement expand_right(const AlgebraElement& x, std::size_t target);

/// Exact equality in the algebra.
bool equals_elements(const AlgebraElement& x, const AlgebraElement& y);
/// True iff x is the zero element of the algebra.
bool is_zero_element(const AlgebraElement& x);

/// Normal form: expand to the right degree, then contract complete
/// one-edge families level by level from the top. Two elements are equal
/// iff their canonical forms are identical term maps.
AlgebraElement canonical(const AlgebraElement& x);

/// Rewrite x so that every left walk lies in B. Requires every left walk
/// of x to be a prefix of some element of B.
AlgebraElement left_basis_form(const AlgebraElement& x, const PrefixBasis& b);

/// The probe sum over monomials (m, n) with both walks prefixes of p.
/// Requires that p is not a proper prefix of any walk appearing in x.
Coeff lemma5_probe(const AlgebraElement& x, const Walk& p);

struct BasicWitness {
  PrefixBasis left;
  PrefixBasis right;
};

/// Bounded search for a two-basis representation: left walks inside a
/// basis and right walks inside another. Explores left-cover bases up to
/// the given number of simple expansions; nullopt means "unknown", not a
/// proof of non-basicness.
std::optional<BasicWitness> is_basic_up_to(const AlgebraElement& x,
                                           std::size_t depth);

}  // namespace lpa
