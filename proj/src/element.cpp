#include "lpa/element.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace lpa {

std::string coeff_str(const Coeff& c) {
  return c.get_str();
}

Monomial::Monomial(Walk left, Walk right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.graph() != right_.graph())
    throw Error("monomial: walks on different graphs");
  if (left_.terminus() != right_.terminus())
    throw Error("monomial: terminal mismatch between '" + left_.str() +
                "' and '" + right_.str() + "'");
}

bool Monomial::rooted() const {
  VertexIndex r = graph()->root();
  return left_.origin() == r && right_.origin() == r;
}

AlgebraElement::AlgebraElement(GraphPtr g, CoeffMode mode)
    : graph_(std::move(g)), mode_(mode) {}

AlgebraElement::AlgebraElement(GraphPtr g, Terms terms, CoeffMode mode)
    : graph_(std::move(g)), mode_(mode) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.graph() != graph_)
      throw Error("element: monomial on a different graph");
    if (mode_ == CoeffMode::Integer && !is_integer(it->second))
      throw Error("element: non-integer coefficient in integer mode");
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
  terms_ = std::move(terms);
}

AlgebraElement AlgebraElement::zero(GraphPtr g, CoeffMode mode) {
  return AlgebraElement(std::move(g), mode);
}

AlgebraElement AlgebraElement::from_monomial(Monomial m, Coeff k,
                                             CoeffMode mode) {
  Terms t;
  GraphPtr g = m.graph();
  if (k != 0) t.emplace(std::move(m), std::move(k));
  return AlgebraElement(std::move(g), std::move(t), mode);
}

AlgebraElement AlgebraElement::from_walk(const Walk& w, CoeffMode mode) {
  return from_monomial(Monomial(w, Walk(w.graph(), w.terminus())), 1, mode);
}

AlgebraElement AlgebraElement::from_vertex(const GraphPtr& g, VertexIndex v,
                                           CoeffMode mode) {
  return from_walk(Walk(g, v), mode);
}

AlgebraElement AlgebraElement::from_edge(const GraphPtr& g, EdgeIndex e,
                                         CoeffMode mode) {
  return from_walk(Walk(g, std::vector<EdgeIndex>{e}), mode);
}

AlgebraElement AlgebraElement::from_edge_star(const GraphPtr& g, EdgeIndex e,
                                              CoeffMode mode) {
  Walk we(g, std::vector<EdgeIndex>{e});
  return from_monomial(Monomial(Walk(g, g->terminus(e)), std::move(we)), 1,
                       mode);
}

std::size_t AlgebraElement::right_degree() const {
  std::size_t d = 0;
  for (const auto& [m, k] : terms_) d = std::max(d, m.right().length());
  return d;
}

bool AlgebraElement::rooted() const {
  for (const auto& [m, k] : terms_)
    if (!m.rooted()) return false;
  return true;
}

bool AlgebraElement::integral() const {
  for (const auto& [m, k] : terms_)
    if (!is_integer(k)) return false;
  return true;
}

std::vector<Walk> AlgebraElement::left_walks() const {
  std::vector<Walk> out;
  for (const auto& [m, k] : terms_)
    if (std::find(out.begin(), out.end(), m.left()) == out.end())
      out.push_back(m.left());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Walk> AlgebraElement::right_walks() const {
  std::vector<Walk> out;
  for (const auto& [m, k] : terms_)
    if (std::find(out.begin(), out.end(), m.right()) == out.end())
      out.push_back(m.right());
  std::sort(out.begin(), out.end());
  return out;
}

Coeff AlgebraElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff(0) : it->second;
}

AlgebraElement AlgebraElement::with_mode(CoeffMode m) const {
  if (m == CoeffMode::Integer && !integral())
    throw Error("element: non-integer coefficients cannot enter integer mode");
  return AlgebraElement(graph_, terms_, m);
}

namespace {

void check_compatible(const AlgebraElement& x, const AlgebraElement& y,
                      const char* op) {
  if (x.graph() != y.graph())
    throw Error(std::string(op) + ": elements on different graphs");
  if (x.mode() != y.mode())
    throw Error(std::string(op) + ": elements in different coefficient modes");
}

void accumulate(AlgebraElement::Terms& t, Monomial m, const Coeff& k) {
  if (k == 0) return;
  auto [it, fresh] = t.emplace(std::move(m), k);
  if (!fresh) {
    it->second += k;
    if (it->second == 0) t.erase(it);
  }
}

// (p q*)(r s*) reduced by the case rule for q*.r; nullopt means zero.
std::optional<Monomial> mul_monomial_raw(const Monomial& m1,
                                         const Monomial& m2) {
  PrefixCompare c = prefix_compare(m1.right(), m2.left());
  switch (c.order) {
    case PrefixOrder::Equal:
      return Monomial(m1.left(), m2.right());
    case PrefixOrder::PProperPrefix:  // r = q.u
      return Monomial(concat_walks(m1.left(), *c.residual), m2.right());
    case PrefixOrder::QProperPrefix:  // q = r.u
      return Monomial(m1.left(), concat_walks(m2.right(), *c.residual));
    case PrefixOrder::Incomparable:
      return std::nullopt;
  }
  return std::nullopt;
}

Walk strip_last(const Walk& w) {
  if (w.empty()) throw Error("strip_last: empty walk");
  if (w.length() == 1) return Walk(w.graph(), w.origin());
  std::vector<EdgeIndex> es(w.edges().begin(), w.edges().end() - 1);
  return Walk(w.graph(), std::move(es));
}

// One top-down pass contracting every complete one-edge family with a
// common coefficient:
//   { (p.e)(q.e)* : e out of T(q) }  ->  p q*.
// For any term map representing zero this empties the map: the top level
// of a zero map is exactly the one-step expansion of a lower-level map, so
// it decomposes into complete equal-coefficient families, and induction
// carries the argument down the levels.
void contract_sweep(AlgebraElement::Terms& t, const GraphPtr& g) {
  std::size_t lmax = 0;
  for (const auto& [m, k] : t) lmax = std::max(lmax, m.right().length());
  for (std::size_t level = lmax; level >= 1; --level) {
    std::map<Monomial, std::map<EdgeIndex, Coeff>> groups;
    for (const auto& [m, k] : t) {
      if (m.right().length() != level || m.left().empty()) continue;
      EdgeIndex e = m.left().edges().back();
      if (e != m.right().edges().back()) continue;
      Monomial parent(strip_last(m.left()), strip_last(m.right()));
      groups[parent][e] = k;
    }
    for (const auto& [parent, members] : groups) {
      const auto& need = g->out_edges(parent.right().terminus());
      if (members.size() != need.size()) continue;
      bool complete = true;
      const Coeff& common = members.begin()->second;
      for (EdgeIndex e : need) {
        auto it = members.find(e);
        if (it == members.end() || it->second != common) {
          complete = false;
          break;
        }
      }
      if (!complete) continue;
      for (EdgeIndex e : need)
        t.erase(Monomial(extend(parent.left(), e), extend(parent.right(), e)));
      accumulate(t, parent, common);
    }
  }
}

}  // namespace

AlgebraElement mul_monomial(const Monomial& m1, const Monomial& m2) {
  if (m1.graph() != m2.graph())
    throw Error("mul_monomial: monomials on different graphs");
  auto r = mul_monomial_raw(m1, m2);
  if (!r) return AlgebraElement::zero(m1.graph());
  return AlgebraElement::from_monomial(*r);
}

AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) {
  check_compatible(x, y, "add");
  AlgebraElement::Terms t = x.terms();
  for (const auto& [m, k] : y.terms()) accumulate(t, m, k);
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

AlgebraElement neg(const AlgebraElement& x) {
  AlgebraElement::Terms t;
  for (const auto& [m, k] : x.terms()) t.emplace(m, -k);
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

AlgebraElement sub(const AlgebraElement& x, const AlgebraElement& y) {
  return add(x, neg(y));
}

AlgebraElement scalar_mul(const Coeff& k, const AlgebraElement& x) {
  if (x.mode() == CoeffMode::Integer && !is_integer(k))
    throw Error("scalar_mul: non-integer scalar in integer mode");
  AlgebraElement::Terms t;
  if (k != 0)
    for (const auto& [m, c] : x.terms()) t.emplace(m, k * c);
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

AlgebraElement mul(const AlgebraElement& x, const AlgebraElement& y) {
  check_compatible(x, y, "mul");
  AlgebraElement::Terms t;
  for (const auto& [m1, k1] : x.terms())
    for (const auto& [m2, k2] : y.terms())
      if (auto r = mul_monomial_raw(m1, m2)) accumulate(t, *r, k1 * k2);
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement::Terms t;
  for (const auto& [m, k] : x.terms())
    t.emplace(Monomial(m.right(), m.left()), k);
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

AlgebraElement unit(const GraphPtr& g, CoeffMode mode) {
  AlgebraElement::Terms t;
  for (EdgeIndex e : g->out_edges(g->root())) {
    Walk w(g, std::vector<EdgeIndex>{e});
    t.emplace(Monomial(w, w), 1);
  }
  if (t.empty()) throw Error("unit: the root is a sink");
  return AlgebraElement(g, std::move(t), mode);
}

AlgebraElement expand_right(const AlgebraElement& x, std::size_t target) {
  if (target < x.right_degree())
    throw Error("expand_right: target below the current right degree");
  AlgebraElement::Terms t;
  const GraphPtr& g = x.graph();
  for (const auto& [m, k] : x.terms()) {
    std::size_t missing = target - m.right().length();
    if (missing == 0) {
      accumulate(t, m, k);
      continue;
    }
    for (const Walk& s : walks_from(g, m.right().terminus(), missing))
      accumulate(t, Monomial(concat_walks(m.left(), s),
                             concat_walks(m.right(), s)),
                 k);
  }
  return AlgebraElement(g, std::move(t), x.mode());
}

bool is_zero_element(const AlgebraElement& x) {
  AlgebraElement::Terms t = x.terms();
  contract_sweep(t, x.graph());
  return t.empty();
}

bool equals_elements(const AlgebraElement& x, const AlgebraElement& y) {
  check_compatible(x, y, "equals_elements");
  return is_zero_element(sub(x, y));
}

AlgebraElement canonical(const AlgebraElement& x) {
  // Pre-contract to keep the uniform expansion level low; the normal form
  // is representation independent, so this does not change the result.
  AlgebraElement::Terms pre = x.terms();
  contract_sweep(pre, x.graph());
  AlgebraElement small(x.graph(), std::move(pre), x.mode());
  AlgebraElement expanded = expand_right(small, small.right_degree());
  AlgebraElement::Terms t = expanded.terms();
  contract_sweep(t, x.graph());
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

AlgebraElement left_basis_form(const AlgebraElement& x, const PrefixBasis& b) {
  if (x.graph() != b.graph())
    throw Error("left_basis_form: basis on a different graph");
  AlgebraElement::Terms t;
  for (const auto& [m, k] : x.terms()) {
    bool covered = false;
    for (const Walk& bw : b.walks()) {
      PrefixCompare c = prefix_compare(m.left(), bw);
      if (c.order == PrefixOrder::Equal || c.order == PrefixOrder::PProperPrefix) {
        covered = true;
        const Walk& r = *c.residual;
        accumulate(t, Monomial(concat_walks(m.left(), r),
                               concat_walks(m.right(), r)),
                   k);
      }
    }
    if (!covered)
      throw Error("left_basis_form: left walk '" + m.left().str() +
                  "' is not covered by the basis");
  }
  return AlgebraElement(x.graph(), std::move(t), x.mode());
}

Coeff lemma5_probe(const AlgebraElement& x, const Walk& p) {
  for (const auto& [m, k] : x.terms()) {
    for (const Walk* w : {&m.left(), &m.right()})
      if (prefix_compare(p, *w).order == PrefixOrder::PProperPrefix)
        throw Error("lemma5_probe: probe walk '" + p.str() +
                    "' is a proper prefix of '" + w->str() + "'");
  }
  Coeff sum = 0;
  for (const auto& [m, k] : x.terms())
    if (is_prefix(m.left(), p) && is_prefix(m.right(), p)) sum += k;
  return sum;
}

namespace {

// Extend an independent set of root walks to a basis by adding every
// deepest-level walk that misses the set.
PrefixBasis complete_to_basis(const GraphPtr& g, const std::vector<Walk>& s) {
  std::size_t cap = 0;
  for (const Walk& w : s) cap = std::max(cap, w.length());
  std::vector<Walk> out = s;
  for (const Walk& w : walks_from(g, g->root(), cap)) {
    bool covered = false;
    for (const Walk& b : s)
      if (is_prefix(b, w)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(w);
  }
  return PrefixBasis(g, std::move(out));
}

bool pairwise_independent(const std::vector<Walk>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (prefix_compare(s[i], s[j]).order != PrefixOrder::Incomparable)
        return false;
  return true;
}

std::string basis_key(const PrefixBasis& b) {
  std::string k;
  for (const Walk& w : b.walks()) {
    k += w.str();
    k += '|';
  }
  return k;
}

}  // namespace

std::optional<BasicWitness> is_basic_up_to(const AlgebraElement& x,
                                           std::size_t depth) {
  if (!x.rooted()) return std::nullopt;
  AlgebraElement rep = canonical(x);
  const GraphPtr& g = x.graph();
  if (rep.is_zero_form())
    return BasicWitness{PrefixBasis::trivial(g), PrefixBasis::trivial(g)};

  constexpr std::size_t kSearchCap = 5000;
  PrefixBasis b0 = refine_to_cover(PrefixBasis::trivial(g), rep.left_walks());
  std::deque<std::pair<PrefixBasis, std::size_t>> queue{{b0, 0}};
  std::set<std::string> seen{basis_key(b0)};
  std::size_t examined = 0;

  while (!queue.empty() && examined < kSearchCap) {
    auto [basis, d] = queue.front();
    queue.pop_front();
    ++examined;
    AlgebraElement y = left_basis_form(rep, basis);
    std::vector<Walk> rights = y.right_walks();
    if (pairwise_independent(rights))
      return BasicWitness{basis, complete_to_basis(g, rights)};
    if (d < depth) {
      for (const Walk& b : basis.walks()) {
        PrefixBasis next = simple_expand(basis, b);
        if (seen.insert(basis_key(next)).second) queue.emplace_back(next, d + 1);
      }
    }
  }
  return std::nullopt;
}

}  // namespace lpa
