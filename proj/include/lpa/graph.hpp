#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lpa {

/// Library-level error. Thrown on violated preconditions and malformed input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Outcome of a validity check that reports problems instead of throwing.
struct ValidationReport {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
  void add(std::string p) { problems.push_back(std::move(p)); }
};

using VertexIndex = std::uint32_t;
using EdgeIndex = std::uint32_t;

/// A finite rooted directed multigraph. Vertex and edge ids are opaque
/// strings; internally everything is indexed. Immutable after construction.
///
/// Construction succeeds for structurally representable input (all edge
/// endpoints and the root name known vertices); softer invariants
/// (reachability from the root, sink-freeness, duplicate ids) are reported
/// by validate().
class Graph {
public:
  struct Edge {
    std::string id;
    VertexIndex from;
    VertexIndex to;
  };

  Graph(std::vector<std::string> vertex_ids,
        std::vector<std::tuple<std::string, std::string, std::string>> edges,
        const std::string& root_id);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexIndex root() const { return root_; }

  const std::string& vertex_id(VertexIndex v) const { return vertex_ids_[v]; }
  const Edge& edge(EdgeIndex e) const { return edges_[e]; }
  const std::string& edge_id(EdgeIndex e) const { return edges_[e].id; }
  VertexIndex origin(EdgeIndex e) const { return edges_[e].from; }
  VertexIndex terminus(EdgeIndex e) const { return edges_[e].to; }

  std::optional<VertexIndex> find_vertex(const std::string& id) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

  /// Out-edges of v, sorted by edge id. This ordering drives every
  /// canonical order in the library.
  const std::vector<EdgeIndex>& out_edges(VertexIndex v) const {
    return out_edges_[v];
  }

  /// Rank of an edge id among all edge ids (lexicographic). Used for
  /// fast canonical comparisons of edge sequences.
  std::uint32_t edge_rank(EdgeIndex e) const { return edge_rank_[e]; }

  /// Reports unreachable vertices, sinks and duplicate ids.
  ValidationReport validate() const;

  /// The subgraph reachable from v, as a fresh graph rooted at v.
  /// Vertex and edge ids are preserved.
  std::shared_ptr<const Graph> reachable_subgraph(VertexIndex v) const;

private:
  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  VertexIndex root_;
  std::vector<std::vector<EdgeIndex>> out_edges_;
  std::vector<std::uint32_t> edge_rank_;
  std::vector<std::string> duplicate_ids_;  // recorded for validate()
};

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr make_graph(
    std::vector<std::string> vertex_ids,
    std::vector<std::tuple<std::string, std::string, std::string>> edges,
    const std::string& root_id);

/// A finite walk: an empty walk based at a vertex, or a composable edge
/// sequence. Identity is the edge-id sequence (empty walks compare by
/// base vertex). Total order: length, then lexicographic on edge ids.
class Walk {
public:
  /// Empty walk at v.
  Walk(GraphPtr g, VertexIndex v);
  /// Nonempty walk. Throws if consecutive edges do not compose.
  Walk(GraphPtr g, std::vector<EdgeIndex> edges);

  const GraphPtr& graph() const { return graph_; }
  bool empty() const { return edges_.empty(); }
  std::size_t length() const { return edges_.size(); }
  VertexIndex origin() const { return origin_; }
  VertexIndex terminus() const {
    return edges_.empty() ? origin_ : graph_->terminus(edges_.back());
  }
  const std::vector<EdgeIndex>& edges() const { return edges_; }

  /// "@v" for the empty walk at v, else dot-joined edge ids.
  std::string str() const;

  /// Canonical total order: length, then lex on edge ids; empty walks
  /// by vertex id.
  int compare(const Walk& other) const;
  bool operator==(const Walk& o) const { return compare(o) == 0; }
  bool operator!=(const Walk& o) const { return compare(o) != 0; }
  bool operator<(const Walk& o) const { return compare(o) < 0; }

private:
  GraphPtr graph_;
  VertexIndex origin_;
  std::vector<EdgeIndex> edges_;
};

/// q = p . residual when comparable.
enum class PrefixOrder { Equal, PProperPrefix, QProperPrefix, Incomparable };

struct PrefixCompare {
  PrefixOrder order;
  std::optional<Walk> residual;  // set for Equal and the two prefix cases
};

/// Concatenation p.q. Requires T(p) = O(q); empty walks act as identities.
Walk concat_walks(const Walk& p, const Walk& q);

/// Prefix comparison with residual: Equal carries the empty residual at the
/// common terminus, PProperPrefix carries r with q = p.r, QProperPrefix
/// carries r with p = q.r.
PrefixCompare prefix_compare(const Walk& p, const Walk& q);

/// True iff p = q or p is a proper prefix of q.
bool is_prefix(const Walk& p, const Walk& q);

/// Extend w by one edge.
Walk extend(const Walk& w, EdgeIndex e);

/// All walks of length exactly n starting at v, in canonical order.
std::vector<Walk> walks_from(const GraphPtr& g, VertexIndex v, std::size_t n);

/// A finite maximal prefix-independent set of walks from the root (a
/// complete prefix code). Stored in canonical order. The constructor
/// validates the basis invariants.
class PrefixBasis {
public:
  PrefixBasis(GraphPtr g, std::vector<Walk> walks);

  /// The one-element basis {empty walk at the root}.
  static PrefixBasis trivial(const GraphPtr& g);

  const GraphPtr& graph() const { return graph_; }
  const std::vector<Walk>& walks() const { return walks_; }
  std::size_t size() const { return walks_.size(); }
  const Walk& at(std::size_t i) const { return walks_[i]; }

  bool contains(const Walk& w) const;
  /// Index of the unique element comparable-with-or-prefixing w from
  /// above; nullopt if no element of the basis is a prefix of w.
  std::optional<std::size_t> prefix_of(const Walk& w) const;

  bool operator==(const PrefixBasis& o) const { return walks_ == o.walks_; }

private:
  GraphPtr graph_;
  std::vector<Walk> walks_;
};

/// True iff the set is prefix-independent and maximal. All walks must
/// originate at the root. Maximality is checked by covering every root
/// walk of length max |b|; this is equivalent to inclusion-maximality on
/// finite sink-free graphs.
bool is_basis(const GraphPtr& g, const std::vector<Walk>& walks);

/// Replace p in B by its one-edge extensions. Throws if p is not in B.
PrefixBasis simple_expand(const PrefixBasis& b, const Walk& p);

/// Coarsest basis refining both: the longer walk of every comparable pair.
PrefixBasis common_refinement(const PrefixBasis& b1, const PrefixBasis& b2);

/// Refine B by simple expansions until every walk in cover is a prefix of
/// (or equal to) some basis element.
PrefixBasis refine_to_cover(const PrefixBasis& b, const std::vector<Walk>& cover);

/// Validity report per the graph invariants used by the algebra:
/// reachability from the root, no sinks, no duplicate ids.
ValidationReport validate_graph(const Graph& g);

}  // namespace lpa
