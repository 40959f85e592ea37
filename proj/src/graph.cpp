#include "lpa/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace lpa {

Graph::Graph(std::vector<std::string> vertex_ids,
             std::vector<std::tuple<std::string, std::string, std::string>> edges,
             const std::string& root_id)
    : vertex_ids_(std::move(vertex_ids)) {
  std::map<std::string, VertexIndex> vmap;
  for (VertexIndex i = 0; i < vertex_ids_.size(); ++i) {
    auto [it, fresh] = vmap.emplace(vertex_ids_[i], i);
    if (!fresh) duplicate_ids_.push_back("vertex id '" + vertex_ids_[i] + "'");
  }

  std::set<std::string> edge_ids_seen;
  for (auto& [id, from, to] : edges) {
    auto fi = vmap.find(from);
    auto ti = vmap.find(to);
    if (fi == vmap.end())
      throw Error("edge '" + id + "': unknown origin vertex '" + from + "'");
    if (ti == vmap.end())
      throw Error("edge '" + id + "': unknown terminus vertex '" + to + "'");
    if (!edge_ids_seen.insert(id).second)
      duplicate_ids_.push_back("edge id '" + id + "'");
    edges_.push_back(Edge{id, fi->second, ti->second});
  }

  auto ri = vmap.find(root_id);
  if (ri == vmap.end()) throw Error("root '" + root_id + "' is not a vertex");
  root_ = ri->second;

  // out-edge lists and edge-id ranks, both in edge-id order
  std::vector<EdgeIndex> by_id(edges_.size());
  std::iota(by_id.begin(), by_id.end(), 0);
  std::sort(by_id.begin(), by_id.end(), [&](EdgeIndex a, EdgeIndex b) {
    return edges_[a].id < edges_[b].id;
  });
  edge_rank_.resize(edges_.size());
  for (std::uint32_t r = 0; r < by_id.size(); ++r) edge_rank_[by_id[r]] = r;

  out_edges_.resize(vertex_ids_.size());
  for (EdgeIndex e : by_id) out_edges_[edges_[e].from].push_back(e);
}

std::optional<VertexIndex> Graph::find_vertex(const std::string& id) const {
  for (VertexIndex i = 0; i < vertex_ids_.size(); ++i)
    if (vertex_ids_[i] == id) return i;
  return std::nullopt;
}

std::optional<EdgeIndex> Graph::find_edge(const std::string& id) const {
  for (EdgeIndex i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  return std::nullopt;
}

ValidationReport Graph::validate() const {
  ValidationReport report;
  for (const auto& d : duplicate_ids_) report.add("duplicate " + d);

  // reachability from the root
  std::vector<bool> seen(vertex_ids_.size(), false);
  std::vector<VertexIndex> stack{root_};
  seen[root_] = true;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : out_edges_[v]) {
      VertexIndex t = edges_[e].to;
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  for (VertexIndex v = 0; v < vertex_ids_.size(); ++v) {
    if (!seen[v])
      report.add("vertex '" + vertex_ids_[v] + "' is unreachable from the root");
    if (out_edges_[v].empty())
      report.add("vertex '" + vertex_ids_[v] + "' is a sink");
  }
  return report;
}

std::shared_ptr<const Graph> Graph::reachable_subgraph(VertexIndex v) const {
  std::vector<bool> seen(vertex_ids_.size(), false);
  std::vector<VertexIndex> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    VertexIndex u = stack.back();
    stack.pop_back();
    for (EdgeIndex e : out_edges_[u]) {
      VertexIndex t = edges_[e].to;
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::vector<std::string> verts;
  for (VertexIndex u = 0; u < vertex_ids_.size(); ++u)
    if (seen[u]) verts.push_back(vertex_ids_[u]);
  std::vector<std::tuple<std::string, std::string, std::string>> es;
  for (const Edge& e : edges_)
    if (seen[e.from])
      es.emplace_back(e.id, vertex_ids_[e.from], vertex_ids_[e.to]);
  return std::make_shared<const Graph>(std::move(verts), std::move(es),
                                       vertex_ids_[v]);
}

GraphPtr make_graph(
    std::vector<std::string> vertex_ids,
    std::vector<std::tuple<std::string, std::string, std::string>> edges,
    const std::string& root_id) {
  return std::make_shared<const Graph>(std::move(vertex_ids), std::move(edges),
                                       root_id);
}

Walk::Walk(GraphPtr g, VertexIndex v) : graph_(std::move(g)), origin_(v) {
  if (v >= graph_->vertex_count()) throw Error("walk: vertex index out of range");
}

Walk::Walk(GraphPtr g, std::vector<EdgeIndex> edges)
    : graph_(std::move(g)), edges_(std::move(edges)) {
  if (edges_.empty()) throw Error("walk: empty edge sequence needs a base vertex");
  origin_ = graph_->origin(edges_.front());
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i) {
    if (graph_->terminus(edges_[i]) != graph_->origin(edges_[i + 1]))
      throw Error("walk: edges '" + graph_->edge_id(edges_[i]) + "' and '" +
                  graph_->edge_id(edges_[i + 1]) + "' do not compose");
  }
}

std::string Walk::str() const {
  if (edges_.empty()) return "@" + graph_->vertex_id(origin_);
  std::string out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += '.';
    out += graph_->edge_id(edges_[i]);
  }
  return out;
}

int Walk::compare(const Walk& other) const {
  if (length() != other.length()) return length() < other.length() ? -1 : 1;
  if (edges_.empty()) {
    const std::string& a = graph_->vertex_id(origin_);
    const std::string& b = other.graph_->vertex_id(other.origin_);
    return a == b ? 0 : (a < b ? -1 : 1);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto ra = graph_->edge_rank(edges_[i]);
    auto rb = other.graph_->edge_rank(other.edges_[i]);
    if (ra != rb) return ra < rb ? -1 : 1;
  }
  return 0;
}

Walk concat_walks(const Walk& p, const Walk& q) {
  if (p.graph() != q.graph()) throw Error("concat: walks on different graphs");
  if (p.terminus() != q.origin())
    throw Error("concat: terminus of '" + p.str() + "' is not the origin of '" +
                q.str() + "'");
  if (p.empty()) return q;
  if (q.empty()) return p;
  std::vector<EdgeIndex> es = p.edges();
  es.insert(es.end(), q.edges().begin(), q.edges().end());
  return Walk(p.graph(), std::move(es));
}

PrefixCompare prefix_compare(const Walk& p, const Walk& q) {
  if (p.graph() != q.graph())
    throw Error("prefix_compare: walks on different graphs");
  const auto& pe = p.edges();
  const auto& qe = q.edges();
  const Walk *shorter = &p, *longer = &q;
  bool p_short = pe.size() <= qe.size();
  if (!p_short) std::swap(shorter, longer);
  // origins must agree for comparability; for nonempty walks this is
  // subsumed by the edge-sequence check
  if (shorter->empty()) {
    if (shorter->origin() != longer->origin())
      return {PrefixOrder::Incomparable, std::nullopt};
  } else {
    for (std::size_t i = 0; i < shorter->edges().size(); ++i)
      if (shorter->edges()[i] != longer->edges()[i])
        return {PrefixOrder::Incomparable, std::nullopt};
  }
  if (pe.size() == qe.size())
    return {PrefixOrder::Equal, Walk(p.graph(), p.terminus())};
  std::vector<EdgeIndex> rest(longer->edges().begin() +
                                  static_cast<long>(shorter->edges().size()),
                              longer->edges().end());
  Walk residual(p.graph(), std::move(rest));
  return {p_short ? PrefixOrder::PProperPrefix : PrefixOrder::QProperPrefix,
          std::move(residual)};
}

bool is_prefix(const Walk& p, const Walk& q) {
  auto c = prefix_compare(p, q).order;
  return c == PrefixOrder::Equal || c == PrefixOrder::PProperPrefix;
}

Walk extend(const Walk& w, EdgeIndex e) {
  if (w.terminus() != w.graph()->origin(e))
    throw Error("extend: edge does not start at the walk terminus");
  std::vector<EdgeIndex> es = w.edges();
  es.push_back(e);
  return Walk(w.graph(), std::move(es));
}

std::vector<Walk> walks_from(const GraphPtr& g, VertexIndex v, std::size_t n) {
  std::vector<Walk> acc{Walk(g, v)};
  for (std::size_t step = 0; step < n; ++step) {
    std::vector<Walk> next;
    for (const Walk& w : acc)
      for (EdgeIndex e : g->out_edges(w.terminus())) next.push_back(extend(w, e));
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

namespace {

// Maximality sweep: every root walk of length cap must have a prefix in the
// set. DFS prunes at covered prefixes, so a genuine basis costs only the
// size of its own tree.
bool covers_to_depth(const GraphPtr& g, const std::vector<Walk>& sorted,
                     const Walk& w, std::size_t cap) {
  for (const Walk& b : sorted)
    if (is_prefix(b, w)) return true;
  if (w.length() == cap) return false;
  for (EdgeIndex e : g->out_edges(w.terminus()))
    if (!covers_to_depth(g, sorted, extend(w, e), cap)) return false;
  return true;
}

}  // namespace

bool is_basis(const GraphPtr& g, const std::vector<Walk>& walks) {
  if (walks.empty()) return false;
  std::size_t cap = 0;
  for (const Walk& w : walks) {
    if (w.origin() != g->root()) return false;
    cap = std::max(cap, w.length());
  }
  for (std::size_t i = 0; i < walks.size(); ++i)
    for (std::size_t j = i + 1; j < walks.size(); ++j)
      if (prefix_compare(walks[i], walks[j]).order != PrefixOrder::Incomparable)
        return false;
  return covers_to_depth(g, walks, Walk(g, g->root()), cap);
}

PrefixBasis::PrefixBasis(GraphPtr g, std::vector<Walk> walks)
    : graph_(std::move(g)), walks_(std::move(walks)) {
  std::sort(walks_.begin(), walks_.end());
  if (!is_basis(graph_, walks_))
    throw Error("prefix basis invariant violated");
}

PrefixBasis PrefixBasis::trivial(const GraphPtr& g) {
  return PrefixBasis(g, {Walk(g, g->root())});
}

bool PrefixBasis::contains(const Walk& w) const {
  return std::binary_search(walks_.begin(), walks_.end(), w);
}

std::optional<std::size_t> PrefixBasis::prefix_of(const Walk& w) const {
  for (std::size_t i = 0; i < walks_.size(); ++i)
    if (is_prefix(walks_[i], w)) return i;
  return std::nullopt;
}

PrefixBasis simple_expand(const PrefixBasis& b, const Walk& p) {
  if (!b.contains(p)) throw Error("simple_expand: walk not in the basis");
  std::vector<Walk> out;
  for (const Walk& w : b.walks())
    if (w != p) out.push_back(w);
  for (EdgeIndex e : b.graph()->out_edges(p.terminus()))
    out.push_back(extend(p, e));
  return PrefixBasis(b.graph(), std::move(out));
}

PrefixBasis common_refinement(const PrefixBasis& b1, const PrefixBasis& b2) {
  if (b1.graph() != b2.graph())
    throw Error("common_refinement: bases on different graphs");
  std::vector<Walk> out;
  for (const Walk& x : b1.walks())
    for (const Walk& y : b2.walks()) {
      auto c = prefix_compare(x, y).order;
      if (c == PrefixOrder::Incomparable) continue;
      const Walk& longer = (c == PrefixOrder::PProperPrefix) ? y : x;
      if (std::find(out.begin(), out.end(), longer) == out.end())
        out.push_back(longer);
    }
  return PrefixBasis(b1.graph(), std::move(out));
}

PrefixBasis refine_to_cover(const PrefixBasis& b, const std::vector<Walk>& cover) {
  PrefixBasis cur = b;
  for (;;) {
    bool progressed = false;
    for (const Walk& w : cover) {
      if (w.origin() != cur.graph()->root())
        throw Error("refine_to_cover: walk '" + w.str() + "' does not start at the root");
      bool covered = false;
      std::optional<Walk> to_expand;
      for (const Walk& x : cur.walks()) {
        auto c = prefix_compare(w, x).order;
        if (c == PrefixOrder::Equal || c == PrefixOrder::PProperPrefix) {
          covered = true;
          break;
        }
        if (c == PrefixOrder::QProperPrefix) to_expand = x;  // x < w
      }
      if (!covered) {
        if (!to_expand)
          throw Error("refine_to_cover: no basis element comparable to '" +
                      w.str() + "'");
        cur = simple_expand(cur, *to_expand);
        progressed = true;
      }
    }
    if (!progressed) return cur;
  }
}

ValidationReport validate_graph(const Graph& g) { return g.validate(); }

}  // namespace lpa
