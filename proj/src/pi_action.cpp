#include "lpa/pi_action.hpp"

namespace lpa {

namespace {

std::optional<Walk> apply_gen(const GraphPtr& g, const RawGen& gen,
                              const Walk& p) {
  switch (gen.kind) {
    case RawGen::Kind::Vertex:
      if (p.origin() == gen.index) return p;
      return std::nullopt;
    case RawGen::Kind::Edge: {
      if (g->terminus(gen.index) != p.origin()) return std::nullopt;
      return concat_walks(Walk(g, std::vector<EdgeIndex>{gen.index}), p);
    }
    case RawGen::Kind::EdgeStar: {
      if (p.empty() || p.edges().front() != gen.index) return std::nullopt;
      if (p.length() == 1) return Walk(g, p.terminus());
      std::vector<EdgeIndex> rest(p.edges().begin() + 1, p.edges().end());
      return Walk(g, std::move(rest));
    }
  }
  return std::nullopt;
}

}  // namespace

WalkCombination pi_action(const GraphPtr& g, const RawTermList& terms,
                          const Walk& p) {
  WalkCombination out;
  for (const RawTerm& term : terms) {
    std::optional<Walk> cur = p;
    // rightmost factor acts first
    for (auto it = term.word.rbegin(); it != term.word.rend() && cur; ++it)
      cur = apply_gen(g, *it, *cur);
    if (!cur) continue;
    auto [slot, fresh] = out.emplace(*cur, term.k);
    if (!fresh) {
      slot->second += term.k;
      if (slot->second == 0) out.erase(slot);
    }
  }
  return out;
}

}  // namespace lpa
