#include "troplin/separation.hpp"

#include "troplin/error.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace troplin {

std::string_view to_string(Criterion c) { return c == Criterion::kD ? "d" : "star"; }

Criterion parse_criterion(std::string_view text) {
  if (text == "d") return Criterion::kD;
  if (text == "star" || text == "*") return Criterion::kStar;
  throw SchemaError("unknown criterion '" + std::string(text) + "' (expected d or star)");
}

CiStatement CiStatement::canonical() const {
  CiStatement out = *this;
  if (out.J < out.I) std::swap(out.I, out.J);
  return out;
}

void check_statement_sets(const Dag& g, NodeSet I, NodeSet J, NodeSet K) {
  if (I.empty() || J.empty()) throw DomainError("I and J must be nonempty");
  const NodeSet all = g.nodes();
  if (!I.subset_of(all) || !J.subset_of(all) || !K.subset_of(all))
    throw DomainError("node set out of range 1.." + std::to_string(g.size()));
  if (I.intersects(J) || I.intersects(K) || J.intersects(K))
    throw DomainError("I, J, K must be pairwise disjoint: I=" + I.to_string() +
                      " J=" + J.to_string() + " K=" + K.to_string());
}

bool d_connected_path(const Dag& g, const Path& path, NodeSet K) {
  const NodeSet colliders = colliders_on(path);
  const NodeSet open_colliders = K | ancestors(g, K);
  if (!colliders.subset_of(open_colliders)) return false;
  for (std::size_t s = 1; s + 1 < path.nodes.size(); ++s) {
    const int v = path.nodes[s];
    if (!colliders.contains(v) && K.contains(v)) return false;
  }
  return true;
}

bool d_separated(const Dag& g, NodeSet I, NodeSet J, NodeSet K) {
  check_statement_sets(g, I, J, K);
  const NodeSet relevant = I | J | K;
  const NodeSet ancestral = relevant | ancestors(g, relevant);

  // Moral graph restricted to the ancestral set, as adjacency masks.
  std::vector<NodeSet> moral(static_cast<std::size_t>(g.size() + 1));
  for (int v : ancestral) {
    const NodeSet pa = g.parents(v);
    moral[static_cast<std::size_t>(v)] |= pa;
    for (int p : pa) {
      moral[static_cast<std::size_t>(p)] |= NodeSet::single(v);
      moral[static_cast<std::size_t>(p)] |= pa - NodeSet::single(p);
    }
  }

  NodeSet seen = I;
  NodeSet frontier = I;
  while (!frontier.empty()) {
    NodeSet next;
    for (int v : frontier) next |= moral[static_cast<std::size_t>(v)];
    next = (next & ancestral) - K - seen;
    if (next.intersects(J)) return false;
    seen |= next;
    frontier = next;
  }
  return true;
}

bool d_separated_oracle(const Dag& g, NodeSet I, NodeSet J, NodeSet K) {
  check_statement_sets(g, I, J, K);
  for (int i : I)
    for (int j : J)
      for (const Path& path : all_simple_paths(g, i, j))
        if (d_connected_path(g, path, K)) return false;
  return true;
}

Dag conditional_reachability(const Dag& g, NodeSet K) {
  if (!K.subset_of(g.nodes())) throw DomainError("conditional_reachability: K out of range");
  Dag reach(g.size());
  for (int i = 1; i <= g.size(); ++i) {
    NodeSet reached;
    NodeSet frontier = g.children(i);
    while (!frontier.empty()) {
      reached |= frontier;
      NodeSet next;
      for (int v : frontier - K) next |= g.children(v);
      frontier = next - reached;
    }
    for (int j : reached) reach.add_edge(i, j);
  }
  return reach;
}

namespace {

// Shape search in a precomputed G*_K.
bool star_connected_in(const Dag& reach, int i, int j, NodeSet K) {
  // (a) direct edge.
  if (reach.adjacent(i, j)) return true;
  const NodeSet tops_i = reach.parents(i) - K;
  const NodeSet tops_j = reach.parents(j) - K;
  // (b) common parent outside K.
  if (tops_i.intersects(tops_j)) return true;
  // (c), (d), (e): one collider c entered from the i side and the j side.
  const NodeSet side_i = tops_i | NodeSet::single(i);
  const NodeSet side_j = tops_j | NodeSet::single(j);
  for (int c = 1; c <= reach.size(); ++c) {
    if (c == i || c == j) continue;
    if (!K.contains(c) && !reach.children(c).intersects(K)) continue;
    const NodeSet into_c = reach.parents(c);
    if (into_c.intersects(side_i) && into_c.intersects(side_j)) return true;
  }
  return false;
}

void check_pair(const Dag& g, int i, int j, NodeSet K) {
  if (i < 1 || i > g.size() || j < 1 || j > g.size()) throw DomainError("endpoint out of range");
  if (i == j) throw DomainError("endpoints must differ");
  if (K.contains(i) || K.contains(j)) throw DomainError("endpoint lies in the conditioning set");
  if (!K.subset_of(g.nodes())) throw DomainError("K out of range");
}

}  // namespace

bool star_connected(const Dag& g, int i, int j, NodeSet K) {
  check_pair(g, i, j, K);
  return star_connected_in(conditional_reachability(g, K), i, j, K);
}

bool star_connected_oracle(const Dag& g, int i, int j, NodeSet K) {
  check_pair(g, i, j, K);
  for (const Path& path : all_simple_paths(g, i, j))
    if (colliders_on(path).size() <= 1 && d_connected_path(g, path, K)) return true;
  return false;
}

bool star_separated(const Dag& g, NodeSet I, NodeSet J, NodeSet K) {
  check_statement_sets(g, I, J, K);
  const Dag reach = conditional_reachability(g, K);
  for (int i : I)
    for (int j : J)
      if (star_connected_in(reach, i, j, K)) return false;
  return true;
}

bool star_separated_oracle(const Dag& g, NodeSet I, NodeSet J, NodeSet K) {
  check_statement_sets(g, I, J, K);
  for (int i : I)
    for (int j : J)
      if (star_connected_oracle(g, i, j, K)) return false;
  return true;
}

bool separated(const Dag& g, NodeSet I, NodeSet J, NodeSet K, Criterion criterion) {
  return criterion == Criterion::kD ? d_separated(g, I, J, K) : star_separated(g, I, J, K);
}

PairwiseStatementIndex::PairwiseStatementIndex(int n) : n_(n) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs_.emplace_back(i, j);
  count_ = n >= 2 ? pairs_.size() << (n - 2) : 0;
}

NodeSet PairwiseStatementIndex::conditioning_set(std::size_t p, std::uint64_t sub_mask) const {
  const auto [i, j] = pairs_[p];
  NodeSet K;
  int bit = 0;
  for (int v = 1; v <= n_; ++v) {
    if (v == i || v == j) continue;
    if ((sub_mask >> bit) & 1U) K.insert(v);
    ++bit;
  }
  return K;
}

std::vector<std::uint64_t> statement_bits(const Dag& g, Criterion criterion) {
  if (g.size() > kMaxStatementNodes)
    throw CapError("statement listing supports n <= " + std::to_string(kMaxStatementNodes));
  const PairwiseStatementIndex index(g.size());
  std::vector<std::uint64_t> bits((index.count() + 63) / 64, 0);
  if (index.count() == 0) return bits;
  const std::uint64_t subsets = std::uint64_t{1} << (g.size() - 2);

  // G*_K depends only on K, so cache it across pairs.
  std::vector<std::optional<Dag>> reach_cache;
  if (criterion == Criterion::kStar) reach_cache.resize(std::size_t{1} << g.size());

  std::size_t b = 0;
  for (std::size_t p = 0; p < index.pair_count(); ++p) {
    const auto [i, j] = index.pair(p);
    for (std::uint64_t s = 0; s < subsets; ++s, ++b) {
      const NodeSet K = index.conditioning_set(p, s);
      bool holds;
      if (criterion == Criterion::kD) {
        holds = d_separated(g, NodeSet::single(i), NodeSet::single(j), K);
      } else {
        auto& slot = reach_cache[K.mask()];
        if (!slot) slot = conditional_reachability(g, K);
        holds = !star_connected_in(*slot, i, j, K);
      }
      if (holds) bits[b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
  return bits;
}

std::vector<CiStatement> ci_statements(const Dag& g, Criterion criterion) {
  const std::vector<std::uint64_t> bits = statement_bits(g, criterion);
  const PairwiseStatementIndex index(g.size());
  std::vector<CiStatement> out;
  if (index.count() == 0) return out;
  const std::uint64_t subsets = std::uint64_t{1} << (g.size() - 2);
  std::size_t b = 0;
  for (std::size_t p = 0; p < index.pair_count(); ++p) {
    const auto [i, j] = index.pair(p);
    for (std::uint64_t s = 0; s < subsets; ++s, ++b)
      if ((bits[b / 64] >> (b % 64)) & 1U)
        out.push_back({NodeSet::single(i), NodeSet::single(j), index.conditioning_set(p, s), criterion});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace troplin
