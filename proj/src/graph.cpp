#include "troplin/graph.hpp"

#include "troplin/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

namespace troplin {

Dag::Dag(int n) : n_(n) {
  if (n < 1 || n > kMaxNodes)
    throw DomainError("node count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxNodes));
  parents_.assign(static_cast<std::size_t>(n), 0);
  children_.assign(static_cast<std::size_t>(n), 0);
}

Dag::Dag(int n, std::span<const Edge> edges) : Dag(n) {
  for (const Edge& e : edges) add_edge(e.from, e.to);
}

Dag::Dag(int n, std::initializer_list<Edge> edges)
    : Dag(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Dag::check_node(int v) const {
  if (v < 1 || v > n_)
    throw DomainError("node " + std::to_string(v) + " outside 1.." + std::to_string(n_));
}

void Dag::add_edge(int from, int to) {
  check_node(from);
  check_node(to);
  if (from == to) throw DomainError("self-loop at node " + std::to_string(from));
  if (has_edge(from, to)) return;
  if (descendants(to).contains(from))
    throw DomainError("edge " + std::to_string(from) + "->" + std::to_string(to) +
                      " would create a directed cycle");
  parents_[static_cast<std::size_t>(to - 1)] |= NodeSet::single(from).mask();
  children_[static_cast<std::size_t>(from - 1)] |= NodeSet::single(to).mask();
}

bool Dag::has_edge(int from, int to) const {
  check_node(from);
  check_node(to);
  return NodeSet::from_mask(children_[static_cast<std::size_t>(from - 1)]).contains(to);
}

NodeSet Dag::parents(int v) const {
  check_node(v);
  return NodeSet::from_mask(parents_[static_cast<std::size_t>(v - 1)]);
}

NodeSet Dag::children(int v) const {
  check_node(v);
  return NodeSet::from_mask(children_[static_cast<std::size_t>(v - 1)]);
}

NodeSet Dag::descendants(int v) const {
  NodeSet seen;
  NodeSet frontier = children(v);
  while (!frontier.empty()) {
    seen |= frontier;
    NodeSet next;
    for (int u : frontier) next |= children(u);
    frontier = next - seen;
  }
  return seen;
}

std::size_t Dag::edge_count() const {
  std::size_t count = 0;
  for (std::uint64_t m : children_) count += static_cast<std::size_t>(std::popcount(m));
  return count;
}

std::vector<Edge> Dag::edges() const {
  std::vector<Edge> out;
  for (int from = 1; from <= n_; ++from)
    for (int to : children(from)) out.push_back({from, to});
  return out;
}

std::vector<int> Dag::topological_order() const {
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n_));
  NodeSet placed;
  while (static_cast<int>(order.size()) < n_) {
    for (int v = 1; v <= n_; ++v) {
      if (!placed.contains(v) && parents(v).subset_of(placed)) {
        order.push_back(v);
        placed.insert(v);
        break;
      }
    }
  }
  return order;
}

NodeSet parents(const Dag& g, int v) { return g.parents(v); }

NodeSet ancestors(const Dag& g, NodeSet s) {
  if (s.max() > g.size()) throw DomainError("ancestors: node set " + s.to_string() + " out of range");
  NodeSet seen;
  NodeSet frontier;
  for (int v : s) frontier |= g.parents(v);
  while (!frontier.empty()) {
    seen |= frontier;
    NodeSet next;
    for (int u : frontier) next |= g.parents(u);
    frontier = next - seen;
  }
  return seen;
}

std::vector<UndirectedEdge> skeleton(const Dag& g) {
  std::vector<UndirectedEdge> out;
  for (const Edge& e : g.edges()) out.push_back({std::min(e.from, e.to), std::max(e.from, e.to)});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<UnshieldedCollider> unshielded_colliders(const Dag& g) {
  std::vector<UnshieldedCollider> out;
  for (int k = 1; k <= g.size(); ++k) {
    const std::vector<int> pa = g.parents(k).to_vector();
    for (std::size_t a = 0; a < pa.size(); ++a)
      for (std::size_t b = a + 1; b < pa.size(); ++b)
        if (!g.adjacent(pa[a], pa[b])) out.push_back({pa[a], pa[b], k});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

NodeSet neighbours(const Dag& g, int v) { return g.parents(v) | g.children(v); }

void extend_simple_paths(const Dag& g, int target, Path& current, NodeSet& on_path,
                         std::vector<Path>& out) {
  const int tail = current.nodes.back();
  if (tail == target) {
    out.push_back(current);
    return;
  }
  for (int next : neighbours(g, tail) - on_path) {
    current.nodes.push_back(next);
    current.steps.push_back(g.has_edge(tail, next) ? Step::kForward : Step::kBackward);
    on_path.insert(next);
    extend_simple_paths(g, target, current, on_path, out);
    on_path.erase(next);
    current.nodes.pop_back();
    current.steps.pop_back();
  }
}

void extend_directed(const Dag& g, int target, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  const int tail = current.back();
  if (tail == target) {
    out.push_back(current);
    return;
  }
  for (int next : g.children(tail)) {
    current.push_back(next);
    extend_directed(g, target, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Path> all_simple_paths(const Dag& g, int i, int j) {
  if (i < 1 || i > g.size() || j < 1 || j > g.size())
    throw DomainError("all_simple_paths: endpoint out of range");
  if (i == j) throw DomainError("all_simple_paths: endpoints must differ");
  std::vector<Path> out;
  Path current{{i}, {}};
  NodeSet on_path = NodeSet::single(i);
  extend_simple_paths(g, j, current, on_path, out);
  return out;
}

NodeSet colliders_on(const Path& path) {
  NodeSet out;
  for (std::size_t s = 1; s + 1 < path.nodes.size(); ++s)
    if (path.steps[s - 1] == Step::kForward && path.steps[s] == Step::kBackward)
      out.insert(path.nodes[s]);
  return out;
}

std::vector<std::vector<int>> directed_paths(const Dag& g, int from, int to) {
  if (from < 1 || from > g.size() || to < 1 || to > g.size())
    throw DomainError("directed_paths: endpoint out of range");
  std::vector<std::vector<int>> out;
  std::vector<int> current{from};
  extend_directed(g, to, current, out);
  return out;
}

std::vector<Trek> all_treks(const Dag& g, int i, int j) {
  if (i < 1 || i > g.size() || j < 1 || j > g.size())
    throw DomainError("all_treks: endpoint out of range");
  std::vector<Trek> out;
  for (int top = 1; top <= g.size(); ++top) {
    const auto lefts = directed_paths(g, top, i);
    if (lefts.empty()) continue;
    const auto rights = directed_paths(g, top, j);
    for (const auto& l : lefts)
      for (const auto& r : rights) out.push_back({top, l, r});
  }
  return out;
}

namespace {

void check_enumeration_cap(int n) {
  if (n < 1 || n > kMaxEnumerationNodes)
    throw CapError("DAG enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationNodes) +
                   ", got " + std::to_string(n));
}

std::vector<std::pair<int, int>> node_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

bool acyclic(int n, const std::vector<std::uint64_t>& parent_masks) {
  std::uint64_t placed = 0;
  for (int round = 0; round < n; ++round) {
    bool progressed = false;
    for (int v = 0; v < n; ++v) {
      const std::uint64_t b = std::uint64_t{1} << v;
      if ((placed & b) == 0 && (parent_masks[static_cast<std::size_t>(v)] & ~placed) == 0) {
        placed |= b;
        progressed = true;
      }
    }
    if (!progressed) break;
  }
  return placed == (std::uint64_t{1} << n) - 1;
}

// Position of g in the base-3 counter order.
std::size_t counter_index(const Dag& g) {
  std::size_t index = 0, weight = 1;
  for (auto [a, b] : node_pairs(g.size())) {
    if (g.has_edge(a, b)) index += weight;
    else if (g.has_edge(b, a)) index += 2 * weight;
    weight *= 3;
  }
  return index;
}

}  // namespace

void for_each_dag(int n, const std::function<void(const Dag&)>& visit) {
  check_enumeration_cap(n);
  const auto pairs = node_pairs(n);
  std::size_t total = 1;
  for (std::size_t p = 0; p < pairs.size(); ++p) total *= 3;

  std::vector<std::uint64_t> parent_masks(static_cast<std::size_t>(n));
  std::vector<Edge> edges;
  for (std::size_t code = 0; code < total; ++code) {
    std::fill(parent_masks.begin(), parent_masks.end(), 0);
    edges.clear();
    std::size_t rest = code;
    for (auto [a, b] : pairs) {
      const std::size_t state = rest % 3;
      rest /= 3;
      if (state == 1) {
        parent_masks[static_cast<std::size_t>(b - 1)] |= std::uint64_t{1} << (a - 1);
        edges.push_back({a, b});
      } else if (state == 2) {
        parent_masks[static_cast<std::size_t>(a - 1)] |= std::uint64_t{1} << (b - 1);
        edges.push_back({b, a});
      }
    }
    if (acyclic(n, parent_masks)) visit(Dag(n, edges));
  }
}

std::vector<Dag> enumerate_dags(int n) {
  std::vector<Dag> out;
  for_each_dag(n, [&](const Dag& g) { out.push_back(g); });
  return out;
}

std::vector<Dag> enumerate_dags_by_topological_order(int n) {
  check_enumeration_cap(n);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  const std::size_t forward_pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  std::map<std::size_t, Dag> unique;
  do {
    for (std::size_t subset = 0; subset < (std::size_t{1} << forward_pairs); ++subset) {
      Dag g(n);
      std::size_t bit = 0;
      for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b, ++bit)
          if ((subset >> bit) & 1U) g.add_edge(order[a], order[b]);
      unique.emplace(counter_index(g), g);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<Dag> out;
  out.reserve(unique.size());
  for (auto& [index, g] : unique) out.push_back(std::move(g));
  return out;
}

}  // namespace troplin
