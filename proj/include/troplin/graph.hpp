#pragma once

#include "troplin/node_set.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace troplin {

struct Edge {
  int from = 0;
  int to = 0;
  auto operator<=>(const Edge&) const = default;
};

// Labeled DAG on nodes 1..n. Every mutation keeps the graph acyclic.
class Dag {
 public:
  explicit Dag(int n);
  Dag(int n, std::span<const Edge> edges);
  Dag(int n, std::initializer_list<Edge> edges);

  int size() const { return n_; }
  NodeSet nodes() const { return NodeSet::first(n_); }

  // Rejects out-of-range endpoints, self-loops and edges closing a cycle.
  // Re-adding an existing edge is a no-op.
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  bool adjacent(int a, int b) const { return has_edge(a, b) || has_edge(b, a); }

  NodeSet parents(int v) const;
  NodeSet children(int v) const;
  // Nodes reachable from v by a directed path of length >= 1.
  NodeSet descendants(int v) const;

  std::size_t edge_count() const;
  // Sorted by (from, to).
  std::vector<Edge> edges() const;
  // Kahn's algorithm, smallest available label first.
  std::vector<int> topological_order() const;

  bool operator==(const Dag&) const = default;

 private:
  void check_node(int v) const;

  int n_;
  std::vector<std::uint64_t> parents_;   // index v-1
  std::vector<std::uint64_t> children_;  // index v-1
};

enum class Step : std::uint8_t { kForward, kBackward };

// A simple path nodes[0] - nodes[1] - ... - nodes[k]. steps[s] is kForward
// when the edge is nodes[s] -> nodes[s+1] and kBackward when it is
// nodes[s] <- nodes[s+1].
struct Path {
  std::vector<int> nodes;
  std::vector<Step> steps;
  bool operator==(const Path&) const = default;
};

// Directed paths top -> ... -> left endpoint and top -> ... -> right
// endpoint. Each path is stored as its node sequence starting at top; the
// trivial side is {top}.
struct Trek {
  int top = 0;
  std::vector<int> left_path;
  std::vector<int> right_path;

  int left() const { return left_path.back(); }
  int right() const { return right_path.back(); }
  bool operator==(const Trek&) const = default;
};

struct UndirectedEdge {
  int a = 0;  // a < b
  int b = 0;
  auto operator<=>(const UndirectedEdge&) const = default;
};

// i -> k <- j with i, j non-adjacent; stored with i < j.
struct UnshieldedCollider {
  int i = 0;
  int j = 0;
  int k = 0;
  auto operator<=>(const UnshieldedCollider&) const = default;
};

NodeSet parents(const Dag& g, int v);

// Every node with a directed path into some member of s. A member of s is
// included only when it is an ancestor of another member.
NodeSet ancestors(const Dag& g, NodeSet s);

std::vector<UndirectedEdge> skeleton(const Dag& g);
std::vector<UnshieldedCollider> unshielded_colliders(const Dag& g);

// All simple paths between i and j in the skeleton, depth-first with
// neighbours visited in ascending label order.
std::vector<Path> all_simple_paths(const Dag& g, int i, int j);

// Interior nodes at which both incident edges point inward.
NodeSet colliders_on(const Path& path);

// All directed paths from -> ... -> to, as node sequences, lexicographic.
// from == to yields the single trivial path.
std::vector<std::vector<int>> directed_paths(const Dag& g, int from, int to);

// Treks between i and j: tops ascending, then left path, then right path,
// lexicographically.
std::vector<Trek> all_treks(const Dag& g, int i, int j);

inline constexpr int kMaxEnumerationNodes = 5;

// Every labeled DAG on [n] exactly once, in a fixed order: each unordered
// pair {a<b} takes one of the states absent, a->b, b->a, the pairs read as
// digits of a base-3 counter (pair (1,2) least significant), and cyclic
// assignments are skipped.
void for_each_dag(int n, const std::function<void(const Dag&)>& visit);
std::vector<Dag> enumerate_dags(int n);

// Second generation route: for each permutation of [n], every subset of the
// edges that point forward in that order, with duplicates removed. Returned
// in the same order as enumerate_dags.
std::vector<Dag> enumerate_dags_by_topological_order(int n);

}  // namespace troplin
