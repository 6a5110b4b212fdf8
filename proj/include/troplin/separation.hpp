#pragma once

#include "troplin/graph.hpp"
#include "troplin/node_set.hpp"

#include <compare>
#include <cstdint>
#include <string_view>
#include <vector>

namespace troplin {

enum class Criterion : std::uint8_t { kD, kStar };

std::string_view to_string(Criterion c);
// "d" or "star"; throws SchemaError otherwise.
Criterion parse_criterion(std::string_view text);

// I _||_ J | K under a separation criterion. Canonical form puts the
// lexicographically smaller of I, J first.
struct CiStatement {
  NodeSet I;
  NodeSet J;
  NodeSet K;
  Criterion criterion = Criterion::kD;

  CiStatement canonical() const;
  auto operator<=>(const CiStatement&) const = default;
};

// Throws DomainError unless I, J are nonempty, I, J, K pairwise disjoint and
// all within the node range of g.
void check_statement_sets(const Dag& g, NodeSet I, NodeSet J, NodeSet K);

// Every collider of the path lies in K or an(K) and no interior non-collider
// lies in K.
bool d_connected_path(const Dag& g, const Path& path, NodeSet K);

// Moralization: restrict to the ancestral closure of I u J u K, marry
// co-parents, drop directions, delete K, test undirected reachability.
bool d_separated(const Dag& g, NodeSet I, NodeSet J, NodeSet K);

// Path enumeration applying d_connected_path to every simple path.
bool d_separated_oracle(const Dag& g, NodeSet I, NodeSet J, NodeSet K);

// G*_K: i -> j whenever some directed path from i to j in g has no interior
// node in K.
Dag conditional_reachability(const Dag& g, NodeSet K);

// Existence of a *-connecting path between i and j given K, found by shape
// search in G*_K (direct edge, common parent outside K, or a single collider
// in K or with an edge into K, reached from each side directly or through a
// parent outside K).
bool star_connected(const Dag& g, int i, int j, NodeSet K);

// Def.-level check: some simple path in g is d-connecting given K and has at
// most one collider.
bool star_connected_oracle(const Dag& g, int i, int j, NodeSet K);

bool star_separated(const Dag& g, NodeSet I, NodeSet J, NodeSet K);
bool star_separated_oracle(const Dag& g, NodeSet I, NodeSet J, NodeSet K);

bool separated(const Dag& g, NodeSet I, NodeSet J, NodeSet K, Criterion criterion);

inline constexpr int kMaxStatementNodes = 7;

// Pairwise statements ({i}, {j}, K), i < j, K a subset of [n] \ {i, j},
// that hold under the criterion; sorted.
std::vector<CiStatement> ci_statements(const Dag& g, Criterion criterion);

// Index of ({i},{j},K) in the fixed enumeration of all pairwise statements
// on n nodes: pairs (i<j) lexicographic, then K as a mask over the remaining
// n-2 nodes in ascending order.
class PairwiseStatementIndex {
 public:
  explicit PairwiseStatementIndex(int n);
  int size() const { return n_; }
  std::size_t count() const { return count_; }
  std::size_t pair_count() const { return pairs_.size(); }
  std::pair<int, int> pair(std::size_t p) const { return pairs_[p]; }
  // K for pair p and sub-mask s.
  NodeSet conditioning_set(std::size_t p, std::uint64_t sub_mask) const;

 private:
  int n_;
  std::size_t count_ = 0;
  std::vector<std::pair<int, int>> pairs_;
};

// Bit b set iff pairwise statement b (in PairwiseStatementIndex order) holds.
std::vector<std::uint64_t> statement_bits(const Dag& g, Criterion criterion);

}  // namespace troplin
