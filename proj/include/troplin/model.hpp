#pragma once

#include "troplin/graph.hpp"
#include "troplin/rational.hpp"
#include "troplin/separation.hpp"
#include "troplin/trop_core.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace troplin {

struct WeightedEdge {
  Edge edge;
  Rational weight;
};

// X_i = max_j c_ij X_j  v  Z_i on a DAG. c_ij > 0 exactly when j -> i is an
// edge; the diagonal is zero.
class MaxLinearModel {
 public:
  MaxLinearModel(Dag graph, ExactMatrix coefficients);

  static MaxLinearModel from_weighted_edges(int n, std::span<const WeightedEdge> edges);
  static MaxLinearModel with_unit_weights(const Dag& graph);

  const Dag& graph() const { return graph_; }
  const ExactMatrix& coefficients() const { return coefficients_; }
  int size() const { return graph_.size(); }
  // c_{to,from}
  const Rational& weight(int from, int to) const;
  // Parallel to graph().edges().
  std::vector<WeightedEdge> weighted_edges() const;

  template <TropicalScalar T>
  TropMatrix<T> coefficients_as() const {
    return convert_matrix<T>(coefficients_);
  }

 private:
  Dag graph_;
  ExactMatrix coefficients_;
};

// X = C* (*) Z. Z must be strictly positive.
template <TropicalScalar T>
std::vector<T> solve(const MaxLinearModel& model, std::span<const T> z) {
  if (z.size() != static_cast<std::size_t>(model.size()))
    throw ShapeError("solve: innovation vector has length " + std::to_string(z.size()) +
                     ", expected " + std::to_string(model.size()));
  for (const T& zi : z)
    if (!(zi > 0)) throw DomainError("solve: innovations must be strictly positive");
  const TropMatrix<T> star = kleene_star(model.coefficients_as<T>());
  std::vector<T> x(z.size());
  T term;
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j) {
      term = star(i, j) * z[j];
      if (term > x[i]) x[i] = term;
    }
  return x;
}

// Row-major draws, one row per sample.
struct SampleMatrix {
  std::size_t count = 0;
  std::size_t nodes = 0;
  std::vector<double> values;

  double at(std::size_t sample, std::size_t node) const { return values[sample * nodes + node]; }
};

// m independent draws of X = C* (*) Z with Z_i iid standard Frechet(alpha).
// The generator is std::mt19937_64 seeded with `seed`; each uniform is
// u = ((x >> 11) + 0.5) / 2^53 and z = (-ln u)^(-1/alpha). Innovations are
// drawn sample by sample, node 1 first. Output is identical across runs and
// platforms for the same arguments.
SampleMatrix sample(const MaxLinearModel& model, double alpha, std::size_t m, std::uint64_t seed);

double frechet_cdf(double x, double alpha);

// Sigma^trop = C* (*) (C*)^T, symmetric with diagonal >= 1.
struct TropCovariance {
  ExactMatrix sigma;
};

TropCovariance trop_covariance(const MaxLinearModel& model);
ApproxMatrix trop_covariance_approx(const MaxLinearModel& model);

// Product of the coefficients along both sides, top weight 1.
Rational trek_monomial(const MaxLinearModel& model, const Trek& trek);

// Maximum trek monomial over all treks between i and j (0 when none).
Rational trek_rule_entry(const MaxLinearModel& model, int i, int j);

struct RankRecord {
  NodeSet I;
  NodeSet J;
  NodeSet K;
  std::size_t expected = 0;  // #K
  std::size_t observed = 0;  // trank(Sigma_{I u K, J u K})
  bool d_separated = false;
  // observed == expected; the rank constraint of a d-separation statement.
  bool satisfied = false;
  // observed <= expected: every (#K+1)-minor of the block is singular.
  bool minors_vanish = false;
};

// Extracts Sigma^trop_{I u K, J u K} (rows and columns ascending) and
// computes its tropical rank in exact arithmetic.
RankRecord check_rank_constraint(const MaxLinearModel& model, NodeSet I, NodeSet J, NodeSet K,
                                 const DetOptions& options = {});
RankRecord check_rank_constraint(const MaxLinearModel& model, const TropCovariance& sigma, NodeSet I,
                                 NodeSet J, NodeSet K, const DetOptions& options = {});

// One record per pairwise d-separation statement of the graph.
std::vector<RankRecord> scan_dsep_rank(const MaxLinearModel& model);

// One record per pairwise *-separation statement that d-separation does not
// imply. Observational only.
std::vector<RankRecord> scan_starsep_rank(const MaxLinearModel& model);

// Pairwise statements that are not d-separated yet whose block has rank #K
// for these coefficients (coefficient-dependent rank drops).
std::vector<RankRecord> scan_rank_drops(const MaxLinearModel& model);

struct TailDependenceMatrix {
  double alpha = 0.0;
  ApproxMatrix chi;
};

// With w(k => j) = c*_{jk} and An(j) = an(j) u {j}:
//   cbar_{kj} = w(k => j)^alpha / sum_{m in An(j)} w(m => j)^alpha
//   chi(i, j) = sum_{k in An(i) n An(j)} min(cbar_{ki}, cbar_{kj})
TailDependenceMatrix tail_dependence(const MaxLinearModel& model, double alpha);

}  // namespace troplin
