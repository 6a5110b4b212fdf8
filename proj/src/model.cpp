#include "troplin/model.hpp"

#include "troplin/error.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <tuple>

namespace troplin {

MaxLinearModel::MaxLinearModel(Dag graph, ExactMatrix coefficients)
    : graph_(std::move(graph)), coefficients_(std::move(coefficients)) {
  const auto n = static_cast<std::size_t>(graph_.size());
  if (coefficients_.rows() != n || coefficients_.cols() != n)
    throw ShapeError("coefficient matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool edge = graph_.has_edge(static_cast<int>(j + 1), static_cast<int>(i + 1));
      const bool positive = !scalar::is_zero(coefficients_(i, j));
      if (edge != positive)
        throw DomainError("coefficient c_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          (edge ? " must be positive on edge " : " must be zero off edge ") +
                          std::to_string(j + 1) + "->" + std::to_string(i + 1));
    }
  }
}

MaxLinearModel MaxLinearModel::from_weighted_edges(int n, std::span<const WeightedEdge> edges) {
  Dag g(n);
  ExactMatrix c(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const WeightedEdge& e : edges) {
    g.add_edge(e.edge.from, e.edge.to);
    if (!(e.weight > 0))
      throw DomainError("edge " + std::to_string(e.edge.from) + "->" + std::to_string(e.edge.to) +
                        " needs a positive weight");
    c.set(static_cast<std::size_t>(e.edge.to - 1), static_cast<std::size_t>(e.edge.from - 1), e.weight);
  }
  return MaxLinearModel(std::move(g), std::move(c));
}

MaxLinearModel MaxLinearModel::with_unit_weights(const Dag& graph) {
  std::vector<WeightedEdge> edges;
  for (const Edge& e : graph.edges()) edges.push_back({e, Rational(1)});
  return from_weighted_edges(graph.size(), edges);
}

const Rational& MaxLinearModel::weight(int from, int to) const {
  if (from < 1 || from > size() || to < 1 || to > size()) throw DomainError("weight: node out of range");
  return coefficients_(static_cast<std::size_t>(to - 1), static_cast<std::size_t>(from - 1));
}

std::vector<WeightedEdge> MaxLinearModel::weighted_edges() const {
  std::vector<WeightedEdge> out;
  for (const Edge& e : graph_.edges()) out.push_back({e, weight(e.from, e.to)});
  return out;
}

double frechet_cdf(double x, double alpha) {
  if (x <= 0.0) return 0.0;
  return std::exp(-std::pow(x, -alpha));
}

SampleMatrix sample(const MaxLinearModel& model, double alpha, std::size_t m, std::uint64_t seed) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("sample: alpha must be positive");
  if (m == 0) throw DomainError("sample: sample count must be at least 1");
  const auto n = static_cast<std::size_t>(model.size());
  const ApproxMatrix star = kleene_star(model.coefficients_as<double>());

  std::mt19937_64 engine(seed);
  SampleMatrix out{m, n, std::vector<double>(m * n)};
  std::vector<double> z(n);
  for (std::size_t s = 0; s < m; ++s) {
    for (double& zi : z) {
      const double u = (static_cast<double>(engine() >> 11) + 0.5) * 0x1.0p-53;
      zi = std::pow(-std::log(u), -1.0 / alpha);
    }
    for (std::size_t i = 0; i < n; ++i) {
      double x = 0.0;
      for (std::size_t j = 0; j < n; ++j) x = std::max(x, star(i, j) * z[j]);
      out.values[s * n + i] = x;
    }
  }
  return out;
}

TropCovariance trop_covariance(const MaxLinearModel& model) {
  const ExactMatrix star = kleene_star(model.coefficients());
  return {trop_matmul(star, transpose(star))};
}

ApproxMatrix trop_covariance_approx(const MaxLinearModel& model) {
  const ApproxMatrix star = kleene_star(model.coefficients_as<double>());
  return trop_matmul(star, transpose(star));
}

Rational trek_monomial(const MaxLinearModel& model, const Trek& trek) {
  Rational product(1);
  for (const auto* side : {&trek.left_path, &trek.right_path})
    for (std::size_t s = 0; s + 1 < side->size(); ++s) product *= model.weight((*side)[s], (*side)[s + 1]);
  return product;
}

Rational trek_rule_entry(const MaxLinearModel& model, int i, int j) {
  Rational best(0);
  for (const Trek& trek : all_treks(model.graph(), i, j)) {
    Rational m = trek_monomial(model, trek);
    if (m > best) best = std::move(m);
  }
  return best;
}

RankRecord check_rank_constraint(const MaxLinearModel& model, const TropCovariance& sigma, NodeSet I,
                                 NodeSet J, NodeSet K, const DetOptions& options) {
  check_statement_sets(model.graph(), I, J, K);
  const std::vector<int> rows = (I | K).to_vector();
  const std::vector<int> cols = (J | K).to_vector();
  if (rows.size() > options.size_cap || cols.size() > options.size_cap)
    throw CapError("rank constraint block " + std::to_string(rows.size()) + "x" +
                   std::to_string(cols.size()) + " exceeds det_size_cap " +
                   std::to_string(options.size_cap));
  RankRecord record;
  record.I = I;
  record.J = J;
  record.K = K;
  record.expected = static_cast<std::size_t>(K.size());
  record.observed = trop_rank(submatrix(sigma.sigma, rows, cols), options);
  record.d_separated = d_separated(model.graph(), I, J, K);
  record.satisfied = record.observed == record.expected;
  record.minors_vanish = record.observed <= record.expected;
  return record;
}

RankRecord check_rank_constraint(const MaxLinearModel& model, NodeSet I, NodeSet J, NodeSet K,
                                 const DetOptions& options) {
  return check_rank_constraint(model, trop_covariance(model), I, J, K, options);
}

namespace {

template <class Keep>
std::vector<RankRecord> scan_pairwise(const MaxLinearModel& model, Keep keep) {
  if (model.size() > kMaxStatementNodes)
    throw CapError("rank scans support n <= " + std::to_string(kMaxStatementNodes));
  const TropCovariance sigma = trop_covariance(model);
  const std::vector<CiStatement> d_set = ci_statements(model.graph(), Criterion::kD);
  const std::vector<CiStatement> star_set = ci_statements(model.graph(), Criterion::kStar);
  auto in = [](const std::vector<CiStatement>& set, CiStatement s, Criterion c) {
    s.criterion = c;
    return std::binary_search(set.begin(), set.end(), s);
  };

  std::vector<RankRecord> out;
  const PairwiseStatementIndex index(model.size());
  if (index.count() == 0) return out;
  const std::uint64_t subsets = std::uint64_t{1} << (model.size() - 2);
  for (std::size_t p = 0; p < index.pair_count(); ++p) {
    const auto [i, j] = index.pair(p);
    for (std::uint64_t s = 0; s < subsets; ++s) {
      const CiStatement st{NodeSet::single(i), NodeSet::single(j), index.conditioning_set(p, s),
                           Criterion::kD};
      const bool d = in(d_set, st, Criterion::kD);
      const bool star = in(star_set, st, Criterion::kStar);
      if (!keep(d, star, nullptr)) continue;
      RankRecord r = check_rank_constraint(model, sigma, st.I, st.J, st.K);
      if (keep(d, star, &r)) out.push_back(r);
    }
  }
  std::sort(out.begin(), out.end(), [](const RankRecord& a, const RankRecord& b) {
    return std::tie(a.I, a.J, a.K) < std::tie(b.I, b.J, b.K);
  });
  return out;
}

}  // namespace

std::vector<RankRecord> scan_dsep_rank(const MaxLinearModel& model) {
  return scan_pairwise(model, [](bool d, bool, const RankRecord*) { return d; });
}

std::vector<RankRecord> scan_starsep_rank(const MaxLinearModel& model) {
  return scan_pairwise(model, [](bool d, bool star, const RankRecord*) { return star && !d; });
}

std::vector<RankRecord> scan_rank_drops(const MaxLinearModel& model) {
  return scan_pairwise(model, [](bool d, bool, const RankRecord* r) {
    return !d && (r == nullptr || r->observed == r->expected);
  });
}

TailDependenceMatrix tail_dependence(const MaxLinearModel& model, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("tail_dependence: alpha must be positive");
  const auto n = static_cast<std::size_t>(model.size());
  const ApproxMatrix star = kleene_star(model.coefficients_as<double>());

  // normalized(k, j) = cbar_{kj}; c*_{jk} > 0 exactly for k in An(j).
  std::vector<double> normalized(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double total = 0.0;
    for (std::size_t m = 0; m < n; ++m) total += std::pow(star(j, m), alpha);
    for (std::size_t k = 0; k < n; ++k) normalized[k * n + j] = std::pow(star(j, k), alpha) / total;
  }

  ApproxMatrix chi(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) sum += std::min(normalized[k * n + i], normalized[k * n + j]);
      chi.set(i, j, std::min(sum, 1.0));
    }
  }
  return {alpha, std::move(chi)};
}

}  // namespace troplin
