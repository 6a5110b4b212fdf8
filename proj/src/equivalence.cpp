#include "troplin/equivalence.hpp"

#include "troplin/error.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>
#include <unordered_map>

namespace troplin {
namespace {

void check_same_size(const Dag& g, const Dag& h) {
  if (g.size() != h.size())
    throw DomainError("node counts differ: " + std::to_string(g.size()) + " vs " +
                      std::to_string(h.size()));
}

std::string bits_to_hex(const std::vector<std::uint64_t>& bits) {
  std::string out;
  char buf[17];
  for (std::uint64_t word : bits) {
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(word));
    out += buf;
  }
  return out;
}

std::string structure_key(const Dag& g) {
  std::string out = "skeleton:";
  for (const UndirectedEdge& e : skeleton(g)) out += std::to_string(e.a) + "-" + std::to_string(e.b) + ",";
  out += ";colliders:";
  for (const UnshieldedCollider& c : unshielded_colliders(g))
    out += std::to_string(c.i) + ">" + std::to_string(c.k) + "<" + std::to_string(c.j) + ",";
  return out;
}

}  // namespace

bool markov_equivalent_d(const Dag& g, const Dag& h) {
  check_same_size(g, h);
  return skeleton(g) == skeleton(h) && unshielded_colliders(g) == unshielded_colliders(h);
}

bool markov_equivalent_star(const Dag& g, const Dag& h) {
  check_same_size(g, h);
  return statement_bits(g, Criterion::kStar) == statement_bits(h, Criterion::kStar);
}

bool markov_equivalent(const Dag& g, const Dag& h, Criterion criterion) {
  return criterion == Criterion::kD ? markov_equivalent_d(g, h) : markov_equivalent_star(g, h);
}

std::string mec_fingerprint(const Dag& g, MecKey key) {
  switch (key) {
    case MecKey::kStructure:
      return structure_key(g);
    case MecKey::kDStatements:
      return "d:" + bits_to_hex(statement_bits(g, Criterion::kD));
    case MecKey::kStarStatements:
      return "star:" + bits_to_hex(statement_bits(g, Criterion::kStar));
  }
  return {};
}

MecPartition partition_dags(int n, MecKey key, unsigned jobs) {
  const std::vector<Dag> dags = enumerate_dags(n);
  std::vector<std::string> keys(dags.size());

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(dags.size())));
  if (jobs == 1) {
    for (std::size_t d = 0; d < dags.size(); ++d) keys[d] = mec_fingerprint(dags[d], key);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t d = w; d < dags.size(); d += jobs) keys[d] = mec_fingerprint(dags[d], key);
      });
    }
  }

  MecPartition out;
  out.n = n;
  out.criterion = key == MecKey::kStarStatements ? Criterion::kStar : Criterion::kD;
  out.dag_count = dags.size();
  out.class_of.resize(dags.size());
  // Keys are full canonical strings, so map equality is exact equality.
  std::unordered_map<std::string, std::size_t> class_by_key;
  for (std::size_t d = 0; d < dags.size(); ++d) {
    auto [it, inserted] = class_by_key.try_emplace(keys[d], out.classes.size());
    if (inserted) {
      out.classes.emplace_back();
      out.fingerprints.push_back(keys[d]);
    }
    out.classes[it->second].push_back(d);
    out.class_of[d] = it->second;
  }
  return out;
}

MecPartition enumerate_mecs(int n, Criterion criterion, unsigned jobs) {
  return partition_dags(n, criterion == Criterion::kD ? MecKey::kStructure : MecKey::kStarStatements,
                        jobs);
}

bool same_partition(const MecPartition& a, const MecPartition& b) {
  // Class ids are assigned by first appearance, so equal partitions have
  // identical class_of vectors.
  return a.class_of == b.class_of;
}

MecReport verify_mec_equality(int n, unsigned jobs) {
  const MecPartition d = enumerate_mecs(n, Criterion::kD, jobs);
  const MecPartition star = enumerate_mecs(n, Criterion::kStar, jobs);
  MecReport report;
  report.n = n;
  report.dags = d.dag_count;
  report.classes_d = d.classes.size();
  report.classes_star = star.classes.size();
  report.equal = same_partition(d, star);

  constexpr std::size_t kMaxReported = 20;
  auto scan = [&](const MecPartition& by, const MecPartition& other, bool by_is_d) {
    for (const auto& members : by.classes) {
      for (std::size_t m = 1; m < members.size(); ++m) {
        if (other.class_of[members[m]] == other.class_of[members.front()]) continue;
        if (report.counterexamples.size() >= kMaxReported) return;
        report.counterexamples.push_back({members.front(), members[m], by_is_d, !by_is_d});
      }
    }
  };
  if (!report.equal) {
    scan(d, star, true);
    scan(star, d, false);
  }
  return report;
}

}  // namespace troplin
