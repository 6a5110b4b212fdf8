#pragma once

#include "troplin/graph.hpp"
#include "troplin/separation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace troplin {

// Skeletons and unshielded colliders coincide. Throws DomainError on a node
// count mismatch.
bool markov_equivalent_d(const Dag& g, const Dag& h);

// Pairwise *-separation statement sets coincide (n <= 7).
bool markov_equivalent_star(const Dag& g, const Dag& h);

bool markov_equivalent(const Dag& g, const Dag& h, Criterion criterion);

// How DAGs are grouped into classes.
enum class MecKey {
  kStructure,       // (skeleton, unshielded colliders)
  kDStatements,     // full pairwise d-separation statement set
  kStarStatements,  // full pairwise *-separation statement set
};

struct MecPartition {
  int n = 0;
  Criterion criterion = Criterion::kD;
  std::size_t dag_count = 0;
  // Members are indices into enumerate_dags(n), ascending; classes are ordered
  // by their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::string> fingerprints;  // parallel to classes
  // class_of[d] is the class index of DAG d.
  std::vector<std::size_t> class_of;
};

// Canonical grouping key of one DAG.
std::string mec_fingerprint(const Dag& g, MecKey key);

// Partition of all labeled DAGs on [n] (n <= 5). `jobs` worker threads
// compute fingerprints; the result does not depend on it.
MecPartition partition_dags(int n, MecKey key, unsigned jobs = 1);

// d groups by structure; star by the *-statement set.
MecPartition enumerate_mecs(int n, Criterion criterion, unsigned jobs = 1);

struct MecCounterexample {
  std::size_t first = 0;   // DAG indices
  std::size_t second = 0;
  bool d_equivalent = false;
  bool star_equivalent = false;
};

struct MecReport {
  int n = 0;
  std::size_t dags = 0;
  std::size_t classes_d = 0;
  std::size_t classes_star = 0;
  bool equal = false;
  std::vector<MecCounterexample> counterexamples;
};

// Compares the d- and *-partitions of all DAGs on [n].
MecReport verify_mec_equality(int n, unsigned jobs = 1);

// Partitions agree exactly (same classes, as index sets).
bool same_partition(const MecPartition& a, const MecPartition& b);

}  // namespace troplin
