#pragma once

// Linear algebra over the max-times semiring ([0, inf), max, *).
//
// Scalars are either exact (Rational) or approximate (double). The semiring
// zero is 0 and encodes an absent edge or path; the unit is 1. All operations
// are pure and safe to call concurrently.

#include "troplin/error.hpp"
#include "troplin/rational.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace troplin {

template <class T>
concept TropicalScalar = std::same_as<T, Rational> || std::same_as<T, double>;

inline constexpr std::size_t kDefaultDetSizeCap = 8;
inline constexpr double kDefaultTieTolerance = 1e-9;

struct DetOptions {
  std::size_t size_cap = kDefaultDetSizeCap;
  // Relative tolerance for deciding that two floating products tie. Ignored
  // in exact mode.
  double tie_tolerance = kDefaultTieTolerance;
};

namespace scalar {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_negative(const Rational& x) { return sgn(x) < 0; }
inline bool is_negative(double x) { return x < 0.0 || std::isnan(x); }

inline bool ties(const Rational& a, const Rational& b, double /*tolerance*/) { return a == b; }
inline bool ties(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max(std::abs(a), std::abs(b));
}

template <TropicalScalar T>
T convert(const Rational& x) {
  if constexpr (std::same_as<T, double>) {
    return x.get_d();
  } else {
    return x;
  }
}

}  // namespace scalar

template <TropicalScalar T>
class TropMatrix {
 public:
  using value_type = T;

  TropMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  }

  TropMatrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
      : rows_(rows), cols_(cols), entries_(std::move(row_major)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
    if (entries_.size() != rows * cols)
      throw ShapeError("entry count " + std::to_string(entries_.size()) + " does not match " +
                       std::to_string(rows) + "x" + std::to_string(cols));
    for (const T& x : entries_) check_entry(x);
  }

  TropMatrix(std::initializer_list<std::initializer_list<T>> grid)
      : rows_(grid.size()), cols_(grid.size() == 0 ? 0 : grid.begin()->size()) {
    if (rows_ == 0 || cols_ == 0) throw ShapeError("matrix dimensions must be positive");
    entries_.reserve(rows_ * cols_);
    for (const auto& row : grid) {
      if (row.size() != cols_) throw ShapeError("ragged matrix literal");
      for (const T& x : row) {
        check_entry(x);
        entries_.push_back(x);
      }
    }
  }

  static TropMatrix identity(std::size_t n) {
    TropMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  // 0-based element access.
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, T value) {
    check_entry(value);
    entries_[r * cols_ + c] = std::move(value);
  }

  std::span<const T> entries() const { return entries_; }

  bool operator==(const TropMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
  }

 private:
  static void check_entry(const T& x) {
    if (scalar::is_negative(x)) throw DomainError("tropical matrix entries must be nonnegative");
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> entries_;
};

using ExactMatrix = TropMatrix<Rational>;
using ApproxMatrix = TropMatrix<double>;

template <TropicalScalar To>
TropMatrix<To> convert_matrix(const ExactMatrix& m) {
  std::vector<To> out;
  out.reserve(m.entries().size());
  for (const Rational& x : m.entries()) out.push_back(scalar::convert<To>(x));
  return TropMatrix<To>(m.rows(), m.cols(), std::move(out));
}

// (A (*) B)_ij = max_l a_il b_lj
template <TropicalScalar T>
TropMatrix<T> trop_matmul(const TropMatrix<T>& a, const TropMatrix<T>& b) {
  if (a.cols() != b.rows())
    throw ShapeError("trop_matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  std::vector<T> out(a.rows() * b.cols());
  T term;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      T& best = out[i * b.cols() + j];
      for (std::size_t l = 0; l < a.cols(); ++l) {
        term = a(i, l) * b(l, j);
        if (term > best) best = term;
      }
    }
  }
  return TropMatrix<T>(a.rows(), b.cols(), std::move(out));
}

// Entrywise maximum (tropical matrix sum).
template <TropicalScalar T>
TropMatrix<T> trop_max(const TropMatrix<T>& a, const TropMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("trop_max: shape mismatch");
  std::vector<T> out(a.entries().begin(), a.entries().end());
  for (std::size_t k = 0; k < out.size(); ++k)
    if (b.entries()[k] > out[k]) out[k] = b.entries()[k];
  return TropMatrix<T>(a.rows(), a.cols(), std::move(out));
}

template <TropicalScalar T>
TropMatrix<T> transpose(const TropMatrix<T>& a) {
  TropMatrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a(i, j));
  return t;
}

template <TropicalScalar T>
TropMatrix<T> trop_pow(const TropMatrix<T>& a, unsigned k) {
  if (!a.square()) throw ShapeError("trop_pow: matrix is not square");
  TropMatrix<T> result = TropMatrix<T>::identity(a.rows());
  for (unsigned step = 0; step < k; ++step) result = trop_matmul(result, a);
  return result;
}

namespace detail {

// Topological order of the support digraph {j -> i : c_ij > 0}; throws on a
// cycle.
template <TropicalScalar T>
std::vector<std::size_t> support_order(const TropMatrix<T>& c) {
  const std::size_t n = c.rows();
  std::vector<std::size_t> indegree(n, 0), order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!scalar::is_zero(c(i, j))) ++indegree[i];
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) order.push_back(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t j = order[head];
    for (std::size_t i = 0; i < n; ++i)
      if (!scalar::is_zero(c(i, j)) && --indegree[i] == 0) order.push_back(i);
  }
  if (order.size() != n) throw DomainError("kleene_star: coefficient support contains a cycle");
  return order;
}

}  // namespace detail

// C* = max_{k<n} C^k for C supported on a DAG: c*_ij is the maximum product
// of edge weights over directed paths j -> ... -> i, and c*_ii = 1.
// Computed by longest-path dynamic programming in topological order.
template <TropicalScalar T>
TropMatrix<T> kleene_star(const TropMatrix<T>& c) {
  if (!c.square()) throw ShapeError("kleene_star: matrix is not square");
  const std::size_t n = c.rows();
  const std::vector<std::size_t> order = detail::support_order(c);
  std::vector<T> star(n * n);
  T term;
  for (std::size_t source = 0; source < n; ++source) {
    star[source * n + source] = T(1);
    for (std::size_t i : order) {
      if (i == source) continue;
      T& best = star[i * n + source];
      for (std::size_t p = 0; p < n; ++p) {
        if (scalar::is_zero(c(i, p))) continue;
        term = c(i, p) * star[p * n + source];
        if (term > best) best = term;
      }
    }
  }
  return TropMatrix<T>(n, n, std::move(star));
}

template <TropicalScalar T>
struct TropDetResult {
  T value{};
  // Number of permutations whose product equals value (within the tie
  // tolerance in approximate mode).
  std::size_t attain_count = 0;
  // Up to two maximizing permutations, lexicographically smallest first.
  // perm[r] is the 0-based column chosen for row r.
  std::vector<std::vector<std::size_t>> witnesses;

  // The maximum is attained at least twice, or every term vanishes.
  bool singular() const { return attain_count >= 2 || scalar::is_zero(value); }
};

namespace detail {

inline std::size_t factorial(std::size_t k) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

template <TropicalScalar T>
class PermutationSearch {
 public:
  PermutationSearch(const TropMatrix<T>& a, double tolerance)
      : a_(a), n_(a.rows()), tolerance_(tolerance), perm_(n_), used_(n_, false), partial_(n_ + 1) {
    partial_[0] = T(1);
  }

  TropDetResult<T> run() {
    // Pass 1 finds the maximum; pass 2 counts the terms tied with it.
    counting_ = false;
    visit(0);
    counting_ = true;
    if (scalar::is_zero(best_)) {
      result_.value = best_;
      result_.attain_count = factorial(n_);
      collect_lexicographic_zero_witnesses();
      return result_;
    }
    result_.value = best_;
    visit(0);
    return result_;
  }

 private:
  void visit(std::size_t row) {
    if (row == n_) {
      const T& product = partial_[n_];
      if (!counting_) {
        if (product > best_) best_ = product;
      } else if (scalar::ties(product, best_, tolerance_)) {
        ++result_.attain_count;
        if (result_.witnesses.size() < 2) result_.witnesses.push_back(perm_);
      }
      return;
    }
    for (std::size_t col = 0; col < n_; ++col) {
      if (used_[col] || scalar::is_zero(a_(row, col))) continue;
      used_[col] = true;
      perm_[row] = col;
      partial_[row + 1] = partial_[row] * a_(row, col);
      visit(row + 1);
      used_[col] = false;
    }
  }

  // All n! products vanish; the first two permutations in lex order witness it.
  void collect_lexicographic_zero_witnesses() {
    std::vector<std::size_t> p(n_);
    for (std::size_t k = 0; k < n_; ++k) p[k] = k;
    result_.witnesses.push_back(p);
    if (std::next_permutation(p.begin(), p.end())) result_.witnesses.push_back(p);
  }

  const TropMatrix<T>& a_;
  std::size_t n_;
  double tolerance_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  std::vector<T> partial_;
  T best_{};
  bool counting_ = false;
  TropDetResult<T> result_;
};

inline void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw CapError(std::string(what) + ": size " + std::to_string(n) + " exceeds det_size_cap " +
                   std::to_string(cap) +
                   " (tropical rank is NP-hard in general; exhaustive evaluation is capped)");
}

}  // namespace detail

// tdet(A) = max over permutations s of prod_r a_{r, s(r)}, with the number of
// permutations attaining it. Pruned enumeration: any partial product hitting
// the semiring zero is abandoned.
template <TropicalScalar T>
TropDetResult<T> trop_det(const TropMatrix<T>& a, const DetOptions& options = {}) {
  if (!a.square()) throw ShapeError("trop_det: matrix is not square");
  detail::check_cap(a.rows(), options.size_cap, "trop_det");
  return detail::PermutationSearch<T>(a, options.tie_tolerance).run();
}

// Singular when the determinant's maximum is attained at least twice. A
// vanishing determinant also counts as singular, which matters only for the
// 1x1 matrix [0].
template <TropicalScalar T>
bool is_trop_singular(const TropMatrix<T>& a, const DetOptions& options = {}) {
  return trop_det(a, options).singular();
}

// Rows and columns are 1-based indices, taken in the given order.
template <TropicalScalar T>
TropMatrix<T> submatrix(const TropMatrix<T>& a, std::span<const int> rows, std::span<const int> cols) {
  if (rows.empty() || cols.empty()) throw ShapeError("submatrix: empty index list");
  std::vector<T> out;
  out.reserve(rows.size() * cols.size());
  for (int r : rows) {
    if (r < 1 || static_cast<std::size_t>(r) > a.rows())
      throw DomainError("submatrix: row index " + std::to_string(r) + " out of range");
    for (int c : cols) {
      if (c < 1 || static_cast<std::size_t>(c) > a.cols())
        throw DomainError("submatrix: column index " + std::to_string(c) + " out of range");
      out.push_back(a(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)));
    }
  }
  return TropMatrix<T>(rows.size(), cols.size(), std::move(out));
}

namespace detail {

// Advances a strictly increasing index combination drawn from [0, n).
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t r = comb.size();
  for (std::size_t k = r; k-- > 0;) {
    if (comb[k] < n - r + k) {
      ++comb[k];
      for (std::size_t m = k + 1; m < r; ++m) comb[m] = comb[m - 1] + 1;
      return true;
    }
  }
  return false;
}

template <TropicalScalar T>
TropMatrix<T> minor_of(const TropMatrix<T>& a, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  std::vector<T> out;
  out.reserve(rows.size() * cols.size());
  for (std::size_t r : rows)
    for (std::size_t c : cols) out.push_back(a(r, c));
  return TropMatrix<T>(rows.size(), cols.size(), std::move(out));
}

}  // namespace detail

struct RankWitness {
  std::size_t rank = 0;
  // 0-based rows and columns of the first non-singular minor found.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

// Largest r with a tropically non-singular r x r minor. Minors are searched
// in descending r, row subsets then column subsets in lexicographic order,
// stopping at the first non-singular one.
template <TropicalScalar T>
RankWitness trop_rank_witness(const TropMatrix<T>& a, const DetOptions& options = {}) {
  const std::size_t top = std::min(a.rows(), a.cols());
  detail::check_cap(top, options.size_cap, "trop_rank");
  for (std::size_t r = top; r >= 1; --r) {
    std::vector<std::size_t> rows(r);
    for (std::size_t k = 0; k < r; ++k) rows[k] = k;
    do {
      std::vector<std::size_t> cols(r);
      for (std::size_t k = 0; k < r; ++k) cols[k] = k;
      do {
        if (!trop_det(detail::minor_of(a, rows, cols), options).singular())
          return RankWitness{r, rows, cols};
      } while (detail::next_combination(cols, a.cols()));
    } while (detail::next_combination(rows, a.rows()));
  }
  return RankWitness{};
}

template <TropicalScalar T>
std::size_t trop_rank(const TropMatrix<T>& a, const DetOptions& options = {}) {
  return trop_rank_witness(a, options).rank;
}

}  // namespace troplin
