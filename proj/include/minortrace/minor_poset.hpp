#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minortrace/errors.hpp"

namespace minortrace {

// Dimensions of the generic matrix X. Schubert-side operations additionally
// require rows <= cols; that is validated at operation entry, not here.
struct Ambient {
  int rows = 0;  // m
  int cols = 0;  // n

  Ambient(int m, int n) : rows(m), cols(n) {
    if (m < 1 || n < 1) throw input_error("ambient dimensions must be >= 1");
  }

  friend bool operator==(const Ambient&, const Ambient&) = default;
  friend auto operator<=>(const Ambient&, const Ambient&) = default;
};

// Column tuple [a_1 < ... < a_m] of a maximal minor of X, 1-based entries in
// [1, n]. The constructor rejects tuples that are not strictly increasing;
// it never normalizes.
class SchubertIndex {
 public:
  SchubertIndex(std::vector<int> cols, Ambient ambient);

  const std::vector<int>& cols() const { return cols_; }
  const Ambient& ambient() const { return ambient_; }
  int size() const { return static_cast<int>(cols_.size()); }

  // 1-based access: entry(i) = a_i.
  int entry(int i) const { return cols_[static_cast<std::size_t>(i) - 1]; }

  // The maximal element [n-m+1, ..., n] of Gamma(X).
  static SchubertIndex top(Ambient ambient);
  // The minimal element [1, ..., m] of Gamma(X).
  static SchubertIndex bottom(Ambient ambient);

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  // Total order for containers and deterministic output: lexicographic on
  // the column tuple (ambient first, so mixed-ambient sets stay ordered).
  // This is NOT the poset order; see poset_leq.
  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  Ambient ambient_;
  std::vector<int> cols_;
};

// Row/column pair [a_1..a_r | b_1..b_r] of an r-minor of X, 1 <= r <= min(m,n).
class BiMinor {
 public:
  BiMinor(std::vector<int> rows, std::vector<int> cols, Ambient ambient);

  const std::vector<int>& rows() const { return rows_; }
  const std::vector<int>& cols() const { return cols_; }
  const Ambient& ambient() const { return ambient_; }
  int size() const { return static_cast<int>(rows_.size()); }

  friend bool operator==(const BiMinor&, const BiMinor&) = default;

  // Total order for containers: (ambient, size, rows, cols) lexicographic.
  friend auto operator<=>(const BiMinor& a, const BiMinor& b) {
    if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    return a.cols_ <=> b.cols_;
  }

 private:
  Ambient ambient_;
  std::vector<int> rows_;
  std::vector<int> cols_;
};

// N^n column grading of a maximal minor: weights[j-1] = 1 iff column j is
// used. Depends only on column indices.
struct Multidegree {
  std::vector<int> weights;

  friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

// Componentwise partial order on Gamma(X): xi <= nu iff xi_i <= nu_i for all i.
bool poset_leq(const SchubertIndex& xi, const SchubertIndex& nu);

// Partial order on Delta(X): [a|b] <= [c|d] iff size(a) >= size(c) and
// a_i <= c_i, b_i <= d_i for all i up to size(c).
bool poset_leq(const BiMinor& alpha, const BiMinor& beta);

// Componentwise min (meet) and max (join); both preserve strict increase.
SchubertIndex meet(const SchubertIndex& xi, const SchubertIndex& nu);
SchubertIndex join(const SchubertIndex& xi, const SchubertIndex& nu);
std::pair<SchubertIndex, SchubertIndex> meet_join(const SchubertIndex& xi,
                                                  const SchubertIndex& nu);

Multidegree multidegree(const SchubertIndex& xi);

// All of Gamma(X; floor) = { delta | delta >= floor }, or all of Gamma(X)
// when floor is absent. Lexicographically sorted; closed under meet and join.
// Requires m <= n. Throws resource_error when the result would exceed cap.
std::vector<SchubertIndex> enumerate_schubert_interval(
    const Ambient& ambient, const std::optional<SchubertIndex>& floor = {},
    std::size_t cap = SIZE_MAX);

// All of Delta(X; floor), or all of Delta(X) when floor is absent. Sorted by
// (size, rows, cols).
std::vector<BiMinor> enumerate_bi_interval(
    const Ambient& ambient, const std::optional<BiMinor>& floor = {},
    std::size_t cap = SIZE_MAX);

// Renderings used verbatim in CLI and JSON output.
std::string to_string(const SchubertIndex& xi);  // "[1 4 7]"
std::string to_string(const BiMinor& b);         // "[1 3|1 4]"

}  // namespace minortrace
