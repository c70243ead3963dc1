#pragma once

#include <optional>
#include <vector>

#include "minortrace/minor_poset.hpp"
#include "minortrace/schubert.hpp"

namespace minortrace {

// A maximal minor of the extended matrix X~ (m x (n+m)), tagged with the base
// ambient (m, n) it was lifted from. The top element [n+1, ..., n+m] is the
// unique lift with no image minor; it dehomogenizes to the constant
// (-1)^{m(m-1)/2}.
class LiftedIndex {
 public:
  LiftedIndex(SchubertIndex index, Ambient base);

  const SchubertIndex& index() const { return index_; }
  const Ambient& base() const { return base_; }
  bool is_top() const { return is_top_; }

  // Sign of the dehomogenized top element: (-1)^{m(m-1)/2}.
  int top_sign() const { return (base_.rows * (base_.rows - 1) / 2) % 2 ? -1 : 1; }

  friend bool operator==(const LiftedIndex&, const LiftedIndex&) = default;

 private:
  SchubertIndex index_;
  Ambient base_;
  bool is_top_;
};

// Image of a lifted sigma-minor: either a genuine bi-minor, or the unit
// marker tau_i = 1 arising exactly when the lift is the top element. For the
// unit marker, Delta(X; tau_i) is empty and the associated ideal is generated
// by all of Delta(X; delta).
class TauEntry {
 public:
  static TauEntry unit() { return TauEntry(); }
  explicit TauEntry(BiMinor minor) : minor_(std::move(minor)) {}

  bool is_unit() const { return !minor_.has_value(); }
  const BiMinor& minor() const {
    if (is_unit()) throw defect_error("unit tau entry has no minor");
    return *minor_;
  }

  friend bool operator==(const TauEntry&, const TauEntry&) = default;

 private:
  TauEntry() = default;
  std::optional<BiMinor> minor_;
};

// tau <= x, i.e. x lies in Delta(X; tau). Nothing dominates the unit marker.
inline bool tau_leq(const TauEntry& tau, const BiMinor& x) {
  return !tau.is_unit() && poset_leq(tau.minor(), x);
}

// N_1..N_t of the degree bound: every element of
// Delta(X; delta) \ Delta(X; tau_i) has size >= N_i, and every truncation of
// delta to size s in [N_i, r] lies in that difference.
struct ThresholdList {
  std::vector<int> values;  // N_i at position i-1, each in [1, r]
};

// Schubert data of the lift delta~ together with its image under phi.
// eta entries are genuine bi-minors except in the single totally ordered
// case delta = [m|n] (a polynomial ring), where eta~_0 is the top element
// and eta_0 degenerates to the unit marker; any other unit eta is a defect.
struct DeterminantalProfile {
  BiMinor delta;
  LiftedIndex delta_tilde;
  BlockData blocks;                        // blocks/gaps of delta~
  KappaProfile lambda;                     // lambda profile of delta~
  std::vector<SchubertIndex> zeta_tilde;   // eta~_0..eta~_t
  std::vector<SchubertIndex> sigma_tilde;  // tau~_1..tau~_t
  std::vector<TauEntry> eta;               // eta_i = phi(eta~_i)
  std::vector<TauEntry> tau;               // tau_i = phi(tau~_i)
};

// phi on maximal minors of X~: the top element maps to the unit marker; any
// other [b_1..b_m] maps to [a_1..a_r | b_1..b_r] where r = max{j | b_j <= n}
// and the rows a are the complement of {(m+n+1)-b_m, ..., (m+n+1)-b_{r+1}}
// in {1..m}. Images are taken up to sign; no per-minor sign is computed.
TauEntry phi_forward(const LiftedIndex& b);

// The unique non-top lift of delta: columns first, then (m+n+1)-c for c
// running over {1..m} minus delta's rows in decreasing order.
LiftedIndex phi_inverse(const BiMinor& delta);

DeterminantalProfile determinantal_profile(const BiMinor& delta);

ThresholdList n_thresholds(const BiMinor& delta);

}  // namespace minortrace
