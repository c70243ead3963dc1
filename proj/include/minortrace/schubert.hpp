#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minortrace/minor_poset.hpp"

namespace minortrace {

// Closed integer interval [lo, hi]; empty when lo > hi.
struct IntInterval {
  int lo = 1;
  int hi = 0;

  bool empty() const { return lo > hi; }
  int count() const { return empty() ? 0 : hi - lo + 1; }
  std::vector<int> values() const;

  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

// Decomposition of gamma = [a_1..a_m] into blocks beta_0..beta_{t+1} (maximal
// consecutive runs of entries) and gaps chi_0..chi_t, tiling [a_1, n]. The
// final run is assigned to beta_{t+1} exactly when it ends at n, so beta_{t+1}
// is empty iff a_m < n. A single run ending at n yields t = -1.
struct BlockData {
  SchubertIndex gamma;
  int t = 0;
  std::vector<int> boundaries;       // k(0..t+1), k(0) = 0
  std::vector<IntInterval> blocks;   // beta_0..beta_{t+1}
  std::vector<IntInterval> gaps;     // chi_0..chi_t, all nonempty

  // 1-based boundary accessor: k(i).
  int k(int i) const { return boundaries[static_cast<std::size_t>(i)]; }
};

// kappa_i = sum_{j<=i} |beta_j| + sum_{j>=i} |chi_j| for 0 <= i <= t.
// Empty (spread 0) when t = -1.
struct KappaProfile {
  std::vector<int> values;
  std::optional<int> max;  // kappa
  std::optional<int> min;  // kappa'
  int spread = 0;          // kappa - kappa'; 0 when empty
};

// Threshold sets of one level h: S_h = {i | kappa - kappa_i >= h},
// T_h its complement in {0..t}, and the boundary indices
// U_h^+ = {i >= 1 | i in S_h, i-1 in T_h}, U_h^- = {i >= 1 | i in T_h, i-1 in S_h}.
struct BoundaryLevel {
  int h = 0;
  std::vector<int> S, T;
  std::vector<int> U_plus, U_minus, U;
};

struct BoundaryFamily {
  std::vector<BoundaryLevel> levels;  // h = 1..spread
  std::vector<int> U;                 // union of all U_h
};

// One prime marker of a trace factor: the boundary index i together with the
// minor defining the prime.
template <typename Prime>
struct TraceMarker {
  int index = 0;
  Prime prime;
};

// Ordered factor list of the canonical trace, one factor per level h; factor
// h collects the primes with i in U_h. An empty factor list is the unit
// ideal (the Gorenstein case).
template <typename Prime>
struct TraceDescription {
  std::vector<std::vector<TraceMarker<Prime>>> factors;

  bool is_unit() const { return factors.empty(); }
};

// Symbolic hypotheses on the base ring B. Base-ring ideals are carried as
// opaque tokens, never computed.
struct BaseRingAssumptions {
  bool gorenstein_normal_domain = false;
  bool reduced_cm_with_canonical = false;
  bool base_is_ctr = true;
  std::string nongorenstein_ideal_token = "a";  // label for the defining ideal of B's non-Gorenstein locus

  // At least one structural flag must be set; a Gorenstein base is CTR.
  void validate() const;
};

struct CtrVerdict {
  bool verdict = false;
  std::string reason;
  // Intersection form of the canonical trace, valid when verdict is true:
  // meet over I = {i | kappa_i != kappa_{i-1}} of the boundary primes, with a
  // tr_B(omega_B) token appended for a non-Gorenstein-flagged base.
  std::optional<std::string> trace_when_ctr;
};

struct GorensteinLocus {
  std::vector<int> prime_indices;        // U, sorted
  std::optional<std::string> base_token; // the aG / aR component, if base is
                                         // not flagged Gorenstein
};

struct SchubertWitness {
  SchubertIndex element;        // gamma itself
  int degree = 1;               // ASL degree of a maximal minor
  int product_min_degree = 0;   // = spread
};

// Formula-derived value that disagrees with a circulated reference value for
// the same input; both sides are surfaced, neither is silently corrected.
struct DisputedFixture {
  std::string quantity;
  std::string computed;
  std::string reference;
  std::string note;
};

struct SchubertReport {
  SchubertIndex gamma;
  BaseRingAssumptions base;
  BlockData blocks;
  KappaProfile kappa;
  std::vector<SchubertIndex> zeta;   // zeta_0..zeta_t
  std::vector<SchubertIndex> sigma;  // sigma_1..sigma_t
  BoundaryFamily boundary;
  std::vector<std::pair<int, SchubertIndex>> canonical_class;  // (kappa_i, zeta_i)
  TraceDescription<SchubertIndex> trace;
  CtrVerdict ctr;
  GorensteinLocus locus;
  std::optional<SchubertWitness> witness;  // present iff spread >= 2
  std::vector<DisputedFixture> disputed;
};

BlockData block_decompose(const SchubertIndex& gamma);

KappaProfile kappa_profile(const BlockData& bd);

// zeta_i (0 <= i <= t): gamma with a_{k(i+1)} replaced by a_{k(i+1)} + 1.
// sigma_i (1 <= i <= t): gamma with a_{k(i)} (the last entry of block
// beta_{i-1}) removed and a_{k(i+1)} + 1 appended after block beta_i.
std::pair<std::vector<SchubertIndex>, std::vector<SchubertIndex>> zeta_sigma(
    const BlockData& bd);

BoundaryFamily boundary_family(const KappaProfile& kp);

// The divisor class of the canonical module as a formal sum
// sum_i kappa_i * cl(J(x; zeta_i)).
std::vector<std::pair<int, SchubertIndex>> canonical_class(
    const SchubertIndex& gamma);

// Canonical trace of G(X; gamma) over a Gorenstein normal domain:
// product over h = 1..spread of the intersection of J(x; sigma_i), i in U_h.
TraceDescription<SchubertIndex> schubert_trace(const SchubertIndex& gamma);

SchubertReport schubert_report(const SchubertIndex& gamma,
                               const BaseRingAssumptions& base);

std::vector<DisputedFixture> disputed_fixtures_for_schubert(
    const SchubertIndex& gamma);

}  // namespace minortrace
