#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minortrace/dehomogenization.hpp"
#include "minortrace/determinantal.hpp"
#include "minortrace/schubert.hpp"

namespace minortrace {

using BigInt = boost::multiprecision::cpp_int;

// Fraction-free Bareiss elimination; exact at any size and entry magnitude.
BigInt exact_determinant(std::vector<std::vector<BigInt>> a);

// Integer matrix realizing a generic point of the Schubert cycle of gamma:
// row i is zero strictly left of column a_i and pseudo-random in [1, bound]
// elsewhere. Every m-minor not >= gamma vanishes on it; the gamma-minor is a
// positive triangular product.
struct PatternMatrix {
  SchubertIndex pattern;
  std::uint64_t seed = 0;
  std::vector<std::vector<long long>> entries;  // m x n
};

PatternMatrix pattern_matrix(const SchubertIndex& gamma, std::uint64_t seed,
                             int bound);

// m-minor of the pattern matrix on the given column tuple (all rows).
BigInt pattern_minor(const PatternMatrix& pm, const SchubertIndex& cols);

// Downward-closed subset of an enumerated interval, e.g. Omega_i or Theta_i.
struct PosetIdealSet {
  std::string label;
  std::vector<SchubertIndex> elements;  // sorted
};

enum class Verdict { pass, fail, skipped };

struct OracleReport {
  std::string check;
  std::string params;
  Verdict verdict = Verdict::pass;
  // Counterexample payload on fail; skip reason on skipped. Counterexamples
  // carry the offending tuples so the case can be re-run by hand.
  std::string detail;
  std::uint64_t cases = 0;
  double elapsed_ms = 0.0;  // in-memory only; never serialized
};

struct OracleCaps {
  std::size_t max_elements = 200000;  // per-check poset enumeration cap
  std::size_t max_pairs = 20000;      // straightening pair enumeration cap
};

// Set equality behind the trace description at one level h:
// the intersection of the Theta_k over k in U_h equals the set of joins of
// (xi, nu) with xi in every Omega_i, i in S_h, and nu in every Omega_j,
// j in T_h. The overload with explicit sigmas exists to probe variant
// definitions; the default uses zeta_sigma.
OracleReport check_trace_set_identity(const SchubertIndex& gamma, int h,
                                      const OracleCaps& caps = {});
OracleReport check_trace_set_identity(const SchubertIndex& gamma, int h,
                                      std::span<const SchubertIndex> sigmas,
                                      const OracleCaps& caps = {});
// All levels h = 1..spread; vacuous pass when the spread is 0.
OracleReport check_trace_set_identity(const SchubertIndex& gamma,
                                      const OracleCaps& caps = {});

// Bijectivity, two-sided order preservation and round trips of phi between
// Gamma(X~; delta~) minus the top element and Delta(X; delta); full posets
// when delta is absent. Also certifies |Gamma(X~; delta~)| = |Delta(X; delta)| + 1.
OracleReport check_poset_isomorphism(const Ambient& base,
                                     const std::optional<BiMinor>& delta = {},
                                     const OracleCaps& caps = {});

// gamma not in Delta(X; tau_i) iff the lift of gamma satisfies
// b_{k(i)} < a_{k(i)+1}, over all of Delta(X; delta) and all i.
OracleReport check_membership_equivalence(const BiMinor& delta,
                                          const OracleCaps& caps = {});

// Threshold soundness: every element of Delta(X;delta) \ Delta(X;tau_i) has
// size >= N_i, and each truncation of delta to size in [N_i, r] lies in the
// difference.
OracleReport check_thresholds(const BiMinor& delta,
                              const OracleCaps& caps = {});

// deg(xi) + deg(nu) = deg(join) + deg(meet) over all pairs in Gamma(X;gamma).
OracleReport check_multidegree_identity(const SchubertIndex& gamma,
                                        const OracleCaps& caps = {});

// For pairs (xi, nu) with xi in the S_h-side ideals and nu in the T_h-side
// ideals: the meet is gamma, and on pseudo-random pattern matrices
// minor(xi) * minor(nu) = s * minor(gamma) * minor(join) with a per-pair sign
// s in {+1, -1} independent of the matrix. Exact integer arithmetic.
OracleReport check_straightening(const SchubertIndex& gamma, int h, int trials,
                                 std::uint64_t seed, int bound = 100,
                                 const OracleCaps& caps = {});
OracleReport check_straightening_all_levels(const SchubertIndex& gamma,
                                            int trials, std::uint64_t seed,
                                            int bound = 100,
                                            const OracleCaps& caps = {});

// Non-radicality certificate: the witness lies in every factor's generator
// set while its degree is below the product's minimum generator degree.
// Skipped (not applicable) when the spread is <= 1.
OracleReport check_degree_witness(const BiMinor& delta,
                                  const OracleCaps& caps = {});
OracleReport check_degree_witness(const SchubertIndex& gamma,
                                  const OracleCaps& caps = {});

// S_h/T_h partition {0..t}, every U_h is nonempty, and U is exactly the set
// of kappa jumps.
OracleReport check_boundary_bookkeeping(const SchubertIndex& gamma);

struct SweepConfig {
  int max_m = 3;
  int max_n = 7;
  int trials = 20;
  std::uint64_t seed = 42;
  int bound = 100;
  OracleCaps caps;
};

// All suites over every gamma (m <= max_m, m <= n <= max_n) and every delta
// (m <= max_m, n <= max_n), aggregated per (suite, m, n) in deterministic
// order.
std::vector<OracleReport> run_verification_sweep(const SweepConfig& cfg);

}  // namespace minortrace
