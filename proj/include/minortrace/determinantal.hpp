#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minortrace/dehomogenization.hpp"
#include "minortrace/schubert.hpp"

namespace minortrace {

// Truncation witness for non-radicality of the trace when lambda-lambda' >= 2:
// it lies in the radical of every factor but its ASL degree is below the
// least generator degree of the product.
struct DetWitness {
  BiMinor element;               // [c_1..c_s | d_1..d_s]
  int degree = 0;                // s = max{N_i | i in U}
  long long product_min_degree = 0;
  bool product_min_degree_exact = true;  // false when the generator sets were
                                         // not enumerated (cap) and Lemma-style
                                         // lower bounds were used instead
};

struct DeterminantalReport {
  BiMinor delta;
  BaseRingAssumptions base;
  DeterminantalProfile profile;
  BoundaryFamily boundary;
  std::vector<std::pair<int, TauEntry>> canonical_class;  // (lambda_i, eta_i)
  TraceDescription<TauEntry> trace;
  CtrVerdict ctr;
  GorensteinLocus locus;
  ThresholdList thresholds;
  std::optional<DetWitness> witness;       // present iff lambda-lambda' >= 2
  std::optional<std::string> closed_form;  // "I_r(X)^e" for delta = [1..r|1..r]
  std::vector<DisputedFixture> disputed;
};

// Canonical trace of R(X; delta) over a Gorenstein normal domain: product
// over h of the intersection of I(x; tau_i), i in U_h.
TraceDescription<TauEntry> det_trace(const BiMinor& delta);

// Full report. generator_enum_cap bounds the enumeration of Delta(X; delta)
// used for exact minimum generator degrees; above the cap the witness degrees
// fall back to threshold lower bounds.
DeterminantalReport det_report(const BiMinor& delta,
                               const BaseRingAssumptions& base,
                               std::size_t generator_enum_cap = 50000);

std::vector<DisputedFixture> disputed_fixtures_for_determinantal(
    const BiMinor& delta);

}  // namespace minortrace
