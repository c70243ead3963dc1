#include "minortrace/determinantal.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "minortrace/render.hpp"

namespace minortrace {

namespace {

TraceDescription<TauEntry> trace_from(const DeterminantalProfile& prof,
                                      const BoundaryFamily& bf) {
  TraceDescription<TauEntry> trace;
  for (const BoundaryLevel& lv : bf.levels) {
    std::vector<TraceMarker<TauEntry>> factor;
    for (int i : lv.U)
      factor.push_back({i, prof.tau[static_cast<std::size_t>(i) - 1]});
    trace.factors.push_back(std::move(factor));
  }
  return trace;
}

bool is_initial_segment(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<int>(i) + 1) return false;
  return true;
}

}  // namespace

TraceDescription<TauEntry> det_trace(const BiMinor& delta) {
  const DeterminantalProfile prof = determinantal_profile(delta);
  return trace_from(prof, boundary_family(prof.lambda));
}

DeterminantalReport det_report(const BiMinor& delta,
                               const BaseRingAssumptions& base,
                               std::size_t generator_enum_cap) {
  base.validate();

  DeterminantalReport rep{
      delta, base, determinantal_profile(delta), {}, {}, {}, {}, {}, {}, {},
      {},    {}};
  rep.boundary = boundary_family(rep.profile.lambda);
  for (std::size_t i = 0; i < rep.profile.eta.size(); ++i)
    rep.canonical_class.emplace_back(rep.profile.lambda.values[i],
                                     rep.profile.eta[i]);
  rep.trace = trace_from(rep.profile, rep.boundary);
  rep.thresholds = n_thresholds(delta);

  const int spread = rep.profile.lambda.spread;
  rep.ctr.verdict = spread <= 1 && base.base_is_ctr;
  if (rep.ctr.verdict) {
    rep.ctr.reason = "lambda-lambda' = " + std::to_string(spread) +
                     " <= 1 and the base is CTR";
    std::ostringstream os;
    bool first = true;
    for (int i : rep.boundary.U) {
      if (!first) os << " ∩ ";
      os << render_prime(rep.profile.tau[static_cast<std::size_t>(i) - 1]);
      first = false;
    }
    if (!base.gorenstein_normal_domain) {
      if (!first) os << " ∩ ";
      os << "tr_B(ω_B)·R";
      first = false;
    }
    rep.ctr.trace_when_ctr = first ? "(1)" : os.str();
  } else if (spread > 1 && !base.base_is_ctr) {
    rep.ctr.reason = "lambda-lambda' = " + std::to_string(spread) +
                     " >= 2 and the base is not CTR";
  } else if (spread > 1) {
    rep.ctr.reason = "lambda-lambda' = " + std::to_string(spread) + " >= 2";
  } else {
    rep.ctr.reason = "the base is not CTR";
  }

  rep.locus.prime_indices = rep.boundary.U;
  if (!base.gorenstein_normal_domain)
    rep.locus.base_token = base.nongorenstein_ideal_token + "·R";

  if (spread >= 2) {
    int s = 0;
    for (int i : rep.boundary.U)
      s = std::max(s, rep.thresholds.values[static_cast<std::size_t>(i) - 1]);
    DetWitness w{BiMinor({delta.rows().begin(), delta.rows().begin() + s},
                         {delta.cols().begin(), delta.cols().begin() + s},
                         delta.ambient()),
                 s, 0, true};
    for (int i : rep.boundary.U)
      if (tau_leq(rep.profile.tau[static_cast<std::size_t>(i) - 1],
                  w.element))
        throw defect_error("witness escapes the radical of factor prime " +
                           std::to_string(i));

    // Minimum generator degree of the product: sum over factors of the least
    // size occurring in the factor's generator set
    // { xi in Delta(X;delta) | xi >!= tau_i for all i in U_h }.
    std::vector<BiMinor> interval;
    bool enumerated = true;
    try {
      interval = enumerate_bi_interval(delta.ambient(), delta,
                                       generator_enum_cap);
    } catch (const resource_error&) {
      enumerated = false;
    }
    for (const BoundaryLevel& lv : rep.boundary.levels) {
      if (enumerated) {
        int best = 0;
        for (const BiMinor& xi : interval) {
          bool in_all = true;
          for (int i : lv.U)
            if (tau_leq(rep.profile.tau[static_cast<std::size_t>(i) - 1],
                        xi)) {
              in_all = false;
              break;
            }
          if (in_all && (best == 0 || xi.size() < best)) best = xi.size();
        }
        if (best == 0)
          throw defect_error("trace factor has an empty generator set");
        w.product_min_degree += best;
      } else {
        int bound = 1;
        for (int i : lv.U)
          bound = std::max(
              bound, rep.thresholds.values[static_cast<std::size_t>(i) - 1]);
        w.product_min_degree += bound;
        w.product_min_degree_exact = false;
      }
    }
    if (w.degree >= w.product_min_degree)
      throw defect_error(
          "witness degree is not below the product's minimum generator "
          "degree");
    rep.witness = std::move(w);
  }

  // delta = [1..r|1..r] with r < min(m,n) cuts out the classical r+1-minor
  // ideal; its trace is a pure power of I_r(X).
  const int r = delta.size();
  if (r < std::min(delta.ambient().rows, delta.ambient().cols) &&
      is_initial_segment(delta.rows()) && is_initial_segment(delta.cols())) {
    rep.closed_form = "I_" + std::to_string(r) + "(X)^" +
                      std::to_string(std::abs(delta.ambient().cols -
                                              delta.ambient().rows));
  }

  rep.disputed = disputed_fixtures_for_determinantal(delta);
  return rep;
}

std::vector<DisputedFixture> disputed_fixtures_for_determinantal(
    const BiMinor& delta) {
  std::vector<DisputedFixture> out;
  const std::vector<int> tuple{1, 3, 4};
  if (delta.rows() != tuple || delta.cols() != tuple) return out;

  if (delta.ambient() == Ambient(4, 4)) {
    out.push_back(
        {"tau_tilde[2]", "[1 3 7 8]", "[1 4 7 8]",
         "computed from the displayed formula, which drops the last entry of "
         "block beta_1 = {3 4}; the reference value drops the first entry "
         "and contradicts the companion tau_2 = [3 4|1 3]"});
  } else if (delta.ambient() == Ambient(4, 5)) {
    out.push_back(
        {"tau_tilde[2]", "[1 3 8 9]", "[1 4 8 9]",
         "computed from the displayed formula, which drops the last entry of "
         "block beta_1 = {3 4}; the reference value drops the first entry"});
    out.push_back({"tau[2]", "[3 4|1 3]", "[3 4|1 4]",
                   "image of the formula-derived tau_tilde[2]"});
    out.push_back({"U_1", render_index_set({1, 2}), render_index_set({1}),
                   "recomputed from the threshold definitions of S_h and T_h"});
    out.push_back({"U_2", render_index_set({2}), render_index_set({1, 2}),
                   "recomputed from the threshold definitions of S_h and T_h"});
    out.push_back(
        {"trace",
         "(I(x;[1 3 4|3 4 5]) ∩ I(x;[3 4|1 3])) · I(x;[3 4|1 3])",
         "I(x;[1 3 4|3 4 5]) · (I(x;[1 3 4|3 4 5]) ∩ "
         "I(x;[3 4|1 4]))",
         "factors follow the recomputed boundary sets"});
  }
  return out;
}

}  // namespace minortrace
