#include "minortrace/schubert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minortrace/render.hpp"

namespace minortrace {

std::vector<int> IntInterval::values() const {
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x) v.push_back(x);
  return v;
}

void BaseRingAssumptions::validate() const {
  if (!gorenstein_normal_domain && !reduced_cm_with_canonical)
    throw input_error(
        "base assumptions must set gorenstein_normal_domain or "
        "reduced_cm_with_canonical");
  if (gorenstein_normal_domain && !base_is_ctr)
    throw input_error(
        "a Gorenstein normal domain is CTR; base_is_ctr=false is inconsistent");
}

BlockData block_decompose(const SchubertIndex& gamma) {
  const auto& a = gamma.cols();
  const int m = gamma.size();
  const int n = gamma.ambient().cols;

  // maximal consecutive runs of the entries
  std::vector<IntInterval> runs;
  int start = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || a[static_cast<std::size_t>(i)] !=
                      a[static_cast<std::size_t>(i - 1)] + 1) {
      runs.push_back({a[static_cast<std::size_t>(start)],
                      a[static_cast<std::size_t>(i - 1)]});
      start = i;
    }
  }

  // The last run is beta_{t+1} exactly when it ends at n; otherwise
  // beta_{t+1} is empty and the final gap chi_t runs out to n.
  const bool last_run_at_n = runs.back().hi == n;
  BlockData bd{gamma, 0, {}, {}, {}};
  bd.t = static_cast<int>(runs.size()) - (last_run_at_n ? 2 : 1);
  bd.blocks = std::move(runs);
  if (!last_run_at_n) bd.blocks.push_back(IntInterval{n + 1, n});

  bd.boundaries.assign(static_cast<std::size_t>(bd.t + 2), 0);
  for (int i = 0; i <= bd.t; ++i)
    bd.boundaries[static_cast<std::size_t>(i + 1)] =
        bd.boundaries[static_cast<std::size_t>(i)] +
        bd.blocks[static_cast<std::size_t>(i)].count();

  for (int i = 0; i <= bd.t; ++i) {
    const IntInterval& next = bd.blocks[static_cast<std::size_t>(i + 1)];
    bd.gaps.push_back({bd.blocks[static_cast<std::size_t>(i)].hi + 1,
                       next.empty() ? n : next.lo - 1});
  }
  return bd;
}

KappaProfile kappa_profile(const BlockData& bd) {
  KappaProfile kp;
  if (bd.t < 0) return kp;
  int block_prefix = 0;
  std::vector<int> gap_suffix(static_cast<std::size_t>(bd.t + 2), 0);
  for (int j = bd.t; j >= 0; --j)
    gap_suffix[static_cast<std::size_t>(j)] =
        gap_suffix[static_cast<std::size_t>(j + 1)] +
        bd.gaps[static_cast<std::size_t>(j)].count();
  for (int i = 0; i <= bd.t; ++i) {
    block_prefix += bd.blocks[static_cast<std::size_t>(i)].count();
    kp.values.push_back(block_prefix + gap_suffix[static_cast<std::size_t>(i)]);
  }
  kp.max = *std::max_element(kp.values.begin(), kp.values.end());
  kp.min = *std::min_element(kp.values.begin(), kp.values.end());
  kp.spread = *kp.max - *kp.min;
  return kp;
}

std::pair<std::vector<SchubertIndex>, std::vector<SchubertIndex>> zeta_sigma(
    const BlockData& bd) {
  const auto& a = bd.gamma.cols();
  const Ambient amb = bd.gamma.ambient();
  std::vector<SchubertIndex> zetas, sigmas;

  for (int i = 0; i <= bd.t; ++i) {
    auto c = a;
    c[static_cast<std::size_t>(bd.k(i + 1)) - 1] += 1;
    zetas.emplace_back(std::move(c), amb);
  }

  // sigma_i: remove a_{k(i)} (last entry of beta_{i-1}), extend block beta_i
  // upward by a_{k(i+1)} + 1.
  for (int i = 1; i <= bd.t; ++i) {
    std::vector<int> c;
    for (int j = 1; j <= bd.gamma.size(); ++j)
      if (j != bd.k(i)) c.push_back(a[static_cast<std::size_t>(j) - 1]);
    c.push_back(a[static_cast<std::size_t>(bd.k(i + 1)) - 1] + 1);
    std::sort(c.begin(), c.end());
    sigmas.emplace_back(std::move(c), amb);
  }
  return {std::move(zetas), std::move(sigmas)};
}

BoundaryFamily boundary_family(const KappaProfile& kp) {
  BoundaryFamily bf;
  if (kp.spread == 0) return bf;
  const int t = static_cast<int>(kp.values.size()) - 1;
  const int kmax = *kp.max;
  auto in_S = [&](int i, int h) {
    return kmax - kp.values[static_cast<std::size_t>(i)] >= h;
  };

  for (int h = 1; h <= kp.spread; ++h) {
    BoundaryLevel lv;
    lv.h = h;
    for (int i = 0; i <= t; ++i) (in_S(i, h) ? lv.S : lv.T).push_back(i);
    for (int i = 1; i <= t; ++i) {
      const bool cur = in_S(i, h), prev = in_S(i - 1, h);
      if (cur && !prev) lv.U_plus.push_back(i);
      if (!cur && prev) lv.U_minus.push_back(i);
    }
    std::merge(lv.U_plus.begin(), lv.U_plus.end(), lv.U_minus.begin(),
               lv.U_minus.end(), std::back_inserter(lv.U));
    if (lv.U.empty())
      throw defect_error("boundary set U_h is empty at level " +
                         std::to_string(h));
    std::vector<int> merged;
    std::set_union(bf.U.begin(), bf.U.end(), lv.U.begin(), lv.U.end(),
                   std::back_inserter(merged));
    bf.U = std::move(merged);
    bf.levels.push_back(std::move(lv));
  }

  // i in U iff kappa_i != kappa_{i-1}
  for (int i = 1; i <= t; ++i) {
    const bool in_u = std::binary_search(bf.U.begin(), bf.U.end(), i);
    const bool jump = kp.values[static_cast<std::size_t>(i)] !=
                      kp.values[static_cast<std::size_t>(i - 1)];
    if (in_u != jump)
      throw defect_error("U does not match the kappa jump set at i = " +
                         std::to_string(i));
  }
  return bf;
}

std::vector<std::pair<int, SchubertIndex>> canonical_class(
    const SchubertIndex& gamma) {
  const BlockData bd = block_decompose(gamma);
  const KappaProfile kp = kappa_profile(bd);
  auto [zetas, sigmas] = zeta_sigma(bd);
  (void)sigmas;
  std::vector<std::pair<int, SchubertIndex>> cls;
  for (std::size_t i = 0; i < zetas.size(); ++i)
    cls.emplace_back(kp.values[i], zetas[i]);
  return cls;
}

TraceDescription<SchubertIndex> schubert_trace(const SchubertIndex& gamma) {
  const BlockData bd = block_decompose(gamma);
  const KappaProfile kp = kappa_profile(bd);
  auto [zetas, sigmas] = zeta_sigma(bd);
  (void)zetas;
  const BoundaryFamily bf = boundary_family(kp);

  TraceDescription<SchubertIndex> trace;
  for (const BoundaryLevel& lv : bf.levels) {
    std::vector<TraceMarker<SchubertIndex>> factor;
    for (int i : lv.U)
      factor.push_back({i, sigmas[static_cast<std::size_t>(i) - 1]});
    trace.factors.push_back(std::move(factor));
  }
  return trace;
}

SchubertReport schubert_report(const SchubertIndex& gamma,
                               const BaseRingAssumptions& base) {
  base.validate();

  SchubertReport rep{gamma,
                     base,
                     block_decompose(gamma),
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {},
                     {}};
  rep.kappa = kappa_profile(rep.blocks);
  std::tie(rep.zeta, rep.sigma) = zeta_sigma(rep.blocks);
  rep.boundary = boundary_family(rep.kappa);
  for (std::size_t i = 0; i < rep.zeta.size(); ++i)
    rep.canonical_class.emplace_back(rep.kappa.values[i], rep.zeta[i]);
  for (const BoundaryLevel& lv : rep.boundary.levels) {
    std::vector<TraceMarker<SchubertIndex>> factor;
    for (int i : lv.U)
      factor.push_back({i, rep.sigma[static_cast<std::size_t>(i) - 1]});
    rep.trace.factors.push_back(std::move(factor));
  }

  const int spread = rep.kappa.spread;
  rep.ctr.verdict = spread <= 1 && base.base_is_ctr;
  if (rep.ctr.verdict) {
    rep.ctr.reason = "kappa-kappa' = " + std::to_string(spread) +
                     " <= 1 and the base is CTR";
    std::ostringstream os;
    bool first = true;
    for (int i : rep.boundary.U) {
      if (!first) os << " ∩ ";
      os << render_prime(rep.sigma[static_cast<std::size_t>(i) - 1]);
      first = false;
    }
    if (!base.gorenstein_normal_domain) {
      if (!first) os << " ∩ ";
      os << "tr_B(ω_B)·G";
      first = false;
    }
    rep.ctr.trace_when_ctr = first ? "(1)" : os.str();
  } else if (spread > 1 && !base.base_is_ctr) {
    rep.ctr.reason = "kappa-kappa' = " + std::to_string(spread) +
                     " >= 2 and the base is not CTR";
  } else if (spread > 1) {
    rep.ctr.reason = "kappa-kappa' = " + std::to_string(spread) + " >= 2";
  } else {
    rep.ctr.reason = "the base is not CTR";
  }

  rep.locus.prime_indices = rep.boundary.U;
  if (!base.gorenstein_normal_domain)
    rep.locus.base_token = base.nongorenstein_ideal_token + "·G";

  if (spread >= 2) {
    // gamma has ASL degree 1, while every generator of the trace product is a
    // product of one minor per factor, hence has degree spread >= 2. gamma
    // lies in the radical of every factor.
    rep.witness = SchubertWitness{gamma, 1, spread};
  }

  rep.disputed = disputed_fixtures_for_schubert(gamma);
  return rep;
}

std::vector<DisputedFixture> disputed_fixtures_for_schubert(
    const SchubertIndex& gamma) {
  std::vector<DisputedFixture> out;
  const Ambient amb = gamma.ambient();
  if (amb == Ambient(4, 8) && gamma.cols() == std::vector<int>{1, 3, 4, 7}) {
    out.push_back(
        {"sigma[2]", "[1 3 7 8]", "[1 4 7 8]",
         "computed from the displayed formula, which drops the last entry of "
         "block beta_1 = {3 4}; the reference value drops the first entry "
         "and contradicts the companion minor [3 4|1 3]"});
  }
  if (amb == Ambient(4, 9) && gamma.cols() == std::vector<int>{1, 3, 4, 8}) {
    out.push_back(
        {"sigma[2]", "[1 3 8 9]", "[1 4 8 9]",
         "computed from the displayed formula, which drops the last entry of "
         "block beta_1 = {3 4}; the reference value drops the first entry"});
    out.push_back({"U_1", render_index_set({1, 2}), render_index_set({1}),
                   "recomputed from the threshold definitions of S_h and T_h"});
    out.push_back({"U_2", render_index_set({2}), render_index_set({1, 2}),
                   "recomputed from the threshold definitions of S_h and T_h"});
  }
  return out;
}

}  // namespace minortrace
