#include "minortrace/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace minortrace {

namespace {

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t x = a + 0x9e3779b97f4a7c15ULL + (b << 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t index_hash(const SchubertIndex& g) {
  std::uint64_t x = mix(static_cast<std::uint64_t>(g.ambient().rows),
                        static_cast<std::uint64_t>(g.ambient().cols));
  for (int c : g.cols()) x = mix(x, static_cast<std::uint64_t>(c));
  return x;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

std::string params_of(const SchubertIndex& gamma) {
  return "m=" + std::to_string(gamma.ambient().rows) +
         " n=" + std::to_string(gamma.ambient().cols) +
         " gamma=" + to_string(gamma);
}

std::string params_of(const BiMinor& delta) {
  return "m=" + std::to_string(delta.ambient().rows) +
         " n=" + std::to_string(delta.ambient().cols) +
         " delta=" + to_string(delta);
}

bool member(const std::vector<SchubertIndex>& sorted, const SchubertIndex& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

PosetIdealSet not_above(std::string label, const SchubertIndex& top,
                        const std::vector<SchubertIndex>& universe) {
  PosetIdealSet s{std::move(label), {}};
  for (const SchubertIndex& u : universe)
    if (!poset_leq(top, u)) s.elements.push_back(u);
  return s;
}

std::optional<std::string> closure_violation(
    const PosetIdealSet& s, const std::vector<SchubertIndex>& universe) {
  for (const SchubertIndex& e : s.elements)
    for (const SchubertIndex& u : universe)
      if (poset_leq(u, e) && !member(s.elements, u))
        return s.label + " is not downward closed: misses " + to_string(u) +
               " below " + to_string(e);
  return std::nullopt;
}

std::vector<SchubertIndex> intersect_family(
    std::vector<SchubertIndex> acc,
    const std::vector<const PosetIdealSet*>& sets) {
  for (const PosetIdealSet* s : sets) {
    std::vector<SchubertIndex> next;
    std::set_intersection(acc.begin(), acc.end(), s->elements.begin(),
                          s->elements.end(), std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

OracleReport skipped_report(std::string check, std::string params,
                            std::string why) {
  OracleReport rep{std::move(check), std::move(params), Verdict::skipped,
                   std::move(why), 0, 0.0};
  return rep;
}

// Merges per-input sub-reports into one suite report.
struct Aggregate {
  OracleReport rep;

  Aggregate(std::string check, std::string params) {
    rep.check = std::move(check);
    rep.params = std::move(params);
  }

  void add(const OracleReport& sub) {
    rep.cases += sub.cases;
    rep.elapsed_ms += sub.elapsed_ms;
    if (sub.verdict == Verdict::fail && rep.verdict != Verdict::fail) {
      rep.verdict = Verdict::fail;
      rep.detail = sub.params + ": " + sub.detail;
    } else if (sub.verdict == Verdict::skipped &&
               rep.verdict == Verdict::pass) {
      rep.verdict = Verdict::skipped;
      rep.detail = sub.params + ": " + sub.detail;
    }
  }
};

}  // namespace

BigInt exact_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw input_error("determinant of non-square matrix");
  if (n == 0) return 1;

  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : BigInt(-a[n - 1][n - 1]);
}

PatternMatrix pattern_matrix(const SchubertIndex& gamma, std::uint64_t seed,
                             int bound) {
  if (bound < 1) throw input_error("pattern matrix bound must be >= 1");
  const int m = gamma.ambient().rows;
  const int n = gamma.ambient().cols;
  PatternMatrix pm{gamma, seed, {}};
  pm.entries.assign(static_cast<std::size_t>(m),
                    std::vector<long long>(static_cast<std::size_t>(n), 0));
  std::mt19937_64 gen(seed);
  for (int i = 0; i < m; ++i)
    for (int j = gamma.cols()[static_cast<std::size_t>(i)] - 1; j < n; ++j)
      pm.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          1 + static_cast<long long>(gen() % static_cast<std::uint64_t>(bound));
  return pm;
}

BigInt pattern_minor(const PatternMatrix& pm, const SchubertIndex& cols) {
  if (cols.ambient() != pm.pattern.ambient())
    throw input_error("ambient mismatch");
  const std::size_t m = pm.entries.size();
  std::vector<std::vector<BigInt>> sub(m, std::vector<BigInt>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      sub[i][j] = pm.entries[i][static_cast<std::size_t>(cols.cols()[j]) - 1];
  return exact_determinant(std::move(sub));
}

namespace {

OracleReport trace_set_identity_impl(const SchubertIndex& gamma, int h,
                                     std::span<const SchubertIndex> sigmas,
                                     const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"trace_set_identity",
                   params_of(gamma) + " h=" + std::to_string(h),
                   Verdict::pass,
                   "",
                   0,
                   0.0};

  const BlockData bd = block_decompose(gamma);
  const KappaProfile kp = kappa_profile(bd);
  if (h < 1 || h > kp.spread)
    throw input_error("level h must lie in [1, spread]");
  if (static_cast<int>(sigmas.size()) != std::max(bd.t, 0))
    throw input_error("expected one sigma per boundary index 1..t");

  std::vector<SchubertIndex> universe;
  try {
    universe = enumerate_schubert_interval(gamma.ambient(), gamma,
                                           caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  auto [zetas, formula_sigmas] = zeta_sigma(bd);
  (void)formula_sigmas;
  const BoundaryFamily bf = boundary_family(kp);
  const BoundaryLevel& lv = bf.levels[static_cast<std::size_t>(h) - 1];

  std::vector<PosetIdealSet> omega, theta;
  for (int i = 0; i <= bd.t; ++i)
    omega.push_back(not_above("Omega_" + std::to_string(i),
                              zetas[static_cast<std::size_t>(i)], universe));
  for (int i = 1; i <= bd.t; ++i)
    theta.push_back(not_above("Theta_" + std::to_string(i),
                              sigmas[static_cast<std::size_t>(i) - 1],
                              universe));
  for (const PosetIdealSet& s : omega)
    if (auto v = closure_violation(s, universe)) {
      rep.verdict = Verdict::fail;
      rep.detail = *v;
      rep.elapsed_ms = sw.ms();
      return rep;
    }
  for (const PosetIdealSet& s : theta)
    if (auto v = closure_violation(s, universe)) {
      rep.verdict = Verdict::fail;
      rep.detail = *v;
      rep.elapsed_ms = sw.ms();
      return rep;
    }

  std::vector<const PosetIdealSet*> theta_sel, omega_S, omega_T;
  for (int k : lv.U)
    theta_sel.push_back(&theta[static_cast<std::size_t>(k) - 1]);
  for (int i : lv.S) omega_S.push_back(&omega[static_cast<std::size_t>(i)]);
  for (int j : lv.T) omega_T.push_back(&omega[static_cast<std::size_t>(j)]);

  const std::vector<SchubertIndex> lhs = intersect_family(universe, theta_sel);
  const std::vector<SchubertIndex> xis = intersect_family(universe, omega_S);
  const std::vector<SchubertIndex> nus = intersect_family(universe, omega_T);

  std::vector<SchubertIndex> rhs;
  for (const SchubertIndex& xi : xis)
    for (const SchubertIndex& nu : nus) rhs.push_back(join(xi, nu));
  std::sort(rhs.begin(), rhs.end());
  rhs.erase(std::unique(rhs.begin(), rhs.end()), rhs.end());

  rep.cases = universe.size() + xis.size() * nus.size();
  for (const SchubertIndex& e : lhs)
    if (!member(rhs, e)) {
      rep.verdict = Verdict::fail;
      rep.detail = "element " + to_string(e) +
                   " lies in the Theta intersection but is not a join of "
                   "ideal-constrained pairs";
      rep.elapsed_ms = sw.ms();
      return rep;
    }
  for (const SchubertIndex& e : rhs)
    if (!member(lhs, e)) {
      rep.verdict = Verdict::fail;
      rep.detail = "join " + to_string(e) +
                   " escapes the Theta intersection";
      rep.elapsed_ms = sw.ms();
      return rep;
    }
  rep.elapsed_ms = sw.ms();
  return rep;
}

}  // namespace

OracleReport check_trace_set_identity(const SchubertIndex& gamma, int h,
                                      const OracleCaps& caps) {
  auto [zetas, sigmas] = zeta_sigma(block_decompose(gamma));
  (void)zetas;
  return trace_set_identity_impl(gamma, h, sigmas, caps);
}

OracleReport check_trace_set_identity(const SchubertIndex& gamma, int h,
                                      std::span<const SchubertIndex> sigmas,
                                      const OracleCaps& caps) {
  return trace_set_identity_impl(gamma, h, sigmas, caps);
}

OracleReport check_trace_set_identity(const SchubertIndex& gamma,
                                      const OracleCaps& caps) {
  const KappaProfile kp = kappa_profile(block_decompose(gamma));
  Aggregate agg("trace_set_identity", params_of(gamma) + " h=1..spread");
  for (int h = 1; h <= kp.spread; ++h)
    agg.add(check_trace_set_identity(gamma, h, caps));
  return agg.rep;
}

OracleReport check_poset_isomorphism(const Ambient& base,
                                     const std::optional<BiMinor>& delta,
                                     const OracleCaps& caps) {
  Stopwatch sw;
  std::string params = "m=" + std::to_string(base.rows) +
                       " n=" + std::to_string(base.cols);
  if (delta) params += " delta=" + to_string(*delta);
  OracleReport rep{"poset_isomorphism", params, Verdict::pass, "", 0, 0.0};

  const Ambient lifted_amb(base.rows, base.cols + base.rows);
  std::vector<SchubertIndex> gamma_side;
  std::vector<BiMinor> delta_side;
  try {
    if (delta) {
      gamma_side = enumerate_schubert_interval(
          lifted_amb, phi_inverse(*delta).index(), caps.max_elements);
      delta_side = enumerate_bi_interval(base, *delta, caps.max_elements);
    } else {
      gamma_side =
          enumerate_schubert_interval(lifted_amb, {}, caps.max_elements);
      delta_side = enumerate_bi_interval(base, {}, caps.max_elements);
    }
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  const SchubertIndex top = SchubertIndex::top(lifted_amb);
  if (!member(gamma_side, top)) {
    rep.verdict = Verdict::fail;
    rep.detail = "top element " + to_string(top) + " missing from the lift";
    return rep;
  }
  if (gamma_side.size() != delta_side.size() + 1) {
    rep.verdict = Verdict::fail;
    rep.detail = "cardinality mismatch: lifted " +
                 std::to_string(gamma_side.size()) + " vs image " +
                 std::to_string(delta_side.size()) + " + 1";
    return rep;
  }

  std::vector<SchubertIndex> non_top;
  std::vector<BiMinor> images;
  for (const SchubertIndex& b : gamma_side) {
    if (b == top) continue;
    const TauEntry img = phi_forward(LiftedIndex(b, base));
    if (img.is_unit()) {
      rep.verdict = Verdict::fail;
      rep.detail = "non-top element " + to_string(b) + " mapped to the unit";
      return rep;
    }
    if (phi_inverse(img.minor()).index() != b) {
      rep.verdict = Verdict::fail;
      rep.detail = "round trip failed at " + to_string(b);
      return rep;
    }
    non_top.push_back(b);
    images.push_back(img.minor());
  }

  std::vector<BiMinor> sorted_images = images;
  std::sort(sorted_images.begin(), sorted_images.end());
  if (sorted_images != delta_side) {
    rep.verdict = Verdict::fail;
    const auto mismatch = std::mismatch(
        sorted_images.begin(), sorted_images.end(), delta_side.begin(),
        delta_side.end());
    rep.detail = "phi is not a bijection onto the bi-minor interval; first "
                 "mismatch at " +
                 (mismatch.first != sorted_images.end()
                      ? to_string(*mismatch.first)
                      : to_string(*mismatch.second));
    return rep;
  }

  rep.cases = gamma_side.size();
  for (std::size_t i = 0; i < non_top.size(); ++i)
    for (std::size_t j = 0; j < non_top.size(); ++j) {
      if (i == j) continue;
      ++rep.cases;
      if (poset_leq(non_top[i], non_top[j]) !=
          poset_leq(images[i], images[j])) {
        rep.verdict = Verdict::fail;
        rep.detail = "order not preserved between " + to_string(non_top[i]) +
                     " and " + to_string(non_top[j]);
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_membership_equivalence(const BiMinor& delta,
                                          const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"membership_equivalence", params_of(delta), Verdict::pass,
                   "", 0, 0.0};

  const DeterminantalProfile prof = determinantal_profile(delta);
  std::vector<BiMinor> interval;
  try {
    interval = enumerate_bi_interval(delta.ambient(), delta,
                                     caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  const auto& a = prof.delta_tilde.index().cols();
  for (const BiMinor& x : interval) {
    const SchubertIndex lift = phi_inverse(x).index();
    for (int i = 1; i <= prof.blocks.t; ++i) {
      ++rep.cases;
      const bool escapes =
          !tau_leq(prof.tau[static_cast<std::size_t>(i) - 1], x);
      const bool inequality =
          lift.entry(prof.blocks.k(i)) <
          a[static_cast<std::size_t>(prof.blocks.k(i) + 1) - 1];
      if (escapes != inequality) {
        rep.verdict = Verdict::fail;
        rep.detail = "element " + to_string(x) + " at i=" + std::to_string(i) +
                     ": escape=" + (escapes ? "true" : "false") +
                     " but b_{k(i)} < a_{k(i)+1} is " +
                     (inequality ? "true" : "false");
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_thresholds(const BiMinor& delta, const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"thresholds", params_of(delta), Verdict::pass, "", 0, 0.0};

  const DeterminantalProfile prof = determinantal_profile(delta);
  const ThresholdList nl = n_thresholds(delta);
  std::vector<BiMinor> interval;
  try {
    interval = enumerate_bi_interval(delta.ambient(), delta,
                                     caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  for (int i = 1; i <= prof.blocks.t; ++i) {
    const TauEntry& tau = prof.tau[static_cast<std::size_t>(i) - 1];
    const int ni = nl.values[static_cast<std::size_t>(i) - 1];
    for (const BiMinor& x : interval) {
      ++rep.cases;
      if (!tau_leq(tau, x) && x.size() < ni) {
        rep.verdict = Verdict::fail;
        rep.detail = "element " + to_string(x) + " escapes tau_" +
                     std::to_string(i) + " yet has size < N_i = " +
                     std::to_string(ni);
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
    for (int s = ni; s <= delta.size(); ++s) {
      ++rep.cases;
      const BiMinor trunc({delta.rows().begin(), delta.rows().begin() + s},
                          {delta.cols().begin(), delta.cols().begin() + s},
                          delta.ambient());
      if (!poset_leq(delta, trunc) || tau_leq(tau, trunc)) {
        rep.verdict = Verdict::fail;
        rep.detail = "truncation " + to_string(trunc) +
                     " is not in the difference set for i=" +
                     std::to_string(i);
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_multidegree_identity(const SchubertIndex& gamma,
                                        const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"multidegree_identity", params_of(gamma), Verdict::pass, "",
                   0, 0.0};
  std::vector<SchubertIndex> universe;
  try {
    universe = enumerate_schubert_interval(gamma.ambient(), gamma,
                                           caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  auto add = [](const Multidegree& a, const Multidegree& b) {
    std::vector<int> s(a.weights.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      s[i] = a.weights[i] + b.weights[i];
    return s;
  };

  for (std::size_t i = 0; i < universe.size(); ++i)
    for (std::size_t j = i; j < universe.size(); ++j) {
      ++rep.cases;
      const auto [mt, jn] = meet_join(universe[i], universe[j]);
      if (add(multidegree(universe[i]), multidegree(universe[j])) !=
          add(multidegree(mt), multidegree(jn))) {
        rep.verdict = Verdict::fail;
        rep.detail = "pair " + to_string(universe[i]) + ", " +
                     to_string(universe[j]);
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_straightening(const SchubertIndex& gamma, int h, int trials,
                                 std::uint64_t seed, int bound,
                                 const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"straightening",
                   params_of(gamma) + " h=" + std::to_string(h) +
                       " trials=" + std::to_string(trials),
                   Verdict::pass,
                   "",
                   0,
                   0.0};
  if (trials < 1) throw input_error("trials must be >= 1");

  const BlockData bd = block_decompose(gamma);
  const KappaProfile kp = kappa_profile(bd);
  if (h < 1 || h > kp.spread)
    throw input_error("level h must lie in [1, spread]");

  std::vector<SchubertIndex> universe;
  try {
    universe = enumerate_schubert_interval(gamma.ambient(), gamma,
                                           caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  auto [zetas, sigmas] = zeta_sigma(bd);
  (void)sigmas;
  const BoundaryFamily bf = boundary_family(kp);
  const BoundaryLevel& lv = bf.levels[static_cast<std::size_t>(h) - 1];

  std::vector<PosetIdealSet> omega;
  for (int i = 0; i <= bd.t; ++i)
    omega.push_back(not_above("Omega_" + std::to_string(i),
                              zetas[static_cast<std::size_t>(i)], universe));
  std::vector<const PosetIdealSet*> omega_S, omega_T;
  for (int i : lv.S) omega_S.push_back(&omega[static_cast<std::size_t>(i)]);
  for (int j : lv.T) omega_T.push_back(&omega[static_cast<std::size_t>(j)]);
  const std::vector<SchubertIndex> xis = intersect_family(universe, omega_S);
  const std::vector<SchubertIndex> nus = intersect_family(universe, omega_T);

  const std::uint64_t base_seed =
      mix(mix(seed, index_hash(gamma)), static_cast<std::uint64_t>(h));
  const std::size_t total = xis.size() * nus.size();

  // Pair selection: exhaustive in lexicographic order, or a seed-deterministic
  // sample above the pair cap.
  std::vector<std::size_t> pair_ids;
  if (total <= caps.max_pairs) {
    pair_ids.resize(total);
    for (std::size_t p = 0; p < total; ++p) pair_ids[p] = p;
  } else {
    std::mt19937_64 gen(mix(base_seed, 0x5a5a5a5aULL));
    pair_ids.resize(caps.max_pairs);
    for (std::size_t p = 0; p < caps.max_pairs; ++p)
      pair_ids[p] = static_cast<std::size_t>(gen() % total);
  }

  for (std::size_t pno = 0; pno < pair_ids.size(); ++pno) {
    const SchubertIndex& xi = xis[pair_ids[pno] / nus.size()];
    const SchubertIndex& nu = nus[pair_ids[pno] % nus.size()];
    ++rep.cases;

    if (meet(xi, nu) != gamma) {
      rep.verdict = Verdict::fail;
      rep.detail = "pair " + to_string(xi) + ", " + to_string(nu) +
                   ": meet is " + to_string(meet(xi, nu)) + ", not gamma";
      rep.elapsed_ms = sw.ms();
      return rep;
    }
    const SchubertIndex jn = join(xi, nu);

    int sign = 0;
    for (int trial = 0; trial < trials; ++trial) {
      const std::uint64_t pm_seed =
          mix(mix(base_seed, static_cast<std::uint64_t>(pno)),
              static_cast<std::uint64_t>(trial));
      const PatternMatrix pm = pattern_matrix(gamma, pm_seed, bound);
      const BigInt lhs = pattern_minor(pm, xi) * pattern_minor(pm, nu);
      const BigInt rhs = pattern_minor(pm, gamma) * pattern_minor(pm, jn);
      std::string failure;
      if (rhs == 0) {
        if (lhs != 0)
          failure = "base product vanishes but the pair product does not";
      } else if (lhs == rhs) {
        if (sign == -1) failure = "sign flips between matrices";
        sign = 1;
      } else if (lhs == -rhs) {
        if (sign == 1) failure = "sign flips between matrices";
        sign = -1;
      } else {
        failure = "pair product is not +-1 times the base product";
      }
      if (!failure.empty()) {
        rep.verdict = Verdict::fail;
        rep.detail = "pair " + to_string(xi) + ", " + to_string(nu) +
                     " on matrix seed " + std::to_string(pm_seed) + ": " +
                     failure;
        rep.elapsed_ms = sw.ms();
        return rep;
      }
    }
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_straightening_all_levels(const SchubertIndex& gamma,
                                            int trials, std::uint64_t seed,
                                            int bound, const OracleCaps& caps) {
  const KappaProfile kp = kappa_profile(block_decompose(gamma));
  Aggregate agg("straightening", params_of(gamma) + " h=1..spread trials=" +
                                     std::to_string(trials));
  for (int h = 1; h <= kp.spread; ++h)
    agg.add(check_straightening(gamma, h, trials, seed, bound, caps));
  return agg.rep;
}

OracleReport check_degree_witness(const BiMinor& delta,
                                  const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"degree_witness_determinantal", params_of(delta),
                   Verdict::pass, "", 0, 0.0};

  const DeterminantalProfile prof = determinantal_profile(delta);
  const BoundaryFamily bf = boundary_family(prof.lambda);
  if (prof.lambda.spread <= 1)
    return skipped_report(rep.check, rep.params,
                          "not applicable: lambda-lambda' <= 1");

  const ThresholdList nl = n_thresholds(delta);
  int s = 0;
  for (int i : bf.U)
    s = std::max(s, nl.values[static_cast<std::size_t>(i) - 1]);
  const BiMinor witness({delta.rows().begin(), delta.rows().begin() + s},
                        {delta.cols().begin(), delta.cols().begin() + s},
                        delta.ambient());

  for (int i : bf.U) {
    ++rep.cases;
    if (tau_leq(prof.tau[static_cast<std::size_t>(i) - 1], witness)) {
      rep.verdict = Verdict::fail;
      rep.detail = "witness " + to_string(witness) + " dominates tau_" +
                   std::to_string(i) + ", so it is outside the radical set";
      rep.elapsed_ms = sw.ms();
      return rep;
    }
  }

  std::vector<BiMinor> interval;
  try {
    interval = enumerate_bi_interval(delta.ambient(), delta,
                                     caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  long long product_min = 0;
  for (const BoundaryLevel& lv : bf.levels) {
    int best = 0;
    for (const BiMinor& xi : interval) {
      ++rep.cases;
      bool in_all = true;
      for (int i : lv.U)
        if (tau_leq(prof.tau[static_cast<std::size_t>(i) - 1], xi)) {
          in_all = false;
          break;
        }
      if (in_all && (best == 0 || xi.size() < best)) best = xi.size();
    }
    if (best == 0) {
      rep.verdict = Verdict::fail;
      rep.detail = "factor h=" + std::to_string(lv.h) +
                   " has an empty generator set";
      rep.elapsed_ms = sw.ms();
      return rep;
    }
    product_min += best;
  }

  if (witness.size() >= product_min) {
    rep.verdict = Verdict::fail;
    rep.detail = "witness degree " + std::to_string(witness.size()) +
                 " is not below the product minimum degree " +
                 std::to_string(product_min);
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_degree_witness(const SchubertIndex& gamma,
                                  const OracleCaps& caps) {
  Stopwatch sw;
  OracleReport rep{"degree_witness_schubert", params_of(gamma), Verdict::pass,
                   "", 0, 0.0};

  const BlockData bd = block_decompose(gamma);
  const KappaProfile kp = kappa_profile(bd);
  if (kp.spread <= 1)
    return skipped_report(rep.check, rep.params,
                          "not applicable: kappa-kappa' <= 1");

  auto [zetas, sigmas] = zeta_sigma(bd);
  (void)zetas;
  const BoundaryFamily bf = boundary_family(kp);

  for (int i : bf.U) {
    ++rep.cases;
    if (poset_leq(sigmas[static_cast<std::size_t>(i) - 1], gamma)) {
      rep.verdict = Verdict::fail;
      rep.detail = "gamma dominates sigma_" + std::to_string(i);
      rep.elapsed_ms = sw.ms();
      return rep;
    }
  }

  std::vector<SchubertIndex> universe;
  try {
    universe = enumerate_schubert_interval(gamma.ambient(), gamma,
                                           caps.max_elements);
  } catch (const resource_error&) {
    return skipped_report(rep.check, rep.params, "cap");
  }

  // Every generator is a single maximal minor of ASL degree 1, so the product
  // minimum degree is the number of nonempty factors.
  long long product_min = 0;
  for (const BoundaryLevel& lv : bf.levels) {
    bool nonempty = false;
    for (const SchubertIndex& xi : universe) {
      ++rep.cases;
      bool in_all = true;
      for (int i : lv.U)
        if (poset_leq(sigmas[static_cast<std::size_t>(i) - 1], xi)) {
          in_all = false;
          break;
        }
      if (in_all) {
        nonempty = true;
        break;
      }
    }
    if (!nonempty) {
      rep.verdict = Verdict::fail;
      rep.detail = "factor h=" + std::to_string(lv.h) +
                   " has an empty generator set";
      rep.elapsed_ms = sw.ms();
      return rep;
    }
    product_min += 1;
  }

  if (1 >= product_min) {
    rep.verdict = Verdict::fail;
    rep.detail = "witness degree 1 is not below the product minimum degree " +
                 std::to_string(product_min);
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

OracleReport check_boundary_bookkeeping(const SchubertIndex& gamma) {
  Stopwatch sw;
  OracleReport rep{"boundary_bookkeeping", params_of(gamma), Verdict::pass, "",
                   0, 0.0};
  const BlockData bd = block_decompose(gamma);
  const KappaProfile kp = kappa_profile(bd);
  try {
    const BoundaryFamily bf = boundary_family(kp);
    for (const BoundaryLevel& lv : bf.levels) {
      ++rep.cases;
      std::vector<int> merged;
      std::merge(lv.S.begin(), lv.S.end(), lv.T.begin(), lv.T.end(),
                 std::back_inserter(merged));
      std::vector<int> expected(static_cast<std::size_t>(bd.t) + 1);
      for (int i = 0; i <= bd.t; ++i) expected[static_cast<std::size_t>(i)] = i;
      if (merged != expected) {
        rep.verdict = Verdict::fail;
        rep.detail = "S_h and T_h do not partition {0..t} at h=" +
                     std::to_string(lv.h);
        break;
      }
      if (lv.U.empty()) {
        rep.verdict = Verdict::fail;
        rep.detail = "U_h empty at h=" + std::to_string(lv.h);
        break;
      }
    }
    if (rep.verdict == Verdict::pass) {
      for (int i = 1; i <= bd.t; ++i) {
        ++rep.cases;
        const bool in_u = std::binary_search(bf.U.begin(), bf.U.end(), i);
        const bool jump = kp.values[static_cast<std::size_t>(i)] !=
                          kp.values[static_cast<std::size_t>(i) - 1];
        if (in_u != jump) {
          rep.verdict = Verdict::fail;
          rep.detail = "U mismatch with kappa jumps at i=" + std::to_string(i);
          break;
        }
      }
    }
  } catch (const defect_error& e) {
    rep.verdict = Verdict::fail;
    rep.detail = e.what();
  }
  rep.elapsed_ms = sw.ms();
  return rep;
}

std::vector<OracleReport> run_verification_sweep(const SweepConfig& cfg) {
  std::vector<OracleReport> out;

  for (int m = 1; m <= cfg.max_m; ++m) {
    for (int n = m; n <= cfg.max_n; ++n) {
      const Ambient amb(m, n);
      const std::string params =
          "m=" + std::to_string(m) + " n=" + std::to_string(n);

      Aggregate bookkeeping("boundary_bookkeeping", params);
      Aggregate set_identity("trace_set_identity", params);
      Aggregate multidegree("multidegree_identity", params);
      Aggregate straightening("straightening", params);
      Aggregate witness("degree_witness_schubert", params);
      std::vector<SchubertIndex> gammas;
      try {
        gammas = enumerate_schubert_interval(amb, {}, cfg.caps.max_elements);
      } catch (const resource_error&) {
        for (Aggregate* agg : {&bookkeeping, &set_identity, &multidegree,
                               &straightening, &witness})
          agg->add(skipped_report(agg->rep.check, params, "cap"));
      }
      for (const SchubertIndex& gamma : gammas) {
        bookkeeping.add(check_boundary_bookkeeping(gamma));
        set_identity.add(check_trace_set_identity(gamma, cfg.caps));
        multidegree.add(check_multidegree_identity(gamma, cfg.caps));
        straightening.add(check_straightening_all_levels(
            gamma, cfg.trials, cfg.seed, cfg.bound, cfg.caps));
        const KappaProfile kp = kappa_profile(block_decompose(gamma));
        if (kp.spread >= 2) witness.add(check_degree_witness(gamma, cfg.caps));
      }
      out.push_back(bookkeeping.rep);
      out.push_back(set_identity.rep);
      out.push_back(multidegree.rep);
      out.push_back(straightening.rep);
      out.push_back(witness.rep);
    }
  }

  for (int m = 1; m <= cfg.max_m; ++m) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      const Ambient amb(m, n);
      const std::string params =
          "m=" + std::to_string(m) + " n=" + std::to_string(n);

      out.push_back(check_poset_isomorphism(amb, {}, cfg.caps));
      Aggregate iso_intervals("poset_isomorphism_intervals", params);
      Aggregate membership("membership_equivalence", params);
      Aggregate thresholds("thresholds", params);
      Aggregate witness("degree_witness_determinantal", params);
      std::vector<BiMinor> deltas;
      try {
        deltas = enumerate_bi_interval(amb, {}, cfg.caps.max_elements);
      } catch (const resource_error&) {
        for (Aggregate* agg :
             {&iso_intervals, &membership, &thresholds, &witness})
          agg->add(skipped_report(agg->rep.check, params, "cap"));
      }
      for (const BiMinor& delta : deltas) {
        iso_intervals.add(check_poset_isomorphism(amb, delta, cfg.caps));
        membership.add(check_membership_equivalence(delta, cfg.caps));
        thresholds.add(check_thresholds(delta, cfg.caps));
        const DeterminantalProfile prof = determinantal_profile(delta);
        if (prof.lambda.spread >= 2)
          witness.add(check_degree_witness(delta, cfg.caps));
      }
      out.push_back(iso_intervals.rep);
      out.push_back(membership.rep);
      out.push_back(thresholds.rep);
      out.push_back(witness.rep);
    }
  }
  return out;
}

}  // namespace minortrace
