#include "minortrace/dehomogenization.hpp"

#include <algorithm>

namespace minortrace {

LiftedIndex::LiftedIndex(SchubertIndex index, Ambient base)
    : index_(std::move(index)), base_(base), is_top_(false) {
  if (index_.ambient() != Ambient(base.rows, base.cols + base.rows))
    throw input_error("lifted index must live in the (m, n+m) ambient");
  is_top_ = index_ == SchubertIndex::top(index_.ambient());
}

TauEntry phi_forward(const LiftedIndex& b) {
  if (b.is_top()) return TauEntry::unit();
  const int m = b.base().rows;
  const int n = b.base().cols;
  const auto& cols = b.index().cols();

  int r = 0;
  while (r < m && cols[static_cast<std::size_t>(r)] <= n) ++r;
  // b is not the top element, so b_1 <= n and r >= 1.

  std::vector<bool> excluded(static_cast<std::size_t>(m) + 1, false);
  for (int j = r; j < m; ++j) {
    const int c = (m + n + 1) - cols[static_cast<std::size_t>(j)];
    if (c < 1 || c > m || excluded[static_cast<std::size_t>(c)])
      throw defect_error("lifted coordinates do not complement a row set");
    excluded[static_cast<std::size_t>(c)] = true;
  }
  std::vector<int> rows;
  for (int c = 1; c <= m; ++c)
    if (!excluded[static_cast<std::size_t>(c)]) rows.push_back(c);
  if (static_cast<int>(rows.size()) != r)
    throw defect_error("row complement has the wrong cardinality");

  return TauEntry(BiMinor(std::move(rows),
                          {cols.begin(), cols.begin() + r}, b.base()));
}

LiftedIndex phi_inverse(const BiMinor& delta) {
  const int m = delta.ambient().rows;
  const int n = delta.ambient().cols;
  std::vector<int> lifted = delta.cols();
  for (int c = m; c >= 1; --c)
    if (!std::binary_search(delta.rows().begin(), delta.rows().end(), c))
      lifted.push_back(m + n + 1 - c);
  return LiftedIndex(SchubertIndex(std::move(lifted), Ambient(m, n + m)),
                     delta.ambient());
}

DeterminantalProfile determinantal_profile(const BiMinor& delta) {
  LiftedIndex lift = phi_inverse(delta);
  BlockData bd = block_decompose(lift.index());
  KappaProfile lambda = kappa_profile(bd);
  auto [zetas, sigmas] = zeta_sigma(bd);

  DeterminantalProfile prof{delta,      std::move(lift), std::move(bd),
                            std::move(lambda), std::move(zetas),
                            std::move(sigmas), {},        {}};
  const bool totally_ordered =
      delta.size() == 1 && delta.rows()[0] == delta.ambient().rows &&
      delta.cols()[0] == delta.ambient().cols;
  for (const SchubertIndex& z : prof.zeta_tilde) {
    TauEntry image = phi_forward(LiftedIndex(z, delta.ambient()));
    if (image.is_unit() && !totally_ordered)
      throw defect_error("eta~ lifted to the top element");
    prof.eta.push_back(std::move(image));
  }
  for (const SchubertIndex& s : prof.sigma_tilde)
    prof.tau.push_back(phi_forward(LiftedIndex(s, delta.ambient())));
  return prof;
}

ThresholdList n_thresholds(const BiMinor& delta) {
  const int m = delta.ambient().rows;
  const int n = delta.ambient().cols;
  const int r = delta.size();
  const LiftedIndex lift = phi_inverse(delta);
  const BlockData bd = block_decompose(lift.index());
  const auto& a = lift.index().cols();

  ThresholdList nl;
  for (int i = 1; i <= bd.t; ++i) {
    const int first_of_block = a[static_cast<std::size_t>(bd.k(i) + 1) - 1];
    int ni;
    if (first_of_block <= n + 1) {
      ni = bd.k(i);
    } else {
      // the row value (m+n+1) - (a_{k(i)+1} - 1) occurs in delta's rows
      // because a_{k(i)+1} - 1 sits in a gap of the lift
      const int wanted = (m + n + 1) - (first_of_block - 1);
      const auto& rows = delta.rows();
      auto it = std::find(rows.begin(), rows.end(), wanted);
      if (it == rows.end())
        throw defect_error("threshold row value missing from delta");
      ni = static_cast<int>(it - rows.begin());  // position is N_i + 1, 1-based
    }
    if (ni < 1 || ni > r)
      throw defect_error("threshold N_i out of range [1, r]");
    nl.values.push_back(ni);
  }
  return nl;
}

}  // namespace minortrace
