#include <doctest.h>

#include <algorithm>
#include <random>

#include "minortrace/oracle.hpp"
#include "minortrace/report_json.hpp"

using namespace minortrace;

namespace {

SchubertIndex idx(std::vector<int> cols, int m, int n) {
  return SchubertIndex(std::move(cols), Ambient(m, n));
}

BiMinor bim(std::vector<int> rows, std::vector<int> cols, int m, int n) {
  return BiMinor(std::move(rows), std::move(cols), Ambient(m, n));
}

// independent oracle: cofactor expansion along the first row
BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(std::move(row));
    }
    const BigInt term = a[0][j] * cofactor_det(minor);
    sum += (j % 2 == 0) ? term : BigInt(-term);
  }
  return sum;
}

}  // namespace

TEST_CASE("bareiss determinant agrees with cofactor expansion") {
  std::mt19937_64 gen(7);
  for (int size = 1; size <= 5; ++size)
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<std::vector<BigInt>> a(
          static_cast<std::size_t>(size),
          std::vector<BigInt>(static_cast<std::size_t>(size)));
      for (auto& row : a)
        for (auto& x : row)
          x = static_cast<long long>(gen() % 201) - 100;  // entries in [-100, 100]
      CHECK(exact_determinant(a) == cofactor_det(a));
    }
}

TEST_CASE("bareiss determinant handles zero pivots and singularity") {
  std::vector<std::vector<BigInt>> swap_needed{{0, 1}, {1, 0}};
  CHECK(exact_determinant(swap_needed) == -1);
  std::vector<std::vector<BigInt>> singular{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(exact_determinant(singular) == 0);
  std::vector<std::vector<BigInt>> ragged{{1, 2}, {3}};
  CHECK_THROWS_AS(exact_determinant(ragged), input_error);
  // no floating point anywhere: a 30x30 triangular matrix of 10s is exact
  std::vector<std::vector<BigInt>> big(30, std::vector<BigInt>(30, 0));
  for (int i = 0; i < 30; ++i)
    for (int j = i; j < 30; ++j) big[i][j] = 10;
  BigInt expected = 1;
  for (int i = 0; i < 30; ++i) expected *= 10;
  CHECK(exact_determinant(big) == expected);
}

TEST_CASE("pattern matrices: shape, determinism, and vanishing minors") {
  const SchubertIndex g = idx({1, 4, 7}, 3, 8);
  const PatternMatrix pm = pattern_matrix(g, 123, 100);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 8; ++j) {
      const long long e = pm.entries[i][j];
      if (j + 1 < g.cols()[static_cast<std::size_t>(i)]) {
        CHECK(e == 0);
      } else {
        CHECK(e >= 1);
        CHECK(e <= 100);
      }
    }
  CHECK(pattern_matrix(g, 123, 100).entries == pm.entries);
  CHECK(pattern_matrix(g, 124, 100).entries != pm.entries);

  // the gamma-minor is triangular with positive diagonal
  CHECK(pattern_minor(pm, g) > 0);
}

TEST_CASE("minors below gamma vanish on its pattern matrix") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 7; ++n) {
      const auto all = enumerate_schubert_interval(Ambient(m, n));
      for (const SchubertIndex& g : all) {
        const PatternMatrix pm = pattern_matrix(g, 99, 50);
        for (const SchubertIndex& b : all) {
          if (poset_leq(g, b)) continue;
          CHECK(pattern_minor(pm, b) == 0);
        }
      }
    }
}

TEST_CASE("trace set identity on the worked examples") {
  CHECK(check_trace_set_identity(idx({1, 4, 7}, 3, 8), 1).verdict ==
        Verdict::pass);
  CHECK(check_trace_set_identity(idx({1, 4, 7}, 3, 8), 2).verdict ==
        Verdict::pass);
  CHECK(check_trace_set_identity(idx({1, 3, 4, 7}, 4, 8), 1).verdict ==
        Verdict::pass);

  // vacuous pass at spread 0
  const OracleReport vac = check_trace_set_identity(idx({1, 2, 3}, 3, 5));
  CHECK(vac.verdict == Verdict::pass);
  CHECK(vac.cases == 0);

  CHECK_THROWS_AS(check_trace_set_identity(idx({1, 4, 7}, 3, 8), 3),
                  input_error);
}

TEST_CASE("the drop-first sigma variant is refuted by the set identity") {
  // replacing sigma_2 = [1 3 7 8] with [1 4 7 8] breaks the level-1 equality,
  // and [1 3 7 8] is the discriminating element
  const SchubertIndex g = idx({1, 3, 4, 7}, 4, 8);
  auto [zetas, sigmas] = zeta_sigma(block_decompose(g));
  (void)zetas;
  std::vector<SchubertIndex> variant = sigmas;
  variant[1] = idx({1, 4, 7, 8}, 4, 8);
  const OracleReport rep = check_trace_set_identity(g, 1, variant);
  CHECK(rep.verdict == Verdict::fail);
  CHECK(rep.detail.find("[1 3 7 8]") != std::string::npos);

  // replay: the failure is reproducible
  const OracleReport again = check_trace_set_identity(g, 1, variant);
  CHECK(again.detail == rep.detail);

  // the formula-derived sigmas pass at the same level
  CHECK(check_trace_set_identity(g, 1, sigmas).verdict == Verdict::pass);
}

TEST_CASE("poset isomorphism checks") {
  const OracleReport full = check_poset_isomorphism(Ambient(2, 2));
  CHECK(full.verdict == Verdict::pass);

  CHECK(check_poset_isomorphism(Ambient(3, 5), bim({1, 3}, {1, 4}, 3, 5))
            .verdict == Verdict::pass);

  // m = 1: both sides are chains
  CHECK(check_poset_isomorphism(Ambient(1, 6)).verdict == Verdict::pass);
}

TEST_CASE("membership equivalence checks") {
  CHECK(check_membership_equivalence(bim({1, 3}, {1, 4}, 3, 5)).verdict ==
        Verdict::pass);
  CHECK(check_membership_equivalence(bim({1}, {1}, 2, 2)).verdict ==
        Verdict::pass);
  const OracleReport vac = check_membership_equivalence(bim({1, 2}, {1, 2}, 2, 2));
  CHECK(vac.verdict == Verdict::pass);
  CHECK(vac.cases == 0);  // t = 0
}

TEST_CASE("threshold checks") {
  CHECK(check_thresholds(bim({1, 3}, {1, 4}, 3, 5)).verdict == Verdict::pass);
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r < std::min(m, n); ++r) {
        std::vector<int> seg;
        for (int i = 1; i <= r; ++i) seg.push_back(i);
        CHECK(check_thresholds(BiMinor(seg, seg, Ambient(m, n))).verdict ==
              Verdict::pass);
      }
}

TEST_CASE("multidegree identity check") {
  const OracleReport rep = check_multidegree_identity(idx({1, 2}, 2, 4));
  CHECK(rep.verdict == Verdict::pass);
  CHECK(rep.cases == 21);  // 15 unordered distinct pairs + 6 diagonal pairs
}

TEST_CASE("straightening on the worked pair") {
  const SchubertIndex g = idx({1, 4, 7}, 3, 8);
  const SchubertIndex xi = idx({3, 4, 7}, 3, 8);
  const SchubertIndex nu = idx({1, 5, 8}, 3, 8);
  CHECK(meet(xi, nu) == g);
  const SchubertIndex jn = join(xi, nu);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const PatternMatrix pm = pattern_matrix(g, seed, 100);
    const BigInt lhs = pattern_minor(pm, xi) * pattern_minor(pm, nu);
    const BigInt rhs = pattern_minor(pm, g) * pattern_minor(pm, jn);
    CHECK((lhs == rhs || lhs == -rhs));
  }
  // identity pair: both sides are minor(gamma)^2, sign +1
  const PatternMatrix pm = pattern_matrix(g, 5, 100);
  CHECK(pattern_minor(pm, g) * pattern_minor(pm, g) ==
        pattern_minor(pm, g) * pattern_minor(pm, join(g, g)));

  CHECK(check_straightening(g, 1, 20, 42).verdict == Verdict::pass);
  CHECK(check_straightening(g, 2, 20, 42).verdict == Verdict::pass);
  CHECK_THROWS_AS(check_straightening(g, 3, 20, 42), input_error);
}

TEST_CASE("degree witness checks") {
  const OracleReport det = check_degree_witness(bim({1, 3}, {1, 4}, 3, 5));
  CHECK(det.verdict == Verdict::pass);

  const OracleReport na = check_degree_witness(bim({1, 3, 4}, {1, 3, 4}, 4, 4));
  CHECK(na.verdict == Verdict::skipped);
  CHECK(na.detail.find("not applicable") != std::string::npos);

  CHECK(check_degree_witness(idx({1, 4, 7}, 3, 8)).verdict == Verdict::pass);
  CHECK(check_degree_witness(idx({1, 3, 4, 7}, 4, 8)).verdict ==
        Verdict::skipped);
}

TEST_CASE("boundary bookkeeping check") {
  CHECK(check_boundary_bookkeeping(idx({1, 4, 7}, 3, 8)).verdict ==
        Verdict::pass);
  CHECK(check_boundary_bookkeeping(SchubertIndex::top(Ambient(2, 5))).verdict ==
        Verdict::pass);
}

TEST_CASE("caps degrade to a documented skip, never to silence") {
  OracleCaps tiny;
  tiny.max_elements = 3;
  const OracleReport rep =
      check_trace_set_identity(idx({1, 4, 7}, 3, 8), 1, tiny);
  CHECK(rep.verdict == Verdict::skipped);
  CHECK(rep.detail == "cap");
  CHECK(check_multidegree_identity(idx({1, 4, 7}, 3, 8), tiny).verdict ==
        Verdict::skipped);
  CHECK(check_membership_equivalence(bim({1, 3}, {1, 4}, 3, 5), tiny)
            .verdict == Verdict::skipped);
}

TEST_CASE("straightening pair sampling above the cap is deterministic") {
  OracleCaps small_pairs;
  small_pairs.max_pairs = 4;
  const SchubertIndex g = idx({1, 5, 7}, 3, 7);
  const OracleReport a = check_straightening(g, 1, 5, 42, 100, small_pairs);
  const OracleReport b = check_straightening(g, 1, 5, 42, 100, small_pairs);
  CHECK(a.verdict == Verdict::pass);
  CHECK(a.cases == 4);
  CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("sweep reports are deterministic and serializable") {
  SweepConfig cfg;
  cfg.max_m = 2;
  cfg.max_n = 4;
  cfg.trials = 3;
  const auto a = run_verification_sweep(cfg);
  const auto b = run_verification_sweep(cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(to_json(a[i]).dump() == to_json(b[i]).dump());
    CHECK(a[i].verdict == Verdict::pass);
    // elapsed time stays out of the serialized form
    CHECK(to_json(a[i]).contains("elapsed_ms") == false);
  }
}
