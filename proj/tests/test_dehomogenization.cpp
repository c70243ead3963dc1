#include <doctest.h>

#include <algorithm>

#include "minortrace/dehomogenization.hpp"

using namespace minortrace;

namespace {

SchubertIndex idx(std::vector<int> cols, int m, int n) {
  return SchubertIndex(std::move(cols), Ambient(m, n));
}

BiMinor bim(std::vector<int> rows, std::vector<int> cols, int m, int n) {
  return BiMinor(std::move(rows), std::move(cols), Ambient(m, n));
}

BiMinor corner(int r, int m, int n) {
  std::vector<int> seg(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) seg[static_cast<std::size_t>(i)] = i + 1;
  return BiMinor(seg, seg, Ambient(m, n));
}

}  // namespace

TEST_CASE("lifted index construction and the top marker") {
  const LiftedIndex top(SchubertIndex::top(Ambient(3, 8)), Ambient(3, 5));
  CHECK(top.is_top());
  CHECK(top.top_sign() == -1);  // (-1)^{3*2/2}
  CHECK(LiftedIndex(SchubertIndex::top(Ambient(4, 8)), Ambient(4, 4))
            .top_sign() == 1);  // (-1)^6
  CHECK_THROWS_AS(LiftedIndex(idx({1, 4, 7}, 3, 8), Ambient(3, 4)),
                  input_error);
}

TEST_CASE("phi on the worked examples") {
  const TauEntry img = phi_forward(LiftedIndex(idx({1, 4, 7}, 3, 8),
                                               Ambient(3, 5)));
  REQUIRE_FALSE(img.is_unit());
  CHECK(img.minor() == bim({1, 3}, {1, 4}, 3, 5));

  CHECK(phi_forward(LiftedIndex(SchubertIndex::top(Ambient(3, 8)),
                                Ambient(3, 5)))
            .is_unit());

  // bottom [1..m] has an empty lifted tail, so the rows are forced to 1..m
  const TauEntry bottom =
      phi_forward(LiftedIndex(idx({1, 2, 3}, 3, 8), Ambient(3, 5)));
  CHECK(bottom.minor() == bim({1, 2, 3}, {1, 2, 3}, 3, 5));
}

TEST_CASE("phi_inverse on the worked examples") {
  CHECK(phi_inverse(bim({1, 3, 4}, {1, 3, 4}, 4, 4)).index() ==
        idx({1, 3, 4, 7}, 4, 8));
  CHECK(phi_inverse(bim({1, 3, 4}, {1, 3, 4}, 4, 5)).index() ==
        idx({1, 3, 4, 8}, 4, 9));
  CHECK(phi_inverse(bim({1, 3}, {1, 4}, 3, 5)).index() ==
        idx({1, 4, 7}, 3, 8));

  // [1|1] lifts to [1, n+1, ..., n+m-1]
  CHECK(phi_inverse(bim({1}, {1}, 3, 4)).index() == idx({1, 5, 6}, 3, 7));
  CHECK(phi_inverse(bim({1}, {1}, 2, 2)).index() == idx({1, 3}, 2, 4));
}

TEST_CASE("round trips and order isomorphism, exhaustive") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const Ambient base(m, n);
      const Ambient lifted_amb(m, n + m);
      const SchubertIndex top = SchubertIndex::top(lifted_amb);

      std::vector<BiMinor> images;
      for (const SchubertIndex& b :
           enumerate_schubert_interval(lifted_amb)) {
        if (b == top) {
          CHECK(phi_forward(LiftedIndex(b, base)).is_unit());
          continue;
        }
        const TauEntry img = phi_forward(LiftedIndex(b, base));
        REQUIRE_FALSE(img.is_unit());
        CHECK(phi_inverse(img.minor()).index() == b);
        images.push_back(img.minor());
      }
      std::sort(images.begin(), images.end());
      CHECK(images == enumerate_bi_interval(base));

      for (const BiMinor& d : enumerate_bi_interval(base)) {
        const LiftedIndex lift = phi_inverse(d);
        CHECK_FALSE(lift.is_top());
        CHECK(phi_forward(lift).minor() == d);
      }
    }
}

TEST_CASE("interval cardinality identity") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (const BiMinor& d : enumerate_bi_interval(Ambient(m, n))) {
        const auto lifted_interval = enumerate_schubert_interval(
            Ambient(m, n + m), phi_inverse(d).index());
        const auto bi_interval = enumerate_bi_interval(Ambient(m, n), d);
        CHECK(lifted_interval.size() == bi_interval.size() + 1);
      }
}

TEST_CASE("determinantal profile of [1 3|1 4]") {
  const DeterminantalProfile prof =
      determinantal_profile(bim({1, 3}, {1, 4}, 3, 5));
  CHECK(prof.delta_tilde.index() == idx({1, 4, 7}, 3, 8));
  CHECK(prof.blocks.t == 2);
  CHECK(prof.lambda.values == std::vector<int>{6, 5, 4});
  CHECK(prof.lambda.spread == 2);
  REQUIRE(prof.tau.size() == 2);
  CHECK(prof.tau[0].minor() == bim({1, 3}, {4, 5}, 3, 5));
  CHECK(prof.tau[1].minor() == bim({3}, {1}, 3, 5));
  REQUIRE(prof.eta.size() == 3);
  CHECK(prof.eta[0].minor() == bim({1, 3}, {2, 4}, 3, 5));
  CHECK(prof.eta[1].minor() == bim({1, 3}, {1, 5}, 3, 5));
  CHECK(prof.eta[2].minor() == bim({2, 3}, {1, 4}, 3, 5));
}

TEST_CASE("determinantal profile of the corner minors") {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r < std::min(m, n); ++r) {
        const DeterminantalProfile prof =
            determinantal_profile(corner(r, m, n));
        CHECK(prof.blocks.t == 1);
        CHECK(prof.lambda.values == std::vector<int>{n + r, m + r});
        REQUIRE(prof.tau.size() == 1);
        if (r == 1) {
          CHECK(prof.tau[0].is_unit());
        } else {
          CHECK(prof.tau[0].minor() == corner(r - 1, m, n));
        }
      }
}

TEST_CASE("tau is the unit marker exactly when sigma~ is the top") {
  const DeterminantalProfile prof = determinantal_profile(bim({1}, {1}, 2, 2));
  REQUIRE(prof.tau.size() == 1);
  CHECK(prof.tau[0].is_unit());
  CHECK(prof.sigma_tilde[0] == SchubertIndex::top(Ambient(2, 4)));
  CHECK_THROWS_AS(prof.tau[0].minor(), defect_error);
  CHECK_FALSE(tau_leq(prof.tau[0], bim({1}, {1}, 2, 2)));
}

TEST_CASE("eta degenerates to the unit only for the corner 1-minor [m|n]") {
  const DeterminantalProfile prof = determinantal_profile(bim({2}, {3}, 2, 3));
  REQUIRE(prof.eta.size() == 1);
  CHECK(prof.eta[0].is_unit());
  // any other delta keeps every eta a genuine minor
  for (const BiMinor& d : enumerate_bi_interval(Ambient(3, 4))) {
    const DeterminantalProfile p = determinantal_profile(d);
    const bool is_corner = d == bim({3}, {4}, 3, 4);
    for (const TauEntry& e : p.eta) CHECK(e.is_unit() == is_corner);
  }
}

TEST_CASE("thresholds of the worked examples") {
  CHECK(n_thresholds(bim({1, 3}, {1, 4}, 3, 5)).values ==
        std::vector<int>{1, 1});
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      for (int r = 1; r < std::min(m, n); ++r)
        CHECK(n_thresholds(corner(r, m, n)).values == std::vector<int>{r});
  // t = 0: no thresholds
  CHECK(n_thresholds(bim({1, 2}, {1, 2}, 2, 2)).values.empty());
}

TEST_CASE("membership equivalence on a worked interval") {
  const BiMinor d = bim({1, 3}, {1, 4}, 3, 5);
  const DeterminantalProfile prof = determinantal_profile(d);
  const auto& a = prof.delta_tilde.index().cols();
  for (const BiMinor& x : enumerate_bi_interval(Ambient(3, 5), d)) {
    const SchubertIndex lift = phi_inverse(x).index();
    for (int i = 1; i <= prof.blocks.t; ++i) {
      const bool escapes =
          !tau_leq(prof.tau[static_cast<std::size_t>(i) - 1], x);
      const bool small = lift.entry(prof.blocks.k(i)) <
                         a[static_cast<std::size_t>(prof.blocks.k(i) + 1) - 1];
      CHECK(escapes == small);
    }
  }
}
