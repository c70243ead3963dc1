#include <doctest.h>

#include <algorithm>
#include <set>

#include "minortrace/minor_poset.hpp"

using namespace minortrace;

namespace {

SchubertIndex idx(std::vector<int> cols, int m, int n) {
  return SchubertIndex(std::move(cols), Ambient(m, n));
}

BiMinor bim(std::vector<int> rows, std::vector<int> cols, int m, int n) {
  return BiMinor(std::move(rows), std::move(cols), Ambient(m, n));
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// brute-force greatest lower bound in the componentwise order
std::optional<SchubertIndex> brute_glb(const std::vector<SchubertIndex>& all,
                                       const SchubertIndex& a,
                                       const SchubertIndex& b) {
  std::optional<SchubertIndex> best;
  for (const SchubertIndex& c : all) {
    if (!poset_leq(c, a) || !poset_leq(c, b)) continue;
    if (!best || poset_leq(*best, c)) best = c;
  }
  // certify it really is the greatest
  if (best)
    for (const SchubertIndex& c : all)
      if (poset_leq(c, a) && poset_leq(c, b) && !poset_leq(c, *best))
        return std::nullopt;
  return best;
}

std::optional<SchubertIndex> brute_lub(const std::vector<SchubertIndex>& all,
                                       const SchubertIndex& a,
                                       const SchubertIndex& b) {
  std::optional<SchubertIndex> best;
  for (const SchubertIndex& c : all) {
    if (!poset_leq(a, c) || !poset_leq(b, c)) continue;
    if (!best || poset_leq(c, *best)) best = c;
  }
  if (best)
    for (const SchubertIndex& c : all)
      if (poset_leq(a, c) && poset_leq(b, c) && !poset_leq(*best, c))
        return std::nullopt;
  return best;
}

}  // namespace

TEST_CASE("schubert index validation") {
  CHECK_NOTHROW(idx({1, 4, 7}, 3, 8));
  CHECK_THROWS_AS(idx({4, 1, 7}, 3, 8), input_error);   // unsorted
  CHECK_THROWS_AS(idx({1, 1, 7}, 3, 8), input_error);   // repeated
  CHECK_THROWS_AS(idx({0, 4, 7}, 3, 8), input_error);   // below range
  CHECK_THROWS_AS(idx({1, 4, 9}, 3, 8), input_error);   // above range
  CHECK_THROWS_AS(idx({1, 4}, 3, 8), input_error);      // wrong length
  CHECK_THROWS_AS(Ambient(0, 3), input_error);
}

TEST_CASE("bi-minor validation") {
  CHECK_NOTHROW(bim({1, 3}, {1, 4}, 3, 5));
  CHECK_THROWS_AS(bim({1, 3}, {1}, 3, 5), input_error);  // length mismatch
  CHECK_THROWS_AS(bim({}, {}, 3, 5), input_error);       // empty
  CHECK_THROWS_AS(bim({1, 2, 3, 4}, {1, 2, 3, 4}, 3, 5), input_error);
  CHECK_THROWS_AS(bim({3, 1}, {1, 4}, 3, 5), input_error);  // unsorted rows
  CHECK_THROWS_AS(bim({1, 3}, {1, 6}, 3, 5), input_error);  // col above n
}

TEST_CASE("componentwise order on maximal minors") {
  CHECK(poset_leq(idx({1, 4, 7}, 3, 8), idx({1, 4, 7}, 3, 8)));
  CHECK(poset_leq(idx({1, 4, 7}, 3, 8), idx({4, 5, 7}, 3, 8)));
  CHECK_FALSE(poset_leq(idx({4, 5, 7}, 3, 8), idx({1, 4, 7}, 3, 8)));
  CHECK(poset_leq(idx({1, 3, 7, 8}, 4, 8), idx({1, 4, 7, 8}, 4, 8)));
  CHECK_THROWS_AS(poset_leq(idx({1, 2}, 2, 4), idx({1, 2}, 2, 5)),
                  input_error);
}

TEST_CASE("order on bi-minors") {
  CHECK(poset_leq(bim({1, 3}, {1, 4}, 3, 5), bim({3}, {1}, 3, 5)));
  const BiMinor a = bim({1, 3}, {1, 4}, 3, 5);
  CHECK(poset_leq(a, a));
  CHECK_FALSE(poset_leq(bim({1}, {1}, 2, 2), bim({1, 2}, {1, 2}, 2, 2)));
  CHECK_THROWS_AS(poset_leq(bim({1}, {1}, 2, 2), bim({1}, {1}, 2, 3)),
                  input_error);
}

TEST_CASE("meet and join") {
  auto [mt, jn] = meet_join(idx({3, 4, 7}, 3, 8), idx({1, 5, 8}, 3, 8));
  CHECK(mt == idx({1, 4, 7}, 3, 8));
  CHECK(jn == idx({3, 5, 8}, 3, 8));

  const SchubertIndex g = idx({2, 5}, 2, 6);
  CHECK(meet_join(g, g) == std::make_pair(g, g));
}

TEST_CASE("meet/join agree with brute-force glb/lub") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 7; ++n) {
      const auto all = enumerate_schubert_interval(Ambient(m, n));
      for (const SchubertIndex& a : all)
        for (const SchubertIndex& b : all) {
          const auto glb = brute_glb(all, a, b);
          const auto lub = brute_lub(all, a, b);
          REQUIRE(glb.has_value());
          REQUIRE(lub.has_value());
          CHECK(*glb == meet(a, b));
          CHECK(*lub == join(a, b));
        }
    }
}

TEST_CASE("order axioms, exhaustive at small sizes") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 7; ++n) {
      const auto all = enumerate_schubert_interval(Ambient(m, n));
      for (const auto& a : all) {
        CHECK(poset_leq(a, a));
        for (const auto& b : all) {
          if (poset_leq(a, b) && poset_leq(b, a)) CHECK(a == b);
          for (const auto& c : all)
            if (poset_leq(a, b) && poset_leq(b, c)) CHECK(poset_leq(a, c));
        }
      }
    }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const auto all = enumerate_bi_interval(Ambient(m, n));
      for (const auto& a : all) {
        CHECK(poset_leq(a, a));
        for (const auto& b : all) {
          if (poset_leq(a, b) && poset_leq(b, a)) CHECK(a == b);
          for (const auto& c : all)
            if (poset_leq(a, b) && poset_leq(b, c)) CHECK(poset_leq(a, c));
        }
      }
    }
}

TEST_CASE("lattice laws on Gamma(X)") {
  const auto all = enumerate_schubert_interval(Ambient(2, 5));
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(meet(a, b) == meet(b, a));
      CHECK(join(a, b) == join(b, a));
      CHECK(meet(a, a) == a);
      CHECK(join(a, a) == a);
      CHECK(meet(a, join(a, b)) == a);  // absorption
      CHECK(join(a, meet(a, b)) == a);
      for (const auto& c : all) {
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
      }
    }
}

TEST_CASE("multidegree is the column indicator") {
  CHECK(multidegree(idx({1, 4, 7}, 3, 8)).weights ==
        std::vector<int>{1, 0, 0, 1, 0, 0, 1, 0});
}

TEST_CASE("multidegree injectivity and lattice identity") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 7; ++n) {
      const auto all = enumerate_schubert_interval(Ambient(m, n));
      std::set<std::vector<int>> seen;
      for (const auto& a : all)
        CHECK(seen.insert(multidegree(a).weights).second);
      for (const auto& a : all)
        for (const auto& b : all) {
          const auto [mt, jn] = meet_join(a, b);
          std::vector<int> lhs = multidegree(a).weights;
          std::vector<int> rhs = multidegree(jn).weights;
          const auto bw = multidegree(b).weights;
          const auto mw = multidegree(mt).weights;
          for (std::size_t i = 0; i < lhs.size(); ++i) {
            lhs[i] += bw[i];
            rhs[i] += mw[i];
          }
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("schubert interval enumeration") {
  CHECK(enumerate_schubert_interval(Ambient(3, 5)).size() == 10);

  const auto filtered =
      enumerate_schubert_interval(Ambient(2, 4), idx({1, 3}, 2, 4));
  const std::vector<SchubertIndex> expected{
      idx({1, 3}, 2, 4), idx({1, 4}, 2, 4), idx({2, 3}, 2, 4),
      idx({2, 4}, 2, 4), idx({3, 4}, 2, 4)};
  CHECK(filtered == expected);

  // brute-force filter of the full poset gives the same interval
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 6; ++n)
      for (const SchubertIndex& g :
           enumerate_schubert_interval(Ambient(m, n))) {
        std::vector<SchubertIndex> filter;
        for (const SchubertIndex& x :
             enumerate_schubert_interval(Ambient(m, n)))
          if (poset_leq(g, x)) filter.push_back(x);
        CHECK(filter == enumerate_schubert_interval(Ambient(m, n), g));
      }

  const auto top_only = enumerate_schubert_interval(
      Ambient(3, 8), SchubertIndex::top(Ambient(3, 8)));
  CHECK(top_only.size() == 1);
  CHECK(top_only[0] == idx({6, 7, 8}, 3, 8));

  CHECK_THROWS_AS(enumerate_schubert_interval(Ambient(4, 3)), input_error);
  CHECK_THROWS_AS(enumerate_schubert_interval(Ambient(3, 8), {}, 10),
                  resource_error);
}

TEST_CASE("enumeration is sorted and intervals are sublattices") {
  for (int m = 1; m <= 3; ++m)
    for (int n = m; n <= 6; ++n) {
      const auto full = enumerate_schubert_interval(Ambient(m, n));
      CHECK(std::is_sorted(full.begin(), full.end()));
      CHECK(static_cast<long long>(full.size()) == binomial(n, m));
      for (const SchubertIndex& g : full) {
        const auto interval = enumerate_schubert_interval(Ambient(m, n), g);
        for (const auto& a : interval)
          for (const auto& b : interval) {
            const auto [mt, jn] = meet_join(a, b);
            CHECK(std::binary_search(interval.begin(), interval.end(), mt));
            CHECK(std::binary_search(interval.begin(), interval.end(), jn));
          }
      }
    }
}

TEST_CASE("bi-minor interval enumeration") {
  CHECK(enumerate_bi_interval(Ambient(1, 1)).size() == 1);
  CHECK(enumerate_bi_interval(Ambient(2, 2)).size() == 5);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      long long expected = 0;
      for (int r = 1; r <= std::min(m, n); ++r)
        expected += binomial(m, r) * binomial(n, r);
      const auto all = enumerate_bi_interval(Ambient(m, n));
      CHECK(static_cast<long long>(all.size()) == expected);
      CHECK(std::is_sorted(all.begin(), all.end()));
    }

  // interval membership agrees with the order predicate
  const BiMinor d = bim({1, 3}, {1, 4}, 3, 5);
  const auto interval = enumerate_bi_interval(Ambient(3, 5), d);
  for (const BiMinor& x : enumerate_bi_interval(Ambient(3, 5)))
    CHECK(std::binary_search(interval.begin(), interval.end(), x) ==
          poset_leq(d, x));
}

TEST_CASE("textual rendering") {
  CHECK(to_string(idx({1, 4, 7}, 3, 8)) == "[1 4 7]");
  CHECK(to_string(bim({1, 3}, {1, 4}, 3, 5)) == "[1 3|1 4]");
  CHECK(to_string(bim({3}, {1}, 3, 5)) == "[3|1]");
}
