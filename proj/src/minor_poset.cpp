#include "minortrace/minor_poset.hpp"

#include <algorithm>
#include <sstream>

namespace minortrace {

namespace {

void require_strict_increasing(const std::vector<int>& v, int lo, int hi,
                               const char* what) {
  int prev = lo - 1;
  for (int x : v) {
    if (x <= prev || x < lo || x > hi)
      throw input_error(std::string(what) +
                        ": entries must be strictly increasing within range");
    prev = x;
  }
}

void require_same_ambient(const Ambient& a, const Ambient& b) {
  if (!(a == b)) throw input_error("ambient mismatch");
}

std::string render_tuple(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

// Emits all strictly increasing k-tuples with entries in [1, hi] that
// dominate `floor` componentwise, in lexicographic order.
template <typename Sink>
void emit_dominating_tuples(int k, int hi, const std::vector<int>& floor,
                            Sink&& sink) {
  std::vector<int> cur(static_cast<std::size_t>(k));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      sink(cur);
      return;
    }
    int lo = std::max(pos > 0 ? cur[pos - 1] + 1 : 1, floor[pos]);
    // leave room for the remaining pos+1..k-1 entries
    for (int v = lo; v <= hi - (k - 1 - pos); ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
  };
  if (k > 0) rec(rec, 0);
}

}  // namespace

SchubertIndex::SchubertIndex(std::vector<int> cols, Ambient ambient)
    : ambient_(ambient), cols_(std::move(cols)) {
  if (static_cast<int>(cols_.size()) != ambient_.rows)
    throw input_error("column tuple length must equal the row count m");
  require_strict_increasing(cols_, 1, ambient_.cols, "column tuple");
}

SchubertIndex SchubertIndex::top(Ambient ambient) {
  std::vector<int> c(static_cast<std::size_t>(ambient.rows));
  for (int i = 0; i < ambient.rows; ++i)
    c[static_cast<std::size_t>(i)] = ambient.cols - ambient.rows + 1 + i;
  return SchubertIndex(std::move(c), ambient);
}

SchubertIndex SchubertIndex::bottom(Ambient ambient) {
  std::vector<int> c(static_cast<std::size_t>(ambient.rows));
  for (int i = 0; i < ambient.rows; ++i) c[static_cast<std::size_t>(i)] = i + 1;
  return SchubertIndex(std::move(c), ambient);
}

BiMinor::BiMinor(std::vector<int> rows, std::vector<int> cols, Ambient ambient)
    : ambient_(ambient), rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.size() != cols_.size())
    throw input_error("row and column tuples must have equal length");
  if (rows_.empty() ||
      static_cast<int>(rows_.size()) > std::min(ambient_.rows, ambient_.cols))
    throw input_error("minor size must lie in [1, min(m, n)]");
  require_strict_increasing(rows_, 1, ambient_.rows, "row tuple");
  require_strict_increasing(cols_, 1, ambient_.cols, "column tuple");
}

bool poset_leq(const SchubertIndex& xi, const SchubertIndex& nu) {
  require_same_ambient(xi.ambient(), nu.ambient());
  for (std::size_t i = 0; i < xi.cols().size(); ++i)
    if (xi.cols()[i] > nu.cols()[i]) return false;
  return true;
}

bool poset_leq(const BiMinor& alpha, const BiMinor& beta) {
  require_same_ambient(alpha.ambient(), beta.ambient());
  if (alpha.size() < beta.size()) return false;
  for (int i = 0; i < beta.size(); ++i) {
    std::size_t k = static_cast<std::size_t>(i);
    if (alpha.rows()[k] > beta.rows()[k]) return false;
    if (alpha.cols()[k] > beta.cols()[k]) return false;
  }
  return true;
}

SchubertIndex meet(const SchubertIndex& xi, const SchubertIndex& nu) {
  require_same_ambient(xi.ambient(), nu.ambient());
  std::vector<int> c(xi.cols().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = std::min(xi.cols()[i], nu.cols()[i]);
  return SchubertIndex(std::move(c), xi.ambient());
}

SchubertIndex join(const SchubertIndex& xi, const SchubertIndex& nu) {
  require_same_ambient(xi.ambient(), nu.ambient());
  std::vector<int> c(xi.cols().size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = std::max(xi.cols()[i], nu.cols()[i]);
  return SchubertIndex(std::move(c), xi.ambient());
}

std::pair<SchubertIndex, SchubertIndex> meet_join(const SchubertIndex& xi,
                                                  const SchubertIndex& nu) {
  return {meet(xi, nu), join(xi, nu)};
}

Multidegree multidegree(const SchubertIndex& xi) {
  Multidegree d;
  d.weights.assign(static_cast<std::size_t>(xi.ambient().cols), 0);
  for (int c : xi.cols()) d.weights[static_cast<std::size_t>(c) - 1] = 1;
  return d;
}

std::vector<SchubertIndex> enumerate_schubert_interval(
    const Ambient& ambient, const std::optional<SchubertIndex>& floor,
    std::size_t cap) {
  if (ambient.rows > ambient.cols)
    throw input_error("Schubert enumeration requires m <= n");
  std::vector<int> lo(static_cast<std::size_t>(ambient.rows), 1);
  if (floor) {
    require_same_ambient(floor->ambient(), ambient);
    lo = floor->cols();
  }
  std::vector<SchubertIndex> out;
  emit_dominating_tuples(ambient.rows, ambient.cols, lo,
                         [&](const std::vector<int>& c) {
                           if (out.size() >= cap)
                             throw resource_error(
                                 "Schubert interval exceeds enumeration cap");
                           out.emplace_back(c, ambient);
                         });
  return out;
}

std::vector<BiMinor> enumerate_bi_interval(const Ambient& ambient,
                                           const std::optional<BiMinor>& floor,
                                           std::size_t cap) {
  if (floor) require_same_ambient(floor->ambient(), ambient);
  int max_size =
      floor ? floor->size() : std::min(ambient.rows, ambient.cols);
  std::vector<BiMinor> out;
  for (int s = 1; s <= max_size; ++s) {
    std::size_t k = static_cast<std::size_t>(s);
    std::vector<int> row_lo(k, 1), col_lo(k, 1);
    if (floor)
      for (std::size_t i = 0; i < k; ++i) {
        row_lo[i] = floor->rows()[i];
        col_lo[i] = floor->cols()[i];
      }
    emit_dominating_tuples(
        s, ambient.rows, row_lo, [&](const std::vector<int>& r) {
          emit_dominating_tuples(
              s, ambient.cols, col_lo, [&](const std::vector<int>& c) {
                if (out.size() >= cap)
                  throw resource_error(
                      "bi-minor interval exceeds enumeration cap");
                out.emplace_back(r, c, ambient);
              });
        });
  }
  return out;
}

std::string to_string(const SchubertIndex& xi) {
  return "[" + render_tuple(xi.cols()) + "]";
}

std::string to_string(const BiMinor& b) {
  return "[" + render_tuple(b.rows()) + "|" + render_tuple(b.cols()) + "]";
}

}  // namespace minortrace
