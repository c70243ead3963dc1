#include "minortrace/render.hpp"

#include <sstream>

namespace minortrace {

namespace {

constexpr const char* kDot = " · ";    // product separator
constexpr const char* kCap = " ∩ ";    // intersection separator

template <typename Prime>
std::string render_trace_impl(const TraceDescription<Prime>& trace) {
  if (trace.is_unit()) return "(1)";
  const bool product = trace.factors.size() > 1;
  std::ostringstream os;
  for (std::size_t f = 0; f < trace.factors.size(); ++f) {
    if (f) os << kDot;
    const auto& factor = trace.factors[f];
    const bool wrap = product && factor.size() > 1;
    if (wrap) os << '(';
    for (std::size_t p = 0; p < factor.size(); ++p) {
      if (p) os << kCap;
      os << render_prime(factor[p].prime);
    }
    if (wrap) os << ')';
  }
  return os.str();
}

}  // namespace

std::string render_prime(const SchubertIndex& sigma) {
  return "J(x;" + to_string(sigma) + ")";
}

std::string render_prime(const TauEntry& tau) {
  return "I(x;" + render_tau(tau) + ")";
}

std::string render_tau(const TauEntry& tau) {
  return tau.is_unit() ? "1" : to_string(tau.minor());
}

std::string render_index_set(const std::vector<int>& v) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  os << '}';
  return os.str();
}

std::string render_trace(const TraceDescription<SchubertIndex>& trace) {
  return render_trace_impl(trace);
}

std::string render_trace(const TraceDescription<TauEntry>& trace) {
  return render_trace_impl(trace);
}

}  // namespace minortrace
