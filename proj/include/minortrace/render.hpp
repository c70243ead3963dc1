#pragma once

#include <string>
#include <vector>

#include "minortrace/dehomogenization.hpp"
#include "minortrace/schubert.hpp"

namespace minortrace {

// Ideal names as printed in reports: J(x;-) for Schubert primes, I(x;-) for
// determinantal primes, I(x;1) for the unit tau marker.
std::string render_prime(const SchubertIndex& sigma);
std::string render_prime(const TauEntry& tau);

std::string render_tau(const TauEntry& tau);  // "[1 3|4 5]" or "1"

// "{1 2}"
std::string render_index_set(const std::vector<int>& v);

// Product-of-intersections form, e.g. "I(x;[1 3|4 5]) · I(x;[3|1])";
// factors with several primes are parenthesized inside a product; the empty
// product renders as "(1)".
std::string render_trace(const TraceDescription<SchubertIndex>& trace);
std::string render_trace(const TraceDescription<TauEntry>& trace);

}  // namespace minortrace
