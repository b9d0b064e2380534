#pragma once

#include <string>

#include "lnf/graph.hpp"

namespace lnf {

// Minimum size of a k-connected graph on n vertices in which every vertex
// neighborhood induces a subgraph with a cycle.  All arithmetic is exact.

// k = 4 regime, n >= 8.
long long min_size_four_connected(int n);

// k = 2 regime, n >= 8.
long long min_size_two_connected(int n);

// k = 1 regime, n >= 8.
long long min_size_connected(int n);

enum class SizeRegime { connected, two_connected, four_connected, trivial };

struct SizeFormulaResult {
  long long value;
  SizeRegime regime;
};

// Dispatch on k.  k = 3 is rejected: the exact value there is a separate
// companion result and is not computed here.  For k >= 5 the degree bound
// ceil(k*n/2) is tight (n >= k+1).
SizeFormulaResult min_size(int k, int n);

const char* to_string(SizeRegime regime);

// Reduced fraction with positive denominator.
struct Rational {
  long long num;
  long long den;

  bool operator==(const Rational&) const = default;
};

std::string to_string(Rational r);

// 7(n-1)/3, the conjectured lower bound on the size of the k >= 2 case.
// The four-connected family beats it for every n = 0 mod 4, n >= 8.
Rational conjecture_bound(int n);

// 3*e(g) >= 7*(|g|-1), compared in integers.
bool conjecture_satisfied(const Graph& g);

}  // namespace lnf
