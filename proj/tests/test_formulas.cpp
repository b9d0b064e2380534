#include <stdexcept>

#include "doctest.h"
#include "lnf/formulas.hpp"
#include "lnf/graph.hpp"

using namespace lnf;

TEST_SUITE_BEGIN("formulas");

TEST_CASE("four-connected spot values") {
  CHECK(min_size_four_connected(8) == 16);
  CHECK(min_size_four_connected(9) == 19);
  CHECK(min_size_four_connected(12) == 24);
  CHECK(min_size_four_connected(15) == 31);
}

TEST_CASE("two-connected spot values") {
  CHECK(min_size_two_connected(8) == 14);
  CHECK(min_size_two_connected(9) == 17);
  CHECK(min_size_two_connected(11) == 20);
  CHECK(min_size_two_connected(12) == 21);
}

TEST_CASE("connected spot values") {
  CHECK(min_size_connected(8) == 13);
  CHECK(min_size_connected(9) == 16);
  CHECK(min_size_connected(11) == 19);
  CHECK(min_size_connected(12) == 20);
}

TEST_CASE("piecewise forms recomputed independently") {
  for (int n = 8; n <= 10000; ++n) {
    int q = n / 4, r = n % 4;
    long long h = r == 0 ? 2 * n : 2 * n + 1;
    long long g = 7 * q + 2 * r + (r == 1 || r == 2 ? 1 : 0);
    CHECK(min_size_four_connected(n) == h);
    CHECK(min_size_two_connected(n) == g);
    // p differs from g by exactly one edge in every residue.
    CHECK(min_size_connected(n) == g - 1);
  }
}

TEST_CASE("dispatch and regimes") {
  CHECK(min_size(1, 12).value == 20);
  CHECK(to_string(min_size(1, 12).regime) == "connected");
  CHECK(min_size(2, 8).value == 14);
  CHECK(to_string(min_size(2, 8).regime) == "two_connected");
  CHECK(min_size(4, 9).value == 19);
  CHECK(to_string(min_size(4, 9).regime) == "four_connected");
  CHECK(min_size(5, 9).value == 23);
  CHECK(to_string(min_size(5, 9).regime) == "trivial");
  CHECK(min_size(6, 13).value == 39);
  CHECK(min_size(7, 12).value == 42);
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(min_size(3, 10), std::invalid_argument);
  CHECK_THROWS_WITH_AS(min_size(3, 10), doctest::Contains("companion"),
                       std::invalid_argument);
  CHECK_THROWS_AS(min_size(0, 10), std::invalid_argument);
  CHECK_THROWS_AS(min_size(1, 7), std::invalid_argument);
  CHECK_THROWS_AS(min_size(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(min_size(4, 7), std::invalid_argument);
  CHECK_THROWS_AS(min_size(5, 5), std::invalid_argument);
  CHECK(min_size(5, 6).value == 15);
}

TEST_CASE("sandwich and degree bound") {
  for (int n = 8; n <= 10000; ++n) {
    long long p = min_size_connected(n);
    long long g = min_size_two_connected(n);
    long long h = min_size_four_connected(n);
    CHECK(p <= g);
    CHECK(g <= h);
    CHECK(p >= (n + 1) / 2);
    CHECK(g >= n);
    CHECK(h >= 2 * n);
    // Degree bound is tight for k=4 exactly at multiples of 4.
    CHECK((h == 2 * n) == (n % 4 == 0));
  }
}

TEST_CASE("exact rational bound") {
  CHECK(to_string(conjecture_bound(12)) == "77/3");
  CHECK(to_string(conjecture_bound(1)) == "0");
  CHECK(to_string(conjecture_bound(4)) == "7");
  CHECK(to_string(conjecture_bound(10)) == "21");
  Rational r = conjecture_bound(9);
  CHECK(r.num == 56);
  CHECK(r.den == 3);
}

TEST_CASE("bound comparison is exact at the boundary") {
  // K5: 30 >= 28.
  CHECK(conjecture_satisfied(complete_graph(5)));
  CHECK(conjecture_satisfied(complete_graph(1)));
  // n = 7, m = 14: 3*14 = 7*6 exactly, equality counts as satisfied.
  Graph boundary(7);
  int added = 0;
  for (int v = 1; v < 7 && added < 14; ++v)
    for (int u = 0; u < v && added < 14; ++u) {
      boundary.add_edge(u, v);
      ++added;
    }
  CHECK(boundary.size() == 14);
  CHECK(conjecture_satisfied(boundary));
  // K4: 18 < 21, one edge short of the bound.
  CHECK_FALSE(conjecture_satisfied(complete_graph(4)));
}

TEST_CASE("every multiple of 4 refutes the bound") {
  for (int n = 8; n <= 10000; n += 4) {
    // h(n) = 2n and 3*(2n) < 7*(n-1) whenever n > 7.
    long long h = min_size_four_connected(n);
    CHECK(3 * h < 7 * (static_cast<long long>(n) - 1));
  }
}

TEST_SUITE_END();
