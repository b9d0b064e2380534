#include "lnf/formulas.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lnf {

namespace {

void require_order(int n, int least) {
  if (n < least)
    throw std::invalid_argument("order " + std::to_string(n) +
                                " below formula domain (n >= " +
                                std::to_string(least) + ")");
}

}  // namespace

long long min_size_four_connected(int n) {
  require_order(n, 8);
  return n % 4 == 0 ? 2ll * n : 2ll * n + 1;
}

long long min_size_two_connected(int n) {
  require_order(n, 8);
  int r = n % 4;
  long long value =
      (r == 0 || r == 3) ? 2ll * n - n / 4 : 2ll * n + 1 - n / 4;
  // same quantity written over n = 4q + r, kept as a cross-check
  long long q = n / 4;
  assert(value == 7 * q + 2 * r + (r == 1 || r == 2 ? 1 : 0));
  return value;
}

long long min_size_connected(int n) {
  require_order(n, 8);
  int r = n % 4;
  return (r == 0 || r == 3) ? 2ll * n - 1 - n / 4 : 2ll * n - n / 4;
}

SizeFormulaResult min_size(int k, int n) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  switch (k) {
    case 1:
      return {min_size_connected(n), SizeRegime::connected};
    case 2:
      return {min_size_two_connected(n), SizeRegime::two_connected};
    case 3:
      throw std::invalid_argument(
          "k = 3 unsupported: exact value is a companion result");
    case 4:
      return {min_size_four_connected(n), SizeRegime::four_connected};
    default:
      require_order(n, k + 1);
      return {(static_cast<long long>(k) * n + 1) / 2, SizeRegime::trivial};
  }
}

const char* to_string(SizeRegime regime) {
  switch (regime) {
    case SizeRegime::connected: return "connected";
    case SizeRegime::two_connected: return "two_connected";
    case SizeRegime::four_connected: return "four_connected";
    case SizeRegime::trivial: return "trivial";
  }
  return "";
}

std::string to_string(Rational r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational conjecture_bound(int n) {
  long long num = 7ll * (n - 1);
  long long den = 3;
  long long g = std::gcd(num, den);
  return {num / g, den / g};
}

bool conjecture_satisfied(const Graph& g) {
  return 3ll * g.size() >= 7ll * (g.order() - 1);
}

}  // namespace lnf
