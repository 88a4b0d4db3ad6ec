#include "lieweyl/bernoulli.hpp"

#include <fmt/format.h>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace lieweyl {

Rational bernoulli(int N) {
  if (N < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= N) {
    int m = static_cast<int>(cache.size());
    Rational sum = 0;
    for (int k = 0; k < m; ++k) sum += binomial(m + 1, k) * cache[static_cast<std::size_t>(k)];
    cache.push_back(-sum / (m + 1));
  }
  return cache[static_cast<std::size_t>(N)];
}

Rational phi_weight(int N) {
  Rational w = bernoulli(N) / factorial(N);
  return N % 2 ? Rational(-w) : w;
}

CheckReport bernoulli_identity_check(int l) {
  if (l < 1) throw std::invalid_argument("identity index must be >= 1");
  CheckReport r;
  r.name = fmt::format("bernoulli identity l={}", l);
  Rational lhs = 0;
  for (int s = 1; s <= l; ++s)
    lhs += bernoulli(2 * s) / factorial(2 * s) * bernoulli(2 * l - 2 * s) / factorial(2 * l - 2 * s);
  Rational rhs = -bernoulli(2 * l) / factorial(2 * l - 1);
  if (l == 1) rhs += Rational(1, 4);
  r.note(fmt::format("lhs = {}, rhs = {}", to_string(lhs), to_string(rhs)));
  if (lhs != rhs) r.fail("sides differ");
  return r;
}

}  // namespace lieweyl
