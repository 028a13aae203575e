#ifndef IBS_BERNOULLI_HPP
#define IBS_BERNOULLI_HPP

#include "ibs/real.hpp"

#include <cstddef>
#include <mutex>
#include <vector>

namespace ibs {

namespace detail {

// Exact B_0..B_n from tangent numbers (integer-only recurrence):
// B_{2k} = (-1)^(k-1) 2k T_k / (2^{2k} (2^{2k} - 1)).
inline std::vector<Rational> compute_bernoulli(std::size_t n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  if (n >= 1) b[1] = Rational(-1, 2);
  const std::size_t half = n / 2;
  if (half == 0) return b;
  std::vector<Integer> t(half + 1);
  t[1] = 1;
  for (std::size_t k = 2; k <= half; ++k) t[k] = (k - 1) * t[k - 1];
  for (std::size_t k = 2; k <= half; ++k) {
    for (std::size_t j = k; j <= half; ++j) {
      t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
  }
  for (std::size_t k = 1; k <= half; ++k) {
    Integer four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
    Rational v(Integer(2 * k) * t[k], four_k * (four_k - 1));
    v.canonicalize();
    b[2 * k] = (k % 2 == 1) ? v : Rational(-v);
  }
  return b;
}

struct BernoulliCache {
  std::mutex mu;
  std::vector<Rational> values;
};

inline BernoulliCache& bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

}  // namespace detail

/// Ensures B_0..B_n are cached. Call before fanning out parallel work.
inline void warm_bernoulli_cache(std::size_t n) {
  auto& c = detail::bernoulli_cache();
  std::lock_guard lock(c.mu);
  if (c.values.size() > n) return;
  std::size_t target = std::max<std::size_t>(n, 2 * c.values.size());
  c.values = detail::compute_bernoulli(target);
}

/// Exact Bernoulli number B_n (B_1 = -1/2).
inline Rational bernoulli(std::size_t n) {
  auto& c = detail::bernoulli_cache();
  {
    std::lock_guard lock(c.mu);
    if (n < c.values.size()) return c.values[n];
  }
  warm_bernoulli_cache(n);
  std::lock_guard lock(c.mu);
  return c.values[n];
}

}  // namespace ibs

#endif  // IBS_BERNOULLI_HPP
