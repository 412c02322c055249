#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

#include "starcox/golden.hpp"
#include "starcox/star.hpp"

namespace testing {

using namespace starcox;

inline GoldenPrime prime(const std::string& text) { return classify_prime(parse_golden(text)); }

inline StarParams params(int k, const std::string& text, int scale = 1) {
  return {k, prime(text), scale};
}

inline GoldenInt random_golden(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  return {d(rng), d(rng)};
}

// Determinant by the Leibniz permutation sum.
template <typename Scalar, typename M>
Scalar leibniz_det(const M& m, int n) {
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  Scalar total(0);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Scalar term(1);
    for (int i = 0; i < n; ++i) term = term * m(i, perm[i]);
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  return total;
}

// Rational prime test by trial division, kept independent of the library.
inline bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace testing
