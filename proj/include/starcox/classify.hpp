#pragma once

#include <cstdint>
#include <string>

#include "starcox/golden.hpp"
#include "starcox/star.hpp"

namespace starcox {

enum class Family { FullOrthogonal, O1, O2, CoxeterReduction, Torus, Exceptional };

struct Classification {
  Family family = Family::Exceptional;
  int dim = 0;              // n of O(n, q, e)
  std::uint64_t q = 0;
  int form_type = 0;        // e of O(n, q, e); 0 for odd n
  std::string name;         // Coxeter type or exceptional isomorphism type
  std::uint64_t torus = 0;  // s of the regular torus {3,6}_(s,0)
  BigInt predicted_order;
  int epsilon = 0;          // Legendre data; 0 where not applicable
  int delta = 0;
  bool smooth = true;

  /// "O(4,5,-1)", "O1(3,11,0)", "H3", "[3,6]_(11,0)", "Exceptional C5^3:(C2xA5)".
  std::string label() const;
};

/// Same isomorphism type: ignores the Legendre data and smoothness.
bool same_type(const Classification& a, const Classification& b);

BigInt orthogonal_order(Family family, int dim, std::uint64_t q, int form_type);

int epsilon(int k, const GoldenPrime& p, int scale = 1);
int delta(int k, const GoldenPrime& p, int scale = 1);

/// Type of G^p via Legendre symbols of the Gram data.
Classification classify_rank4(const StarParams& params);
/// Type of the distinguished subgroup omitting generator i (0, 2 or 3).
Classification classify_rank3(int omit, const StarParams& params);

/// Type of G^p read off the published congruence table; scale 1, odd p.
Classification table3_lookup(const StarParams& params);
/// Rank-3 column of the same table.
Classification table3_lookup_rank3(int omit, const StarParams& params);

struct TorusReport {
  std::uint64_t s = 0;        // expected order from the prime class
  std::uint64_t order_x = 0;
  std::uint64_t order_xy = 0; // order of x^-1 y
  bool closed_forms_ok = false;
};

/// k = 6 torus generators x = r1r3r1r3r1r2, y = r3r1r3r2r1r2. Throws
/// std::logic_error if a power disagrees with its closed form.
TorusReport torus_power_check(const GoldenPrime& p);

}  // namespace starcox
