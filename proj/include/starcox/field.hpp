#pragma once

#include <cstdint>

#include "starcox/golden.hpp"

namespace starcox {

/// x + y*theta with theta^2 = theta + 1; y == 0 in prime fields.
struct FieldElem {
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// The residue field Z[tau]/(p). Degree-2 fields are F_r[theta]/(theta^2 - theta - 1).
class FieldCtx {
 public:
  static FieldCtx build(const GoldenPrime& p);

  std::uint32_t characteristic() const { return r_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t q() const { return q_; }
  FieldElem tau_image() const { return tau_; }

  FieldElem reduce(const GoldenInt& z) const;
  FieldElem from_int(long long v) const;
  FieldElem zero() const { return {}; }
  FieldElem one() const { return {1, 0}; }

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;
  /// Throws std::domain_error on zero.
  FieldElem inv(FieldElem a) const;
  /// Euler criterion; requires odd q and a != 0.
  bool is_square(FieldElem a) const;

  // Packed encoding x + y*r, always < q. Matrices store entries this way.
  std::uint32_t pack(FieldElem a) const { return a.x + a.y * r_; }
  FieldElem unpack(std::uint32_t w) const {
    return degree_ == 1 ? FieldElem{w, 0} : FieldElem{w % r_, w / r_};
  }

  friend bool operator==(const FieldCtx&, const FieldCtx&) = default;

 private:
  std::uint32_t r_ = 2;
  std::uint32_t degree_ = 2;
  std::uint32_t q_ = 4;
  FieldElem tau_{0, 1};
};

}  // namespace starcox
