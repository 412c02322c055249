#include "starcox/field.hpp"

#include <stdexcept>

#include "starcox/errors.hpp"

namespace starcox {

namespace {

std::uint32_t mod_big(const BigInt& v, std::uint32_t r) {
  BigInt m = v % r;
  if (m < 0) m += r;
  return m.convert_to<std::uint32_t>();
}

}  // namespace

FieldCtx FieldCtx::build(const GoldenPrime& p) {
  if (p.q > 0xFFFFFFFFull / 2) throw std::out_of_range("field order too large");
  FieldCtx f;
  f.r_ = static_cast<std::uint32_t>(p.characteristic);
  f.q_ = static_cast<std::uint32_t>(p.q);
  switch (p.klass) {
    case PrimeClass::Even:
    case PrimeClass::ClassII:
      f.degree_ = 2;
      f.tau_ = {0, 1};
      break;
    case PrimeClass::ClassI:
      f.degree_ = 1;
      f.tau_ = {3, 0};
      break;
    case PrimeClass::ClassIII: {
      f.degree_ = 1;
      // c + d*t = 0 in F_q, and d is a unit because q does not divide d.
      const FieldElem c{mod_big(p.c(), f.r_), 0};
      const FieldElem d{mod_big(p.d(), f.r_), 0};
      f.tau_ = f.neg(f.mul(c, f.inv(d)));
      break;
    }
  }
  return f;
}

FieldElem FieldCtx::reduce(const GoldenInt& z) const {
  const FieldElem a{mod_big(z.a(), r_), 0};
  const FieldElem b{mod_big(z.b(), r_), 0};
  return add(a, mul(b, tau_));
}

FieldElem FieldCtx::from_int(long long v) const {
  long long m = v % static_cast<long long>(r_);
  if (m < 0) m += r_;
  return {static_cast<std::uint32_t>(m), 0};
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  std::uint32_t x = a.x + b.x, y = a.y + b.y;
  if (x >= r_) x -= r_;
  if (y >= r_) y -= r_;
  return {x, y};
}

FieldElem FieldCtx::neg(FieldElem a) const {
  return {a.x == 0 ? 0 : r_ - a.x, a.y == 0 ? 0 : r_ - a.y};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  const std::uint64_t r = r_;
  if (degree_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.x} * b.x % r), 0};
  const std::uint64_t bd = std::uint64_t{a.y} * b.y;
  const std::uint64_t x = std::uint64_t{a.x} * b.x + bd;
  const std::uint64_t y = std::uint64_t{a.x} * b.y + std::uint64_t{a.y} * b.x + bd;
  return {static_cast<std::uint32_t>(x % r), static_cast<std::uint32_t>(y % r)};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
  FieldElem result = one();
  while (e != 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a == zero()) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return pow(a, q_ - 2);
}

bool FieldCtx::is_square(FieldElem a) const {
  if (r_ == 2) throw EvenPrimeError("quadratic character in characteristic 2");
  if (a == zero()) throw std::domain_error("is_square of zero");
  return pow(a, (q_ - 1) / 2) == one();
}

}  // namespace starcox
