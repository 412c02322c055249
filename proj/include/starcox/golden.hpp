#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace starcox {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact element a + b*tau of the golden ring Z[tau], tau^2 = tau + 1.
class GoldenInt {
 public:
  GoldenInt(long long a = 0, long long b = 0) : a_(a), b_(b) {}
  GoldenInt(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {}

  static GoldenInt tau() { return {0, 1}; }
  /// tau^n for any integer n; tau^-1 = tau - 1.
  static GoldenInt tau_pow(long n);

  const BigInt& a() const { return a_; }
  const BigInt& b() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_unit() const;
  bool is_rational() const { return b_ == 0; }

  /// a^2 + ab - b^2.
  BigInt norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  /// Galois conjugate under tau -> 1 - tau.
  GoldenInt conj() const { return {a_ + b_, -b_}; }

  GoldenInt& operator+=(const GoldenInt& o);
  GoldenInt& operator-=(const GoldenInt& o);
  GoldenInt& operator*=(const GoldenInt& o);

  friend GoldenInt operator+(GoldenInt x, const GoldenInt& y) { return x += y; }
  friend GoldenInt operator-(GoldenInt x, const GoldenInt& y) { return x -= y; }
  friend GoldenInt operator*(GoldenInt x, const GoldenInt& y) { return x *= y; }
  friend GoldenInt operator-(const GoldenInt& x) { return {-x.a_, -x.b_}; }
  friend bool operator==(const GoldenInt&, const GoldenInt&) = default;

  GoldenInt pow(unsigned n) const;

 private:
  BigInt a_;
  BigInt b_;
};

/// True when w divides z in Z[tau].
bool divides(const GoldenInt& w, const GoldenInt& z);
/// z / w, throwing std::domain_error unless the quotient lies in Z[tau].
GoldenInt exact_div(const GoldenInt& z, const GoldenInt& w);

/// Deterministic representative of {+-tau^n z}: smallest |a|+|b|, ties broken
/// toward larger a and then larger b. Throws std::invalid_argument on zero.
GoldenInt canonical_associate(const GoldenInt& z);

/// Text form `<int>`, `<int>+<int>t`, `<int>-<int>t` or `t`.
std::string to_string(const GoldenInt& z);
/// Parses the text form; also accepts `-t`, `<int>t` and omitted unit coefficients.
GoldenInt parse_golden(std::string_view text);
std::ostream& operator<<(std::ostream& os, const GoldenInt& z);

enum class PrimeClass { Even, ClassI, ClassII, ClassIII };

std::string to_string(PrimeClass k);

/// A prime of Z[tau]. `generator` is the associate the caller supplied; its
/// coefficients c, d are the ones the Legendre formulas use.
struct GoldenPrime {
  GoldenInt value;
  GoldenInt generator;
  PrimeClass klass = PrimeClass::Even;
  std::uint64_t q = 0;
  std::uint64_t characteristic = 0;

  const BigInt& c() const { return generator.a(); }
  const BigInt& d() const { return generator.b(); }
  bool is_odd() const { return klass != PrimeClass::Even; }
  /// Associate of the rational prime 3 (the singular case for k = 6).
  bool is_associate_of_three() const {
    return klass == PrimeClass::ClassII && characteristic == 3;
  }
};

bool is_rational_prime(std::uint64_t n);

/// Throws UnitError for units and CompositeError for non-primes.
GoldenPrime classify_prime(const GoldenInt& z);

/// Euler's criterion; m must be an odd rational prime.
int rational_legendre(const BigInt& a, std::uint64_t m);

/// Quadratic character of w modulo p, computed from rational symbols.
int golden_legendre(const GoldenInt& w, const GoldenPrime& p);

/// Canonical primes of norm q <= bound ordered by (q, c, d).
std::vector<GoldenPrime> primes_up_to_norm(std::uint64_t bound);

}  // namespace starcox
