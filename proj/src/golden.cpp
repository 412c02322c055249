#include "starcox/golden.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <regex>
#include <set>
#include <stdexcept>

#include "starcox/errors.hpp"

namespace starcox {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt height(const GoldenInt& z) { return abs_big(z.a()) + abs_big(z.b()); }

// Strict order used by canonical_associate.
bool better(const GoldenInt& x, const GoldenInt& y) {
  BigInt hx = height(x), hy = height(y);
  if (hx != hy) return hx < hy;
  if (x.a() != y.a()) return x.a() > y.a();
  return x.b() > y.b();
}

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw std::out_of_range("integer does not fit in 64 bits");
  return x.convert_to<std::uint64_t>();
}

BigInt mod_pow(BigInt base, std::uint64_t exp, std::uint64_t m) {
  BigInt result = 1;
  base %= m;
  if (base < 0) base += m;
  while (exp != 0) {
    if (exp & 1u) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

}  // namespace

GoldenInt& GoldenInt::operator+=(const GoldenInt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

GoldenInt& GoldenInt::operator-=(const GoldenInt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

GoldenInt& GoldenInt::operator*=(const GoldenInt& o) {
  BigInt bd = b_ * o.b_;
  BigInt na = a_ * o.a_ + bd;
  BigInt nb = a_ * o.b_ + b_ * o.a_ + bd;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

GoldenInt GoldenInt::pow(unsigned n) const {
  GoldenInt result(1), base(*this);
  while (n != 0) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

GoldenInt GoldenInt::tau_pow(long n) {
  if (n >= 0) return tau().pow(static_cast<unsigned>(n));
  return GoldenInt(-1, 1).pow(static_cast<unsigned>(-n));
}

bool GoldenInt::is_unit() const {
  BigInt n = norm();
  return n == 1 || n == -1;
}

bool divides(const GoldenInt& w, const GoldenInt& z) {
  if (w.is_zero()) return z.is_zero();
  GoldenInt t = z * w.conj();
  BigInt n = w.norm();
  return t.a() % n == 0 && t.b() % n == 0;
}

GoldenInt exact_div(const GoldenInt& z, const GoldenInt& w) {
  if (!divides(w, z) || w.is_zero())
    throw std::domain_error("exact_div: " + to_string(w) + " does not divide " + to_string(z));
  GoldenInt t = z * w.conj();
  BigInt n = w.norm();
  return {t.a() / n, t.b() / n};
}

GoldenInt canonical_associate(const GoldenInt& z) {
  if (z.is_zero()) throw std::invalid_argument("canonical_associate of zero");

  // Real embeddings x = a + b*tau and y = a + b*(1 - tau). The larger one is
  // free of cancellation; the smaller is recovered from |x*y| = |N(z)|.
  const long double t = (1.0L + std::sqrt(5.0L)) / 2.0L;
  long double x = std::fabs(to_ld(z.a()) + to_ld(z.b()) * t);
  long double y = std::fabs(to_ld(z.a()) + to_ld(z.b()) * (1.0L - t));
  long double log_n = std::log(std::fabs(to_ld(z.norm())));
  long double lx, ly;
  if (x >= y) {
    lx = std::log(x);
    ly = log_n - lx;
  } else {
    ly = std::log(y);
    lx = log_n - ly;
  }
  // max(|x| t^n, |y| t^-n) is minimal near n0; |a|+|b| is within a factor
  // 3.4 of that maximum, so a window of +-8 around n0 holds the minimiser.
  long n0 = std::lround((ly - lx) / (2.0L * std::log(t)));

  GoldenInt best;
  bool have = false;
  GoldenInt cur = z * GoldenInt::tau_pow(n0 - 8);
  const GoldenInt step = GoldenInt::tau();
  for (int i = 0; i <= 16; ++i) {
    for (const GoldenInt& cand : {cur, GoldenInt(-cur)}) {
      if (!have || better(cand, best)) {
        best = cand;
        have = true;
      }
    }
    cur *= step;
  }
  return best;
}

std::string to_string(const GoldenInt& z) {
  if (z.b() == 0) return z.a().str();
  if (z.a() == 0 && z.b() == 1) return "t";
  std::string out = z.a().str();
  if (z.b() > 0)
    out += "+" + z.b().str() + "t";
  else
    out += "-" + BigInt(-z.b()).str() + "t";
  return out;
}

std::ostream& operator<<(std::ostream& os, const GoldenInt& z) { return os << to_string(z); }

GoldenInt parse_golden(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  static const std::regex kGrammar(R"(^([+-]?[0-9]+)?(?:([+-]?)([0-9]*)t)?$)");
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, kGrammar))
    throw ParseError("cannot parse golden integer '" + std::string(text) + "'");
  const bool has_a = m[1].matched;
  const bool has_t = s.back() == 't';
  if (has_a && has_t && m[2].length() == 0) {
    // "<int>t" is a bare tau multiple; "31t" style digit runs are rejected.
    if (m[3].length() != 0)
      throw ParseError("cannot parse golden integer '" + std::string(text) + "'");
    return {BigInt(0), BigInt(m[1].str())};
  }
  BigInt a = has_a ? BigInt(m[1].str()) : BigInt(0);
  BigInt b = 0;
  if (has_t) {
    b = m[3].length() ? BigInt(m[3].str()) : BigInt(1);
    if (m[2].str() == "-") b = -b;
  }
  return {a, b};
}

std::string to_string(PrimeClass k) {
  switch (k) {
    case PrimeClass::Even:
      return "Even";
    case PrimeClass::ClassI:
      return "I";
    case PrimeClass::ClassII:
      return "II";
    case PrimeClass::ClassIII:
      return "III";
  }
  return "?";
}

bool is_rational_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2)
    if (n % f == 0) return false;
  return true;
}

GoldenPrime classify_prime(const GoldenInt& z) {
  if (z.is_zero()) throw CompositeError("zero is not prime");
  if (z.is_unit()) throw UnitError(to_string(z) + " is a unit");

  GoldenPrime p;
  p.value = canonical_associate(z);
  p.generator = z;
  const BigInt n = abs_big(z.norm());
  const std::uint64_t norm = to_u64(n);

  if (is_rational_prime(norm)) {
    p.q = norm;
    p.characteristic = norm;
    p.klass = norm == 5 ? PrimeClass::ClassI : PrimeClass::ClassIII;
    return p;
  }
  if (p.value.is_rational()) {
    const std::uint64_t r = to_u64(abs_big(p.value.a()));
    if (r == 2) {
      p.klass = PrimeClass::Even;
      p.q = 4;
      p.characteristic = 2;
      return p;
    }
    if (is_rational_prime(r) && (r % 5 == 2 || r % 5 == 3)) {
      p.klass = PrimeClass::ClassII;
      p.q = r * r;
      p.characteristic = r;
      return p;
    }
  }
  throw CompositeError(to_string(z) + " is not prime in Z[tau]");
}

int rational_legendre(const BigInt& a, std::uint64_t m) {
  if (m % 2 == 0 || !is_rational_prime(m))
    throw std::invalid_argument("Legendre modulus must be an odd prime, got " + std::to_string(m));
  BigInt r = a % m;
  if (r < 0) r += m;
  if (r == 0) return 0;
  return mod_pow(r, (m - 1) / 2, m) == 1 ? 1 : -1;
}

int golden_legendre(const GoldenInt& w, const GoldenPrime& p) {
  switch (p.klass) {
    case PrimeClass::Even:
      throw EvenPrimeError("Legendre symbol modulo an even prime");
    case PrimeClass::ClassI:
      // tau = 3 (mod sqrt5) folds a + b*tau onto the rational residue a + 3b.
      return rational_legendre(w.a() + 3 * w.b(), 5);
    case PrimeClass::ClassII:
      return rational_legendre(w.norm(), p.characteristic);
    case PrimeClass::ClassIII: {
      const BigInt& c = p.c();
      const BigInt& d = p.d();
      return rational_legendre(w.a() * d * d - w.b() * c * d, p.q);
    }
  }
  return 0;
}

std::vector<GoldenPrime> primes_up_to_norm(std::uint64_t bound) {
  std::vector<GoldenPrime> out;
  std::set<std::pair<BigInt, BigInt>> seen;
  auto add = [&](const GoldenInt& z) {
    GoldenPrime p = classify_prime(canonical_associate(z));
    if (seen.insert({p.value.a(), p.value.b()}).second) out.push_back(std::move(p));
  };

  for (std::uint64_t r = 2; r * r <= bound; ++r)
    if (is_rational_prime(r) && (r == 2 || r % 5 == 2 || r % 5 == 3))
      add(GoldenInt(static_cast<long long>(r)));

  // Canonical representatives of norm q satisfy |c| + |d| <= 3.4 sqrt(q).
  const long long box = static_cast<long long>(4.0 * std::sqrt(static_cast<double>(bound))) + 2;
  for (long long c = -box; c <= box; ++c) {
    for (long long d = -box; d <= box; ++d) {
      const long long n = std::llabs(c * c + c * d - d * d);
      if (n < 5 || static_cast<std::uint64_t>(n) > bound) continue;
      if (n != 5 && n % 5 != 1 && n % 5 != 4) continue;
      if (!is_rational_prime(static_cast<std::uint64_t>(n))) continue;
      add(GoldenInt(c, d));
    }
  }

  std::sort(out.begin(), out.end(), [](const GoldenPrime& x, const GoldenPrime& y) {
    if (x.q != y.q) return x.q < y.q;
    if (x.value.a() != y.value.a()) return x.value.a() < y.value.a();
    return x.value.b() < y.value.b();
  });
  return out;
}

}  // namespace starcox
