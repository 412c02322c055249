#include "starcox/classify.hpp"

#include <stdexcept>

#include "starcox/errors.hpp"

namespace starcox {

namespace {

Classification orthogonal(Family fam, int dim, std::uint64_t q, int form_type) {
  Classification c;
  c.family = fam;
  c.dim = dim;
  c.q = q;
  c.form_type = dim % 2 == 1 ? 0 : form_type;
  c.predicted_order = orthogonal_order(fam, dim, q, c.form_type);
  return c;
}

Classification coxeter(const std::string& name) {
  Classification c;
  c.family = Family::CoxeterReduction;
  c.name = name;
  c.predicted_order = name == "A3" ? 24 : name == "B3" ? 48 : 120;
  return c;
}

Classification exceptional(const std::string& name, std::uint64_t order) {
  Classification c;
  c.family = Family::Exceptional;
  c.name = name;
  c.predicted_order = order;
  return c;
}

Classification torus(std::uint64_t s) {
  Classification c;
  c.family = Family::Torus;
  c.torus = s;
  c.predicted_order = BigInt(12) * s * s;
  return c;
}

// All roots square -> O1, all non-square -> O2, mixed -> full group.
Family family_from_root_norms(std::initializer_list<int> residues) {
  bool all_square = true, all_nonsquare = true;
  for (int r : residues) {
    if (r == 0) throw SingularFormError("isotropic root");
    all_square = all_square && r == 1;
    all_nonsquare = all_nonsquare && r == -1;
  }
  if (all_square) return Family::O1;
  if (all_nonsquare) return Family::O2;
  return Family::FullOrthogonal;
}

std::uint64_t torus_size(const GoldenPrime& p) {
  switch (p.klass) {
    case PrimeClass::ClassI:
      return 5;
    case PrimeClass::ClassII:
      return p.characteristic;
    case PrimeClass::ClassIII:
      return p.q;
    case PrimeClass::Even:
      break;
  }
  throw EvenPrimeError("no torus modulo an even prime");
}

void require_odd(const GoldenPrime& p) {
  if (!p.is_odd()) throw EvenPrimeError("classification requires an odd prime");
}

void require_finite_k(int k) {
  if (k == kInfinity) throw std::invalid_argument("no classification for k = inf");
}

bool smooth_for(const StarParams& params) { return reduced_generators(params).smooth; }

}  // namespace

std::string Classification::label() const {
  auto sgn = [](int e) { return std::to_string(e); };
  switch (family) {
    case Family::FullOrthogonal:
      return "O(" + std::to_string(dim) + "," + std::to_string(q) + "," + sgn(form_type) + ")";
    case Family::O1:
      return "O1(" + std::to_string(dim) + "," + std::to_string(q) + "," + sgn(form_type) + ")";
    case Family::O2:
      return "O2(" + std::to_string(dim) + "," + std::to_string(q) + "," + sgn(form_type) + ")";
    case Family::CoxeterReduction:
      return name;
    case Family::Torus:
      return "[3,6]_(" + std::to_string(torus) + ",0)";
    case Family::Exceptional:
      return "Exceptional " + name;
  }
  return "?";
}

bool same_type(const Classification& a, const Classification& b) {
  return a.family == b.family && a.dim == b.dim && a.q == b.q && a.form_type == b.form_type &&
         a.name == b.name && a.torus == b.torus && a.predicted_order == b.predicted_order;
}

BigInt orthogonal_order(Family family, int dim, std::uint64_t q, int form_type) {
  const BigInt Q = q;
  const BigInt q2 = Q * Q;
  BigInt full;
  if (dim == 3)
    full = 2 * Q * (q2 - 1);
  else if (dim == 4 && form_type == 1)
    full = 2 * q2 * (q2 - 1) * (q2 - 1);
  else if (dim == 4 && form_type == -1)
    full = 2 * q2 * (q2 + 1) * (q2 - 1);
  else
    throw std::invalid_argument("orthogonal_order: unsupported dimension or type");
  return family == Family::FullOrthogonal ? full : BigInt(full / 2);
}

int epsilon(int k, const GoldenPrime& p, int scale) {
  return golden_legendre(cofactor_det(gram(k, scale)), p);
}

int delta(int k, const GoldenPrime& p, int scale) {
  return golden_legendre(GoldenInt(scale) * rho(k), p);
}

Classification classify_rank4(const StarParams& params) {
  validate(params);
  const GoldenPrime& p = params.prime;
  if (!p.is_odd()) {
    Classification c = exceptional("C2^4:A5", 960);
    c.smooth = smooth_for(params);
    return c;
  }
  require_finite_k(params.k);

  Classification c;
  if (params.k == 5 && p.klass == PrimeClass::ClassI) {
    c = exceptional("C5^3:(C2xA5)", 15000);
  } else if (params.k == 6 && p.is_associate_of_three()) {
    c = exceptional("C2x[C3^6:(C2xA5)]", 174960);
  } else {
    const int eps = epsilon(params.k, p, params.scale);
    if (eps == 0)
      throw SingularFormError("Gram matrix singular modulo " + to_string(p.value) +
                              " for k = " + k_label(params.k));
    const GoldenMat g = gram(params.k, params.scale);
    const Family fam = family_from_root_norms(
        {golden_legendre(g(0, 0), p), golden_legendre(g(1, 1), p), golden_legendre(g(2, 2), p),
         golden_legendre(g(3, 3), p)});
    c = orthogonal(fam, 4, p.q, eps);
  }
  c.epsilon = epsilon(params.k, p, params.scale);
  c.delta = delta(params.k, p, params.scale);
  c.smooth = smooth_for(params);
  return c;
}

Classification classify_rank3(int omit, const StarParams& params) {
  validate(params);
  const GoldenPrime& p = params.prime;
  require_odd(p);
  require_finite_k(params.k);
  const int k = params.k;

  if (omit == 3) return coxeter("H3");
  if (omit == 0) {
    switch (k) {
      case 3:
        return coxeter("A3");
      case 4:
        return coxeter("B3");
      case 5:
        return coxeter("H3");
      default:
        return torus(torus_size(p));
    }
  }
  if (omit != 2) throw std::invalid_argument("rank-3 classification covers omit = 0, 2, 3");

  // <r0, r1, r3> with m01 = 5, m13 = k.
  if (k == 3) return coxeter("H3");
  if (k == 6 && p.is_associate_of_three()) return exceptional("C3^4:D10", 1620);
  if (k == 5 && p.klass == PrimeClass::ClassI) return orthogonal(Family::O1, 3, p.q, 0);

  const GoldenMat g = gram(k, params.scale);
  Eigen::Matrix<GoldenInt, 3, 3> minor;
  const int keep[3] = {0, 1, 3};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) minor(a, b) = g(keep[a], keep[b]);
  if (golden_legendre(cofactor_det(minor), p) == 0)
    throw SingularFormError("rank-3 Gram minor singular modulo " + to_string(p.value));
  const Family fam = family_from_root_norms(
      {golden_legendre(g(0, 0), p), golden_legendre(g(1, 1), p), golden_legendre(g(3, 3), p)});
  return orthogonal(fam, 3, p.q, 0);
}

Classification table3_lookup(const StarParams& params) {
  validate(params);
  if (params.scale != 1) throw std::invalid_argument("table lookup is for scale 1");
  const GoldenPrime& p = params.prime;
  require_odd(p);
  require_finite_k(params.k);
  const int k = params.k;
  const std::uint64_t q = p.q;
  const BigInt& c = p.c();
  const BigInt& d = p.d();

  auto in = [](std::uint64_t v, std::initializer_list<std::uint64_t> set) {
    for (auto s : set)
      if (v == s) return true;
    return false;
  };

  switch (p.klass) {
    case PrimeClass::ClassI:
      if (k == 3) return orthogonal(Family::O1, 4, 5, -1);
      if (k == 4) return orthogonal(Family::FullOrthogonal, 4, 5, 1);
      if (k == 5) return exceptional("C5^3:(C2xA5)", 15000);
      return orthogonal(Family::FullOrthogonal, 4, 5, -1);

    case PrimeClass::ClassII: {
      const std::uint64_t r = p.characteristic;
      const bool r_13_17 = in(r % 20, {13, 17});
      if (k == 3 || k == 4) return orthogonal(Family::O1, 4, q, r_13_17 ? 1 : -1);
      if (k == 5) return orthogonal(Family::O1, 4, q, r_13_17 ? -1 : 1);
      if (r == 3) return exceptional("C2x[C3^6:(C2xA5)]", 174960);
      return orthogonal(Family::O1, 4, q, 1);
    }

    case PrimeClass::ClassIII: {
      if (k == 3) return orthogonal(Family::O1, 4, q, rational_legendre(c * d, q));
      if (k == 4) {
        const int e = rational_legendre(2 * c * d, q);
        if (in(q % 40, {11, 19, 21, 29})) return orthogonal(Family::FullOrthogonal, 4, q, e);
        return orthogonal(Family::O1, 4, q, e);
      }
      if (k == 5) return orthogonal(Family::O1, 4, q, rational_legendre(2 * c * d + d * d, q));
      const std::uint64_t m = q % 60;
      if (in(m, {19, 31})) return orthogonal(Family::FullOrthogonal, 4, q, 1);
      if (in(m, {29, 41})) return orthogonal(Family::FullOrthogonal, 4, q, -1);
      if (in(m, {1, 49})) return orthogonal(Family::O1, 4, q, 1);
      return orthogonal(Family::O1, 4, q, -1);
    }

    case PrimeClass::Even:
      break;
  }
  throw EvenPrimeError("table lookup requires an odd prime");
}

Classification table3_lookup_rank3(int omit, const StarParams& params) {
  validate(params);
  const GoldenPrime& p = params.prime;
  require_odd(p);
  require_finite_k(params.k);
  const int k = params.k;
  const std::uint64_t q = p.q;

  if (omit == 3) return coxeter("H3");
  if (omit == 0) {
    if (k == 3) return coxeter("A3");
    if (k == 4) return coxeter("B3");
    if (k == 5) return coxeter("H3");
    const std::uint64_t s = p.klass == PrimeClass::ClassI    ? 5
                            : p.klass == PrimeClass::ClassII ? p.characteristic
                                                             : q;
    return torus(s);
  }
  if (omit != 2) throw std::invalid_argument("rank-3 classification covers omit = 0, 2, 3");

  if (k == 3) return coxeter("H3");
  if (k == 5) return orthogonal(Family::O1, 3, q, 0);
  const bool class_i = p.klass == PrimeClass::ClassI;
  const bool class_ii = p.klass == PrimeClass::ClassII;
  if (k == 4) {
    if (class_i) return orthogonal(Family::FullOrthogonal, 3, 5, 0);
    if (class_ii) return orthogonal(Family::O1, 3, q, 0);
    const std::uint64_t m = q % 40;
    const bool full = m == 11 || m == 19 || m == 21 || m == 29;
    return orthogonal(full ? Family::FullOrthogonal : Family::O1, 3, q, 0);
  }
  if (class_i) return orthogonal(Family::FullOrthogonal, 3, 5, 0);
  if (class_ii) {
    if (p.characteristic == 3) return exceptional("C3^4:D10", 1620);
    return orthogonal(Family::O1, 3, q, 0);
  }
  const std::uint64_t m = q % 60;
  const bool full = m == 19 || m == 31 || m == 29 || m == 41;
  return orthogonal(full ? Family::FullOrthogonal : Family::O1, 3, q, 0);
}

TorusReport torus_power_check(const GoldenPrime& p) {
  require_odd(p);
  if (p.is_associate_of_three()) throw std::invalid_argument("torus check excludes p ~ 3");
  StarParams params{6, p, 1};
  const ReducedGenerators rg = reduced_generators(params);
  const FieldCtx& f = rg.field;
  const auto& r = rg.gens;
  auto prod = [&](std::initializer_list<int> idx) {
    Mat4 m = identity4();
    for (int i : idx) m = mat_mul(f, m, r[i]);
    return m;
  };
  const Mat4 x = prod({1, 3, 1, 3, 1, 2});
  const Mat4 y = prod({3, 1, 3, 2, 1, 2});
  const Mat4 xy = mat_mul(f, mat_inv(f, x), y);

  TorusReport rep;
  rep.s = torus_size(p);
  const std::uint64_t cap = std::uint64_t{f.q()} * f.q();
  rep.order_x = element_order(f, x, cap);
  rep.order_xy = element_order(f, xy, cap);

  auto closed = [&](const std::array<long long, 16>& e) {
    Mat4 m;
    for (int t = 0; t < 16; ++t) m.w[t] = f.pack(f.from_int(e[t]));
    return m;
  };
  Mat4 px = identity4(), pxy = identity4();
  for (long long n = 1; n <= static_cast<long long>(rep.s); ++n) {
    px = mat_mul(f, px, x);
    pxy = mat_mul(f, pxy, xy);
    const long long n2 = n * n;
    const Mat4 want_x = closed({1, 0, 0, 0,                  //
                                4 * n2, 1 + 2 * n, -4 * n, 0,  //
                                2 * n2 - 2 * n, n, 1 - 2 * n, 0,  //
                                2 * n2, n, -2 * n, 1});
    const Mat4 want_xy = closed({1, 0, 0, 0,                          //
                                 4 * n2, 1 - 4 * n, 2 * n, 6 * n,      //
                                 2 * n2 + n, -2 * n, 1 + n, 3 * n,     //
                                 2 * n2 + n, -2 * n, n, 1 + 3 * n});
    if (px != want_x || pxy != want_xy)
      throw std::logic_error("torus closed form mismatch at power " + std::to_string(n));
  }
  rep.closed_forms_ok = true;
  return rep;
}

}  // namespace starcox
