#include "starcox/star.hpp"

#include <stdexcept>

#include "starcox/errors.hpp"

namespace starcox {

namespace {

const GoldenInt kTau2(1, 1);

GoldenMat identity_golden() {
  GoldenMat m = GoldenMat::Constant(GoldenInt(0));
  for (int i = 0; i < 4; ++i) m(i, i) = GoldenInt(1);
  return m;
}

}  // namespace

std::string k_label(int k) { return k == kInfinity ? "inf" : std::to_string(k); }

bool is_valid_k(int k) { return k == kInfinity || (k >= 3 && k <= 6); }

GoldenInt rho(int k) {
  switch (k) {
    case 3:
      return 1;
    case 4:
      return 2;
    case 5:
      return kTau2;
    case 6:
      return 3;
    case kInfinity:
      return 4;
  }
  throw std::invalid_argument("k must be 3, 4, 5, 6 or inf");
}

void validate(const StarParams& params) {
  if (!is_valid_k(params.k)) throw std::invalid_argument("k must be 3, 4, 5, 6 or inf");
  if (params.scale != 1 && params.scale != 2) throw std::invalid_argument("scale must be 1 or 2");
  if (params.k == kInfinity && params.prime.klass != PrimeClass::ClassI &&
      !params.prime.is_associate_of_three())
    throw std::invalid_argument("k = inf is supported only modulo sqrt5 and 3");
}

std::array<GoldenMat, 4> generator_matrices(int k) {
  std::array<GoldenMat, 4> r;
  for (auto& m : r) m = identity_golden();
  r[0](0, 0) = -1;
  r[0](0, 1) = kTau2;

  r[1](1, 0) = 1;
  r[1](1, 1) = -1;
  r[1](1, 2) = 1;
  r[1](1, 3) = rho(k);

  r[2](2, 1) = 1;
  r[2](2, 2) = -1;

  r[3](3, 1) = 1;
  r[3](3, 3) = -1;
  return r;
}

GoldenMat gram(int k, int scale) {
  const GoldenInt rk = rho(k);
  const GoldenInt t2 = kTau2;
  GoldenMat g = GoldenMat::Constant(GoldenInt(0));
  g(0, 0) = 4;
  g(0, 1) = g(1, 0) = GoldenInt(-2) * t2;
  g(1, 1) = GoldenInt(4) * t2;
  g(1, 2) = g(2, 1) = GoldenInt(-2) * t2;
  g(1, 3) = g(3, 1) = GoldenInt(-2) * t2 * rk;
  g(2, 2) = GoldenInt(4) * t2;
  g(3, 3) = GoldenInt(4) * t2 * rk;
  return g * GoldenInt(scale);
}

GoldenMat cartan(int k) {
  const GoldenMat g = gram(k);
  GoldenMat c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) c(i, j) = exact_div(GoldenInt(2) * g(i, j), g(i, i));
  return c;
}

DetReport det_identities(int k) {
  const GoldenInt rk = rho(k);
  const GoldenInt tail = GoldenInt(1) - kTau2 * rk;
  DetReport rep;
  rep.det_gram = cofactor_det(gram(k));
  rep.det_cartan = cofactor_det(cartan(k));
  rep.expected_gram = GoldenInt(64) * GoldenInt::tau_pow(4) * rk * tail;
  rep.expected_cartan = GoldenInt(4) * GoldenInt::tau_pow(-2) * tail;
  if (rep.det_gram != rep.expected_gram)
    throw std::logic_error("det g = " + to_string(rep.det_gram) + ", expected " +
                           to_string(rep.expected_gram));
  if (rep.det_cartan != rep.expected_cartan)
    throw std::logic_error("det c = " + to_string(rep.det_cartan) + ", expected " +
                           to_string(rep.expected_cartan));
  return rep;
}

std::array<std::uint64_t, 6> coxeter_exponents(int k) {
  return {5, 3, static_cast<std::uint64_t>(k), 2, 2, 2};
}

Mat4 reduce(const FieldCtx& f, const GoldenMat& m) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = f.pack(f.reduce(m(i, j)));
  return out;
}

ReducedGenerators reduced_generators(const StarParams& params) {
  validate(params);
  ReducedGenerators out;
  out.field = FieldCtx::build(params.prime);
  const auto mats = generator_matrices(params.k);
  for (int i = 0; i < 4; ++i) out.gens[i] = reduce(out.field, mats[i]);

  const std::uint64_t q = out.field.q();
  const std::uint64_t order_cap = q * q * q * q;
  const auto expected = coxeter_exponents(params.k);
  for (std::size_t t = 0; t < kGeneratorPairs.size(); ++t) {
    const auto [i, j] = kGeneratorPairs[t];
    out.product_orders[t] =
        element_order(out.field, mat_mul(out.field, out.gens[i], out.gens[j]), order_cap);
    out.non_smooth[t] = out.product_orders[t] != expected[t];
    if (out.non_smooth[t]) out.smooth = false;
  }
  return out;
}

}  // namespace starcox
