#include <doctest.h>

#include "starcox/errors.hpp"
#include "support.hpp"

using namespace testing;

namespace {

GoldenMat identity_golden() {
  GoldenMat m = GoldenMat::Constant(GoldenInt(0));
  for (int i = 0; i < 4; ++i) m(i, i) = GoldenInt(1);
  return m;
}

const std::array<int, 5> kAllK{3, 4, 5, 6, kInfinity};

}  // namespace

TEST_SUITE("star") {
  TEST_CASE("generators are involutions with the stated entries") {
    for (int k : kAllK) {
      const auto r = generator_matrices(k);
      for (const auto& m : r) CHECK(GoldenMat(m * m) == identity_golden());
      CHECK(r[0](0, 1) == GoldenInt(1, 1));
      CHECK(r[1](1, 3) == rho(k));
    }
    CHECK(rho(5) == GoldenInt(1, 1));
    CHECK(rho(kInfinity) == GoldenInt(4));
  }

  TEST_CASE("Gram and Cartan matrices") {
    for (int k : kAllK) {
      for (int mu : {1, 2}) {
        const GoldenMat g = gram(k, mu);
        CHECK(GoldenMat(g.transpose()) == g);
        CHECK(g(3, 3) == GoldenInt(4 * mu) * GoldenInt(1, 1) * rho(k));
      }
      const GoldenMat g = gram(k), c = cartan(k);
      for (int i = 0; i < 4; ++i) {
        CHECK(c(i, i) == GoldenInt(2));
        for (int j = 0; j < 4; ++j) CHECK(c(i, j) * g(i, i) == GoldenInt(2) * g(i, j));
      }
      // the form is invariant under each generator: r^T g r = g
      for (const auto& r : generator_matrices(k)) CHECK(GoldenMat(r.transpose() * g * r) == g);
    }
    CHECK(gram(4)(3, 3) == GoldenInt(8) * GoldenInt(1, 1));
  }

  TEST_CASE("determinant identities against a Leibniz oracle") {
    for (int k : kAllK) {
      const DetReport rep = det_identities(k);
      CHECK(rep.det_gram == leibniz_det<GoldenInt>(gram(k), 4));
      CHECK(rep.det_cartan == leibniz_det<GoldenInt>(cartan(k), 4));
    }
    CHECK(det_identities(3).det_gram == GoldenInt(-192, -320));
    CHECK(GoldenInt(-64) * GoldenInt::tau_pow(5) == GoldenInt(-192, -320));
  }

  TEST_CASE("singular reductions") {
    const GoldenPrime s5 = prime("-1+2t"), three = prime("3");
    CHECK(golden_legendre(det_identities(5).det_gram, s5) == 0);
    CHECK(golden_legendre(det_identities(6).det_gram, three) == 0);
    CHECK(golden_legendre(det_identities(6).det_cartan, three) != 0);
    CHECK(abs((GoldenInt(1) - GoldenInt(3) * GoldenInt(1, 1)).norm()) == 1);
    for (int k : {3, 4, 6}) CHECK(golden_legendre(det_identities(k).det_gram, s5) != 0);
  }

  TEST_CASE("reduced generators: reflections fixing the form") {
    for (const GoldenPrime& p : primes_up_to_norm(200)) {
      for (int k : {3, 4, 5, 6}) {
        const StarParams sp{k, p, 1};
        const auto rg = reduced_generators(sp);
        const FieldCtx& f = rg.field;
        const Mat4 g = reduce(f, gram(k));
        for (const Mat4& r : rg.gens) {
          CHECK(mat_mul(f, r, r) == identity4());
          CHECK(mat_mul(f, mat_mul(f, transpose(r), g), r) == g);
          if (p.is_odd()) CHECK(mat_det(f, r) == f.neg(f.one()));
        }
        // reduction of a product is the product of reductions
        const auto r = generator_matrices(k);
        CHECK(reduce(f, r[0] * r[1] * r[3]) == mat_mul(f, rg.gens[0], mat_mul(f, rg.gens[1], rg.gens[3])));
      }
    }
  }

  TEST_CASE("product orders and smoothness") {
    auto orders = [](int k, const char* t) { return reduced_generators(params(k, t)).product_orders; };
    CHECK(orders(4, "-1+2t") == std::array<std::uint64_t, 6>{5, 3, 4, 2, 2, 2});
    const auto even6 = reduced_generators(params(6, "2"));
    CHECK(even6.product_orders[2] == 3);
    CHECK_FALSE(even6.smooth);
    CHECK(even6.non_smooth[2]);
    for (int k : {3, 4, 5}) CHECK(reduced_generators(params(k, "2")).smooth);
    CHECK(orders(kInfinity, "-1+2t")[2] == 5);
    CHECK(orders(kInfinity, "3")[2] == 3);
    for (const GoldenPrime& p : primes_up_to_norm(200))
      if (p.is_odd())
        for (int k : {3, 4, 5, 6}) CHECK(reduced_generators({k, p, 1}).smooth);
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate(params(7, "3")), std::invalid_argument);
    CHECK_THROWS_AS(validate(params(3, "3", 3)), std::invalid_argument);
    CHECK_THROWS_AS(validate(params(kInfinity, "3+1t")), std::invalid_argument);
    CHECK_NOTHROW(validate(params(kInfinity, "-1+2t")));
    CHECK(k_label(kInfinity) == "inf");
  }
}
