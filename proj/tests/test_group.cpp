#include <doctest.h>

#include <random>

#include "starcox/errors.hpp"
#include "starcox/group.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Mat4 random_mat(const FieldCtx& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  Mat4 m;
  for (auto& w : m.w) w = d(rng);
  return m;
}

std::vector<Mat4> gens_of(const StarParams& p) {
  const auto rg = reduced_generators(p);
  return {rg.gens.begin(), rg.gens.end()};
}

}  // namespace

TEST_SUITE("group") {
  TEST_CASE("determinant against Leibniz and inverse") {
    std::mt19937_64 rng(3);
    for (const char* t : {"2", "-1+2t", "3", "3+1t", "7"}) {
      const FieldCtx f = FieldCtx::build(prime(t));
      for (int i = 0; i < 200; ++i) {
        const Mat4 m = random_mat(f, rng);
        struct View {
          const FieldCtx& f;
          const Mat4& m;
          FieldElem operator()(int i, int j) const { return f.unpack(m(i, j)); }
        } view{f, m};
        FieldElem det = f.zero();
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
          int inv = 0;
          for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) inv += perm[a] > perm[b];
          FieldElem term = f.one();
          for (int a = 0; a < 4; ++a) term = f.mul(term, view(a, perm[a]));
          det = inv % 2 ? f.sub(det, term) : f.add(det, term);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(mat_det(f, m) == det);
        CHECK((mat_rank(f, m) == 4) == (det != f.zero()));
        if (det != f.zero()) {
          CHECK(mat_mul(f, m, mat_inv(f, m)) == identity4());
          CHECK(mat_mul(f, mat_inv(f, m), m) == identity4());
        } else {
          CHECK_THROWS_AS(mat_inv(f, m), std::domain_error);
        }
      }
    }
  }

  TEST_CASE("multiplication is associative and matches powers") {
    std::mt19937_64 rng(4);
    const FieldCtx f = FieldCtx::build(prime("7"));
    for (int i = 0; i < 100; ++i) {
      const Mat4 a = random_mat(f, rng), b = random_mat(f, rng), c = random_mat(f, rng);
      CHECK(mat_mul(f, mat_mul(f, a, b), c) == mat_mul(f, a, mat_mul(f, b, c)));
      CHECK(mat_pow(f, a, 3) == mat_mul(f, a, mat_mul(f, a, a)));
      CHECK(transpose(transpose(a)) == a);
    }
  }

  TEST_CASE("trivial and small groups") {
    const FieldCtx f = FieldCtx::build(prime("3+1t"));
    CHECK(enumerate(f, {identity4()}).order() == 1);
    CHECK(bsgs(f, {identity4()}).order() == 1);
    const auto g = gens_of(params(3, "3+1t"));
    CHECK(enumerate(f, {g[0], g[1]}).order() == 10);
    CHECK(enumerate(f, {g[1], g[2]}).order() == 6);
    CHECK(enumerate(f, {g[0], g[2], g[3]}).order() == 8);
    CHECK_THROWS_AS(enumerate(f, g, 1000), OverCapError);
  }

  TEST_CASE("closure, Lagrange and element orders") {
    std::mt19937_64 rng(9);
    for (int k : {3, 4, 5, 6}) {
      const auto p = params(k, "2");
      const auto g = gens_of(p);
      const FieldCtx f = reduced_generators(p).field;
      const GroupHandle G = enumerate(f, g);
      CHECK(G.order() == 960);
      const auto& el = G.elements();
      std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
      for (int i = 0; i < 300; ++i) {
        const Mat4& a = el[pick(rng)];
        const Mat4& b = el[pick(rng)];
        CHECK(G.contains(mat_mul(f, a, b)));
        CHECK(G.order() % element_order(f, a, G.order()) == 0);
      }
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          const GroupHandle H = enumerate(f, {g[i], g[j]});
          CHECK(G.order() % H.order() == 0);
        }
    }
  }

  TEST_CASE("BSGS agrees with enumeration") {
    for (const char* t : {"2", "-1+2t", "3", "3+1t"})
      for (int k : {3, 4, 5, 6}) {
        const auto p = params(k, t);
        const auto rg = reduced_generators(p);
        std::vector<Mat4> g(rg.gens.begin(), rg.gens.end());
        CAPTURE(t);
        CAPTURE(k);
        if (rg.field.q() < 11) CHECK(bsgs(rg.field, g).order() == enumerate(rg.field, g).order());
        // rank-3 subgroups too
        for (int omit = 0; omit < 4; ++omit) {
          std::vector<Mat4> h;
          for (int i = 0; i < 4; ++i)
            if (i != omit) h.push_back(g[i]);
          CHECK(bsgs(rg.field, h).order() == enumerate(rg.field, h).order());
        }
      }
  }

  TEST_CASE("membership by sifting matches the hash set") {
    const auto p = params(3, "-1+2t");
    const auto rg = reduced_generators(p);
    const FieldCtx& f = rg.field;
    std::vector<Mat4> g(rg.gens.begin(), rg.gens.end());
    const GroupHandle e = enumerate(f, g);
    const GroupHandle b = bsgs(f, g);
    const GroupHandle h = enumerate(f, {g[0], g[1], g[2]});
    for (const Mat4& m : e.elements().elements()) {
      CHECK(b.contains(m));
    }
    std::mt19937_64 rng(1);
    int outside = 0;
    for (int i = 0; i < 2000; ++i) {
      const Mat4 m = random_mat(f, rng);
      CHECK(b.contains(m) == e.contains(m));
      outside += !e.contains(m);
    }
    CHECK(outside > 0);
    CHECK(intersect(e, e).order() == e.order());
    CHECK(intersect(h, b).order() == h.order());
    CHECK(same_group(e, b));
    CHECK_FALSE(same_group(e, h));
  }
}
