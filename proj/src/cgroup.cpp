#include "starcox/cgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace starcox {

namespace {

// Returns the first element of a n b outside `expected`, if any.
std::optional<Mat4> excess(const GroupHandle& a, const GroupHandle& b, const GroupHandle& expected) {
  const GroupHandle& small = a.order() <= b.order() ? a : b;
  const GroupHandle& large = a.order() <= b.order() ? b : a;
  const GroupHandle meet = intersect(small, large);
  for (const Mat4& m : meet.elements().elements())
    if (!expected.contains(m)) return m;
  return std::nullopt;
}

bool check(const FieldCtx& f, const GroupHandle& a, const GroupHandle& b,
           const GroupHandle& expected, const char* name, IntersectionReport& rep) {
  auto extra = excess(a, b, expected);
  if (!extra) return true;
  if (!rep.witness) rep.witness = std::string(name) + ": " + to_string(f, *extra);
  return false;
}

bool distinct_involutions(const FieldCtx& f, const Generators& r) {
  const Mat4 id = identity4();
  for (int i = 0; i < 4; ++i) {
    if (r[i] == id || mat_mul(f, r[i], r[i]) != id) return false;
    for (int j = 0; j < i; ++j)
      if (r[i] == r[j]) return false;
  }
  return true;
}

struct Subgroups {
  GroupHandle g0, g2, g3, g02, g03, g23, g1, r1;
};

Subgroups rank3_part(const FieldCtx& f, const Generators& r, std::uint64_t cap,
                     IntersectionReport& rep) {
  rep.distinct_involutions = distinct_involutions(f, r);
  if (!rep.distinct_involutions && !rep.witness) rep.witness = "generators are not distinct involutions";

  Subgroups s;
  s.g02 = distinguished(f, r, {0, 2}, cap);
  s.g03 = distinguished(f, r, {0, 3}, cap);
  s.g23 = distinguished(f, r, {2, 3}, cap);
  s.r1 = distinguished(f, r, {0, 2, 3}, cap);
  for (auto [name, g] : {std::pair{"G02", &s.g02}, {"G03", &s.g03}, {"G23", &s.g23}, {"G023", &s.r1}})
    rep.subgroup_orders[name] = g->order();

  rep.rank3[0] = check(f, s.g02, s.g03, s.r1, kRank3CheckNames[0], rep);
  rep.rank3[1] = check(f, s.g02, s.g23, s.r1, kRank3CheckNames[1], rep);
  rep.rank3[2] = check(f, s.g03, s.g23, s.r1, kRank3CheckNames[2], rep);
  return s;
}

}  // namespace

bool IntersectionReport::is_cgroup() const {
  return distinct_involutions && std::all_of(rank3.begin(), rank3.end(), [](bool b) { return b; }) &&
         std::all_of(rank4.begin(), rank4.end(), [](bool b) { return b; });
}

GroupHandle distinguished(const FieldCtx& f, const Generators& r, const std::vector<int>& omit,
                          std::uint64_t cap) {
  if (omit.empty()) throw std::invalid_argument("distinguished: omit must be nonempty");
  std::vector<Mat4> gens;
  for (int i = 0; i < 4; ++i)
    if (std::find(omit.begin(), omit.end(), i) == omit.end()) gens.push_back(r[i]);
  return enumerate(f, std::move(gens), cap);
}

GroupHandle distinguished(const StarParams& params, const std::vector<int>& omit,
                          std::uint64_t cap) {
  const ReducedGenerators rg = reduced_generators(params);
  return distinguished(rg.field, rg.gens, omit, cap);
}

IntersectionReport verify_rank3_cgroups(const FieldCtx& f, const Generators& r, std::uint64_t cap) {
  IntersectionReport rep;
  rank3_part(f, r, cap, rep);
  return rep;
}

IntersectionReport verify_rank3_cgroups(const StarParams& params, std::uint64_t cap) {
  const ReducedGenerators rg = reduced_generators(params);
  return verify_rank3_cgroups(rg.field, rg.gens, cap);
}

IntersectionReport verify_cgroup(const FieldCtx& f, const Generators& r, std::uint64_t cap) {
  IntersectionReport rep;
  Subgroups s = rank3_part(f, r, cap, rep);
  s.g0 = distinguished(f, r, {0}, cap);
  s.g2 = distinguished(f, r, {2}, cap);
  s.g3 = distinguished(f, r, {3}, cap);
  s.g1 = distinguished(f, r, {1}, cap);
  for (auto [name, g] : {std::pair{"G0", &s.g0}, {"G1", &s.g1}, {"G2", &s.g2}, {"G3", &s.g3}})
    rep.subgroup_orders[name] = g->order();

  rep.rank4[0] = check(f, s.g0, s.g2, s.g02, kRank4CheckNames[0], rep);
  rep.rank4[1] = check(f, s.g0, s.g3, s.g03, kRank4CheckNames[1], rep);
  rep.rank4[2] = check(f, s.g2, s.g3, s.g23, kRank4CheckNames[2], rep);
  return rep;
}

IntersectionReport verify_cgroup(const StarParams& params, std::uint64_t cap) {
  const ReducedGenerators rg = reduced_generators(params);
  return verify_cgroup(rg.field, rg.gens, cap);
}

Vec4 normalize(const FieldCtx& f, const Vec4& v) {
  for (int i = 0; i < 4; ++i) {
    if (v[i] == 0) continue;
    const FieldElem s = f.inv(f.unpack(v[i]));
    Vec4 out;
    for (int j = 0; j < 4; ++j) out[j] = f.pack(f.mul(s, f.unpack(v[j])));
    return out;
  }
  throw std::domain_error("normalize: zero vector");
}

Vec4 reflection_root(const FieldCtx& f, const Mat4& m) {
  const FieldElem one = f.one();
  for (int j = 0; j < 4; ++j) {
    Vec4 col;
    bool nonzero = false;
    for (int i = 0; i < 4; ++i) {
      FieldElem e = f.unpack(m(i, j));
      if (i == j) e = f.sub(e, one);
      col[i] = f.pack(e);
      nonzero = nonzero || col[i] != 0;
    }
    if (nonzero) return normalize(f, col);
  }
  throw std::domain_error("reflection_root: identity matrix");
}

Mat4 replacement_generator(const FieldCtx& f, const Generators& r, int k, unsigned i) {
  auto prod = [&](std::initializer_list<int> idx) {
    Mat4 m = identity4();
    for (int t : idx) m = mat_mul(f, m, r[t]);
    return m;
  };
  auto conj = [&](const Mat4& a, const Mat4& b) { return mat_mul(f, mat_mul(f, b, a), mat_inv(f, b)); };
  switch (k) {
    case 4:
      return conj(r[3], prod({2, 1}));
    case 5:
      return conj(r[0], mat_pow(f, prod({3, 1, 2}), 5));
    case 6: {
      const Mat4 x = prod({1, 3, 1, 3, 1, 2});
      const Mat4 y = prod({3, 1, 3, 2, 1, 2});
      return conj(r[3], mat_mul(f, mat_pow(f, x, i), y));
    }
  }
  throw std::invalid_argument("replacement generator needs k = 4, 5 or 6");
}

Lemma41Report lemma41_check(const StarParams& params, unsigned i, std::uint64_t orbit_cap) {
  const ReducedGenerators rg = reduced_generators(params);
  const FieldCtx& f = rg.field;
  const auto& r = rg.gens;
  Lemma41Report rep;
  rep.z = replacement_generator(f, r, params.k, i);
  rep.root = reflection_root(f, rep.z);
  const GroupHandle g = bsgs(f, {r[0], r[1], r[2], r[3]}, orbit_cap);
  const GroupHandle gz = bsgs(f, {r[0], r[1], rep.z, r[3]}, orbit_cap);
  rep.order_g = g.order();
  rep.order_z = gz.order();
  rep.same = same_group(g, gz);
  return rep;
}

}  // namespace starcox
