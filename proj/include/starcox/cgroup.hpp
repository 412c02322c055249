#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starcox/group.hpp"
#include "starcox/star.hpp"

namespace starcox {

using Generators = std::array<Mat4, 4>;

/// <r_k : k not in omit>, always enumerated.
GroupHandle distinguished(const FieldCtx& f, const Generators& r, const std::vector<int>& omit,
                          std::uint64_t cap = kDefaultCap);
GroupHandle distinguished(const StarParams& params, const std::vector<int>& omit,
                          std::uint64_t cap = kDefaultCap);

struct IntersectionReport {
  bool distinct_involutions = false;
  // G02 n G03, G02 n G23, G03 n G23 against <r1>
  std::array<bool, 3> rank3{};
  // G0 n G2 = G02, G0 n G3 = G03, G2 n G3 = G23
  std::array<bool, 3> rank4{};
  std::optional<std::string> witness;
  std::map<std::string, std::uint64_t> subgroup_orders;

  bool is_cgroup() const;
};

inline constexpr std::array<const char*, 3> kRank3CheckNames{"G02 n G03 = <r1>", "G02 n G23 = <r1>",
                                                             "G03 n G23 = <r1>"};
inline constexpr std::array<const char*, 3> kRank4CheckNames{"G0 n G2 = G02", "G0 n G3 = G03",
                                                             "G2 n G3 = G23"};

/// Only the rank-3 part of the report is filled in.
IntersectionReport verify_rank3_cgroups(const FieldCtx& f, const Generators& r,
                                        std::uint64_t cap = kDefaultCap);
IntersectionReport verify_rank3_cgroups(const StarParams& params, std::uint64_t cap = kDefaultCap);

IntersectionReport verify_cgroup(const FieldCtx& f, const Generators& r,
                                 std::uint64_t cap = kDefaultCap);
IntersectionReport verify_cgroup(const StarParams& params, std::uint64_t cap = kDefaultCap);

/// A nonzero column of m - I, scaled so its first nonzero entry is 1.
Vec4 reflection_root(const FieldCtx& f, const Mat4& m);
Vec4 normalize(const FieldCtx& f, const Vec4& v);

struct Lemma41Report {
  Mat4 z;
  Vec4 root{};  // normalized
  std::uint64_t order_g = 0;
  std::uint64_t order_z = 0;
  bool same = false;
};

/// Replacement generator z for r2 (k = 4, 5, 6) and the comparison
/// <r0,r1,r2,r3> == <r0,r1,z,r3> by BSGS. i is the exponent of x for k = 6.
Mat4 replacement_generator(const FieldCtx& f, const Generators& r, int k, unsigned i = 0);
Lemma41Report lemma41_check(const StarParams& params, unsigned i = 0,
                            std::uint64_t orbit_cap = kDefaultCap);

}  // namespace starcox
