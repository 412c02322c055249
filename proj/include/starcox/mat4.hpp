#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "starcox/field.hpp"

namespace starcox {

/// 4x4 matrix over F_q, row-major, entries in the packed field encoding.
/// Acts on column vectors.
struct Mat4 {
  std::array<std::uint32_t, 16> w{};

  std::uint32_t operator()(int i, int j) const { return w[4 * i + j]; }
  std::uint32_t& operator()(int i, int j) { return w[4 * i + j]; }

  friend bool operator==(const Mat4&, const Mat4&) = default;
  friend auto operator<=>(const Mat4&, const Mat4&) = default;
};

using Vec4 = std::array<std::uint32_t, 4>;

Mat4 identity4();
Mat4 mat_mul(const FieldCtx& f, const Mat4& a, const Mat4& b);
Mat4 mat_pow(const FieldCtx& f, Mat4 m, std::uint64_t e);
/// Gauss-Jordan; throws std::domain_error when singular.
Mat4 mat_inv(const FieldCtx& f, const Mat4& m);
FieldElem mat_det(const FieldCtx& f, const Mat4& m);
Mat4 transpose(const Mat4& m);
Vec4 apply(const FieldCtx& f, const Mat4& m, const Vec4& v);
/// Rank of the matrix over F_q.
int mat_rank(const FieldCtx& f, const Mat4& m);

/// Smallest n >= 1 with m^n = I; throws OverCapError past `cap`.
std::uint64_t element_order(const FieldCtx& f, const Mat4& m, std::uint64_t cap);

std::uint64_t hash_mat(const Mat4& m);
std::string to_string(const FieldCtx& f, const Mat4& m);

}  // namespace starcox
