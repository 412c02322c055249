#pragma once

#include <array>
#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "starcox/field.hpp"
#include "starcox/golden.hpp"
#include "starcox/mat4.hpp"

namespace Eigen {

template <>
struct NumTraits<starcox::GoldenInt> : GenericNumTraits<starcox::GoldenInt> {
  using Real = starcox::GoldenInt;
  using NonInteger = starcox::GoldenInt;
  using Literal = starcox::GoldenInt;
  using Nested = starcox::GoldenInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
};

}  // namespace Eigen

namespace starcox {

using GoldenMat = Eigen::Matrix<GoldenInt, 4, 4>;

/// Branch label k of the star diagram; kInfinity stands for k = infinity.
inline constexpr int kInfinity = 0;

std::string k_label(int k);
bool is_valid_k(int k);

/// rho_k: 1, 2, tau^2, 3 for k = 3..6, and 4 for k = infinity.
GoldenInt rho(int k);

struct StarParams {
  int k = 3;
  GoldenPrime prime;
  int scale = 1;  // Gram scale mu, 1 or 2
};

/// Throws std::invalid_argument for unsupported combinations.
void validate(const StarParams& params);

/// Reflection matrices r0..r3 in the rescaled root basis.
std::array<GoldenMat, 4> generator_matrices(int k);
GoldenMat gram(int k, int scale = 1);
GoldenMat cartan(int k);

/// Cofactor (Laplace) expansion along the first row.
template <typename Derived>
typename Derived::Scalar cofactor_det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = m.rows();
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Scalar det(0);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == Scalar(0)) continue;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, mc = 0; c < n; ++c)
        if (c != j) minor(r - 1, mc++) = m(r, c);
    Scalar term = m(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

struct DetReport {
  GoldenInt det_gram;
  GoldenInt det_cartan;
  GoldenInt expected_gram;   // 2^6 tau^4 rho (1 - tau^2 rho)
  GoldenInt expected_cartan; // 2^2 tau^-2 (1 - tau^2 rho)
};

/// Throws std::logic_error when either identity fails.
DetReport det_identities(int k);

/// Order pairs in report order: (0,1) (1,2) (1,3) (0,2) (0,3) (2,3).
inline constexpr std::array<std::pair<int, int>, 6> kGeneratorPairs{
    {{0, 1}, {1, 2}, {1, 3}, {0, 2}, {0, 3}, {2, 3}}};

/// Coxeter exponents m_ij in the same order; 0 means infinite.
std::array<std::uint64_t, 6> coxeter_exponents(int k);

struct ReducedGenerators {
  FieldCtx field;
  std::array<Mat4, 4> gens;
  std::array<std::uint64_t, 6> product_orders{};
  std::array<bool, 6> non_smooth{};
  bool smooth = true;
};

Mat4 reduce(const FieldCtx& f, const GoldenMat& m);
ReducedGenerators reduced_generators(const StarParams& params);

}  // namespace starcox
