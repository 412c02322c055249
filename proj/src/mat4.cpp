#include "starcox/mat4.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "starcox/errors.hpp"

namespace starcox {

Mat4 identity4() {
  Mat4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  return m;
}

Mat4 mat_mul(const FieldCtx& f, const Mat4& a, const Mat4& b) {
  Mat4 c;
  const std::uint64_t r = f.characteristic();
  if (f.degree() == 1) {
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        std::uint64_t s = 0;
        for (int k = 0; k < 4; ++k) s += std::uint64_t{a(i, k)} * b(k, j);
        c(i, j) = static_cast<std::uint32_t>(s % r);
      }
    return c;
  }
  std::uint32_t ax[16], ay[16], bx[16], by[16];
  for (int t = 0; t < 16; ++t) {
    ax[t] = a.w[t] % r;
    ay[t] = a.w[t] / r;
    bx[t] = b.w[t] % r;
    by[t] = b.w[t] / r;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      std::uint64_t x = 0, y = 0;
      for (int k = 0; k < 4; ++k) {
        const int p = 4 * i + k, s = 4 * k + j;
        const std::uint64_t bd = std::uint64_t{ay[p]} * by[s];
        x += std::uint64_t{ax[p]} * bx[s] + bd;
        y += std::uint64_t{ax[p]} * by[s] + std::uint64_t{ay[p]} * bx[s] + bd;
      }
      c(i, j) = static_cast<std::uint32_t>(x % r + (y % r) * r);
    }
  return c;
}

Mat4 mat_pow(const FieldCtx& f, Mat4 m, std::uint64_t e) {
  Mat4 result = identity4();
  while (e != 0) {
    if (e & 1u) result = mat_mul(f, result, m);
    m = mat_mul(f, m, m);
    e >>= 1;
  }
  return result;
}

namespace {

// Row reduction on a copy; returns rank and accumulates det / inverse.
struct Elimination {
  int rank = 0;
  FieldElem det;
  Mat4 inverse;
};

Elimination eliminate(const FieldCtx& f, const Mat4& m) {
  FieldElem a[4][4], inv[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = f.unpack(m(i, j));
      inv[i][j] = i == j ? f.one() : f.zero();
    }
  Elimination out;
  out.det = f.one();
  int row = 0;
  for (int col = 0; col < 4 && row < 4; ++col) {
    int piv = -1;
    for (int i = row; i < 4; ++i)
      if (!(a[i][col] == f.zero())) {
        piv = i;
        break;
      }
    if (piv < 0) {
      out.det = f.zero();
      continue;
    }
    if (piv != row) {
      std::swap(a[piv], a[row]);
      std::swap(inv[piv], inv[row]);
      out.det = f.neg(out.det);
    }
    out.det = f.mul(out.det, a[row][col]);
    const FieldElem s = f.inv(a[row][col]);
    for (int j = 0; j < 4; ++j) {
      a[row][j] = f.mul(a[row][j], s);
      inv[row][j] = f.mul(inv[row][j], s);
    }
    for (int i = 0; i < 4; ++i) {
      if (i == row || a[i][col] == f.zero()) continue;
      const FieldElem t = a[i][col];
      for (int j = 0; j < 4; ++j) {
        a[i][j] = f.sub(a[i][j], f.mul(t, a[row][j]));
        inv[i][j] = f.sub(inv[i][j], f.mul(t, inv[row][j]));
      }
    }
    ++row;
  }
  out.rank = row;
  if (row < 4) out.det = f.zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out.inverse(i, j) = f.pack(inv[i][j]);
  return out;
}

}  // namespace

Mat4 mat_inv(const FieldCtx& f, const Mat4& m) {
  Elimination e = eliminate(f, m);
  if (e.rank < 4) throw std::domain_error("mat_inv: singular matrix");
  return e.inverse;
}

FieldElem mat_det(const FieldCtx& f, const Mat4& m) { return eliminate(f, m).det; }

int mat_rank(const FieldCtx& f, const Mat4& m) { return eliminate(f, m).rank; }

Mat4 transpose(const Mat4& m) {
  Mat4 t;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) t(i, j) = m(j, i);
  return t;
}

Vec4 apply(const FieldCtx& f, const Mat4& m, const Vec4& v) {
  Vec4 out{};
  for (int i = 0; i < 4; ++i) {
    FieldElem s = f.zero();
    for (int k = 0; k < 4; ++k) s = f.add(s, f.mul(f.unpack(m(i, k)), f.unpack(v[k])));
    out[i] = f.pack(s);
  }
  return out;
}

std::uint64_t element_order(const FieldCtx& f, const Mat4& m, std::uint64_t cap) {
  const Mat4 id = identity4();
  Mat4 p = m;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (p == id) return n;
    p = mat_mul(f, p, m);
  }
  throw OverCapError("element order exceeds " + std::to_string(cap));
}

std::uint64_t hash_mat(const Mat4& m) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (int t = 0; t < 16; t += 2) {
    std::uint64_t k = (std::uint64_t{m.w[t]} << 32) | m.w[t + 1];
    k *= 0xBF58476D1CE4E5B9ull;
    k ^= k >> 31;
    h = (h ^ k) * 0x94D049BB133111EBull;
    h ^= h >> 29;
  }
  return h;
}

std::string to_string(const FieldCtx& f, const Mat4& m) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << '[';
    for (int j = 0; j < 4; ++j) {
      const FieldElem e = f.unpack(m(i, j));
      if (j) os << ' ';
      if (f.degree() == 1)
        os << e.x;
      else
        os << e.x << '+' << e.y << 'u';
    }
    os << ']';
  }
  return os.str();
}

}  // namespace starcox
