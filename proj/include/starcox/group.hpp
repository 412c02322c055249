#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "starcox/mat4.hpp"

namespace starcox {

inline constexpr std::uint64_t kDefaultCap = 2'500'000;

/// Open-addressing hash set of matrices; elements keep insertion order.
class ElementSet {
 public:
  explicit ElementSet(std::size_t expected = 0);

  /// Returns true when m was not present.
  bool insert(const Mat4& m);
  bool contains(const Mat4& m) const { return index_of(m).has_value(); }
  std::optional<std::size_t> index_of(const Mat4& m) const;

  std::size_t size() const { return elems_.size(); }
  const std::vector<Mat4>& elements() const { return elems_; }
  const Mat4& operator[](std::size_t i) const { return elems_[i]; }

 private:
  void rehash(std::size_t slots);

  std::vector<Mat4> elems_;
  std::vector<std::uint32_t> slots_;  // element index + 1, 0 = empty
  std::uint64_t mask_ = 0;
};

/// Base and strong generating set for the natural action on F_q^4.
struct BsgsData {
  struct Level {
    Vec4 point{};
    std::vector<std::uint32_t> gens;  // indices into strong
    std::vector<Vec4> orbit;
    std::unordered_map<std::uint64_t, std::uint32_t> where;
    std::vector<Mat4> u;     // u[t] * point == orbit[t]
    std::vector<Mat4> uinv;
  };
  std::vector<Level> levels;
  std::vector<Mat4> strong;
  std::vector<Mat4> strong_inv;
};

enum class Backend { Enumerated, Bsgs };

class GroupHandle {
 public:
  const FieldCtx& field() const { return field_; }
  const std::vector<Mat4>& generators() const { return gens_; }
  Backend backend() const { return backend_; }
  std::uint64_t order() const { return order_; }

  /// Exact membership: hash lookup or sifting.
  bool contains(const Mat4& m) const;

  /// Enumerated backend only.
  const ElementSet& elements() const;
  /// Bsgs backend only.
  const BsgsData& bsgs() const;

 private:
  friend GroupHandle enumerate(const FieldCtx&, std::vector<Mat4>, std::uint64_t, std::size_t);
  friend GroupHandle bsgs(const FieldCtx&, std::vector<Mat4>, std::uint64_t);
  friend GroupHandle intersect(const GroupHandle&, const GroupHandle&);

  FieldCtx field_;
  std::vector<Mat4> gens_;
  Backend backend_ = Backend::Enumerated;
  std::uint64_t order_ = 1;
  std::shared_ptr<const ElementSet> set_;
  std::shared_ptr<const BsgsData> bsgs_;
};

/// Breadth-first closure under right multiplication by the generators.
/// Throws OverCapError once more than `cap` elements are found.
GroupHandle enumerate(const FieldCtx& f, std::vector<Mat4> gens, std::uint64_t cap = kDefaultCap,
                      std::size_t size_hint = 0);

/// Deterministic Schreier-Sims. Base points are standard basis vectors, so
/// the base never exceeds length 4. Throws OverCapError if an orbit exceeds
/// `orbit_cap` points.
GroupHandle bsgs(const FieldCtx& f, std::vector<Mat4> gens, std::uint64_t orbit_cap = kDefaultCap);

inline bool membership(const GroupHandle& g, const Mat4& m) { return g.contains(m); }

/// {a in A : a in B}; A must be enumerated.
GroupHandle intersect(const GroupHandle& a, const GroupHandle& b);

/// Equal orders and each generating set contained in the other group.
bool same_group(const GroupHandle& a, const GroupHandle& b);

}  // namespace starcox
