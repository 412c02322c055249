#include "starcox/group.hpp"

#include <bit>
#include <stdexcept>

#include "starcox/errors.hpp"

namespace starcox {

// ---------------------------------------------------------------- ElementSet

ElementSet::ElementSet(std::size_t expected) {
  rehash(std::bit_ceil(std::max<std::size_t>(16, 2 * expected + 2)));
  elems_.reserve(expected);
}

void ElementSet::rehash(std::size_t slots) {
  slots_.assign(slots, 0);
  mask_ = slots - 1;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    std::uint64_t h = hash_mat(elems_[i]) & mask_;
    while (slots_[h] != 0) h = (h + 1) & mask_;
    slots_[h] = static_cast<std::uint32_t>(i + 1);
  }
}

std::optional<std::size_t> ElementSet::index_of(const Mat4& m) const {
  std::uint64_t h = hash_mat(m) & mask_;
  while (slots_[h] != 0) {
    const std::size_t idx = slots_[h] - 1;
    if (elems_[idx] == m) return idx;
    h = (h + 1) & mask_;
  }
  return std::nullopt;
}

bool ElementSet::insert(const Mat4& m) {
  std::uint64_t h = hash_mat(m) & mask_;
  while (slots_[h] != 0) {
    if (elems_[slots_[h] - 1] == m) return false;
    h = (h + 1) & mask_;
  }
  elems_.push_back(m);
  slots_[h] = static_cast<std::uint32_t>(elems_.size());
  if (2 * elems_.size() > slots_.size()) rehash(2 * slots_.size());
  return true;
}

// --------------------------------------------------------------- GroupHandle

const ElementSet& GroupHandle::elements() const {
  if (!set_) throw std::logic_error("group is not enumerated");
  return *set_;
}

const BsgsData& GroupHandle::bsgs() const {
  if (!bsgs_) throw std::logic_error("group has no BSGS");
  return *bsgs_;
}

namespace {

std::uint64_t vec_key(const Vec4& v, std::uint64_t q) {
  return ((std::uint64_t{v[0]} * q + v[1]) * q + v[2]) * q + v[3];
}

Vec4 basis_vector(int j) {
  Vec4 v{};
  v[j] = 1;
  return v;
}

// Sifts h through levels [from, end). Returns the residue and the level
// where sifting stopped (levels.size() when it ran through).
std::pair<Mat4, std::size_t> sift(const FieldCtx& f, const BsgsData& d, Mat4 h, std::size_t from) {
  for (std::size_t i = from; i < d.levels.size(); ++i) {
    const auto& lv = d.levels[i];
    const Vec4 img = apply(f, h, lv.point);
    auto it = lv.where.find(vec_key(img, f.q()));
    if (it == lv.where.end()) return {h, i};
    h = mat_mul(f, lv.uinv[it->second], h);
  }
  return {h, d.levels.size()};
}

void build_orbit(const FieldCtx& f, BsgsData& d, std::size_t li, std::uint64_t cap) {
  auto& lv = d.levels[li];
  lv.orbit.assign(1, lv.point);
  lv.u.assign(1, identity4());
  lv.uinv.assign(1, identity4());
  lv.where.clear();
  lv.where.emplace(vec_key(lv.point, f.q()), 0);
  for (std::size_t t = 0; t < lv.orbit.size(); ++t) {
    for (std::uint32_t gi : lv.gens) {
      const Vec4 img = apply(f, d.strong[gi], lv.orbit[t]);
      if (!lv.where.emplace(vec_key(img, f.q()), static_cast<std::uint32_t>(lv.orbit.size())).second)
        continue;
      if (lv.orbit.size() >= cap) throw OverCapError("orbit exceeds " + std::to_string(cap));
      lv.orbit.push_back(img);
      lv.u.push_back(mat_mul(f, d.strong[gi], lv.u[t]));
      lv.uinv.push_back(mat_mul(f, lv.uinv[t], d.strong_inv[gi]));
    }
  }
}

// First standard basis vector moved by m; m must not be the identity.
Vec4 moved_basis_vector(const FieldCtx& f, const Mat4& m) {
  for (int j = 0; j < 4; ++j) {
    const Vec4 e = basis_vector(j);
    if (apply(f, m, e) != e) return e;
  }
  throw std::logic_error("identity has no moved basis vector");
}

BsgsData::Level new_level(const Vec4& point) {
  BsgsData::Level lv;
  lv.point = point;
  return lv;
}

std::uint32_t add_strong(const FieldCtx& f, BsgsData& d, const Mat4& m) {
  d.strong.push_back(m);
  d.strong_inv.push_back(mat_inv(f, m));
  return static_cast<std::uint32_t>(d.strong.size() - 1);
}

}  // namespace

bool GroupHandle::contains(const Mat4& m) const {
  if (set_) return set_->contains(m);
  return sift(field_, *bsgs_, m, 0).first == identity4();
}

// ---------------------------------------------------------------- backends

GroupHandle enumerate(const FieldCtx& f, std::vector<Mat4> gens, std::uint64_t cap,
                      std::size_t size_hint) {
  for (const Mat4& g : gens)
    if (mat_rank(f, g) < 4) throw std::invalid_argument("enumerate: singular generator");
  auto set = std::make_shared<ElementSet>(size_hint);
  set->insert(identity4());
  for (std::size_t i = 0; i < set->size(); ++i) {
    for (const Mat4& g : gens) {
      if (set->insert(mat_mul(f, (*set)[i], g)) && set->size() > cap)
        throw OverCapError("group order exceeds cap " + std::to_string(cap));
    }
  }
  GroupHandle h;
  h.field_ = f;
  h.gens_ = std::move(gens);
  h.backend_ = Backend::Enumerated;
  h.order_ = set->size();
  h.set_ = std::move(set);
  return h;
}

GroupHandle bsgs(const FieldCtx& f, std::vector<Mat4> gens, std::uint64_t orbit_cap) {
  if (f.q() >= 65536) throw std::out_of_range("bsgs: field too large for vector keys");
  auto d = std::make_shared<BsgsData>();
  const Mat4 id = identity4();

  for (const Mat4& g : gens) {
    if (g == id) continue;
    const std::uint32_t gi = add_strong(f, *d, g);
    bool fixes_base = true;
    for (const auto& lv : d->levels)
      if (apply(f, g, lv.point) != lv.point) fixes_base = false;
    if (fixes_base) d->levels.push_back(new_level(moved_basis_vector(f, g)));
    for (auto& lv : d->levels) {
      lv.gens.push_back(gi);
      if (apply(f, g, lv.point) != lv.point) break;
    }
  }
  for (std::size_t i = 0; i < d->levels.size(); ++i) build_orbit(f, *d, i, orbit_cap);

  long i = static_cast<long>(d->levels.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    auto& lv = d->levels[i];
    for (std::size_t t = 0; !extended && t < lv.orbit.size(); ++t) {
      for (std::size_t k = 0; !extended && k < lv.gens.size(); ++k) {
        const Mat4& s = d->strong[lv.gens[k]];
        const Vec4 img = apply(f, s, lv.orbit[t]);
        const std::uint32_t t2 = lv.where.at(vec_key(img, f.q()));
        const Mat4 schreier = mat_mul(f, lv.uinv[t2], mat_mul(f, s, lv.u[t]));
        auto [residue, j] = sift(f, *d, schreier, static_cast<std::size_t>(i) + 1);
        if (residue == id) continue;
        const std::uint32_t gi = add_strong(f, *d, residue);
        if (j == d->levels.size()) d->levels.push_back(new_level(moved_basis_vector(f, residue)));
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          d->levels[l].gens.push_back(gi);
          build_orbit(f, *d, l, orbit_cap);
        }
        i = static_cast<long>(j);
        extended = true;
      }
    }
    if (!extended) --i;
  }

  unsigned __int128 order = 1;
  for (const auto& lv : d->levels) {
    order *= lv.orbit.size();
    if (order > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("bsgs: group order exceeds 64 bits");
  }

  GroupHandle h;
  h.field_ = f;
  h.gens_ = std::move(gens);
  h.backend_ = Backend::Bsgs;
  h.order_ = static_cast<std::uint64_t>(order);
  h.bsgs_ = std::move(d);
  return h;
}

GroupHandle intersect(const GroupHandle& a, const GroupHandle& b) {
  const ElementSet& as = a.elements();
  auto set = std::make_shared<ElementSet>();
  for (const Mat4& m : as.elements())
    if (b.contains(m)) set->insert(m);
  GroupHandle h;
  h.field_ = a.field();
  h.gens_ = set->elements();
  h.backend_ = Backend::Enumerated;
  h.order_ = set->size();
  h.set_ = std::move(set);
  return h;
}

bool same_group(const GroupHandle& a, const GroupHandle& b) {
  if (a.order() != b.order()) return false;
  for (const Mat4& g : a.generators())
    if (!b.contains(g)) return false;
  for (const Mat4& g : b.generators())
    if (!a.contains(g)) return false;
  return true;
}

}  // namespace starcox
