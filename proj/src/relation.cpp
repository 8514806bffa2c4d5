#include "flpdl/relation.hpp"

#include <string>

namespace flpdl {

namespace {

void require_compatible(const XRelation& r, const XRelation& q) {
  if (r.size() != q.size()) {
    throw DimensionMismatch("relations over " + std::to_string(r.size()) + " and " +
                            std::to_string(q.size()) + " states");
  }
  if (r.algebra() != q.algebra() && !(*r.algebra() == *q.algebra())) {
    throw DimensionMismatch("relations over different algebras");
  }
}

}  // namespace

XRelation::XRelation(AlgebraPtr algebra, std::size_t size)
    : alg_(std::move(algebra)), n_(size), values_(size * size, alg_->bottom()) {}

XRelation::XRelation(AlgebraPtr algebra, std::size_t size, std::vector<Elem> values)
    : alg_(std::move(algebra)), n_(size), values_(std::move(values)) {
  if (values_.size() != n_ * n_) {
    throw InputError("relation has " + std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(n_ * n_));
  }
  for (Elem v : values_) {
    if (v >= alg_->size()) throw InputError("relation entry " + std::to_string(v) + " is not an element");
  }
}

XRelation XRelation::identity(AlgebraPtr algebra, std::size_t size) {
  XRelation r(std::move(algebra), size);
  for (State s = 0; s < size; ++s) r.values_[s * size + s] = r.alg_->one();
  return r;
}

bool XRelation::leq(const XRelation& other) const {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!alg_->leq(values_[i], other.values_[i])) return false;
  }
  return true;
}

bool XRelation::is_transitive() const {
  for (State s = 0; s < n_; ++s)
    for (State t = 0; t < n_; ++t)
      for (State u = 0; u < n_; ++u)
        if (!alg_->leq(alg_->fuse((*this)(s, t), (*this)(t, u)), (*this)(s, u))) return false;
  return true;
}

bool XRelation::is_reflexive() const {
  for (State s = 0; s < n_; ++s) {
    if (!alg_->leq(alg_->one(), (*this)(s, s))) return false;
  }
  return true;
}

XRelation rel_union(const XRelation& r, const XRelation& q) {
  require_compatible(r, q);
  const auto& A = *r.algebra();
  std::vector<Elem> v(r.values().size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = A.join(r.values()[i], q.values()[i]);
  return XRelation(r.algebra(), r.size(), std::move(v));
}

XRelation rel_compose(const XRelation& r, const XRelation& q) {
  require_compatible(r, q);
  const auto& A = *r.algebra();
  const std::size_t n = r.size();
  std::vector<Elem> v(n * n, A.bottom());
  for (State s = 0; s < n; ++s) {
    for (State t = 0; t < n; ++t) {
      Elem acc = A.bottom();
      for (State x = 0; x < n; ++x) acc = A.join(acc, A.fuse(r(s, x), q(x, t)));
      v[s * n + t] = acc;
    }
  }
  return XRelation(r.algebra(), n, std::move(v));
}

XRelation transitive_closure(const XRelation& r) {
  XRelation current = r;
  while (true) {
    XRelation next = rel_union(r, rel_compose(current, r));
    if (next == current) return current;
    current = std::move(next);
  }
}

XRelation refl_trans_closure(const XRelation& r) {
  auto plus = transitive_closure(r);
  std::vector<Elem> v = plus.values();
  const std::size_t n = r.size();
  for (State s = 0; s < n; ++s) v[s * n + s] = r.algebra()->one();
  return XRelation(r.algebra(), n, std::move(v));
}

}  // namespace flpdl
