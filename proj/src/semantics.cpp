#include "flpdl/semantics.hpp"

#include <mutex>

namespace flpdl {

Frame::Frame(AlgebraPtr algebra, std::size_t states, std::map<std::size_t, XRelation> atomic)
    : alg_(std::move(algebra)), n_(states), atomic_(std::move(atomic)) {
  if (n_ == 0) throw InputError("a frame needs at least one state");
  for (const auto& [m, r] : atomic_) {
    if (r.size() != n_) {
      throw DimensionMismatch("relation for a" + std::to_string(m) + " is over " + std::to_string(r.size()) +
                              " states, frame has " + std::to_string(n_));
    }
    if (r.algebra() != alg_ && !(*r.algebra() == *alg_)) {
      throw DimensionMismatch("relation for a" + std::to_string(m) + " uses a different algebra");
    }
  }
}

XRelation Frame::atomic(std::size_t m) const {
  auto it = atomic_.find(m);
  if (it != atomic_.end()) return it->second;
  return XRelation(alg_, n_);
}

XRelation derived_relation(const Frame& frame, const Action& a) {
  switch (a.kind()) {
    case ActionKind::Atom: return frame.atomic(a.atom_index());
    case ActionKind::Choice: return rel_union(derived_relation(frame, a.left()), derived_relation(frame, a.right()));
    case ActionKind::Seq: return rel_compose(derived_relation(frame, a.left()), derived_relation(frame, a.right()));
    case ActionKind::Plus: return transitive_closure(derived_relation(frame, a.left()));
  }
  throw Error("unreachable action kind");
}

struct Model::Cache {
  std::mutex mutex;
  std::unordered_map<Action, XRelation> relations;
};

Model::Model(Frame frame, Valuation valuation, std::vector<std::string> state_names)
    : frame_(std::move(frame)),
      valuation_(std::move(valuation)),
      names_(std::move(state_names)),
      cache_(std::make_shared<Cache>()) {
  const auto& A = *frame_.algebra();
  for (const auto& [p, row] : valuation_) {
    if (row.size() != frame_.size()) {
      throw InputError("valuation of p" + std::to_string(p) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(frame_.size()));
    }
    for (Elem v : row) {
      if (v >= A.size()) throw InputError("valuation of p" + std::to_string(p) + " holds a non-element");
    }
  }
  if (!names_.empty() && names_.size() != frame_.size()) throw InputError("state name count mismatch");
}

Elem Model::value_of(std::size_t var, State s) const {
  auto it = valuation_.find(var);
  if (it == valuation_.end()) return frame_.algebra()->zero();
  return it->second[s];
}

std::string Model::state_name(State s) const {
  if (!names_.empty()) return names_[s];
  return "s" + std::to_string(s);
}

const XRelation& Model::relation(const Action& a, bool strict) const {
  if (strict) {
    for (auto m : atoms_of(a)) {
      if (!frame_.has_atomic(m)) throw UnknownAtom("atomic action a" + std::to_string(m) + " is not in the frame");
    }
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->relations.find(a);
    if (it != cache_->relations.end()) return it->second;
  }
  XRelation r = [&] {
    switch (a.kind()) {
      case ActionKind::Atom: return frame_.atomic(a.atom_index());
      case ActionKind::Choice: return rel_union(relation(a.left()), relation(a.right()));
      case ActionKind::Seq: return rel_compose(relation(a.left()), relation(a.right()));
      case ActionKind::Plus: return transitive_closure(relation(a.left()));
    }
    throw Error("unreachable action kind");
  }();
  std::lock_guard lock(cache_->mutex);
  return cache_->relations.emplace(a, std::move(r)).first->second;
}

const std::vector<Elem>& Evaluator::values(const Formula& f) {
  if (auto it = memo_.find(f); it != memo_.end()) return it->second;
  const auto& A = *model_.algebra();
  const std::size_t n = model_.size();
  std::vector<Elem> out(n);
  switch (f.kind()) {
    case FormulaKind::Var:
      for (State s = 0; s < n; ++s) out[s] = model_.value_of(f.var_index(), s);
      break;
    case FormulaKind::Const:
      if (f.const_value() >= A.size()) throw InputError("constant is not an element of the model's algebra");
      out.assign(n, f.const_value());
      break;
    case FormulaKind::Box: {
      const XRelation& r = model_.relation(f.action(), strict_);
      const auto& body = values(f.lhs());
      for (State s = 0; s < n; ++s) {
        Elem acc = A.top();
        for (State t = 0; t < n; ++t) acc = A.meet(acc, A.implies(r(s, t), body[t]));
        out[s] = acc;
      }
      break;
    }
    default: {
      // unordered_map keeps references valid across rehashing.
      const auto& l = values(f.lhs());
      const auto& r = values(f.rhs());
      for (State s = 0; s < n; ++s) {
        switch (f.kind()) {
          case FormulaKind::And: out[s] = A.meet(l[s], r[s]); break;
          case FormulaKind::Or: out[s] = A.join(l[s], r[s]); break;
          case FormulaKind::Fuse: out[s] = A.fuse(l[s], r[s]); break;
          case FormulaKind::LDiv: out[s] = A.ldiv(l[s], r[s]); break;
          default: out[s] = A.implies(l[s], r[s]); break;
        }
      }
      break;
    }
  }
  return memo_.emplace(f, std::move(out)).first->second;
}

Elem evaluate(const Model& model, const Formula& f, State s, bool strict) {
  Evaluator ev(model, strict);
  return ev.value(f, s);
}

Elem evaluate_uncached(const Model& model, const Formula& f, State s) {
  const auto& A = *model.algebra();
  switch (f.kind()) {
    case FormulaKind::Var: return model.value_of(f.var_index(), s);
    case FormulaKind::Const: return f.const_value();
    case FormulaKind::And: return A.meet(evaluate_uncached(model, f.lhs(), s), evaluate_uncached(model, f.rhs(), s));
    case FormulaKind::Or: return A.join(evaluate_uncached(model, f.lhs(), s), evaluate_uncached(model, f.rhs(), s));
    case FormulaKind::Fuse: return A.fuse(evaluate_uncached(model, f.lhs(), s), evaluate_uncached(model, f.rhs(), s));
    case FormulaKind::LDiv: return A.ldiv(evaluate_uncached(model, f.lhs(), s), evaluate_uncached(model, f.rhs(), s));
    case FormulaKind::RDiv:
      return A.implies(evaluate_uncached(model, f.lhs(), s), evaluate_uncached(model, f.rhs(), s));
    case FormulaKind::Box: {
      const XRelation r = derived_relation(model.frame(), f.action());
      Elem acc = A.top();
      for (State t = 0; t < model.size(); ++t) acc = A.meet(acc, A.implies(r(s, t), evaluate_uncached(model, f.lhs(), t)));
      return acc;
    }
  }
  throw Error("unreachable formula kind");
}

ValidityResult valid_in_model(const Model& model, const Formula& f, bool strict) {
  Evaluator ev(model, strict);
  const auto& v = ev.values(f);
  const auto& A = *model.algebra();
  for (State s = 0; s < model.size(); ++s) {
    if (!A.leq(A.one(), v[s])) return {false, s, v[s]};
  }
  return {true, 0, 0};
}

}  // namespace flpdl
