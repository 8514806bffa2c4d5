#include "flpdl/decide.hpp"

#include <random>
#include <unordered_map>

namespace flpdl {

BigInt theoretical_bound(const Formula& phi, const FLAlgebra& alg) {
  const auto closure = closure_of({phi});
  BigInt b = 1;
  for (std::size_t i = 0; i < closure.size(); ++i) b *= alg.size();
  return b;
}

namespace {

/// phi flattened into postorder arrays so one frame/valuation can be checked
/// without allocation. Independent of Evaluator; hits are re-verified there.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& phi, const FLAlgebra& alg) : alg_(alg) {
    for (auto m : atoms_of(phi)) atom_slot_[m] = atoms_.size(), atoms_.push_back(m);
    for (auto p : variables_of(phi)) var_slot_[p] = vars_.size(), vars_.push_back(p);
    root_ = add(phi);
  }

  const std::vector<std::size_t>& atoms() const { return atoms_; }
  const std::vector<std::size_t>& vars() const { return vars_; }

  void resize(std::size_t n) {
    n_ = n;
    rel_.assign(acts_.size(), std::vector<Elem>(n * n));
    scratch_.assign(n * n, 0);
    vals_.assign(nodes_.size() * n, 0);
  }

  /// frame digits: atom slot i, entry (s,t) at i*n*n + s*n + t.
  void load_frame(const std::vector<Elem>& digits) {
    const std::size_t nn = n_ * n_;
    for (std::size_t a = 0; a < acts_.size(); ++a) {
      const auto& act = acts_[a];
      auto& out = rel_[a];
      switch (act.kind) {
        case ActionKind::Atom:
          std::copy(digits.begin() + static_cast<long>(act.slot * nn),
                    digits.begin() + static_cast<long>((act.slot + 1) * nn), out.begin());
          break;
        case ActionKind::Choice:
          for (std::size_t i = 0; i < nn; ++i) out[i] = alg_.join(rel_[act.l][i], rel_[act.r][i]);
          break;
        case ActionKind::Seq:
          compose(rel_[act.l], rel_[act.r], out);
          break;
        case ActionKind::Plus: {
          const auto& base = rel_[act.l];
          out = base;
          while (true) {
            compose(out, base, scratch_);
            bool changed = false;
            for (std::size_t i = 0; i < nn; ++i) {
              const Elem next = alg_.join(base[i], scratch_[i]);
              if (next != out[i]) changed = true;
              scratch_[i] = next;
            }
            if (!changed) break;
            out.swap(scratch_);
          }
          break;
        }
      }
    }
  }

  /// valuation digits: variable slot j at state s is digits[j*n + s].
  /// Returns the first state where the root value is not above one, if any.
  std::optional<State> check(const std::vector<Elem>& digits) {
    const std::size_t n = n_;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const auto& node = nodes_[k];
      Elem* out = &vals_[k * n];
      const Elem* l = node.l >= 0 ? &vals_[static_cast<std::size_t>(node.l) * n] : nullptr;
      const Elem* r = node.r >= 0 ? &vals_[static_cast<std::size_t>(node.r) * n] : nullptr;
      switch (node.kind) {
        case FormulaKind::Var:
          for (State s = 0; s < n; ++s) out[s] = digits[node.slot * n + s];
          break;
        case FormulaKind::Const:
          for (State s = 0; s < n; ++s) out[s] = node.c;
          break;
        case FormulaKind::And: for (State s = 0; s < n; ++s) out[s] = alg_.meet(l[s], r[s]); break;
        case FormulaKind::Or: for (State s = 0; s < n; ++s) out[s] = alg_.join(l[s], r[s]); break;
        case FormulaKind::Fuse: for (State s = 0; s < n; ++s) out[s] = alg_.fuse(l[s], r[s]); break;
        case FormulaKind::LDiv: for (State s = 0; s < n; ++s) out[s] = alg_.ldiv(l[s], r[s]); break;
        case FormulaKind::RDiv: for (State s = 0; s < n; ++s) out[s] = alg_.implies(l[s], r[s]); break;
        case FormulaKind::Box: {
          const auto& rel = rel_[node.act];
          for (State s = 0; s < n; ++s) {
            Elem acc = alg_.top();
            for (State t = 0; t < n; ++t) acc = alg_.meet(acc, alg_.implies(rel[s * n + t], l[t]));
            out[s] = acc;
          }
          break;
        }
      }
    }
    const Elem* root = &vals_[static_cast<std::size_t>(root_) * n];
    for (State s = 0; s < n; ++s) {
      if (!alg_.leq(alg_.one(), root[s])) return s;
    }
    return std::nullopt;
  }

 private:
  struct ActNode {
    ActionKind kind;
    std::size_t slot = 0;
    std::size_t l = 0, r = 0;
  };
  struct Node {
    FormulaKind kind;
    std::size_t slot = 0;
    Elem c = 0;
    int l = -1, r = -1;
    std::size_t act = 0;
  };

  void compose(const std::vector<Elem>& a, const std::vector<Elem>& b, std::vector<Elem>& out) const {
    const std::size_t n = n_;
    for (State s = 0; s < n; ++s) {
      for (State t = 0; t < n; ++t) {
        Elem acc = alg_.bottom();
        for (State x = 0; x < n; ++x) acc = alg_.join(acc, alg_.fuse(a[s * n + x], b[x * n + t]));
        out[s * n + t] = acc;
      }
    }
  }

  std::size_t add(const Action& a) {
    if (auto it = act_ids_.find(a); it != act_ids_.end()) return it->second;
    ActNode node{a.kind()};
    switch (a.kind()) {
      case ActionKind::Atom: node.slot = atom_slot_.at(a.atom_index()); break;
      case ActionKind::Plus: node.l = add(a.left()); break;
      default:
        node.l = add(a.left());
        node.r = add(a.right());
    }
    acts_.push_back(node);
    return act_ids_[a] = acts_.size() - 1;
  }

  int add(const Formula& f) {
    if (auto it = ids_.find(f); it != ids_.end()) return it->second;
    Node node{f.kind()};
    switch (f.kind()) {
      case FormulaKind::Var: node.slot = var_slot_.at(f.var_index()); break;
      case FormulaKind::Const:
        if (f.const_value() >= alg_.size()) throw InputError("constant is not an element of the algebra");
        node.c = f.const_value();
        break;
      case FormulaKind::Box:
        node.act = add(f.action());
        node.l = add(f.lhs());
        break;
      default:
        node.l = add(f.lhs());
        node.r = add(f.rhs());
    }
    nodes_.push_back(node);
    return ids_[f] = static_cast<int>(nodes_.size() - 1);
  }

  const FLAlgebra& alg_;
  std::vector<std::size_t> atoms_, vars_;
  std::unordered_map<std::size_t, std::size_t> atom_slot_, var_slot_;
  std::vector<ActNode> acts_;
  std::vector<Node> nodes_;
  std::unordered_map<Action, std::size_t> act_ids_;
  std::unordered_map<Formula, int> ids_;
  int root_ = -1;
  std::size_t n_ = 0;
  std::vector<std::vector<Elem>> rel_;
  std::vector<Elem> scratch_;
  std::vector<Elem> vals_;
};

/// Lexicographic successor; false after the last tuple.
bool next_tuple(std::vector<Elem>& digits, Elem base) {
  for (std::size_t k = digits.size(); k-- > 0;) {
    if (++digits[k] < base) return true;
    digits[k] = 0;
  }
  return false;
}

Model build_model(const AlgebraPtr& alg, std::size_t n, const CompiledFormula& prog,
                  const std::vector<Elem>& frame_digits, const std::vector<Elem>& val_digits) {
  std::map<std::size_t, XRelation> atomic;
  const std::size_t nn = n * n;
  for (std::size_t i = 0; i < prog.atoms().size(); ++i) {
    std::vector<Elem> v(frame_digits.begin() + static_cast<long>(i * nn),
                        frame_digits.begin() + static_cast<long>((i + 1) * nn));
    atomic.emplace(prog.atoms()[i], XRelation(alg, n, std::move(v)));
  }
  Valuation val;
  for (std::size_t j = 0; j < prog.vars().size(); ++j) {
    val[prog.vars()[j]] = std::vector<Elem>(val_digits.begin() + static_cast<long>(j * n),
                                            val_digits.begin() + static_cast<long>((j + 1) * n));
  }
  return Model(Frame(alg, n, std::move(atomic)), std::move(val));
}

Countermodel verified(const Formula& phi, Model model, State witness) {
  const auto check = valid_in_model(model, phi);
  if (check.valid || check.witness != witness) {
    throw Error("internal error: enumerated countermodel failed re-verification");
  }
  return Countermodel{std::move(model), witness, check.value};
}

}  // namespace

DecisionOutcome decide_bounded(const Formula& phi, const AlgebraPtr& alg, const DecideOptions& options) {
  if (options.max_states == 0) throw InputError("max_states must be at least 1");
  const auto m = static_cast<Elem>(alg->size());
  CompiledFormula prog(phi, *alg);
  const std::size_t num_atoms = prog.atoms().size();
  const std::size_t num_vars = prog.vars().size();
  DecisionOutcome outcome{NoCountermodelUpTo{options.max_states}};

  if (options.mode == SearchMode::Sample) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, options.max_states);
    std::uniform_int_distribution<unsigned> elem_dist(0, m - 1u);
    for (std::uint64_t i = 0; i < options.budget; ++i) {
      const std::size_t n = size_dist(rng);
      std::vector<Elem> fd(num_atoms * n * n), vd(num_vars * n);
      for (auto& d : fd) d = static_cast<Elem>(elem_dist(rng));
      for (auto& d : vd) d = static_cast<Elem>(elem_dist(rng));
      prog.resize(n);
      prog.load_frame(fd);
      ++outcome.frames_checked;
      ++outcome.models_checked;
      if (auto w = prog.check(vd)) {
        outcome.result = verified(phi, build_model(alg, n, prog, fd, vd), *w);
        return outcome;
      }
    }
    return outcome;
  }

  const BigInt bound = theoretical_bound(phi, *alg);
  const bool covers_bound = bound <= options.max_states;
  const std::size_t last = covers_bound ? bound.convert_to<std::size_t>() : options.max_states;

  for (std::size_t n = 1; n <= last; ++n) {
    prog.resize(n);
    std::vector<Elem> fd(num_atoms * n * n, 0);
    std::uint64_t at_size = 0;
    do {
      if (outcome.frames_checked >= options.budget) {
        throw BudgetExceeded("frame budget of " + std::to_string(options.budget) + " exhausted at " +
                                 std::to_string(n) + " states",
                             {n, at_size, outcome.frames_checked, outcome.models_checked});
      }
      ++outcome.frames_checked;
      ++at_size;
      prog.load_frame(fd);
      std::vector<Elem> vd(num_vars * n, 0);
      do {
        ++outcome.models_checked;
        if (auto w = prog.check(vd)) {
          outcome.result = verified(phi, build_model(alg, n, prog, fd, vd), *w);
          return outcome;
        }
      } while (next_tuple(vd, m));
    } while (next_tuple(fd, m));
  }
  if (covers_bound) outcome.result = ValidByExhaustion{bound};
  return outcome;
}

}  // namespace flpdl
