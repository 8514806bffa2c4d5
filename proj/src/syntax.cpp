#include "flpdl/syntax.hpp"

#include <deque>

namespace flpdl {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Action

struct Action::Node {
  ActionKind kind{};
  std::size_t index = 0;
  Action l, r;
  std::size_t hash = 0;
  std::size_t count = 1;
};

Action Action::atom(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = ActionKind::Atom;
  n->index = index;
  n->hash = mix(1, index);
  return Action(std::move(n));
}

namespace {

template <class Node, class Handle>
std::shared_ptr<Node> binary_node(int tag, Handle a, Handle b) {
  auto n = std::make_shared<Node>();
  n->hash = mix(mix(static_cast<std::size_t>(tag) * 7919, a.hash()), b.hash());
  n->count = 1 + a.node_count() + b.node_count();
  n->l = std::move(a);
  n->r = std::move(b);
  return n;
}

}  // namespace

Action Action::choice(Action a, Action b) {
  auto n = binary_node<Node>(2, std::move(a), std::move(b));
  n->kind = ActionKind::Choice;
  return Action(std::move(n));
}

Action Action::seq(Action a, Action b) {
  auto n = binary_node<Node>(3, std::move(a), std::move(b));
  n->kind = ActionKind::Seq;
  return Action(std::move(n));
}

Action Action::plus(Action a) {
  auto n = std::make_shared<Node>();
  n->kind = ActionKind::Plus;
  n->hash = mix(4, a.hash());
  n->count = 1 + a.node_count();
  n->l = std::move(a);
  return Action(std::move(n));
}

ActionKind Action::kind() const { return node_->kind; }
std::size_t Action::atom_index() const { return node_->index; }
const Action& Action::left() const { return node_->l; }
const Action& Action::right() const { return node_->r; }
std::size_t Action::hash() const { return node_->hash; }
std::size_t Action::node_count() const { return node_->count; }

int compare(const Action& a, const Action& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case ActionKind::Atom:
      return a.atom_index() == b.atom_index() ? 0 : (a.atom_index() < b.atom_index() ? -1 : 1);
    case ActionKind::Plus:
      return compare(a.left(), b.left());
    default:
      if (int c = compare(a.left(), b.left())) return c;
      return compare(a.right(), b.right());
  }
}

bool operator==(const Action& a, const Action& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.node_count() != b.node_count()) return false;
  return compare(a, b) == 0;
}

// ---------------------------------------------------------------------------
// Formula

struct Formula::Node {
  FormulaKind kind{};
  std::size_t index = 0;  // variable index or constant element
  Formula l, r;
  Action act;
  std::size_t hash = 0;
  std::size_t count = 1;
};

Formula Formula::var(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Var;
  n->index = index;
  n->hash = mix(11, index);
  return Formula(std::move(n));
}

Formula Formula::constant(Elem c) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Const;
  n->index = c;
  n->hash = mix(12, c);
  return Formula(std::move(n));
}

#define FLPDL_BINARY(name, KIND)                                                        \
  Formula Formula::name(Formula l, Formula r) {                                        \
    auto n = binary_node<Node>(20 + static_cast<int>(FormulaKind::KIND), std::move(l), \
                               std::move(r));                                          \
    n->kind = FormulaKind::KIND;                                                       \
    return Formula(std::move(n));                                                      \
  }

FLPDL_BINARY(conj, And)
FLPDL_BINARY(disj, Or)
FLPDL_BINARY(fuse, Fuse)
FLPDL_BINARY(ldiv, LDiv)
FLPDL_BINARY(implies, RDiv)
#undef FLPDL_BINARY

Formula Formula::box(Action a, Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Box;
  n->hash = mix(mix(30, a.hash()), f.hash());
  n->count = 1 + a.node_count() + f.node_count();
  n->act = std::move(a);
  n->l = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::iff(const Formula& l, const Formula& r) { return conj(implies(l, r), implies(r, l)); }

Formula Formula::neg(const Formula& f, const FLAlgebra& alg) { return implies(f, constant(alg.bottom())); }

Formula Formula::diamond(const Action& a, const Formula& f, const FLAlgebra& alg) {
  return neg(box(a, neg(f, alg)), alg);
}

FormulaKind Formula::kind() const { return node_->kind; }
std::size_t Formula::var_index() const { return node_->index; }
Elem Formula::const_value() const { return static_cast<Elem>(node_->index); }
const Formula& Formula::lhs() const { return node_->l; }
const Formula& Formula::rhs() const { return node_->r; }
const Action& Formula::action() const { return node_->act; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::node_count() const { return node_->count; }
bool Formula::is_binary() const {
  const auto k = kind();
  return k != FormulaKind::Var && k != FormulaKind::Const && k != FormulaKind::Box;
}

int compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FormulaKind::Var:
    case FormulaKind::Const:
      return a.node_->index == b.node_->index ? 0 : (a.node_->index < b.node_->index ? -1 : 1);
    case FormulaKind::Box:
      if (int c = compare(a.action(), b.action())) return c;
      return compare(a.lhs(), b.lhs());
    default:
      if (int c = compare(a.lhs(), b.lhs())) return c;
      return compare(a.rhs(), b.rhs());
  }
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.node_count() != b.node_count()) return false;
  return compare(a, b) == 0;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

int level(const Action& a) {
  switch (a.kind()) {
    case ActionKind::Choice: return 1;
    case ActionKind::Seq: return 2;
    case ActionKind::Plus: return 3;
    case ActionKind::Atom: return 4;
  }
  return 4;
}

void print(const Action& a, std::string& out) {
  auto child = [&out](const Action& c, bool paren) {
    if (paren) out += '(';
    print(c, out);
    if (paren) out += ')';
  };
  switch (a.kind()) {
    case ActionKind::Atom:
      out += 'a';
      out += std::to_string(a.atom_index());
      return;
    case ActionKind::Plus:
      child(a.left(), level(a.left()) < 3);
      out += '+';
      return;
    case ActionKind::Choice:
    case ActionKind::Seq: {
      const int l = level(a);
      child(a.left(), level(a.left()) < l);
      out += a.kind() == ActionKind::Choice ? " u " : " ; ";
      child(a.right(), level(a.right()) <= l);
      return;
    }
  }
}

int level(const Formula& f) {
  if (match_iff(f)) return 0;
  switch (f.kind()) {
    case FormulaKind::Or: return 1;
    case FormulaKind::And: return 2;
    case FormulaKind::LDiv:
    case FormulaKind::RDiv: return 3;
    case FormulaKind::Fuse: return 4;
    default: return 5;
  }
}

std::string constant_text(Elem c, const FLAlgebra* alg) {
  if (alg != nullptr) {
    if (c == alg->one()) return "#1";
    if (c == alg->zero()) return "#0";
    if (c == alg->bottom()) return "#bot";
    if (c == alg->top()) return "#top";
  }
  return "#@" + std::to_string(c);
}

void print(const Formula& f, const FLAlgebra* alg, std::string& out) {
  auto child = [&](const Formula& c, bool paren) {
    if (paren) out += '(';
    print(c, alg, out);
    if (paren) out += ')';
  };
  switch (f.kind()) {
    case FormulaKind::Var:
      out += 'p';
      out += std::to_string(f.var_index());
      return;
    case FormulaKind::Const:
      out += constant_text(f.const_value(), alg);
      return;
    case FormulaKind::Box:
      out += '[';
      print(f.action(), out);
      out += ']';
      child(f.lhs(), level(f.lhs()) < 5);
      return;
    default: {
      const int l = level(f);
      if (l == 0) {
        const Formula& lhs = f.lhs().lhs();
        child(lhs, level(lhs) == 0);
        out += " <-> ";
        child(f.lhs().rhs(), false);
        return;
      }
      const bool right_assoc = l == 3;
      const int ll = level(f.lhs()), rl = level(f.rhs());
      child(f.lhs(), ll < l || (ll == l && right_assoc));
      switch (f.kind()) {
        case FormulaKind::And: out += " & "; break;
        case FormulaKind::Or: out += " | "; break;
        case FormulaKind::Fuse: out += " * "; break;
        case FormulaKind::LDiv: out += " \\ "; break;
        default: out += " -> "; break;
      }
      child(f.rhs(), rl < l || (rl == l && !right_assoc));
      return;
    }
  }
}

void collect_atoms(const Action& a, std::set<std::size_t>& out) {
  if (a.kind() == ActionKind::Atom) {
    out.insert(a.atom_index());
    return;
  }
  collect_atoms(a.left(), out);
  if (a.kind() != ActionKind::Plus) collect_atoms(a.right(), out);
}

template <class Fn>
void walk(const Formula& f, Fn&& fn) {
  fn(f);
  if (f.kind() == FormulaKind::Box) {
    walk(f.lhs(), fn);
  } else if (f.is_binary()) {
    walk(f.lhs(), fn);
    walk(f.rhs(), fn);
  }
}

}  // namespace

std::string to_string(const Action& a) {
  std::string out;
  print(a, out);
  return out;
}

std::string to_string(const Formula& f, const FLAlgebra* alg) {
  std::string out;
  print(f, alg, out);
  return out;
}

bool match_iff(const Formula& f, Formula* l, Formula* r) {
  if (f.kind() != FormulaKind::And) return false;
  const auto& a = f.lhs();
  const auto& b = f.rhs();
  if (a.kind() != FormulaKind::RDiv || b.kind() != FormulaKind::RDiv) return false;
  if (a.lhs() != b.rhs() || a.rhs() != b.lhs()) return false;
  if (l) *l = a.lhs();
  if (r) *r = a.rhs();
  return true;
}

std::set<std::size_t> atoms_of(const Action& a) {
  std::set<std::size_t> out;
  collect_atoms(a, out);
  return out;
}

std::set<std::size_t> atoms_of(const Formula& f) {
  std::set<std::size_t> out;
  walk(f, [&out](const Formula& g) {
    if (g.kind() == FormulaKind::Box) collect_atoms(g.action(), out);
  });
  return out;
}

std::set<std::size_t> variables_of(const Formula& f) {
  std::set<std::size_t> out;
  walk(f, [&out](const Formula& g) {
    if (g.kind() == FormulaKind::Var) out.insert(g.var_index());
  });
  return out;
}

long max_constant(const Formula& f) {
  long best = -1;
  walk(f, [&best](const Formula& g) {
    if (g.kind() == FormulaKind::Const) best = std::max(best, static_cast<long>(g.const_value()));
  });
  return best;
}

std::vector<Formula> subformulas(const Formula& f) {
  ClosureSet seen;
  walk(f, [&seen](const Formula& g) { seen.insert(g); });
  return seen.items();
}

// ---------------------------------------------------------------------------
// Closure

bool ClosureSet::insert(const Formula& f) {
  if (!index_.insert(f).second) return false;
  items_.push_back(f);
  return true;
}

namespace {

/// Formulas a closed set must contain because it contains f.
std::vector<Formula> required_by(const Formula& f) {
  std::vector<Formula> out;
  if (f.kind() == FormulaKind::Box) {
    const auto& a = f.action();
    const auto& body = f.lhs();
    out.push_back(body);
    switch (a.kind()) {
      case ActionKind::Choice:
        out.push_back(Formula::box(a.left(), body));
        out.push_back(Formula::box(a.right(), body));
        break;
      case ActionKind::Seq:
        out.push_back(Formula::box(a.left(), Formula::box(a.right(), body)));
        break;
      case ActionKind::Plus:
        out.push_back(Formula::box(a.left(), f));
        out.push_back(Formula::box(a.left(), body));
        break;
      case ActionKind::Atom:
        break;
    }
  } else if (f.is_binary()) {
    out.push_back(f.lhs());
    out.push_back(f.rhs());
  }
  return out;
}

}  // namespace

ClosureSet closure_of(const std::vector<Formula>& seed) {
  ClosureSet set;
  std::deque<Formula> work;
  for (const auto& f : seed) {
    if (set.insert(f)) work.push_back(f);
  }
  while (!work.empty()) {
    Formula f = work.front();
    work.pop_front();
    for (auto& g : required_by(f)) {
      if (set.insert(g)) work.push_back(std::move(g));
    }
  }
  return set;
}

bool is_closed(const ClosureSet& set) {
  for (const auto& f : set) {
    for (const auto& g : required_by(f)) {
      if (!set.contains(g)) return false;
    }
  }
  return true;
}

}  // namespace flpdl
