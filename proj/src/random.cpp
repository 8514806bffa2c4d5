#include "flpdl/random.hpp"

namespace flpdl {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

Action random_action(Rng& rng, std::size_t depth, std::size_t atoms) {
  if (depth == 0 || pick(rng, 3) == 0) return Action::atom(pick(rng, atoms));
  switch (pick(rng, 3)) {
    case 0: return Action::choice(random_action(rng, depth - 1, atoms), random_action(rng, depth - 1, atoms));
    case 1: return Action::seq(random_action(rng, depth - 1, atoms), random_action(rng, depth - 1, atoms));
    default: return Action::plus(random_action(rng, depth - 1, atoms));
  }
}

Formula random_formula(Rng& rng, const FLAlgebra& alg, const FormulaShape& shape) {
  if (shape.depth == 0 || pick(rng, 4) == 0) {
    if (shape.constants && pick(rng, 4) == 0) return Formula::constant(static_cast<Elem>(pick(rng, alg.size())));
    return Formula::var(pick(rng, shape.vars));
  }
  FormulaShape sub = shape;
  --sub.depth;
  switch (pick(rng, 7)) {
    case 0: return Formula::conj(random_formula(rng, alg, sub), random_formula(rng, alg, sub));
    case 1: return Formula::disj(random_formula(rng, alg, sub), random_formula(rng, alg, sub));
    case 2: return Formula::fuse(random_formula(rng, alg, sub), random_formula(rng, alg, sub));
    case 3: return Formula::ldiv(random_formula(rng, alg, sub), random_formula(rng, alg, sub));
    case 4: return Formula::implies(random_formula(rng, alg, sub), random_formula(rng, alg, sub));
    default: {
      Action a = random_action(rng, shape.action_depth, shape.atoms);
      return Formula::box(std::move(a), random_formula(rng, alg, sub));
    }
  }
}

Model random_model(Rng& rng, const AlgebraPtr& alg, std::size_t states, std::size_t atoms, std::size_t vars) {
  std::map<std::size_t, XRelation> atomic;
  for (std::size_t m = 0; m < atoms; ++m) {
    std::vector<Elem> values(states * states);
    for (auto& v : values) v = static_cast<Elem>(pick(rng, alg->size()));
    atomic.emplace(m, XRelation(alg, states, std::move(values)));
  }
  Valuation val;
  for (std::size_t p = 0; p < vars; ++p) {
    std::vector<Elem> row(states);
    for (auto& v : row) v = static_cast<Elem>(pick(rng, alg->size()));
    val.emplace(p, std::move(row));
  }
  return Model(Frame(alg, states, std::move(atomic)), std::move(val));
}

}  // namespace flpdl
