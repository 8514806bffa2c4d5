#include "flpdl/filtration.hpp"

#include <map>

namespace flpdl {

Partition phi_partition(const Model& model, const ClosureSet& phi) {
  Evaluator ev(model);
  std::vector<const std::vector<Elem>*> columns;
  columns.reserve(phi.size());
  for (const auto& f : phi) columns.push_back(&ev.values(f));

  Partition p;
  p.class_of.resize(model.size());
  std::map<std::vector<Elem>, std::size_t> ids;
  for (State s = 0; s < model.size(); ++s) {
    std::vector<Elem> key;
    key.reserve(columns.size());
    for (const auto* col : columns) key.push_back((*col)[s]);
    auto [it, fresh] = ids.emplace(std::move(key), p.representative.size());
    if (fresh) p.representative.push_back(s);
    p.class_of[s] = it->second;
  }
  return p;
}

Filtration filtrate(const Model& model, const ClosureSet& phi) {
  if (!is_closed(phi)) throw NotClosed("formula set is not closed");
  Partition part = phi_partition(model, phi);
  const auto& alg = model.algebra();
  const auto& A = *alg;
  const std::size_t k = part.class_count();

  std::map<std::size_t, XRelation> atomic;
  for (const auto& [m, r] : model.frame().atomic_relations()) {
    std::vector<Elem> v(k * k, A.bottom());
    for (State u = 0; u < model.size(); ++u) {
      for (State w = 0; w < model.size(); ++w) {
        auto& cell = v[part.class_of[u] * k + part.class_of[w]];
        cell = A.join(cell, r(u, w));
      }
    }
    atomic.emplace(m, XRelation(alg, k, std::move(v)));
  }

  Valuation val;
  for (const auto& [p, row] : model.valuation()) val[p] = std::vector<Elem>(k, A.zero());
  for (const auto& f : phi) {
    if (f.kind() != FormulaKind::Var) continue;
    std::vector<Elem> row(k);
    for (std::size_t c = 0; c < k; ++c) row[c] = model.value_of(f.var_index(), part.representative[c]);
    val[f.var_index()] = std::move(row);
  }

  std::vector<std::string> names;
  for (std::size_t c = 0; c < k; ++c) names.push_back("[" + model.state_name(part.representative[c]) + "]");
  Model out(Frame(alg, k, std::move(atomic)), std::move(val), std::move(names));
  return {std::move(out), std::move(part)};
}

}  // namespace flpdl
