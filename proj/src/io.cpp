#include "flpdl/io.hpp"

#include <fstream>

#include "flpdl/parser.hpp"

namespace flpdl {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Programmatically built json stores small literals as signed integers.
bool is_index(const json& j) {
  return j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0);
}

std::size_t parse_count(std::string_view digits, std::string_view context) {
  if (digits.empty() || digits.size() > 4) throw InputError("bad number in '" + std::string(context) + "'");
  std::size_t v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') throw InputError("bad number in '" + std::string(context) + "'");
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  return v;
}

std::vector<Elem> table_from_json(const json& j, const char* field, std::size_t n) {
  if (!j.contains(field)) throw InputError(std::string("algebra is missing '") + field + "'");
  const json& t = j.at(field);
  if (!t.is_array()) throw InputError(std::string("'") + field + "' must be an array");
  std::vector<Elem> out;
  auto push = [&](const json& v) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= static_cast<long long>(n)) {
      throw InputError(std::string("'") + field + "' holds an entry that is not an element index");
    }
    out.push_back(static_cast<Elem>(v.get<long long>()));
  };
  if (t.size() == n && n > 0 && t[0].is_array()) {
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != n) throw InputError(std::string("'") + field + "' must be n x n");
      for (const auto& v : row) push(v);
    }
  } else {
    if (t.size() != n * n) throw InputError(std::string("'") + field + "' must have n*n entries");
    for (const auto& v : t) push(v);
  }
  return out;
}

std::vector<std::vector<Elem>> nested(const std::vector<Elem>& flat, std::size_t n) {
  std::vector<std::vector<Elem>> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i].assign(flat.begin() + static_cast<long>(i * n), flat.begin() + static_cast<long>((i + 1) * n));
  return rows;
}

}  // namespace

AlgebraPtr parse_builtin(std::string_view uri) {
  std::string_view s = trim(uri);
  if (s.substr(0, 8) == "builtin:") s.remove_prefix(8);
  if (s == "bool2") return bool2();
  if (s.substr(0, 5) == "cost:") return cost_chain(parse_count(s.substr(5), uri));
  if (s.substr(0, 8) == "product(" && s.back() == ')') {
    std::string_view inner = s.substr(8, s.size() - 9);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) return product(*parse_builtin(inner.substr(0, i)), *parse_builtin(inner.substr(i + 1)));
    }
  }
  throw InputError("unknown builtin algebra '" + std::string(uri) + "'");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

AlgebraPtr resolve_algebra(const std::string& ref) {
  const auto s = trim(ref);
  if (s.substr(0, 8) == "builtin:") return parse_builtin(s);
  if (!s.empty() && s.front() == '{') {
    try {
      return algebra_from_json(json::parse(s));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("inline algebra: ") + e.what());
    }
  }
  const std::filesystem::path path{std::string(s)};
  return algebra_from_json(read_json_file(path), path.parent_path());
}

AlgebraPtr algebra_from_json(const json& j, const std::filesystem::path& base) {
  if (j.is_string()) {
    const auto ref = j.get<std::string>();
    if (ref.rfind("builtin:", 0) == 0 || base.empty() || std::filesystem::path(ref).is_absolute()) {
      return resolve_algebra(ref);
    }
    return resolve_algebra((base / ref).string());
  }
  if (!j.is_object()) throw InputError("algebra must be an object or a string reference");
  if (!j.contains("size") || !is_index(j.at("size"))) throw InputError("algebra needs a non-negative 'size'");
  AlgebraSpec spec;
  spec.size = j.at("size").get<std::size_t>();
  if (spec.size == 0 || spec.size > 4096) throw InputError("algebra size must be between 1 and 4096");
  if (j.contains("names")) {
    if (!j.at("names").is_array()) throw InputError("'names' must be an array of strings");
    for (const auto& n : j.at("names")) {
      if (!n.is_string()) throw InputError("'names' must be an array of strings");
      spec.names.push_back(n.get<std::string>());
    }
  }
  spec.meet = table_from_json(j, "meet", spec.size);
  spec.join = table_from_json(j, "join", spec.size);
  spec.fusion = table_from_json(j, "fusion", spec.size);
  for (const char* field : {"one", "zero"}) {
    if (!j.contains(field) || !is_index(j.at(field)) || j.at(field).get<std::size_t>() >= spec.size) {
      throw InputError(std::string("algebra needs an element index '") + field + "'");
    }
  }
  spec.one = j.at("one").get<Elem>();
  spec.zero = j.at("zero").get<Elem>();
  return FLAlgebra::build(std::move(spec));
}

json algebra_to_json(const FLAlgebra& alg) {
  const auto& s = alg.spec();
  json j;
  j["size"] = s.size;
  std::vector<std::string> names;
  for (std::size_t e = 0; e < s.size; ++e) names.push_back(alg.name(static_cast<Elem>(e)));
  j["names"] = names;
  j["meet"] = nested(s.meet, s.size);
  j["join"] = nested(s.join, s.size);
  j["fusion"] = nested(s.fusion, s.size);
  j["one"] = s.one;
  j["zero"] = s.zero;
  return j;
}

Elem element_from_json(const json& j, const FLAlgebra& alg) {
  if (is_index(j) && j.get<std::size_t>() < alg.size()) return j.get<Elem>();
  if (j.is_string()) {
    if (auto e = alg.find_name(j.get<std::string>())) return *e;
  }
  throw InputError("'" + j.dump() + "' is not an element of the algebra");
}

Model model_from_json(const json& j, const AlgebraPtr& fallback, const std::filesystem::path& base) {
  if (!j.is_object()) throw InputError("model must be a JSON object");
  AlgebraPtr alg = fallback;
  if (j.contains("algebra")) {
    alg = algebra_from_json(j.at("algebra"), base);
    if (fallback && !(*fallback == *alg)) throw InputError("model algebra differs from the one given on the command line");
  }
  if (!alg) throw InputError("model names no algebra");

  if (!j.contains("states")) throw InputError("model is missing 'states'");
  const json& st = j.at("states");
  std::vector<std::string> names;
  std::size_t n = 0;
  if (is_index(st)) {
    n = st.get<std::size_t>();
  } else if (st.is_array()) {
    for (const auto& s : st) {
      if (!s.is_string()) throw InputError("state names must be strings");
      names.push_back(s.get<std::string>());
    }
    n = names.size();
  } else {
    throw InputError("'states' must be a count or an array of names");
  }
  if (n == 0) throw InputError("a model needs at least one state");

  std::map<std::size_t, XRelation> atomic;
  if (j.contains("relations")) {
    if (!j.at("relations").is_object()) throw InputError("'relations' must map action names to matrices");
    for (const auto& [key, m] : j.at("relations").items()) {
      auto idx = action_atom_index(key);
      if (!idx) throw InputError("'" + key + "' is not an atomic action name");
      if (!m.is_array()) throw InputError("relation '" + key + "' must be a matrix");
      std::vector<Elem> values;
      if (m.size() == n && m[0].is_array()) {
        for (const auto& row : m) {
          if (!row.is_array() || row.size() != n) throw InputError("relation '" + key + "' must be n x n");
          for (const auto& v : row) values.push_back(element_from_json(v, *alg));
        }
      } else {
        if (m.size() != n * n) throw InputError("relation '" + key + "' must be n x n");
        for (const auto& v : m) values.push_back(element_from_json(v, *alg));
      }
      if (!atomic.emplace(*idx, XRelation(alg, n, std::move(values))).second) {
        throw InputError("relation for '" + key + "' given twice");
      }
    }
  }
  Valuation val;
  if (j.contains("valuation")) {
    if (!j.at("valuation").is_object()) throw InputError("'valuation' must map variable names to arrays");
    for (const auto& [key, row] : j.at("valuation").items()) {
      auto idx = variable_index(key);
      if (!idx) throw InputError("'" + key + "' is not a variable name");
      if (!row.is_array() || row.size() != n) throw InputError("valuation of '" + key + "' needs one entry per state");
      std::vector<Elem> values;
      for (const auto& v : row) values.push_back(element_from_json(v, *alg));
      if (!val.emplace(*idx, std::move(values)).second) throw InputError("valuation for '" + key + "' given twice");
    }
  }
  return Model(Frame(alg, n, std::move(atomic)), std::move(val), std::move(names));
}

Model load_model(const std::filesystem::path& path, const AlgebraPtr& fallback) {
  return model_from_json(read_json_file(path), fallback, path.parent_path());
}

json model_to_json(const Model& model) {
  json j;
  j["algebra"] = algebra_to_json(*model.algebra());
  if (model.state_names().empty()) {
    j["states"] = model.size();
  } else {
    j["states"] = model.state_names();
  }
  json rels = json::object();
  for (const auto& [m, r] : model.frame().atomic_relations()) rels["a" + std::to_string(m)] = nested(r.values(), r.size());
  j["relations"] = rels;
  json val = json::object();
  for (const auto& [p, row] : model.valuation()) val["p" + std::to_string(p)] = row;
  j["valuation"] = val;
  return j;
}

ProofScript proof_from_json(const json& j, const FLAlgebra& alg) {
  const json* lines = &j;
  if (j.is_object()) {
    if (!j.contains("lines")) throw InputError("proof object needs 'lines'");
    lines = &j.at("lines");
  }
  if (!lines->is_array()) throw InputError("proof must be an array of lines");
  ProofScript script;
  for (std::size_t i = 0; i < lines->size(); ++i) {
    const json& l = (*lines)[i];
    const std::string where = "proof line " + std::to_string(i) + ": ";
    if (!l.is_object() || !l.contains("formula") || !l.at("formula").is_string() || !l.contains("by") ||
        !l.at("by").is_object()) {
      throw InputError(where + "expected {formula: <text>, by: {...}}");
    }
    Formula f = [&] {
      try {
        return parse_formula(l.at("formula").get<std::string>(), alg);
      } catch (const InputError& e) {
        throw InputError(where + e.what());
      }
    }();
    const json& by = l.at("by");
    if (!by.contains("kind") || !by.at("kind").is_string()) throw InputError(where + "justification needs a 'kind'");
    auto kind = parse_rule_kind(by.at("kind").get<std::string>());
    if (!kind) throw InputError(where + "unknown justification kind '" + by.at("kind").get<std::string>() + "'");
    Justification just{*kind, {}, std::nullopt};
    if (by.contains("refs")) {
      if (!by.at("refs").is_array()) throw InputError(where + "'refs' must be an array of line indices");
      for (const auto& r : by.at("refs")) {
        if (!is_index(r)) throw InputError(where + "'refs' must hold non-negative integers");
        just.refs.push_back(r.get<std::size_t>());
      }
    }
    if (by.contains("axiom")) {
      if (!by.at("axiom").is_string()) throw InputError(where + "'axiom' must be a string");
      just.axiom = parse_axiom_name(by.at("axiom").get<std::string>());
      if (!just.axiom) throw InputError(where + "unknown axiom '" + by.at("axiom").get<std::string>() + "'");
    }
    script.push_back(ProofLine{std::move(f), std::move(just)});
  }
  return script;
}

json proof_to_json(const ProofScript& script, const FLAlgebra& alg) {
  json out = json::array();
  for (const auto& line : script) {
    json by;
    by["kind"] = to_string(line.by.kind);
    if (line.by.kind != RuleKind::Axiom || !line.by.refs.empty()) by["refs"] = line.by.refs;
    if (line.by.axiom) by["axiom"] = to_string(*line.by.axiom);
    out.push_back({{"formula", to_string(line.formula, &alg)}, {"by", by}});
  }
  return out;
}

json verdict_to_json(const ProofVerdict& v, const FLAlgebra& alg) {
  json j;
  j["accepted"] = v.accepted;
  j["failing_line"] = v.failing_line ? json(*v.failing_line) : json(nullptr);
  j["reason"] = v.reason ? json(to_string(*v.reason)) : json(nullptr);
  j["message"] = v.message;
  j["warnings"] = v.warnings;
  j["theorem"] = v.theorem ? json(to_string(*v.theorem, &alg)) : json(nullptr);
  return j;
}

json outcome_to_json(const DecisionOutcome& outcome, const Formula& phi) {
  json j;
  j["frames_checked"] = outcome.frames_checked;
  j["models_checked"] = outcome.models_checked;
  if (const auto* c = std::get_if<Countermodel>(&outcome.result)) {
    const auto& alg = *c->model.algebra();
    j["result"] = "countermodel";
    j["formula"] = to_string(phi, &alg);
    j["model"] = model_to_json(c->model);
    j["witness"] = c->witness;
    j["value"] = c->value;
    j["value_name"] = alg.name(c->value);
  } else if (const auto* u = std::get_if<NoCountermodelUpTo>(&outcome.result)) {
    j["result"] = "no_countermodel_up_to";
    j["states"] = u->states;
  } else {
    j["result"] = "valid_by_exhaustion";
    j["bound"] = std::get<ValidByExhaustion>(outcome.result).bound.str();
  }
  return j;
}

json frontier_to_json(const SearchFrontier& f) {
  return {{"states", f.states},
          {"frames_at_size", f.frames_at_size},
          {"frames_total", f.frames_total},
          {"models_total", f.models_total}};
}

json partition_to_json(const Partition& p) {
  return {{"class_count", p.class_count()}, {"class_of", p.class_of}, {"representative", p.representative}};
}

json property_report_to_json(const PropertyReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"number", c.number},
                      {"statement", c.statement},
                      {"passed", c.passed},
                      {"counterexample", c.counterexample}});
  }
  return {{"all_passed", report.all_passed()}, {"checks", checks}};
}

}  // namespace flpdl
