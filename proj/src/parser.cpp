#include "flpdl/parser.hpp"

#include <cctype>
#include <memory>
#include <string>

namespace flpdl {

namespace {

/// Action as written, before star elimination.
struct Surface {
  enum class Kind { Atom, Choice, Seq, Plus, Star } kind;
  std::size_t index = 0;
  std::size_t pos = 0;
  std::shared_ptr<const Surface> l, r;
  bool has_star = false;
};
using SurfacePtr = std::shared_ptr<const Surface>;

SurfacePtr make_surface(Surface::Kind k, std::size_t pos, SurfacePtr l, SurfacePtr r = nullptr,
                        std::size_t index = 0) {
  auto s = std::make_shared<Surface>();
  s->kind = k;
  s->index = index;
  s->pos = pos;
  s->has_star = k == Surface::Kind::Star || (l && l->has_star) || (r && r->has_star);
  s->l = std::move(l);
  s->r = std::move(r);
  return s;
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

std::optional<std::size_t> indexed_name(std::string_view name, char prefix, std::string_view aliases) {
  if (name.empty()) return std::nullopt;
  if (name.size() == 1) {
    auto at = aliases.find(name[0]);
    if (at != std::string_view::npos) return at;
    return std::nullopt;
  }
  if (name[0] != prefix) return std::nullopt;
  std::size_t value = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!is_digit(name[i])) return std::nullopt;
    if (value > 100000000) return std::nullopt;
    value = value * 10 + static_cast<std::size_t>(name[i] - '0');
  }
  return value;
}

class Parser {
 public:
  Parser(std::string_view src, const FLAlgebra* alg, ParseInfo* info) : src_(src), alg_(alg), info_(info) {}

  Formula formula() {
    Formula f = iff();
    expect_end();
    return f;
  }

  Action action() {
    SurfacePtr a = choice();
    expect_end();
    if (a->has_star) throw SyntaxError("Kleene star is only available inside a box or diamond", a->pos);
    return convert(*a);
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at(std::string_view tok) {
    skip_ws();
    return src_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!at(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw SyntaxError("expected '" + std::string(tok) + "'", pos_);
  }
  void expect_end() {
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
  }
  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ < src_.size() && is_alpha(src_[pos_])) {
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  // Formulas ---------------------------------------------------------------

  Formula iff() {
    Formula l = disj();
    if (accept("<->")) return Formula::iff(l, iff());
    return l;
  }

  Formula disj() {
    Formula l = conj();
    while (accept("|")) l = Formula::disj(l, conj());
    return l;
  }

  Formula conj() {
    Formula l = division();
    while (accept("&")) l = Formula::conj(l, division());
    return l;
  }

  Formula division() {
    Formula l = fusion();
    if (accept("->")) return Formula::implies(l, division());
    if (accept("\\")) return Formula::ldiv(l, division());
    return l;
  }

  Formula fusion() {
    Formula l = unary();
    while (accept("*")) l = Formula::fuse(l, unary());
    return l;
  }

  Formula unary() {
    if (accept("!")) return Formula::neg(unary(), *alg_);
    if (accept("[")) {
      SurfacePtr a = choice();
      expect("]");
      return box(*a, unary());
    }
    if (at("<") && !at("<->")) {
      ++pos_;
      SurfacePtr a = choice();
      expect(">");
      Formula body = unary();
      return Formula::neg(box(*a, Formula::neg(body, *alg_)), *alg_);
    }
    return primary();
  }

  Formula primary() {
    if (accept("(")) {
      Formula f = iff();
      expect(")");
      return f;
    }
    skip_ws();
    const std::size_t start = pos_;
    if (accept("#")) return constant(start);
    std::string id = identifier();
    if (id.empty()) {
      if (pos_ >= src_.size()) throw SyntaxError("unexpected end of input", pos_);
      throw SyntaxError("unexpected '" + std::string(1, src_[pos_]) + "'", pos_);
    }
    auto v = variable_index(id);
    if (!v) throw SyntaxError("unknown propositional variable '" + id + "'", start);
    return Formula::var(*v);
  }

  Formula constant(std::size_t start) {
    std::string tok;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' || src_[pos_] == '@')) {
      tok += src_[pos_++];
    }
    if (tok.empty()) throw SyntaxError("empty constant", start);
    const std::size_t n = alg_->size();
    auto element = [&](const std::string& digits) -> Elem {
      if (digits.empty() || digits.size() > 6) throw UnknownConstant("unknown constant #" + tok);
      for (char c : digits) {
        if (!is_digit(c)) throw UnknownConstant("unknown constant #" + tok);
      }
      const auto k = std::stoul(digits);
      if (k >= n) {
        throw UnknownConstant("constant #" + tok + " is not an element of a " + std::to_string(n) +
                              "-element algebra");
      }
      return static_cast<Elem>(k);
    };
    if (tok == "bot") return Formula::constant(alg_->bottom());
    if (tok == "top") return Formula::constant(alg_->top());
    if (tok == "0") return Formula::constant(alg_->zero());
    if (tok == "1") return Formula::constant(alg_->one());
    if (tok[0] == '@') return Formula::constant(element(tok.substr(1)));
    if (is_digit(tok[0])) return Formula::constant(element(tok));
    if (auto e = alg_->find_name(tok)) return Formula::constant(*e);
    throw UnknownConstant("unknown constant #" + tok);
  }

  /// [a]phi with star sugar expanded: [a*]phi := [a+]phi & phi, pushed
  /// through choice and composition.
  Formula box(const Surface& a, const Formula& body) {
    if (!a.has_star) return Formula::box(convert(a), body);
    if (info_) info_->used_star = true;
    switch (a.kind) {
      case Surface::Kind::Seq:
        return box(*a.l, box(*a.r, body));
      case Surface::Kind::Choice:
        return Formula::conj(box(*a.l, body), box(*a.r, body));
      case Surface::Kind::Star:
        if (a.l->has_star) throw SyntaxError("nested Kleene star is not expressible", a.pos);
        return Formula::conj(Formula::box(Action::plus(convert(*a.l)), body), body);
      default:
        throw SyntaxError("Kleene star under '+' is not expressible", a.pos);
    }
  }

  // Actions ----------------------------------------------------------------

  SurfacePtr choice() {
    SurfacePtr l = seq();
    while (true) {
      skip_ws();
      const std::size_t p = pos_;
      if (!accept("u")) break;
      l = make_surface(Surface::Kind::Choice, p, l, seq());
    }
    return l;
  }

  SurfacePtr seq() {
    SurfacePtr l = postfix();
    while (true) {
      skip_ws();
      const std::size_t p = pos_;
      if (!accept(";")) break;
      l = make_surface(Surface::Kind::Seq, p, l, postfix());
    }
    return l;
  }

  SurfacePtr postfix() {
    SurfacePtr a = atom();
    while (true) {
      skip_ws();
      const std::size_t p = pos_;
      if (accept("+")) a = make_surface(Surface::Kind::Plus, p, a);
      else if (accept("*")) a = make_surface(Surface::Kind::Star, p, a);
      else break;
    }
    return a;
  }

  SurfacePtr atom() {
    if (accept("(")) {
      SurfacePtr a = choice();
      expect(")");
      return a;
    }
    skip_ws();
    const std::size_t start = pos_;
    std::string id = identifier();
    auto idx = action_atom_index(id);
    if (!idx) {
      if (id.empty()) throw SyntaxError("expected an action", start);
      throw SyntaxError("unknown atomic action '" + id + "'", start);
    }
    return make_surface(Surface::Kind::Atom, start, nullptr, nullptr, *idx);
  }

  static Action convert(const Surface& a) {
    switch (a.kind) {
      case Surface::Kind::Atom: return Action::atom(a.index);
      case Surface::Kind::Choice: return Action::choice(convert(*a.l), convert(*a.r));
      case Surface::Kind::Seq: return Action::seq(convert(*a.l), convert(*a.r));
      case Surface::Kind::Plus: return Action::plus(convert(*a.l));
      case Surface::Kind::Star: break;
    }
    throw SyntaxError("Kleene star is only available inside a box or diamond", a.pos);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  const FLAlgebra* alg_;
  ParseInfo* info_;
};

}  // namespace

Formula parse_formula(std::string_view text, const FLAlgebra& alg, ParseInfo* info) {
  return Parser(text, &alg, info).formula();
}

Action parse_action(std::string_view text) { return Parser(text, nullptr, nullptr).action(); }

std::optional<std::size_t> action_atom_index(std::string_view name) { return indexed_name(name, 'a', "abc"); }

std::optional<std::size_t> variable_index(std::string_view name) { return indexed_name(name, 'p', "pqr"); }

}  // namespace flpdl
