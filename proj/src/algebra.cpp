#include "flpdl/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace flpdl {

namespace {

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (auto x : xs) {
    if (!first) os << ", ";
    os << x;
    first = false;
  }
  os << ')';
  return os.str();
}

[[noreturn]] void fail(AlgebraError::Kind kind, const std::string& what) {
  throw AlgebraError(kind, std::string(to_string(kind)) + ": " + what);
}

void check_table(const std::vector<Elem>& t, std::size_t n, const char* label) {
  if (t.size() != n * n) {
    fail(AlgebraError::Kind::InvalidSpec,
         std::string(label) + " table has " + std::to_string(t.size()) + " entries, expected " +
             std::to_string(n * n));
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] >= n) {
      fail(AlgebraError::Kind::InvalidSpec, std::string(label) + " entry " +
                                                tuple_str({i / n, i % n}) + " = " +
                                                std::to_string(t[i]) + " is out of range");
    }
  }
}

}  // namespace

const char* to_string(AlgebraError::Kind kind) {
  switch (kind) {
    case AlgebraError::Kind::InvalidSpec: return "InvalidSpec";
    case AlgebraError::Kind::NotALattice: return "NotALattice";
    case AlgebraError::Kind::NotAMonoid: return "NotAMonoid";
    case AlgebraError::Kind::NotResiduated: return "NotResiduated";
  }
  return "?";
}

std::shared_ptr<const FLAlgebra> FLAlgebra::build(AlgebraSpec spec) {
  using K = AlgebraError::Kind;
  const std::size_t n = spec.size;
  if (n == 0) fail(K::InvalidSpec, "carrier must be non-empty");
  if (n > 0xFFFF) fail(K::InvalidSpec, "carrier too large");
  if (!spec.names.empty() && spec.names.size() != n) {
    fail(K::InvalidSpec, "names list has " + std::to_string(spec.names.size()) + " entries");
  }
  check_table(spec.meet, n, "meet");
  check_table(spec.join, n, "join");
  check_table(spec.fusion, n, "fusion");
  if (spec.one >= n) fail(K::InvalidSpec, "one is out of range");
  if (spec.zero >= n) fail(K::InvalidSpec, "zero is out of range");

  auto at = [n](const std::vector<Elem>& t, std::size_t a, std::size_t b) { return t[a * n + b]; };
  const auto& M = spec.meet;
  const auto& J = spec.join;
  const auto& F = spec.fusion;

  // Lattice laws.
  for (std::size_t a = 0; a < n; ++a) {
    if (at(M, a, a) != a) fail(K::NotALattice, "meet not idempotent at " + tuple_str({a}));
    if (at(J, a, a) != a) fail(K::NotALattice, "join not idempotent at " + tuple_str({a}));
    for (std::size_t b = 0; b < n; ++b) {
      if (at(M, a, b) != at(M, b, a)) fail(K::NotALattice, "meet not commutative at " + tuple_str({a, b}));
      if (at(J, a, b) != at(J, b, a)) fail(K::NotALattice, "join not commutative at " + tuple_str({a, b}));
      if (at(M, a, at(J, a, b)) != a || at(J, a, at(M, a, b)) != a) {
        fail(K::NotALattice, "absorption fails at " + tuple_str({a, b}));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(M, at(M, a, b), c) != at(M, a, at(M, b, c))) {
          fail(K::NotALattice, "meet not associative at " + tuple_str({a, b, c}));
        }
        if (at(J, at(J, a, b), c) != at(J, a, at(J, b, c))) {
          fail(K::NotALattice, "join not associative at " + tuple_str({a, b, c}));
        }
      }
    }
  }

  // Monoid laws.
  for (std::size_t a = 0; a < n; ++a) {
    if (at(F, spec.one, a) != a || at(F, a, spec.one) != a) {
      fail(K::NotAMonoid, "one is not an identity at " + tuple_str({a}));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(F, at(F, a, b), c) != at(F, a, at(F, b, c))) {
          fail(K::NotAMonoid, "fusion not associative at " + tuple_str({a, b, c}));
        }
      }
    }
  }

  std::shared_ptr<FLAlgebra> alg(new FLAlgebra());
  alg->n_ = n;
  alg->spec_ = std::move(spec);
  auto& self = *alg;

  Elem bottom = 0;
  Elem top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bottom = self.meet(bottom, static_cast<Elem>(a));
    top = self.join(top, static_cast<Elem>(a));
  }
  self.bottom_ = bottom;
  self.top_ = top;

  // a\c = join{b : a.b <= c}, c/a = join{b : b.a <= c}; the empty join is bottom.
  self.left_residual_.assign(n * n, bottom);
  self.right_residual_.assign(n * n, bottom);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) {
      Elem l = bottom;
      Elem r = bottom;
      for (std::size_t b = 0; b < n; ++b) {
        const auto eb = static_cast<Elem>(b);
        if (self.leq(self.fuse(static_cast<Elem>(a), eb), static_cast<Elem>(c))) l = self.join(l, eb);
        if (self.leq(self.fuse(eb, static_cast<Elem>(a)), static_cast<Elem>(c))) r = self.join(r, eb);
      }
      self.left_residual_[a * n + c] = l;
      self.right_residual_[c * n + a] = r;
    }
  }

  // The joins above are only adjoints if fusion really is residuated.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto ea = static_cast<Elem>(a), eb = static_cast<Elem>(b), ec = static_cast<Elem>(c);
        const bool lhs = self.leq(self.fuse(ea, eb), ec);
        if (lhs != self.leq(eb, self.ldiv(ea, ec)) || lhs != self.leq(ea, self.rdiv(ec, eb))) {
          fail(K::NotResiduated, "residuation law fails at " + tuple_str({a, b, c}));
        }
      }
    }
  }
  return alg;
}

std::string FLAlgebra::name(Elem e) const {
  if (!spec_.names.empty()) return spec_.names.at(e);
  return std::to_string(e);
}

std::optional<Elem> FLAlgebra::find_name(const std::string& name) const {
  for (std::size_t i = 0; i < spec_.names.size(); ++i) {
    if (spec_.names[i] == name) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

bool FLAlgebra::operator==(const FLAlgebra& other) const {
  return n_ == other.n_ && spec_.meet == other.spec_.meet && spec_.join == other.spec_.join &&
         spec_.fusion == other.spec_.fusion && spec_.one == other.spec_.one &&
         spec_.zero == other.spec_.zero;
}

bool is_commutative(const FLAlgebra& alg) {
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < a; ++b) {
      if (alg.fuse(a, b) != alg.fuse(b, a)) return false;
    }
  }
  return true;
}

bool is_integral(const FLAlgebra& alg) {
  const auto n = static_cast<Elem>(alg.size());
  for (Elem a = 0; a < n; ++a) {
    if (!alg.leq(a, alg.one())) return false;
  }
  return true;
}

bool PropertyReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

PropertyReport check_algebra_properties(const FLAlgebra& A) {
  const auto n = static_cast<Elem>(A.size());
  PropertyReport report;
  report.checks.reserve(8);  // references below must stay valid
  auto add = [&](int number, std::string statement) -> PropertyCheck& {
    report.checks.push_back({number, std::move(statement), true, {}});
    return report.checks.back();
  };
  auto record = [](PropertyCheck& c, std::vector<Elem> tuple) {
    if (c.passed) {
      c.passed = false;
      c.counterexample = std::move(tuple);
    }
  };

  auto& p1 = add(1, "a <= b iff 1 <= a => b");
  auto& p2 = add(2, "a <= b, c <= d imply b => c <= a => d, b\\c <= a\\d, ac <= bd");
  auto& p3 = add(3, "(a v b)c = ac v bc and c(a v b) = ca v cb");
  auto& p4 = add(4, "a => (b ^ c) = (a => b) ^ (a => c)");
  auto& p5 = add(5, "(a v b) => c = (a => c) ^ (b => c)");
  auto& p6 = add(6, "a => (b => c) = ab => c");
  auto& p7 = add(7, "(a => b)(b => c) <= a => c");
  auto& p8 = add(8, "1 => a = a");

  for (Elem a = 0; a < n; ++a) {
    if (A.implies(A.one(), a) != a) record(p8, {a});
    for (Elem b = 0; b < n; ++b) {
      if (A.leq(a, b) != A.leq(A.one(), A.implies(a, b))) record(p1, {a, b});
      for (Elem c = 0; c < n; ++c) {
        const Elem ab = A.join(a, b);
        if (A.fuse(ab, c) != A.join(A.fuse(a, c), A.fuse(b, c)) ||
            A.fuse(c, ab) != A.join(A.fuse(c, a), A.fuse(c, b))) {
          record(p3, {a, b, c});
        }
        if (A.implies(a, A.meet(b, c)) != A.meet(A.implies(a, b), A.implies(a, c))) record(p4, {a, b, c});
        if (A.implies(ab, c) != A.meet(A.implies(a, c), A.implies(b, c))) record(p5, {a, b, c});
        if (A.implies(a, A.implies(b, c)) != A.implies(A.fuse(a, b), c)) record(p6, {a, b, c});
        if (!A.leq(A.fuse(A.implies(a, b), A.implies(b, c)), A.implies(a, c))) record(p7, {a, b, c});
        if (!A.leq(a, b)) continue;
        for (Elem d = 0; d < n; ++d) {
          if (!A.leq(c, d)) continue;
          if (!A.leq(A.implies(b, c), A.implies(a, d)) || !A.leq(A.ldiv(b, c), A.ldiv(a, d)) ||
              !A.leq(A.fuse(a, c), A.fuse(b, d))) {
            record(p2, {a, b, c, d});
          }
        }
      }
    }
  }
  return report;
}

AlgebraPtr product(const FLAlgebra& A, const FLAlgebra& B) {
  const std::size_t na = A.size(), nb = B.size(), n = na * nb;
  AlgebraSpec s;
  s.size = n;
  s.meet.resize(n * n);
  s.join.resize(n * n);
  s.fusion.resize(n * n);
  auto pack = [nb](std::size_t a, std::size_t b) { return static_cast<Elem>(a * nb + b); };
  for (std::size_t x = 0; x < n; ++x) {
    const auto xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    s.names.push_back("(" + A.name(xa) + "," + B.name(xb) + ")");
    for (std::size_t y = 0; y < n; ++y) {
      const auto ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      s.meet[x * n + y] = pack(A.meet(xa, ya), B.meet(xb, yb));
      s.join[x * n + y] = pack(A.join(xa, ya), B.join(xb, yb));
      s.fusion[x * n + y] = pack(A.fuse(xa, ya), B.fuse(xb, yb));
    }
  }
  s.one = pack(A.one(), B.one());
  s.zero = pack(A.zero(), B.zero());
  return FLAlgebra::build(std::move(s));
}

AlgebraPtr bool2() {
  AlgebraSpec s;
  s.size = 2;
  s.names = {"0", "1"};
  s.meet = {0, 0, 0, 1};
  s.join = {0, 1, 1, 1};
  s.fusion = s.meet;
  s.one = 1;
  s.zero = 0;
  return FLAlgebra::build(std::move(s));
}

AlgebraPtr cost_chain(std::size_t n) {
  if (n == 0) throw InputError("cost chain needs N >= 1");
  AlgebraSpec s;
  s.size = n;
  s.meet.resize(n * n);
  s.join.resize(n * n);
  s.fusion.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    s.names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      s.meet[a * n + b] = static_cast<Elem>(std::max(a, b));
      s.join[a * n + b] = static_cast<Elem>(std::min(a, b));
      s.fusion[a * n + b] = static_cast<Elem>(std::min(a + b, n - 1));
    }
  }
  s.one = 0;
  s.zero = 0;
  return FLAlgebra::build(std::move(s));
}

}  // namespace flpdl
