#include "flpdl/algebra_search.hpp"

#include <vector>

namespace flpdl {

namespace {

/// Partial orders on 0..n-1 with 0 bottom, n-1 top and i <= j whenever i is
/// below j, that are lattices. Returned as join tables.
std::vector<std::vector<Elem>> lattices(std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    for (std::size_t j = i + 1; j + 1 < n; ++j) free_pairs.emplace_back(i, j);
  }
  const std::size_t combos = std::size_t{1} << free_pairs.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::vector<char> le(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      le[i * n + i] = 1;
      le[0 * n + i] = 1;
      le[i * n + (n - 1)] = 1;
    }
    for (std::size_t k = 0; k < free_pairs.size(); ++k) {
      if (mask >> k & 1) le[free_pairs[k].first * n + free_pairs[k].second] = 1;
    }
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n && transitive; ++c)
          if (le[a * n + b] && le[b * n + c] && !le[a * n + c]) transitive = false;
    if (!transitive) continue;

    // Least upper bounds must exist and be unique.
    std::vector<Elem> join(n * n);
    bool lattice = true;
    for (std::size_t a = 0; a < n && lattice; ++a) {
      for (std::size_t b = 0; b < n && lattice; ++b) {
        std::size_t best = n;
        for (std::size_t u = 0; u < n; ++u) {
          if (!le[a * n + u] || !le[b * n + u]) continue;
          bool least = true;
          for (std::size_t v = 0; v < n; ++v) {
            if (le[a * n + v] && le[b * n + v] && !le[u * n + v]) least = false;
          }
          if (least) best = u;
        }
        if (best == n) lattice = false;
        else join[a * n + b] = static_cast<Elem>(best);
      }
    }
    if (lattice) out.push_back(std::move(join));
  }
  return out;
}

std::vector<Elem> meet_from_join(const std::vector<Elem>& join, std::size_t n) {
  std::vector<Elem> meet(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // meet(a,b) is the greatest lower bound: the unique lower bound above all others.
      for (std::size_t l = 0; l < n; ++l) {
        if (join[l * n + a] != a || join[l * n + b] != b) continue;
        bool greatest = true;
        for (std::size_t m = 0; m < n; ++m) {
          if (join[m * n + a] == a && join[m * n + b] == b && join[m * n + l] != l) greatest = false;
        }
        if (greatest) meet[a * n + b] = static_cast<Elem>(l);
      }
    }
  }
  return meet;
}

}  // namespace

AlgebraPtr search_algebra(std::size_t max_size, const std::function<bool(const FLAlgebra&)>& accept) {
  for (std::size_t n = 2; n <= max_size; ++n) {
    for (const auto& join : lattices(n)) {
      const auto meet = meet_from_join(join, n);
      for (std::size_t one = 1; one < n; ++one) {
        std::vector<std::size_t> free_cells;
        std::vector<Elem> fusion(n * n, 0);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            if (a == one) fusion[a * n + b] = static_cast<Elem>(b);
            else if (b == one) fusion[a * n + b] = static_cast<Elem>(a);
            else if (a == 0 || b == 0) fusion[a * n + b] = 0;
            else free_cells.push_back(a * n + b);
          }
        }
        std::vector<std::size_t> digits(free_cells.size(), 0);
        while (true) {
          for (std::size_t k = 0; k < free_cells.size(); ++k) fusion[free_cells[k]] = static_cast<Elem>(digits[k]);
          AlgebraSpec spec;
          spec.size = n;
          spec.meet = meet;
          spec.join = join;
          spec.fusion = fusion;
          spec.one = static_cast<Elem>(one);
          spec.zero = 0;
          try {
            auto alg = FLAlgebra::build(std::move(spec));
            if (accept(*alg)) return alg;
          } catch (const AlgebraError&) {
          }
          std::size_t k = digits.size();
          while (k > 0 && ++digits[k - 1] == n) digits[--k] = 0;
          if (k == 0) break;
        }
      }
    }
  }
  return nullptr;
}

AlgebraPtr find_non_integral(std::size_t max_size) {
  return search_algebra(max_size, [](const FLAlgebra& a) { return !is_integral(a); });
}

AlgebraPtr find_non_commutative(std::size_t max_size) {
  return search_algebra(max_size, [](const FLAlgebra& a) { return !is_commutative(a); });
}

}  // namespace flpdl
