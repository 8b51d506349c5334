#pragma once

// Shared fixtures and brute-force oracles. The oracles work from the
// definitions directly (subset scans, exhaustive table search) and use the
// library only for table access.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "b1/algebra.hpp"
#include "b1/classify.hpp"
#include "b1/monoid.hpp"

namespace fx {

using b1::Algebra;
using b1::Element;
using b1::ElementSet;
using b1::Table;

// chain 0 < a < 1, a = 2, a^2 = 0
inline Algebra n3() { return Algebra::build(3, {0, 1, 2, 1, 1, 1, 2, 1, 2}, {0, 0, 0, 0, 1, 2, 0, 2, 0}); }
// chain 0 < a < 1, a^2 = a
inline Algebra c3() { return Algebra::build(3, {0, 1, 2, 1, 1, 1, 2, 1, 2}, {0, 0, 0, 0, 1, 2, 0, 2, 2}); }
// chain 0 < 1 < a, a^2 = a
inline Algebra t3() { return Algebra::build(3, {0, 1, 2, 1, 1, 2, 2, 2, 2}, {0, 0, 0, 0, 1, 2, 0, 2, 2}); }
inline Algebra b1alg() { return b1::boolean_semifield(); }

inline std::vector<ElementSet> all_subsets(std::size_t n) {
  std::vector<ElementSet> out;
  for (std::uint32_t b = 0; b < (std::uint32_t{1} << n); ++b) out.push_back(ElementSet::from_bits(b));
  return out;
}

namespace oracle {

inline bool is_ideal(const Algebra& a, ElementSet s) {
  if (!s.contains(0)) return false;
  for (Element x : s.elements()) {
    for (Element y : s.elements()) {
      if (!s.contains(a.add(x, y))) return false;
    }
    for (Element c = 0; c < a.size(); ++c) {
      if (!s.contains(a.mul(c, x))) return false;
    }
  }
  return true;
}

inline std::vector<ElementSet> ideals(const Algebra& a) {
  std::vector<ElementSet> out;
  for (ElementSet s : all_subsets(a.size())) {
    if (oracle::is_ideal(a, s)) out.push_back(s);
  }
  return out;
}

inline ElementSet saturation(const Algebra& a, ElementSet j) {
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element z : j.elements()) {
      if (a.add(x, z) == z) out.insert(x);
    }
  }
  return out;
}

inline bool is_prime(const Algebra& a, ElementSet p) {
  if (!oracle::is_ideal(a, p) || p == a.carrier()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (p.contains(a.mul(x, y)) && !p.contains(x) && !p.contains(y)) return false;
    }
  }
  return true;
}

inline std::vector<ElementSet> pr(const Algebra& a) {
  std::vector<ElementSet> out;
  for (ElementSet s : all_subsets(a.size())) {
    if (oracle::is_prime(a, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<ElementSet> prs(const Algebra& a) {
  std::vector<ElementSet> out;
  for (ElementSet p : oracle::pr(a)) {
    if (oracle::saturation(a, p) == p) out.push_back(p);
  }
  return out;
}

inline ElementSet nilradical(const Algebra& a) {
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    Element p = x;
    for (std::size_t k = 0; k <= a.size(); ++k) {
      if (p == 0) out.insert(x);
      p = a.mul(p, x);
    }
  }
  return out;
}

// Partition as a class label per element, compared after relabelling by
// first occurrence.
inline std::vector<int> normalize(const std::vector<int>& labels) {
  std::map<int, int> ids;
  std::vector<int> out;
  for (int l : labels) out.push_back(ids.emplace(l, static_cast<int>(ids.size())).first->second);
  return out;
}

inline bool compatible(const Algebra& a, const std::vector<int>& cls) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (cls[x] != cls[y]) continue;
      for (Element c = 0; c < a.size(); ++c) {
        if (cls[a.add(x, c)] != cls[a.add(y, c)] || cls[a.mul(x, c)] != cls[a.mul(y, c)]) return false;
      }
    }
  }
  return true;
}

inline bool axioms_hold(std::size_t n, const Table& add, const Table& mul) {
  auto p = [&](Element x, Element y) { return add[x * n + y]; };
  auto m = [&](Element x, Element y) { return mul[x * n + y]; };
  for (Element x = 0; x < n; ++x) {
    if (p(x, x) != x || p(0, x) != x || m(1, x) != x || m(0, x) != 0) return false;
    for (Element y = 0; y < n; ++y) {
      if (p(x, y) != p(y, x) || m(x, y) != m(y, x)) return false;
      for (Element z = 0; z < n; ++z) {
        if (p(p(x, y), z) != p(x, p(y, z)) || m(m(x, y), z) != m(x, m(y, z))) return false;
        if (m(x, p(y, z)) != p(m(x, y), m(x, z))) return false;
      }
    }
  }
  return true;
}

inline bool isomorphic(const Algebra& a, const Algebra& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  do {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) {
      for (Element y = 0; y < n && ok; ++y) {
        ok = perm[a.add(x, y)] == b.add(perm[x], perm[y]) && perm[a.mul(x, y)] == b.mul(perm[x], perm[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every B1-algebra of size n (2 <= n <= 4) up to isomorphism, by filling the
// free cells of both tables in every possible way.
inline std::vector<Algebra> algebras(std::size_t n) {
  std::vector<std::pair<Element, Element>> add_cells, mul_cells;
  for (Element x = 1; x < n; ++x) {
    for (Element y = x + 1; y < n; ++y) add_cells.emplace_back(x, y);
  }
  for (Element x = 2; x < n; ++x) {
    for (Element y = x; y < n; ++y) mul_cells.emplace_back(x, y);
  }
  Table add(n * n), mul(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      add[x * n + y] = x == 0 ? y : y == 0 ? x : x == y ? x : 0;
      mul[x * n + y] = (x == 0 || y == 0) ? 0 : x == 1 ? y : y == 1 ? x : 0;
    }
  }
  std::vector<Algebra> out;
  auto fill = [&](auto& cells, Table& t, std::size_t code) {
    for (auto [x, y] : cells) {
      t[x * n + y] = t[y * n + x] = static_cast<Element>(code % n);
      code /= n;
    }
  };
  std::size_t add_count = 1, mul_count = 1;
  for (std::size_t i = 0; i < add_cells.size(); ++i) add_count *= n;
  for (std::size_t i = 0; i < mul_cells.size(); ++i) mul_count *= n;
  for (std::size_t ac = 0; ac < add_count; ++ac) {
    fill(add_cells, add, ac);
    for (std::size_t mc = 0; mc < mul_count; ++mc) {
      fill(mul_cells, mul, mc);
      if (!axioms_hold(n, add, mul)) continue;
      Algebra a = Algebra::build(n, add, mul);
      if (std::none_of(out.begin(), out.end(), [&](const Algebra& b) { return oracle::isomorphic(a, b); })) out.push_back(a);
    }
  }
  return out;
}

}  // namespace oracle

// Every algebra of size 2..4, found by the oracle search.
inline const std::vector<Algebra>& small_algebras() {
  static const std::vector<Algebra> all = [] {
    std::vector<Algebra> out;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (Algebra& a : oracle::algebras(n)) out.push_back(std::move(a));
    }
    return out;
  }();
  return all;
}

}  // namespace fx
