#include "b1/monoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "b1/ideals.hpp"

namespace b1 {

Monoid Monoid::build(std::size_t n, Table op, Element identity) {
  if (n == 0 || n > kMaxElements) throw Error(ErrorCode::NotAMonoid, "size must be in [1, 32]");
  if (op.size() != n * n) throw Error(ErrorCode::NotAMonoid, "operation table must be n x n");
  if (identity >= n) throw Error(ErrorCode::NotAMonoid, "identity out of range", {identity});
  for (std::size_t i = 0; i < op.size(); ++i) {
    if (op[i] >= n) {
      throw Error(ErrorCode::NotAMonoid, "entry out of range",
                  {static_cast<Element>(i / n), static_cast<Element>(i % n)});
    }
  }
  auto at = [&](Element x, Element y) { return op[x * n + y]; };
  for (Element x = 0; x < n; ++x) {
    if (at(identity, x) != x || at(x, identity) != x) throw Error(ErrorCode::NotAMonoid, "identity law fails", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (at(x, y) != at(y, x)) throw Error(ErrorCode::NotAMonoid, "not commutative", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (at(at(x, y), z) != at(x, at(y, z))) throw Error(ErrorCode::NotAMonoid, "not associative", {x, y, z});
      }
    }
  }
  return Monoid(n, std::move(op), identity);
}

bool Monoid::is_group() const {
  for (Element x = 0; x < n_; ++x) {
    bool invertible = false;
    for (Element y = 0; y < n_ && !invertible; ++y) invertible = op(x, y) == identity_;
    if (!invertible) return false;
  }
  return true;
}

Monoid cyclic_group(std::size_t n) {
  Table op(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) op[x * n + y] = static_cast<Element>((x + y) % n);
  }
  return Monoid::build(n, std::move(op), 0);
}

namespace {

Table relabel_table(const Table& op, std::size_t n, const std::vector<Element>& perm) {
  Table out(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) out[perm[x] * n + perm[y]] = perm[op[x * n + y]];
  }
  return out;
}

Table canonical_monoid_table(const Table& op, std::size_t n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  Table best = op;
  do {
    best = std::min(best, relabel_table(op, n, perm));
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

void search_monoids(std::size_t n, Table& op, std::size_t cell, std::set<Table>& found) {
  // cells (x, y) with 1 <= x <= y < n, in row-major order
  std::size_t x = 1, y = 1, k = cell;
  while (x < n) {
    std::size_t row = n - x;
    if (k < row) {
      y = x + k;
      break;
    }
    k -= row;
    ++x;
  }
  if (x >= n) {
    try {
      Monoid::build(n, op, 0);
      found.insert(canonical_monoid_table(op, n));
    } catch (const Error&) {
    }
    return;
  }
  for (Element v = 0; v < n; ++v) {
    op[x * n + y] = op[y * n + x] = v;
    search_monoids(n, op, cell + 1, found);
  }
}

}  // namespace

std::vector<Monoid> enumerate_monoids(std::size_t n) {
  if (n == 0) return {};
  if (n > 4) throw Error(ErrorCode::SizeLimit, "monoid enumeration limited to size 4");
  Table op(n * n, 0);
  for (Element x = 0; x < n; ++x) op[x] = op[x * n] = x;
  std::set<Table> found;
  search_monoids(n, op, 0, found);
  std::vector<Monoid> out;
  for (const Table& t : found) out.push_back(Monoid::build(n, t, 0));
  return out;
}

bool is_monoid_ideal(const Monoid& m, ElementSet p) {
  for (Element x : p.elements()) {
    if (x >= m.size()) return false;
    for (Element y = 0; y < m.size(); ++y) {
      if (!p.contains(m.op(x, y))) return false;
    }
  }
  return true;
}

bool is_prime_monoid_ideal(const Monoid& m, ElementSet p) {
  if (!is_monoid_ideal(m, p) || p == ElementSet::full(m.size())) return false;
  for (Element x = 0; x < m.size(); ++x) {
    for (Element y = 0; y < m.size(); ++y) {
      if (p.contains(m.op(x, y)) && !p.contains(x) && !p.contains(y)) return false;
    }
  }
  return true;
}

std::vector<ElementSet> deitmar_spectrum(const Monoid& m) {
  std::vector<ElementSet> out;
  const std::uint32_t limit = std::uint32_t{1} << m.size();
  for (std::uint32_t bits = 0; bits < limit; ++bits) {
    ElementSet p = ElementSet::from_bits(bits);
    if (is_prime_monoid_ideal(m, p)) out.push_back(p);
  }
  return out;
}

MonoidAlgebra monoid_algebra(const Monoid& m, std::size_t max_monoid_size) {
  if (m.size() > max_monoid_size) {
    throw Error(ErrorCode::SizeLimit, "monoid of size " + std::to_string(m.size()) + " exceeds limit " +
                                          std::to_string(max_monoid_size));
  }
  const std::size_t n = std::size_t{1} << m.size();
  if (n > kMaxElements) throw Error(ErrorCode::SizeLimit, "F(M) too large");

  MonoidAlgebra f{boolean_semifield(), {}, {}};
  const ElementSet unit = ElementSet::singleton(m.identity());
  f.components.push_back(ElementSet{});
  f.components.push_back(unit);
  for (std::uint32_t bits = 1; bits < n; ++bits) {
    if (ElementSet::from_bits(bits) != unit) f.components.push_back(ElementSet::from_bits(bits));
  }
  std::vector<Element> index_of(n);
  for (std::size_t k = 0; k < n; ++k) index_of[f.components[k].bits()] = static_cast<Element>(k);

  Table add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElementSet product;
      for (Element x : f.components[i].elements()) {
        for (Element y : f.components[j].elements()) product.insert(m.op(x, y));
      }
      add[i * n + j] = index_of[(f.components[i] | f.components[j]).bits()];
      mul[i * n + j] = index_of[product.bits()];
    }
  }
  f.algebra = Algebra::build(n, std::move(add), std::move(mul));
  for (Element x = 0; x < m.size(); ++x) f.embedding.push_back(index_of[ElementSet::singleton(x).bits()]);
  return f;
}

ElementSet tilde(const Monoid& m, const MonoidAlgebra& f, ElementSet p) {
  if (!is_prime_monoid_ideal(m, p)) throw Error(ErrorCode::NotPrime, "not a prime ideal of M: " + std::to_string(p.bits()));
  ElementSet gens;
  for (Element x : p.elements()) gens.insert(f.embedding[x]);
  const ElementSet t = saturation(f.algebra, ideal_generated(f.algebra, gens));

  ElementSet componentwise;
  for (std::size_t k = 0; k < f.components.size(); ++k) {
    if (f.components[k].subset_of(p)) componentwise.insert(static_cast<Element>(k));
  }
  if (t != componentwise) {
    throw Error(ErrorCode::InvariantViolation, "P̃ differs from the elements with every component in P");
  }
  if (!is_saturated(f.algebra, t) || !is_prime_ideal(f.algebra, t)) {
    throw Error(ErrorCode::InvariantViolation, "P̃ is not a saturated prime ideal");
  }
  return t;
}

Congruence psi(const Monoid& m, const MonoidAlgebra& f, ElementSet p) { return alpha(f.algebra, tilde(m, f, p)); }

}  // namespace b1
