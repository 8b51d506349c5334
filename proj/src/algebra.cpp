#include "b1/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "b1/congruences.hpp"

namespace b1 {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::BadIdentity: return "BadIdentity";
    case ErrorCode::NotAbsorbing: return "NotAbsorbing";
    case ErrorCode::NotDistributive: return "NotDistributive";
    case ErrorCode::DegenerateAlgebra: return "DegenerateAlgebra";
    case ErrorCode::BadTable: return "BadTable";
    case ErrorCode::NotAMorphism: return "NotAMorphism";
    case ErrorCode::NotAMonoid: return "NotAMonoid";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::NotSaturatedPrime: return "NotSaturatedPrime";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::NotACover: return "NotACover";
    case ErrorCode::EmptyClosedSet: return "EmptyClosedSet";
    case ErrorCode::NotSober: return "NotSober";
    case ErrorCode::NotMonogenic: return "NotMonogenic";
    case ErrorCode::TrivialGenerator: return "TrivialGenerator";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

void require_within(const Budget& budget, std::size_t n, std::string_view what) {
  if (n > budget.max_size || n > kMaxElements) {
    throw Error(ErrorCode::SizeLimit, std::string(what) + " on " + std::to_string(n) +
                                          " elements exceeds the budget of " +
                                          std::to_string(std::min(budget.max_size, kMaxElements)));
  }
}

namespace {

std::string triple(const char* label, Element x, Element y, Element z) {
  std::ostringstream os;
  os << label << " at (" << x << ", " << y << ", " << z << ")";
  return os.str();
}

}  // namespace

std::optional<Error> find_axiom_violation(std::size_t n, const Table& add, const Table& mul) {
  if (n == 0 || n > kMaxElements) {
    return Error(ErrorCode::BadTable, "size must be in [1, " + std::to_string(kMaxElements) + "]");
  }
  if (add.size() != n * n || mul.size() != n * n) {
    return Error(ErrorCode::BadTable, "tables must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add[i] >= n || mul[i] >= n) {
      return Error(ErrorCode::BadTable, "entry out of range at row " + std::to_string(i / n) + ", column " +
                                            std::to_string(i % n));
    }
  }
  auto A = [&](std::size_t x, std::size_t y) { return add[x * n + y]; };
  auto M = [&](std::size_t x, std::size_t y) { return mul[x * n + y]; };
  const Element unit = n == 1 ? 0 : 1;

  for (Element x = 0; x < n; ++x) {
    if (A(0, x) != x || A(x, 0) != x) return Error(ErrorCode::BadIdentity, "0 is not an additive identity", {x});
  }
  for (Element x = 0; x < n; ++x) {
    if (M(unit, x) != x || M(x, unit) != x) {
      return Error(ErrorCode::BadIdentity, "1 is not a multiplicative identity", {x});
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (M(0, x) != 0 || M(x, 0) != 0) return Error(ErrorCode::NotAbsorbing, "0 * x != 0", {x});
  }
  for (Element x = 0; x < n; ++x) {
    if (A(x, x) != x) return Error(ErrorCode::NotIdempotent, "x + x != x", {x});
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (A(x, y) != A(y, x)) return Error(ErrorCode::NotCommutative, "(add) x + y != y + x", {x, y});
      if (M(x, y) != M(y, x)) return Error(ErrorCode::NotCommutative, "(mul) x * y != y * x", {x, y});
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (A(A(x, y), z) != A(x, A(y, z))) {
          return Error(ErrorCode::NotAssociative, triple("(add)", x, y, z), {x, y, z});
        }
        if (M(M(x, y), z) != M(x, M(y, z))) {
          return Error(ErrorCode::NotAssociative, triple("(mul)", x, y, z), {x, y, z});
        }
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (M(x, A(y, z)) != A(M(x, y), M(x, z))) {
          return Error(ErrorCode::NotDistributive, triple("x(y+z) != xy+xz", x, y, z), {x, y, z});
        }
      }
    }
  }
  return std::nullopt;
}

Algebra Algebra::validated(std::size_t n, Table add, Table mul, bool allow_degenerate) {
  if (n == 1 && !allow_degenerate) {
    throw Error(ErrorCode::DegenerateAlgebra, "the one-element algebra (0 = 1) is not accepted");
  }
  if (auto violation = find_axiom_violation(n, add, mul)) throw *violation;
  return Algebra(std::make_shared<const Tables>(Tables{n, std::move(add), std::move(mul)}));
}

Algebra Algebra::build(std::size_t n, Table add, Table mul) {
  return validated(n, std::move(add), std::move(mul), false);
}

Algebra Algebra::build_allow_degenerate(std::size_t n, Table add, Table mul) {
  return validated(n, std::move(add), std::move(mul), true);
}

Algebra boolean_semifield() { return Algebra::build(2, {0, 1, 1, 1}, {0, 0, 0, 1}); }

bool natural_leq(const Algebra& a, Element x, Element y) { return a.add(x, y) == y; }

Element power(const Algebra& a, Element x, std::size_t k) {
  Element result = a.unit();
  for (std::size_t i = 0; i < k; ++i) result = a.mul(result, x);
  return result;
}

Algebra relabel(const Algebra& a, std::span<const Element> perm) {
  const std::size_t n = a.size();
  ElementSet hit;
  for (Element p : perm) {
    if (p < n) hit.insert(p);
  }
  if (perm.size() != n || hit != a.carrier()) throw Error(ErrorCode::BadTable, "relabelling is not a permutation");
  Table add(n * n), mul(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      add[perm[x] * n + perm[y]] = perm[a.add(x, y)];
      mul[perm[x] * n + perm[y]] = perm[a.mul(x, y)];
    }
  }
  return a.is_degenerate() ? Algebra::build_allow_degenerate(n, std::move(add), std::move(mul))
                           : Algebra::build(n, std::move(add), std::move(mul));
}

// ---------------------------------------------------------------------------
// Morphisms

Morphism Morphism::make(Algebra source, Algebra target, std::vector<Element> map) {
  const std::size_t n = source.size();
  if (map.size() != n) throw Error(ErrorCode::NotAMorphism, "map has the wrong length");
  for (Element x = 0; x < n; ++x) {
    if (map[x] >= target.size()) throw Error(ErrorCode::NotAMorphism, "image out of range", {x});
  }
  if (map[Algebra::zero] != Algebra::zero) throw Error(ErrorCode::NotAMorphism, "0 is not sent to 0");
  if (map[source.unit()] != target.unit()) throw Error(ErrorCode::NotAMorphism, "1 is not sent to 1");
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (map[source.add(x, y)] != target.add(map[x], map[y])) {
        throw Error(ErrorCode::NotAMorphism, "addition not preserved", {x, y});
      }
      if (map[source.mul(x, y)] != target.mul(map[x], map[y])) {
        throw Error(ErrorCode::NotAMorphism, "multiplication not preserved", {x, y});
      }
    }
  }
  return Morphism(std::move(source), std::move(target), std::move(map));
}

Morphism Morphism::identity(const Algebra& a) {
  std::vector<Element> map(a.size());
  std::iota(map.begin(), map.end(), Element{0});
  return Morphism(a, a, std::move(map));
}

ElementSet Morphism::preimage(ElementSet s) const {
  ElementSet out;
  for (Element x = 0; x < map_.size(); ++x) {
    if (s.contains(map_[x])) out.insert(x);
  }
  return out;
}

ElementSet Morphism::image(ElementSet s) const {
  ElementSet out;
  for (Element x : s.elements()) out.insert(map_[x]);
  return out;
}

bool Morphism::is_surjective() const { return image(source_.carrier()) == target_.carrier(); }

bool Morphism::is_injective() const { return image(source_.carrier()).size() == source_.size(); }

Morphism compose(const Morphism& first, const Morphism& second) {
  if (!(first.target() == second.source())) {
    throw Error(ErrorCode::Mismatch, "cannot compose: target of the first map is not the source of the second");
  }
  std::vector<Element> map(first.source().size());
  for (Element x = 0; x < map.size(); ++x) map[x] = second(first(x));
  return Morphism::make(first.source(), second.target(), std::move(map));
}

std::vector<Morphism> enumerate_morphisms(const Algebra& a, const Algebra& c, const Budget& budget) {
  const std::size_t n = a.size();
  const std::size_t m = c.size();
  unsigned long long candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    candidates *= m;
    if (candidates > budget.max_morphism_candidates) {
      throw Error(ErrorCode::SizeLimit, "morphism search space |C|^|A| exceeds the budget");
    }
  }

  std::vector<Morphism> out;
  std::vector<Element> map(n, 0);
  std::vector<bool> assigned(n, false);
  map[Algebra::zero] = Algebra::zero;
  assigned[Algebra::zero] = true;
  if (a.unit() != Algebra::zero) {
    map[a.unit()] = c.unit();
    assigned[a.unit()] = true;
  } else if (c.unit() != Algebra::zero) {
    return out;  // a is degenerate, c is not: 0 = 1 cannot map to 0 != 1
  }

  // Every law whose operands and result are already assigned must hold.
  auto consistent = [&](Element upto) {
    for (Element x = 0; x <= upto; ++x) {
      if (!assigned[x]) continue;
      for (Element y = 0; y <= upto; ++y) {
        if (!assigned[y]) continue;
        Element s = a.add(x, y);
        if (assigned[s] && map[s] != c.add(map[x], map[y])) return false;
        Element p = a.mul(x, y);
        if (assigned[p] && map[p] != c.mul(map[x], map[y])) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Element x) -> void {
    while (x < n && assigned[x]) ++x;
    if (x == n) {
      if (consistent(static_cast<Element>(n - 1))) out.push_back(Morphism::make(a, c, map));
      return;
    }
    for (Element v = 0; v < m; ++v) {
      map[x] = v;
      assigned[x] = true;
      if (consistent(x < 1 ? 1 : x)) self(self, static_cast<Element>(x + 1));
      assigned[x] = false;
    }
  };
  if (consistent(static_cast<Element>(std::min<std::size_t>(n - 1, 1)))) search(search, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Quotients

std::pair<Algebra, Morphism> quotient(const Algebra& a, const Congruence& r) {
  if (r.size() != a.size() || !is_congruence(a, r)) {
    throw Error(ErrorCode::NotACongruence, "quotient requires a congruence of the algebra");
  }
  const std::size_t k = r.num_classes();
  std::vector<Element> rep(k);
  for (Element x = static_cast<Element>(a.size()); x-- > 0;) rep[r.class_of(x)] = x;
  Table add(k * k), mul(k * k);
  for (Element i = 0; i < k; ++i) {
    for (Element j = 0; j < k; ++j) {
      add[i * k + j] = r.class_of(a.add(rep[i], rep[j]));
      mul[i * k + j] = r.class_of(a.mul(rep[i], rep[j]));
    }
  }
  Algebra q = Algebra::build_allow_degenerate(k, std::move(add), std::move(mul));
  std::vector<Element> map(r.class_ids().begin(), r.class_ids().end());
  Morphism pi = Morphism::make(a, q, std::move(map));
  return {std::move(q), std::move(pi)};
}

// ---------------------------------------------------------------------------
// Canonical forms and isomorphisms

namespace {

void relabeled_tables(const Algebra& a, std::span<const Element> perm, Table& add, Table& mul) {
  const std::size_t n = a.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      add[perm[x] * n + perm[y]] = perm[a.add(x, y)];
      mul[perm[x] * n + perm[y]] = perm[a.mul(x, y)];
    }
  }
}

}  // namespace

CanonicalForm canonical_form(const Algebra& a) {
  const std::size_t n = a.size();
  if (n > kMaxCanonicalSize) {
    throw Error(ErrorCode::SizeLimit, "canonical form limited to " + std::to_string(kMaxCanonicalSize) + " elements");
  }
  CanonicalForm best{n, a.add_table(), a.mul_table()};
  if (n <= 3) return best;

  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  Table add(n * n), mul(n * n);
  while (std::next_permutation(perm.begin() + 2, perm.end())) {
    relabeled_tables(a, perm, add, mul);
    if (std::tie(add, mul) < std::tie(best.add, best.mul)) {
      best.add = add;
      best.mul = mul;
    }
  }
  return best;
}

Algebra canonical_algebra(const Algebra& a) {
  CanonicalForm form = canonical_form(a);
  if (a.is_degenerate()) return a;
  return Algebra::build(form.size, std::move(form.add), std::move(form.mul));
}

std::optional<std::vector<Element>> find_isomorphism(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<Element> map(n, 0);
  std::vector<bool> assigned(n, false), used(n, false);
  for (Element fixed : {Algebra::zero, a.unit()}) {
    map[fixed] = fixed;
    assigned[fixed] = used[fixed] = true;
  }

  auto consistent = [&]() {
    for (Element x = 0; x < n; ++x) {
      if (!assigned[x]) continue;
      for (Element y = 0; y < n; ++y) {
        if (!assigned[y]) continue;
        Element s = a.add(x, y);
        if (assigned[s] && map[s] != b.add(map[x], map[y])) return false;
        Element p = a.mul(x, y);
        if (assigned[p] && map[p] != b.mul(map[x], map[y])) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self, Element x) -> bool {
    while (x < n && assigned[x]) ++x;
    if (x == n) return consistent();
    for (Element v = 0; v < n; ++v) {
      if (used[v]) continue;
      map[x] = v;
      assigned[x] = used[v] = true;
      if (consistent() && self(self, static_cast<Element>(x + 1))) return true;
      assigned[x] = used[v] = false;
    }
    return false;
  };
  if (!consistent() || !search(search, 0)) return std::nullopt;
  return map;
}

}  // namespace b1
