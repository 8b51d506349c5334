#include "b1/congruences.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "b1/ideals.hpp"

namespace b1 {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Element{0}); }

  Element find(Element x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(Element x, Element y) {
    Element rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (rx < ry) parent_[ry] = rx;
    else parent_[rx] = ry;
    return true;
  }

  std::vector<Element> labels() {
    std::vector<Element> out(parent_.size());
    for (Element x = 0; x < out.size(); ++x) out[x] = find(x);
    return out;
  }

 private:
  std::vector<Element> parent_;
};

// Closes `base` (already a congruence) together with `pairs` under the
// translations x -> x + c and x -> x c. Every effective merge is queued and
// translated in turn, which generates exactly the smallest congruence.
Congruence close_with(const Algebra& a, const Congruence& base, std::span<const std::pair<Element, Element>> pairs) {
  const std::size_t n = a.size();
  UnionFind uf(n);
  std::vector<Element> first(base.num_classes(), static_cast<Element>(n));
  for (Element x = 0; x < n; ++x) {
    Element id = base.class_of(x);
    if (first[id] == n) first[id] = x;
    else uf.unite(first[id], x);
  }
  std::vector<std::pair<Element, Element>> work;
  auto unite = [&](Element x, Element y) {
    if (uf.unite(x, y)) work.emplace_back(x, y);
  };
  for (auto [x, y] : pairs) unite(x, y);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    for (Element c = 0; c < n; ++c) {
      unite(a.add(x, c), a.add(y, c));
      unite(a.mul(x, c), a.mul(y, c));
    }
  }
  return Congruence::from_labels(uf.labels());
}

// Pairs (least member, x) spanning each class of r.
std::vector<std::pair<Element, Element>> spanning_pairs(const Congruence& r) {
  std::vector<std::pair<Element, Element>> out;
  std::vector<Element> first(r.num_classes(), static_cast<Element>(r.size()));
  for (Element x = 0; x < r.size(); ++x) {
    Element id = r.class_of(x);
    if (first[id] == r.size()) first[id] = x;
    else out.emplace_back(first[id], x);
  }
  return out;
}

void sort_lattice(std::vector<Congruence>& lattice) {
  std::sort(lattice.begin(), lattice.end(), [](const Congruence& r, const Congruence& s) {
    if (r.num_classes() != s.num_classes()) return r.num_classes() > s.num_classes();
    return r < s;
  });
}

}  // namespace

Congruence::Congruence(std::vector<Element> canonical_ids) : class_of_(std::move(canonical_ids)) {
  for (Element id : class_of_) num_classes_ = std::max<std::size_t>(num_classes_, id + 1U);
}

Congruence Congruence::from_labels(std::span<const Element> labels) {
  std::vector<Element> ids(labels.size());
  std::vector<std::pair<Element, Element>> seen;  // label -> id
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == labels[x]; });
    if (it == seen.end()) {
      ids[x] = static_cast<Element>(seen.size());
      seen.emplace_back(labels[x], ids[x]);
    } else {
      ids[x] = it->second;
    }
  }
  return Congruence(std::move(ids));
}

Congruence Congruence::from_classes(std::size_t n, std::span<const ElementSet> classes) {
  std::vector<Element> labels(n, static_cast<Element>(n));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (Element x : classes[i].elements()) {
      if (x >= n || labels[x] != n) throw Error(ErrorCode::NotACongruence, "classes do not partition the carrier", {x});
      labels[x] = static_cast<Element>(i);
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (labels[x] == n) throw Error(ErrorCode::NotACongruence, "element missing from every class", {x});
  }
  return from_labels(labels);
}

Congruence Congruence::equality(std::size_t n) {
  std::vector<Element> ids(n);
  std::iota(ids.begin(), ids.end(), Element{0});
  return Congruence(std::move(ids));
}

Congruence Congruence::trivial(std::size_t n) { return Congruence(std::vector<Element>(n, 0)); }

ElementSet Congruence::class_members(Element id) const {
  ElementSet out;
  for (Element x = 0; x < size(); ++x) {
    if (class_of_[x] == id) out.insert(x);
  }
  return out;
}

std::vector<ElementSet> Congruence::classes() const {
  std::vector<ElementSet> out(num_classes_);
  for (Element x = 0; x < size(); ++x) out[class_of_[x]].insert(x);
  return out;
}

bool Congruence::refines(const Congruence& other) const {
  if (other.size() != size()) return false;
  for (Element x = 0; x < size(); ++x) {
    // x and the least member of its class must stay together in `other`
    for (Element y = 0; y < x; ++y) {
      if (class_of_[y] == class_of_[x]) {
        if (other.class_of_[y] != other.class_of_[x]) return false;
        break;
      }
    }
  }
  return true;
}

bool is_congruence(const Algebra& a, const Congruence& r) {
  const std::size_t n = a.size();
  if (r.size() != n) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = static_cast<Element>(x + 1); y < n; ++y) {
      if (!r.related(x, y)) continue;
      for (Element c = 0; c < n; ++c) {
        if (!r.related(a.add(x, c), a.add(y, c)) || !r.related(a.mul(x, c), a.mul(y, c))) return false;
      }
    }
  }
  return true;
}

Congruence congruence_generated(const Algebra& a, std::span<const std::pair<Element, Element>> pairs) {
  return close_with(a, Congruence::equality(a.size()), pairs);
}

Congruence congruence_with_pair(const Algebra& a, const Congruence& r, Element x, Element y) {
  const std::pair<Element, Element> pair{x, y};
  return close_with(a, r, std::span(&pair, 1));
}

Congruence join(const Algebra& a, const Congruence& r, const Congruence& s) {
  return close_with(a, r, spanning_pairs(s));
}

Congruence meet(const Congruence& r, const Congruence& s) {
  std::vector<Element> labels(r.size());
  for (Element x = 0; x < r.size(); ++x) {
    labels[x] = static_cast<Element>(r.class_of(x) * s.num_classes() + s.class_of(x));
  }
  return Congruence::from_labels(labels);
}

Congruence congruence_from_ideal(const Algebra& a, ElementSet ideal) {
  if (!is_ideal(a, ideal)) throw Error(ErrorCode::NotAnIdeal, "congruence_from_ideal needs an ideal");
  const std::size_t n = a.size();
  const auto members = ideal.elements();
  auto witnessed = [&](Element x, Element y) {
    return std::any_of(members.begin(), members.end(), [&](Element z) { return a.add(x, z) == a.add(y, z); });
  };
  UnionFind uf(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = static_cast<Element>(x + 1); y < n; ++y) {
      if (witnessed(x, y)) uf.unite(x, y);
    }
  }
  Congruence r = Congruence::from_labels(uf.labels());
  for (Element x = 0; x < n; ++x) {
    for (Element y = static_cast<Element>(x + 1); y < n; ++y) {
      if (r.related(x, y) && !witnessed(x, y)) {
        throw Error(ErrorCode::InvariantViolation, "witness relation is not transitive", {x, y});
      }
    }
  }
  if (!is_congruence(a, r)) throw Error(ErrorCode::InvariantViolation, "witness relation is not a congruence");
  if (!ideal.subset_of(r.class_members(r.class_of(Algebra::zero)))) {
    throw Error(ErrorCode::InvariantViolation, "ideal escapes the zero class of R_J");
  }
  return r;
}

ElementSet ideal_of(const Algebra& a, const Congruence& r) {
  ElementSet zero_class = r.class_members(r.class_of(Algebra::zero));
  if (!is_ideal(a, zero_class)) throw Error(ErrorCode::InvariantViolation, "zero class is not an ideal");
  return zero_class;
}

std::vector<Congruence> enumerate_congruences(const Algebra& a, const Budget& budget) {
  require_within(budget, a.size(), "congruence enumeration");
  const std::size_t n = a.size();
  const Congruence eq = Congruence::equality(n);

  std::vector<Congruence> principal;
  {
    std::set<Congruence> seen;
    for (Element x = 0; x < n; ++x) {
      for (Element y = static_cast<Element>(x + 1); y < n; ++y) {
        const std::pair<Element, Element> pair{x, y};
        seen.insert(congruence_generated(a, std::span(&pair, 1)));
      }
    }
    principal.assign(seen.begin(), seen.end());
  }

  std::set<Congruence> lattice{eq};
  std::vector<Congruence> frontier{eq};
  while (!frontier.empty()) {
    Congruence r = std::move(frontier.back());
    frontier.pop_back();
    for (const Congruence& p : principal) {
      if (p.refines(r)) continue;
      Congruence s = join(a, r, p);
      if (lattice.insert(s).second) frontier.push_back(std::move(s));
    }
  }
  std::vector<Congruence> out(lattice.begin(), lattice.end());
  sort_lattice(out);
  return out;
}

std::vector<Congruence> enumerate_congruences_by_scan(const Algebra& a, const Budget& budget) {
  require_within(budget, a.size(), "partition scan");
  if (a.size() > kMaxPartitionScan) {
    throw Error(ErrorCode::SizeLimit, "partition scan limited to " + std::to_string(kMaxPartitionScan) + " elements");
  }
  const std::size_t n = a.size();
  std::vector<Congruence> out;
  // restricted growth strings: labels[0] = 0, labels[i] <= 1 + max(labels[0..i))
  std::vector<Element> labels(n, 0);
  auto scan = [&](auto&& self, std::size_t i, Element max_label) -> void {
    if (i == n) {
      Congruence r = Congruence::from_labels(labels);
      if (is_congruence(a, r)) out.push_back(std::move(r));
      return;
    }
    for (Element l = 0; l <= max_label + 1U; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(max_label, l));
    }
  };
  if (n == 1) {
    out.push_back(Congruence::equality(1));
  } else {
    scan(scan, 1, 0);
  }
  sort_lattice(out);
  return out;
}

bool is_prime_congruence(const Algebra& a, const Congruence& r) {
  if (r.is_trivial()) return false;
  const Element z = r.class_of(Algebra::zero);
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = x; y < a.size(); ++y) {
      if (r.class_of(a.mul(x, y)) == z && r.class_of(x) != z && r.class_of(y) != z) return false;
    }
  }
  return true;
}

std::vector<Congruence> spec(const Algebra& a, std::span<const Congruence> lattice) {
  std::vector<Congruence> out;
  for (const Congruence& r : lattice) {
    if (is_prime_congruence(a, r)) out.push_back(r);
  }
  return out;
}

std::vector<Congruence> spec(const Algebra& a, const Budget& budget) {
  return spec(a, enumerate_congruences(a, budget));
}

std::vector<Congruence> maxspec(std::span<const Congruence> lattice) {
  std::vector<Congruence> out;
  for (const Congruence& r : lattice) {
    if (r.is_trivial()) continue;
    bool maximal = std::none_of(lattice.begin(), lattice.end(), [&](const Congruence& s) {
      return !s.is_trivial() && s != r && r.refines(s);
    });
    if (maximal) out.push_back(r);
  }
  return out;
}

std::vector<Congruence> maxspec(const Algebra& a, const Budget& budget) {
  return maxspec(enumerate_congruences(a, budget));
}

bool is_maximal_congruence(const Algebra& a, const Congruence& r) {
  if (!is_congruence(a, r) || r.is_trivial()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = static_cast<Element>(x + 1); y < a.size(); ++y) {
      if (!r.related(x, y) && !congruence_with_pair(a, r, x, y).is_trivial()) return false;
    }
  }
  return true;
}

Congruence alpha(const Algebra& a, ElementSet prime) {
  if (!is_ideal(a, prime) || !is_saturated(a, prime) || !is_prime_ideal(a, prime)) {
    throw Error(ErrorCode::NotSaturatedPrime, "alpha needs a saturated prime ideal");
  }
  std::vector<Element> labels(a.size());
  for (Element x = 0; x < a.size(); ++x) labels[x] = prime.contains(x) ? 0 : 1;
  Congruence s = Congruence::from_labels(labels);

  if (!is_congruence(a, s) || s.num_classes() != 2) {
    throw Error(ErrorCode::InvariantViolation, "S_P is not a two-class congruence");
  }
  // A two-class congruence is maximal among nontrivial ones; check A/S_P is B1.
  if (!(quotient(a, s).first == boolean_semifield())) {
    throw Error(ErrorCode::InvariantViolation, "A/S_P is not B1");
  }
  if (ideal_of(a, s) != prime) throw Error(ErrorCode::InvariantViolation, "I(S_P) != P");
  return s;
}

ElementSet beta(const Algebra& a, const Congruence& r) {
  if (!is_maximal_congruence(a, r)) throw Error(ErrorCode::NotMaximal, "beta needs a maximal congruence");
  ElementSet p = ideal_of(a, r);
  if (!is_saturated(a, p) || !is_prime_ideal(a, p)) {
    throw Error(ErrorCode::InvariantViolation, "I(R) of a maximal congruence is not a saturated prime");
  }
  return p;
}

Congruence pullback(const Morphism& phi, const Congruence& r) {
  const Algebra& target = phi.target();
  if (r.size() != target.size() || !is_congruence(target, r)) {
    throw Error(ErrorCode::Mismatch, "congruence does not belong to the morphism's target");
  }
  std::vector<Element> labels(phi.source().size());
  for (Element x = 0; x < labels.size(); ++x) labels[x] = r.class_of(phi(x));
  Congruence out = Congruence::from_labels(labels);
  if (ideal_of(phi.source(), out) != phi.preimage(ideal_of(target, r))) {
    throw Error(ErrorCode::InvariantViolation, "I(pullback) differs from the preimage of I(R)");
  }
  return out;
}

}  // namespace b1
