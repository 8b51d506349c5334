#include "b1/ideals.hpp"

#include <algorithm>
#include <set>

namespace b1 {

namespace {

void require_ideal(const Algebra& a, ElementSet s, const char* who) {
  if (!is_ideal(a, s)) throw Error(ErrorCode::NotAnIdeal, std::string(who) + " needs an ideal");
}

ElementSet close_under_addition(const Algebra& a, ElementSet s) {
  for (bool grew = true; grew;) {
    grew = false;
    const auto members = s.elements();
    for (Element x : members) {
      for (Element y : members) {
        Element z = a.add(x, y);
        if (!s.contains(z)) {
          s.insert(z);
          grew = true;
        }
      }
    }
  }
  return s;
}

}  // namespace

bool is_ideal(const Algebra& a, ElementSet s) {
  if (!s.subset_of(a.carrier()) || !s.contains(Algebra::zero)) return false;
  const auto members = s.elements();
  for (Element y : members) {
    for (Element x : members) {
      if (!s.contains(a.add(x, y))) return false;
    }
    for (Element x = 0; x < a.size(); ++x) {
      if (!s.contains(a.mul(x, y))) return false;
    }
  }
  return true;
}

ElementSet ideal_generated(const Algebra& a, ElementSet s) {
  // finite sums of multiples a_j s_j
  ElementSet multiples = ElementSet::singleton(Algebra::zero);
  for (Element g : s.elements()) {
    for (Element x = 0; x < a.size(); ++x) multiples.insert(a.mul(x, g));
  }
  return close_under_addition(a, multiples);
}

ElementSet principal_ideal(const Algebra& a, Element x) { return ideal_generated(a, ElementSet::singleton(x)); }

ElementSet saturation(const Algebra& a, ElementSet ideal) {
  require_ideal(a, ideal, "saturation");
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element z : ideal.elements()) {
      if (a.add(x, z) == z) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

bool is_saturated(const Algebra& a, ElementSet ideal) { return saturation(a, ideal) == ideal; }

bool is_prime_ideal(const Algebra& a, ElementSet ideal) {
  require_ideal(a, ideal, "is_prime_ideal");
  if (ideal == a.carrier()) return false;
  for (Element x = 0; x < a.size(); ++x) {
    if (ideal.contains(x)) continue;
    for (Element y = x; y < a.size(); ++y) {
      if (!ideal.contains(y) && ideal.contains(a.mul(x, y))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> enumerate_ideals(const Algebra& a, const Budget& budget) {
  require_within(budget, a.size(), "ideal enumeration");
  // Every ideal is the sum of the principal ideals of its members.
  std::set<ElementSet> principal;
  for (Element x = 0; x < a.size(); ++x) principal.insert(principal_ideal(a, x));

  std::set<ElementSet> ideals(principal.begin(), principal.end());
  std::vector<ElementSet> frontier(principal.begin(), principal.end());
  while (!frontier.empty()) {
    ElementSet i = frontier.back();
    frontier.pop_back();
    for (ElementSet p : principal) {
      if (p.subset_of(i)) continue;
      ElementSet sum = close_under_addition(a, i | p);
      if (ideals.insert(sum).second) frontier.push_back(sum);
    }
  }
  return {ideals.begin(), ideals.end()};
}

std::vector<ElementSet> enumerate_saturated_ideals(const Algebra& a, const Budget& budget) {
  std::vector<ElementSet> out;
  for (ElementSet i : enumerate_ideals(a, budget)) {
    if (is_saturated(a, i)) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> enumerate_pr(const Algebra& a, const Budget& budget) {
  std::vector<ElementSet> out;
  for (ElementSet i : enumerate_ideals(a, budget)) {
    if (is_prime_ideal(a, i)) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> enumerate_prs(const Algebra& a, const Budget& budget) {
  std::vector<ElementSet> out;
  for (ElementSet p : enumerate_pr(a, budget)) {
    if (is_saturated(a, p)) out.push_back(p);
  }
  return out;
}

ElementSet ideal_sum(const Algebra& a, ElementSet i, ElementSet j) {
  require_ideal(a, i, "ideal_sum");
  require_ideal(a, j, "ideal_sum");
  return close_under_addition(a, i | j);
}

ElementSet ideal_product(const Algebra& a, ElementSet i, ElementSet j) {
  require_ideal(a, i, "ideal_product");
  require_ideal(a, j, "ideal_product");
  ElementSet products;
  for (Element x : i.elements()) {
    for (Element y : j.elements()) products.insert(a.mul(x, y));
  }
  return ideal_generated(a, products);
}

std::vector<Element> power_sequence(const Algebra& a, Element x) {
  std::vector<Element> out;
  ElementSet seen;
  for (Element p = x; !seen.contains(p); p = a.mul(p, x)) {
    seen.insert(p);
    out.push_back(p);
  }
  return out;
}

bool is_nilpotent(const Algebra& a, Element x) {
  const auto powers = power_sequence(a, x);
  return std::find(powers.begin(), powers.end(), Algebra::zero) != powers.end();
}

ElementSet nilradical(const Algebra& a) {
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    if (is_nilpotent(a, x)) out.insert(x);
  }
  return out;
}

ElementSet root(const Algebra& a, ElementSet ideal) {
  require_ideal(a, ideal, "root");
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    const auto powers = power_sequence(a, x);
    if (std::any_of(powers.begin(), powers.end(), [&](Element p) { return ideal.contains(p); })) out.insert(x);
  }
  if (!is_ideal(a, out)) throw Error(ErrorCode::InvariantViolation, "root is not an ideal");
  return out;
}

ElementSet intersection_of(const Algebra& a, std::span<const ElementSet> family) {
  ElementSet out = a.carrier();
  for (ElementSet s : family) out &= s;
  return out;
}

}  // namespace b1
