#include "b1/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "b1/ideals.hpp"

namespace b1 {

ElementSet generated_subalgebra(const Algebra& a, ElementSet gens) {
  ElementSet s = gens | ElementSet{Algebra::zero, a.unit()};
  for (ElementSet prev; prev != s;) {
    prev = s;
    for (Element x : prev.elements()) {
      for (Element y : prev.elements()) {
        s.insert(a.add(x, y));
        s.insert(a.mul(x, y));
      }
    }
  }
  return s;
}

bool is_generated_by(const Algebra& a, Element g) {
  if (g >= a.size()) throw Error(ErrorCode::BadTable, "generator out of range", {g});
  return generated_subalgebra(a, ElementSet::singleton(g)) == a.carrier();
}

std::string_view to_string(MonogenicCase c) {
  switch (c) {
    case MonogenicCase::I: return "I";
    case MonogenicCase::II: return "II";
    case MonogenicCase::III: return "III";
  }
  return "?";
}

MonogenicCase classify_case(const Algebra& a, Element g) {
  if (g >= a.size()) throw Error(ErrorCode::BadTable, "generator out of range", {g});
  if (g == Algebra::zero || g == a.unit()) throw Error(ErrorCode::TrivialGenerator, "generator must differ from 0 and 1", {g});
  if (!is_generated_by(a, g)) throw Error(ErrorCode::NotMonogenic, "element does not generate the algebra", {g});
  if (is_nilpotent(a, g)) return MonogenicCase::I;
  for (Element u = 0; u < a.size(); ++u) {
    for (Element v = 0; v < a.size(); ++v) {
      if (a.mul(g, u) == a.add(Algebra::one, a.mul(g, v))) return MonogenicCase::III;
    }
  }
  return MonogenicCase::II;
}

// ---------------------------------------------------------------------------
// Lattices

namespace {

// leq[x * n + y] for a partial order on {0..n-1} with 0 as bottom.
using Order = std::vector<char>;

bool transitive(const Order& leq, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq[x * n + y]) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[y * n + z] && !leq[x * n + z]) return false;
      }
    }
  }
  return true;
}

std::optional<Table> join_table(const Order& leq, std::size_t n) {
  Table join(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::optional<std::size_t> least;
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq[x * n + z] || !leq[y * n + z]) continue;
        if (!least || leq[z * n + *least]) least = z;
      }
      if (!least) return std::nullopt;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[x * n + z] && leq[y * n + z] && !leq[*least * n + z]) return std::nullopt;
      }
      join[x * n + y] = static_cast<Element>(*least);
    }
  }
  return join;
}

void search_orders(std::size_t n, Order& leq, std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                   std::size_t k, std::vector<Table>& out) {
  if (k == pairs.size()) {
    if (!transitive(leq, n)) return;
    if (auto join = join_table(leq, n)) out.push_back(std::move(*join));
    return;
  }
  auto [x, y] = pairs[k];
  for (int rel = 0; rel < 3; ++rel) {
    leq[x * n + y] = rel == 1;
    leq[y * n + x] = rel == 2;
    search_orders(n, leq, pairs, k + 1, out);
  }
  leq[x * n + y] = leq[y * n + x] = 0;
}

// Least relabelling of a join table over permutations fixing 0 and 1.
Table canonical_join(const Table& join, std::size_t n) {
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  Table best = join;
  if (n <= 2) return best;
  do {
    Table t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) t[perm[x] * n + perm[y]] = perm[join[x * n + y]];
    }
    best = std::min(best, t);
  } while (std::next_permutation(perm.begin() + 2, perm.end()));
  return best;
}

constexpr Element kUnset = 0xFFFF;

bool consistent(const Table& add, const Table& mul, std::size_t n) {
  auto m = [&](Element x, Element y) { return mul[x * n + y]; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element xy = m(x, y);
      for (Element z = 0; z < n; ++z) {
        Element yz = m(y, z);
        if (xy != kUnset && yz != kUnset) {
          Element l = m(xy, z), r = m(x, yz);
          if (l != kUnset && r != kUnset && l != r) return false;
        }
        Element xz = m(x, z);
        Element lhs = m(x, add[y * n + z]);
        if (xy != kUnset && xz != kUnset && lhs != kUnset && lhs != add[xy * n + xz]) return false;
      }
    }
  }
  return true;
}

void search_multiplications(std::size_t n, const Table& add, Table& mul,
                            const std::vector<std::pair<Element, Element>>& cells, std::size_t k,
                            std::vector<Table>& out) {
  if (k == cells.size()) {
    out.push_back(mul);
    return;
  }
  auto [x, y] = cells[k];
  for (Element v = 0; v < n; ++v) {
    mul[x * n + y] = mul[y * n + x] = v;
    if (consistent(add, mul, n)) search_multiplications(n, add, mul, cells, k + 1, out);
  }
  mul[x * n + y] = mul[y * n + x] = kUnset;
}

void require_census_size(std::size_t n) {
  if (n > kMaxCensusCardinality) {
    throw Error(ErrorCode::SizeLimit, "enumeration limited to size " + std::to_string(kMaxCensusCardinality));
  }
}

}  // namespace

std::vector<Table> enumerate_join_tables(std::size_t n) {
  if (n == 0) return {};
  require_census_size(n);
  Order leq(n * n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    leq[x * n + x] = 1;
    leq[x] = 1;  // 0 <= x
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 1; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) pairs.emplace_back(x, y);
  }
  std::vector<Table> out;
  search_orders(n, leq, pairs, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Table> enumerate_multiplications(std::size_t n, const Table& join) {
  if (n < 2) return {};
  require_census_size(n);
  Table mul(n * n, kUnset);
  for (Element x = 0; x < n; ++x) {
    mul[x] = mul[x * n] = 0;
    mul[n + x] = mul[x * n + 1] = x;
  }
  std::vector<std::pair<Element, Element>> cells;
  for (Element x = 2; x < n; ++x) {
    for (Element y = x; y < n; ++y) cells.emplace_back(x, y);
  }
  std::vector<Table> out;
  if (consistent(join, mul, n)) search_multiplications(n, join, mul, cells, 0, out);
  std::vector<Table> valid;
  for (Table& t : out) {
    if (!find_axiom_violation(n, join, t)) valid.push_back(std::move(t));
  }
  return valid;
}

std::vector<Algebra> enumerate_algebras(std::size_t n) {
  if (n < 2) return {};
  require_census_size(n);
  std::set<Table> joins;
  for (const Table& j : enumerate_join_tables(n)) joins.insert(canonical_join(j, n));

  std::set<CanonicalForm> forms;
  for (const Table& join : joins) {
    for (Table& mul : enumerate_multiplications(n, join)) {
      forms.insert(canonical_form(Algebra::build(n, join, std::move(mul))));
    }
  }
  std::vector<Algebra> out;
  for (const CanonicalForm& f : forms) out.push_back(Algebra::build(f.size, f.add, f.mul));
  return out;
}

// ---------------------------------------------------------------------------
// Census

bool MonogenicRecord::generator_independent() const {
  return std::all_of(generator_cases.begin(), generator_cases.end(),
                     [&](const auto& gc) { return gc.second == case_tag; });
}

std::size_t CensusResult::count(std::size_t cardinality, MonogenicCase c) const {
  return static_cast<std::size_t>(std::count_if(records.begin(), records.end(), [&](const MonogenicRecord& r) {
    return r.algebra.size() == cardinality && r.case_tag == c;
  }));
}

std::size_t CensusResult::count(MonogenicCase c) const {
  return static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [&](const MonogenicRecord& r) { return r.case_tag == c; }));
}

std::vector<const MonogenicRecord*> CensusResult::discrepancies() const {
  std::vector<const MonogenicRecord*> out;
  for (const MonogenicRecord& r : records) {
    if (!r.generator_independent()) out.push_back(&r);
  }
  return out;
}

CensusResult census(std::size_t max_card) {
  if (max_card < 3 || max_card > kMaxCensusCardinality) {
    throw Error(ErrorCode::SizeLimit, "census cardinality must be in [3, " + std::to_string(kMaxCensusCardinality) + "]");
  }
  CensusResult result;
  for (std::size_t n = 3; n <= max_card; ++n) {
    const Budget budget{std::max(n, Budget{}.max_size)};
    for (const Algebra& a : enumerate_algebras(n)) {
      std::vector<std::pair<Element, MonogenicCase>> cases;
      for (Element g = 2; g < n; ++g) {
        if (is_generated_by(a, g)) cases.emplace_back(g, classify_case(a, g));
      }
      if (cases.empty()) continue;
      result.records.push_back({a, cases.front().first, cases.front().second, enumerate_prs(a, budget), std::move(cases)});
    }
  }
  return result;
}

}  // namespace b1
