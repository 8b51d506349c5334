// One PASS/FAIL line per acceptance criterion. Expected values come from
// brute-force oracles defined here and in fixtures.hpp; the library is only
// the system under test.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "b1/classify.hpp"
#include "b1/congruences.hpp"
#include "b1/ideals.hpp"
#include "b1/monoid.hpp"
#include "b1/theorems.hpp"
#include "b1/topology.hpp"
#include "fixtures.hpp"

using namespace b1;
namespace orc = fx::oracle;

namespace {

using Labels = std::vector<int>;
using Mask = std::uint64_t;

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    failed_ |= !ok;
  }
  bool ok() const { return !failed_; }
  std::size_t checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::size_t checks_ = 0;
  bool failed_ = false;
  std::vector<std::string> failures_;
};

struct Item {
  std::string name;
  Algebra algebra;
};

std::string set_str(ElementSet s) {
  std::ostringstream o;
  o << '{';
  bool first = true;
  for (Element x : s.elements()) {
    o << (first ? "" : ",") << x;
    first = false;
  }
  o << '}';
  return o.str();
}

// ---- oracles ----

Labels labels_of(const Congruence& r) { return orc::normalize({r.class_ids().begin(), r.class_ids().end()}); }

bool trivial(const Labels& l) {
  return std::all_of(l.begin(), l.end(), [](int x) { return x == 0; });
}

bool finer(const Labels& r, const Labels& s) {
  for (std::size_t x = 0; x < r.size(); ++x) {
    for (std::size_t y = 0; y < r.size(); ++y) {
      if (r[x] == r[y] && s[x] != s[y]) return false;
    }
  }
  return true;
}

ElementSet zero_class(const Labels& l) {
  ElementSet out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l[x] == l[0]) out.insert(static_cast<Element>(x));
  }
  return out;
}

std::vector<Labels> partition_scan(const Algebra& a) {
  std::vector<Labels> out;
  Labels labels(a.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, int max) -> void {
    if (i == a.size()) {
      if (orc::compatible(a, labels)) out.push_back(labels);
      return;
    }
    for (int l = 0; l <= max + 1; ++l) {
      labels[i] = l;
      self(self, i + 1, std::max(max, l));
    }
  };
  rec(rec, 1, 0);
  return out;
}

std::set<Labels> maximal_by_scan(const std::vector<Labels>& all) {
  std::set<Labels> out;
  for (const Labels& r : all) {
    if (trivial(r)) continue;
    bool maximal = true;
    for (const Labels& s : all) {
      if (s != r && !trivial(s) && finer(r, s)) maximal = false;
    }
    if (maximal) out.insert(r);
  }
  return out;
}

// least congruence containing r and (x, y), by merging until compatible
Labels close_with(const Algebra& a, Labels r, Element x0, Element y0) {
  const std::size_t n = a.size();
  auto merge = [&](Element x, Element y) {
    int from = r[y], to = r[x];
    if (from == to) return false;
    for (int& l : r) {
      if (l == from) l = to;
    }
    return true;
  };
  merge(x0, y0);
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      for (Element y = x + 1; y < n; ++y) {
        if (r[x] != r[y]) continue;
        for (Element c = 0; c < n; ++c) {
          changed |= merge(a.add(x, c), a.add(y, c));
          changed |= merge(a.mul(x, c), a.mul(y, c));
        }
      }
    }
  }
  return orc::normalize(r);
}

bool maximal_by_closure(const Algebra& a, const Labels& r) {
  if (trivial(r) || !orc::compatible(a, r)) return false;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = x + 1; y < a.size(); ++y) {
      if (r[x] != r[y] && !trivial(close_with(a, r, x, y))) return false;
    }
  }
  return true;
}

Labels alpha_oracle(std::size_t n, ElementSet p) {
  Labels l(n);
  for (Element x = 0; x < n; ++x) l[x] = p.contains(x) ? 0 : 1;
  return orc::normalize(l);
}

Labels r_j_oracle(const Algebra& a, ElementSet j) {
  Labels l(a.size());
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y <= x; ++y) {
      bool related = false;
      for (Element z : j.elements()) related |= a.add(x, z) == a.add(y, z);
      if (related) {
        l[x] = static_cast<int>(y);
        break;
      }
    }
  }
  return orc::normalize(l);
}

ElementSet generated_oracle(const Algebra& a, ElementSet s, const std::vector<ElementSet>& ideals) {
  ElementSet out = a.carrier();
  for (ElementSet i : ideals) {
    if (s.subset_of(i)) out &= i;
  }
  return out;
}

ElementSet product_oracle(const Algebra& a, ElementSet i, ElementSet j, const std::vector<ElementSet>& ideals) {
  ElementSet p;
  for (Element x : i.elements()) {
    for (Element y : j.elements()) p.insert(a.mul(x, y));
  }
  return generated_oracle(a, p, ideals);
}

ElementSet root_oracle(const Algebra& a, ElementSet i) {
  ElementSet out;
  for (Element x = 0; x < a.size(); ++x) {
    Element p = x;
    for (std::size_t k = 0; k <= a.size(); ++k) {
      if (i.contains(p)) out.insert(x);
      p = a.mul(p, x);
    }
  }
  return out;
}

ElementSet meet_all(const Algebra& a, const std::vector<ElementSet>& family) {
  ElementSet out = a.carrier();
  for (ElementSet s : family) out &= s;
  return out;
}

Mask w_mask(const std::vector<ElementSet>& points, ElementSet s) {
  Mask m = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (s.subset_of(points[p])) m |= Mask{1} << p;
  }
  return m;
}

Mask d_mask(const std::vector<ElementSet>& points, Element f) {
  Mask m = 0;
  for (std::size_t p = 0; p < points.size(); ++p) {
    if (!points[p].contains(f)) m |= Mask{1} << p;
  }
  return m;
}

Mask all_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

std::set<Mask> prs_closed_family(const std::vector<ElementSet>& prs, const std::vector<ElementSet>& ideals) {
  std::set<Mask> out;
  for (ElementSet i : ideals) out.insert(w_mask(prs, i));
  return out;
}

Mask closure_in(const std::set<Mask>& family, Mask s, std::size_t n) {
  Mask out = all_mask(n);
  for (Mask c : family) {
    if ((s & ~c) == 0) out &= c;
  }
  return out;
}

std::vector<Monoid> small_monoids(bool with_groups_of_four) {
  std::vector<Monoid> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (Monoid& m : enumerate_monoids(n)) out.push_back(std::move(m));
  }
  if (with_groups_of_four) {
    out.push_back(cyclic_group(4));
    out.push_back(Monoid::build(4, {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0}, 0));
  }
  return out;
}

bool monoid_is_group(const Monoid& m) {
  for (Element x = 0; x < m.size(); ++x) {
    bool unit = false;
    for (Element y = 0; y < m.size(); ++y) unit |= m.op(x, y) == m.identity();
    if (!unit) return false;
  }
  return true;
}

std::vector<ElementSet> deitmar_oracle(const Monoid& m) {
  std::vector<ElementSet> out;
  for (ElementSet p : fx::all_subsets(m.size())) {
    bool ideal = true, prime = p != ElementSet::full(m.size());
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        if (p.contains(x) && !p.contains(m.op(x, y))) ideal = false;
        if (p.contains(m.op(x, y)) && !p.contains(x) && !p.contains(y)) prime = false;
      }
    }
    if (ideal && prime) out.push_back(p);
  }
  return out;
}

const std::vector<Item>& corpus() {
  static const std::vector<Item> items = [] {
    std::vector<Item> out;
    std::size_t k = 0;
    for (const Algebra& a : fx::small_algebras()) out.push_back({"algebra #" + std::to_string(k++), a});
    k = 0;
    for (const MonogenicRecord& r : census(5).records) out.push_back({"census #" + std::to_string(k++), r.algebra});
    k = 0;
    for (const Monoid& m : small_monoids(false)) out.push_back({"F(M) #" + std::to_string(k++), monoid_algebra(m).algebra});
    return out;
  }();
  return items;
}

// ---- criteria ----

void census_counts(Tally& t) {
  auto start = std::chrono::steady_clock::now();
  CensusResult c = census(5);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  t.expect(c.records.size() == 24, "24 classes, got " + std::to_string(c.records.size()));
  t.expect(c.count(MonogenicCase::I) == 6, "case I count " + std::to_string(c.count(MonogenicCase::I)));
  t.expect(c.count(MonogenicCase::II) == 7, "case II count " + std::to_string(c.count(MonogenicCase::II)));
  t.expect(c.count(MonogenicCase::III) == 11, "case III count " + std::to_string(c.count(MonogenicCase::III)));
  t.expect(secs < 60.0, "census took " + std::to_string(secs) + " s");
  for (std::size_t i = 0; i < c.records.size(); ++i) {
    for (std::size_t j = i + 1; j < c.records.size(); ++j) {
      t.expect(!orc::isomorphic(c.records[i].algebra, c.records[j].algebra),
               "records " + std::to_string(i) + " and " + std::to_string(j) + " isomorphic");
    }
  }
}

void case_structure(Tally& t) {
  std::size_t k = 0;
  for (const MonogenicRecord& r : census(5).records) {
    const Algebra& a = r.algebra;
    const Element g = r.generator;
    const std::string name = "census #" + std::to_string(k++);
    ElementSet ga;
    for (Element x = 0; x < a.size(); ++x) ga.insert(a.mul(g, x));
    bool nilpotent = orc::nilradical(a).contains(g);
    bool witness = false;
    for (Element u = 0; u < a.size(); ++u) {
      for (Element v = 0; v < a.size(); ++v) witness |= a.mul(g, u) == a.add(1, a.mul(g, v));
    }
    MonogenicCase expected = nilpotent ? MonogenicCase::I : witness ? MonogenicCase::III : MonogenicCase::II;
    t.expect(r.case_tag == expected, name + ": case tag");
    const auto prs = orc::prs(a);
    switch (expected) {
      case MonogenicCase::I: {
        t.expect(prs == std::vector<ElementSet>{ga}, name + ": Pr_s = {aA}");
        t.expect(orc::nilradical(a) == ga, name + ": Nil = aA");
        Labels rn = r_j_oracle(a, orc::nilradical(a));
        t.expect(orc::compatible(a, rn), name + ": R_Nil compatible");
        t.expect(*std::max_element(rn.begin(), rn.end()) == 1, name + ": A/R_Nil has two elements");
        Algebra q = quotient(a, congruence_from_ideal(a, nilradical(a))).first;
        t.expect(orc::isomorphic(q, fx::b1alg()), name + ": A/R_Nil = B1");
        break;
      }
      case MonogenicCase::II: {
        std::vector<ElementSet> shape{ElementSet{0}, ga};
        std::sort(shape.begin(), shape.end());
        t.expect(ga != ElementSet{0} && prs == shape, name + ": Pr_s = {{0}, aA}");
        auto space = prs_space(a);
        auto it = std::find(space.points.begin(), space.points.end(), ElementSet{0});
        t.expect(it != space.points.end(), name + ": {0} is a point");
        if (it != space.points.end()) {
          Mask pt = Mask{1} << (it - space.points.begin());
          t.expect(space.space.closure(pt) == space.space.all(), name + ": closure({0}) = Pr_s");
          t.expect(closure_in(prs_closed_family(prs, orc::ideals(a)), pt, prs.size()) == all_mask(prs.size()),
                   name + ": closure({0}) = Pr_s (oracle)");
        }
        break;
      }
      case MonogenicCase::III:
        t.expect(prs == std::vector<ElementSet>{ElementSet{0}}, name + ": Pr_s = {{0}}");
        break;
    }
    t.expect(classify_case(a, g) == expected, name + ": classify_case");
  }
}

void alpha_beta(Tally& t) {
  for (const Item& it : corpus()) {
    const Algebra& a = it.algebra;
    const auto prs = orc::prs(a);
    const auto ideals = orc::ideals(a);
    const auto ms = maximal_by_scan(partition_scan(a));
    const std::vector<Labels> ms_list(ms.begin(), ms.end());
    t.expect(enumerate_prs(a) == prs, it.name + ": Pr_s");
    std::set<Labels> lib_ms;
    for (const Congruence& r : maxspec(a)) {
      lib_ms.insert(labels_of(r));
      ElementSet b = beta(a, r);
      t.expect(b == zero_class(labels_of(r)), it.name + ": beta is the zero class");
      t.expect(alpha(a, b) == r, it.name + ": alpha(beta(R)) = R");
    }
    t.expect(lib_ms == ms, it.name + ": MaxSpec");
    std::vector<std::size_t> map;
    for (ElementSet p : prs) {
      Congruence r = alpha(a, p);
      t.expect(labels_of(r) == alpha_oracle(a.size(), p), it.name + ": alpha" + set_str(p));
      t.expect(beta(a, r) == p, it.name + ": beta(alpha(P)) = P");
      auto pos = std::find(ms_list.begin(), ms_list.end(), alpha_oracle(a.size(), p));
      t.expect(pos != ms_list.end(), it.name + ": alpha(P) maximal");
      map.push_back(static_cast<std::size_t>(pos - ms_list.begin()));
    }
    std::set<std::size_t> image(map.begin(), map.end());
    t.expect(image.size() == prs.size() && prs.size() == ms.size(), it.name + ": alpha bijective");

    std::set<Mask> closed_prs = prs_closed_family(prs, ideals), closed_ms;
    for (ElementSet i : ideals) {
      Mask m = 0;
      for (std::size_t r = 0; r < ms_list.size(); ++r) {
        if (i.subset_of(zero_class(ms_list[r]))) m |= Mask{1} << r;
      }
      closed_ms.insert(m);
    }
    std::set<Mask> pushed;
    for (Mask c : closed_prs) {
      Mask m = 0;
      for (std::size_t p = 0; p < map.size(); ++p) {
        if ((c >> p & 1) && map[p] < 64) m |= Mask{1} << map[p];
      }
      pushed.insert(m);
    }
    t.expect(pushed == closed_ms, it.name + ": alpha carries closed sets onto closed sets");

    auto ps = prs_space(a);
    auto mss = maxspec_space(a);
    std::vector<std::size_t> lib_map;
    for (ElementSet p : ps.points) {
      auto pos = std::find(mss.points.begin(), mss.points.end(), alpha(a, p));
      lib_map.push_back(static_cast<std::size_t>(pos - mss.points.begin()));
    }
    t.expect(is_homeomorphism(ps.space, mss.space, lib_map), it.name + ": library homeomorphism");
  }
}

void nilradical_identities(Tally& t) {
  for (const Item& it : corpus()) {
    const Algebra& a = it.algebra;
    const auto ideals = orc::ideals(a);
    const auto pr = orc::pr(a);
    const auto prs = orc::prs(a);
    const ElementSet nil = orc::nilradical(a);
    t.expect(nilradical(a) == nil, it.name + ": Nil");
    t.expect(meet_all(a, pr) == nil, it.name + ": Nil = meet of Pr");
    t.expect(meet_all(a, prs) == nil, it.name + ": Nil = meet of Pr_s");
    for (ElementSet i : ideals) {
      if (orc::saturation(a, i) != i) continue;
      std::vector<ElementSet> above;
      for (ElementSet p : prs) {
        if (i.subset_of(p)) above.push_back(p);
      }
      const ElementSet expected = root_oracle(a, i);
      t.expect(meet_all(a, above) == expected, it.name + ": r(" + set_str(i) + ") = meet of Pr_s above it");
      t.expect(root(a, i) == expected, it.name + ": root(" + set_str(i) + ")");
    }
  }
}

void topology(Tally& t) {
  for (const Item& it : corpus()) {
    const Algebra& a = it.algebra;
    const auto ideals = orc::ideals(a);
    const auto prs = orc::prs(a);
    const std::size_t n = prs.size();
    const std::set<Mask> closed = prs_closed_family(prs, ideals);

    SpectralReport rep = spectral_report(a);
    t.expect(rep.spectral(), it.name + ": spectral verdict");
    t.expect(rep.t0 && rep.sober && rep.quasi_compact && rep.basic_opens_form_basis && rep.intersection_stable,
             it.name + ": report components");
    auto space = prs_space(a);
    t.expect(space.points == prs, it.name + ": points");
    t.expect(std::set<Mask>(space.space.closed_sets.begin(), space.space.closed_sets.end()) == closed,
             it.name + ": closed sets");

    std::set<Mask> point_closures;
    for (std::size_t p = 0; p < n; ++p) point_closures.insert(closure_in(closed, Mask{1} << p, n));
    t.expect(point_closures.size() == n, it.name + ": T0");

    std::size_t irreducible = 0;
    for (Mask c : closed) {
      if (c == 0) continue;
      bool reducible = false;
      for (Mask x : closed) {
        for (Mask y : closed) reducible |= x != c && y != c && (x | y) == c;
      }
      if (reducible) continue;
      ++irreducible;
      std::size_t generic = 0, which = 0;
      for (std::size_t p = 0; p < n; ++p) {
        if (closure_in(closed, Mask{1} << p, n) == c) {
          ++generic;
          which = p;
        }
      }
      t.expect(generic == 1, it.name + ": unique generic point");
      bool reported = std::any_of(rep.generic_points.begin(), rep.generic_points.end(),
                                  [&](const GenericPoint& g) { return g.closed_set == c && g.point == which; });
      t.expect(reported, it.name + ": generic point reported");
    }
    t.expect(rep.generic_points.size() == irreducible, it.name + ": generic point count");

    for (Mask c : closed) {
      Mask open = all_mask(n) & ~c, covered = 0;
      for (Element f = 0; f < a.size(); ++f) {
        Mask d = d_mask(prs, f);
        if ((d & ~open) == 0) covered |= d;
      }
      t.expect(covered == open, it.name + ": D(f) basis");
    }
    for (Element f = 0; f < a.size(); ++f) {
      for (Element g = 0; g < a.size(); ++g) {
        t.expect((d_mask(prs, f) & d_mask(prs, g)) == d_mask(prs, a.mul(f, g)), it.name + ": D(f) & D(g) = D(fg)");
      }
    }
    for (ElementSet i : ideals) {
      for (ElementSet j : ideals) {
        t.expect((w_mask(prs, i) | w_mask(prs, j)) == w_mask(prs, product_oracle(a, i, j, ideals)),
                 it.name + ": W(I) | W(J) = W(IJ)");
      }
    }

    for (ElementSet s : fx::all_subsets(a.size())) {
      const auto fs = s.elements();
      Mask cover = 0;
      for (Element f : fs) cover |= d_mask(prs, f);
      if (cover != all_mask(n)) {
        bool threw = false;
        try {
          extract_finite_subcover(a, fs);
        } catch (const Error&) {
          threw = true;
        }
        t.expect(threw, it.name + ": non-cover " + set_str(s) + " rejected");
        continue;
      }
      try {
        const auto sub = extract_finite_subcover(a, fs);
        Mask got = 0;
        for (Element f : sub) got |= d_mask(prs, f);
        t.expect(got == all_mask(n) && std::includes(fs.begin(), fs.end(), sub.begin(), sub.end()),
                 it.name + ": subcover of " + set_str(s));
      } catch (const Error& e) {
        t.expect(false, it.name + ": subcover of " + set_str(s) + " threw " + e.what());
      }
    }
  }
}

void closed_subspaces(Tally& t) {
  for (const Item& it : corpus()) {
    const Algebra& a = it.algebra;
    const auto ideals = orc::ideals(a);
    const auto prs = orc::prs(a);
    std::set<Mask> seen;
    for (ElementSet i : ideals) {
      const Mask f = w_mask(prs, i);
      if (f == 0 || !seen.insert(f).second) continue;
      const std::string name = it.name + " F=W(" + set_str(i) + ")";
      std::vector<ElementSet> f_points;
      for (std::size_t p = 0; p < prs.size(); ++p) {
        if (f >> p & 1) f_points.push_back(prs[p]);
      }
      try {
        auto h = closed_subspace_homeo(a, i);
        const Algebra& b = h.quotient;
        t.expect(h.ideal == orc::saturation(a, i), name + ": I = sat(I)");
        t.expect(h.closed_set.points == f_points, name + ": points of F");
        Labels rj = r_j_oracle(a, orc::saturation(a, i));
        for (Element x = 0; x < a.size(); ++x) {
          for (Element y = 0; y < a.size(); ++y) {
            t.expect((h.projection(x) == h.projection(y)) == (rj[x] == rj[y]), name + ": quotient by R_I");
          }
        }
        const auto qprs = orc::prs(b);
        t.expect(h.quotient_spectrum.points == qprs, name + ": Pr_s(B)");
        t.expect(h.psi.size() == qprs.size() && qprs.size() == f_points.size(), name + ": sizes");
        std::set<std::size_t> image;
        for (std::size_t q = 0; q < h.psi.size() && q < qprs.size(); ++q) {
          ElementSet pre;
          for (Element x = 0; x < a.size(); ++x) {
            if (qprs[q].contains(h.projection(x))) pre.insert(x);
          }
          t.expect(h.psi[q] < f_points.size() && f_points[h.psi[q]] == pre, name + ": psi(Q) = preimage");
          image.insert(h.psi[q]);
        }
        t.expect(image.size() == f_points.size(), name + ": psi bijective");
        std::set<Mask> closed_f, pushed;
        for (ElementSet j : ideals) closed_f.insert(w_mask(f_points, j));
        for (ElementSet k : orc::ideals(b)) {
          Mask c = w_mask(qprs, k), m = 0;
          for (std::size_t q = 0; q < h.psi.size(); ++q) {
            if (c >> q & 1) m |= Mask{1} << h.psi[q];
          }
          pushed.insert(m);
        }
        t.expect(pushed == closed_f, name + ": psi carries closed sets onto closed sets");
      } catch (const Error& e) {
        t.expect(false, name + ": threw " + e.what());
      }
    }
  }
}

void monoids(Tally& t) {
  std::size_t k = 0;
  for (const Monoid& m : small_monoids(true)) {
    const std::string name = "monoid #" + std::to_string(k++) + " (size " + std::to_string(m.size()) + ")";
    const MonoidAlgebra f = monoid_algebra(m);
    const Algebra& a = f.algebra;
    const Budget budget{a.size()};
    const auto spec_d = deitmar_oracle(m);
    t.expect(deitmar_spectrum(m) == spec_d, name + ": Deitmar spectrum");

    std::set<Labels> ms;
    if (a.size() <= 8) {
      ms = maximal_by_scan(partition_scan(a));
    } else {
      for (ElementSet p : orc::prs(a)) ms.insert(alpha_oracle(a.size(), p));
      for (const Labels& r : ms) t.expect(maximal_by_closure(a, r), name + ": candidate maximal");
    }
    std::set<Labels> lib_ms;
    for (const Congruence& r : maxspec(a, budget)) {
      lib_ms.insert(labels_of(r));
      t.expect(maximal_by_closure(a, labels_of(r)), name + ": library MaxSpec element maximal");
    }
    t.expect(lib_ms == ms, name + ": MaxSpec(F(M))");

    std::set<Labels> images;
    for (ElementSet p : spec_d) {
      ElementSet componentwise;
      for (std::size_t c = 0; c < f.components.size(); ++c) {
        if (f.components[c].subset_of(p)) componentwise.insert(static_cast<Element>(c));
      }
      t.expect(tilde(m, f, p) == componentwise, name + ": tilde" + set_str(p));
      Labels r = labels_of(psi(m, f, p));
      t.expect(r == alpha_oracle(a.size(), componentwise), name + ": psi" + set_str(p));
      t.expect(ms.count(r) == 1, name + ": psi(P) maximal");
      images.insert(r);
    }
    t.expect(images.size() == spec_d.size() && images == ms, name + ": psi bijective");
    if (monoid_is_group(m)) t.expect(ms.size() == 1, name + ": group has one maximal congruence");
  }
  const Algebra c2 = monoid_algebra(cyclic_group(2)).algebra;
  t.expect(orc::prs(c2) == std::vector<ElementSet>{ElementSet{0}}, "Pr_s(F(C2)) = {{0}}");
  t.expect(enumerate_prs(c2) == std::vector<ElementSet>{ElementSet{0}}, "library Pr_s(F(C2)) = {{0}}");
}

void functoriality(Tally& t) {
  std::vector<const Item*> small;
  for (const Item& it : corpus()) {
    if (it.algebra.size() <= 4) small.push_back(&it);
  }
  for (const Item* src : small) {
    const Algebra& a = src->algebra;
    const auto ms_a = maximal_by_scan(partition_scan(a));
    const auto prs_a = orc::prs(a);
    for (const Item* dst : small) {
      const Algebra& c = dst->algebra;
      const std::string pair = src->name + " -> " + dst->name;
      const auto ideals_c = orc::ideals(c);
      const auto ms_c = maximal_by_scan(partition_scan(c));
      const auto prs_c = orc::prs(c);

      std::set<std::vector<Element>> expected;
      std::vector<Element> map(a.size(), 0);
      map[1] = 1;
      std::size_t total = 1;
      for (std::size_t i = 2; i < a.size(); ++i) total *= c.size();
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t rest = code;
        for (std::size_t i = 2; i < a.size(); ++i) {
          map[i] = static_cast<Element>(rest % c.size());
          rest /= c.size();
        }
        bool hom = true;
        for (Element x = 0; x < a.size() && hom; ++x) {
          for (Element y = 0; y < a.size() && hom; ++y) {
            hom = map[a.add(x, y)] == c.add(map[x], map[y]) && map[a.mul(x, y)] == c.mul(map[x], map[y]);
          }
        }
        if (hom) expected.insert(map);
      }
      const auto morphisms = enumerate_morphisms(a, c);
      std::set<std::vector<Element>> found;
      for (const Morphism& phi : morphisms) {
        std::vector<Element> m(a.size());
        for (Element x = 0; x < a.size(); ++x) m[x] = phi(x);
        found.insert(m);
      }
      t.expect(found == expected, pair + ": morphisms");

      for (const Morphism& phi : morphisms) {
        auto preimage = [&](ElementSet s) {
          ElementSet out;
          for (Element x = 0; x < a.size(); ++x) {
            if (s.contains(phi(x))) out.insert(x);
          }
          return out;
        };
        auto pull = [&](const Labels& r) {
          Labels l(a.size());
          for (Element x = 0; x < a.size(); ++x) l[x] = r[phi(x)];
          return orc::normalize(l);
        };
        for (ElementSet j : ideals_c) {
          Labels rj = r_j_oracle(c, j);
          Labels pulled = pull(rj);
          t.expect(finer(r_j_oracle(a, preimage(j)), pulled), pair + ": refinement for J=" + set_str(j));
          t.expect(labels_of(pullback(phi, congruence_from_ideal(c, j))) == pulled, pair + ": library pullback");
        }
        for (const Labels& r : ms_c) t.expect(ms_a.count(pull(r)) == 1, pair + ": pullback of maximal is maximal");
        for (ElementSet p : prs_c) {
          ElementSet q = preimage(p);
          t.expect(std::find(prs_a.begin(), prs_a.end(), q) != prs_a.end(), pair + ": preimage in Pr_s");
          t.expect(pull(alpha_oracle(c.size(), p)) == alpha_oracle(a.size(), q), pair + ": square commutes");
          t.expect(pullback(phi, alpha(c, p)) == alpha(a, q), pair + ": library square");
        }
      }
    }
  }
}

void oracle_cross_validation(Tally& t) {
  std::vector<Item> algebras;
  std::size_t k = 0;
  for (const Algebra& a : fx::small_algebras()) algebras.push_back({"algebra #" + std::to_string(k++), a});
  for (Algebra& a : enumerate_algebras(5)) algebras.push_back({"algebra #" + std::to_string(k++), std::move(a)});
  CheckOptions options;
  options.oracle = true;
  for (const Item& it : algebras) {
    const Algebra& a = it.algebra;
    for (const Verdict& v : check_theorems(a, options)) {
      bool is_oracle = std::find(oracle_tags().begin(), oracle_tags().end(), v.tag) != oracle_tags().end();
      if (is_oracle) t.expect(v.status == VerdictStatus::Pass, it.name + ": " + v.tag + " " + v.detail);
      else t.expect(v.status != VerdictStatus::Fail, it.name + ": " + v.tag + " " + v.detail);
    }
    const auto scan = partition_scan(a);
    std::set<Labels> lattice;
    for (const Congruence& r : enumerate_congruences(a)) lattice.insert(labels_of(r));
    t.expect(lattice == std::set<Labels>(scan.begin(), scan.end()), it.name + ": closure enumeration = scan");
    for (ElementSet j : orc::ideals(a)) {
      const Labels* least = nullptr;
      for (const Labels& r : scan) {
        if (!j.subset_of(zero_class(r))) continue;
        if (least == nullptr || finer(r, *least)) least = &r;
      }
      bool is_least = least != nullptr;
      for (const Labels& r : scan) {
        if (is_least && j.subset_of(zero_class(r))) is_least = finer(*least, r);
      }
      t.expect(is_least, it.name + ": least congruence over " + set_str(j));
      if (!is_least) continue;
      t.expect(zero_class(*least) == orc::saturation(a, j), it.name + ": sat(" + set_str(j) + ")");
      t.expect(saturation(a, j) == orc::saturation(a, j), it.name + ": library sat(" + set_str(j) + ")");
    }
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* title;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria{
      {"census --max-card 5 gives 24 classes split 6/7/11", census_counts},
      {"case structure of every census record", case_structure},
      {"alpha and beta are inverse bijections and alpha is a homeomorphism", alpha_beta},
      {"nilradical and root identities", nilradical_identities},
      {"Pr_s is a spectral space with constructive subcovers", topology},
      {"closed subsets of Pr_s are spectra of quotients", closed_subspaces},
      {"psi_M is a bijection onto MaxSpec(F(M))", monoids},
      {"pullback refinement and commuting square for every morphism", functoriality},
      {"oracle cross-validation on all algebras of size <= 5", oracle_cross_validation},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    std::string error;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = t.ok() && error.empty();
    failed += ok ? 0 : 1;
    std::printf("%s criterion %zu: %s (%zu checks, %.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].title,
                t.checks(), secs);
    for (const std::string& f : t.failures()) std::printf("    %s\n", f.c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
