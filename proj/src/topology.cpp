#include "b1/topology.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>

#include "b1/ideals.hpp"

namespace b1 {

namespace {

constexpr PointSet point(std::size_t i) { return PointSet{1} << i; }

void require_points(std::size_t count) {
  if (count > kMaxPoints) {
    throw Error(ErrorCode::SizeLimit, "spectrum has " + std::to_string(count) + " points, more than " +
                                          std::to_string(kMaxPoints));
  }
}

// Closed sets of a spectrum whose points are ideals: one per ideal I of A,
// the points containing I.
FiniteSpace ideal_point_space(const Algebra& a, std::span<const ElementSet> points, const Budget& budget) {
  require_points(points.size());
  std::vector<PointSet> family;
  for (ElementSet i : enumerate_ideals(a, budget)) {
    PointSet closed = 0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (i.subset_of(points[p])) closed |= point(p);
    }
    family.push_back(closed);
  }
  return FiniteSpace::from_closed_sets(points.size(), std::move(family));
}

PointSet basic_open_points(const Algebra& a, std::span<const ElementSet> prs, Element f) {
  (void)a;
  PointSet out = 0;
  for (std::size_t p = 0; p < prs.size(); ++p) {
    if (!prs[p].contains(f)) out |= point(p);
  }
  return out;
}

PointSet closed_points(std::span<const ElementSet> prs, ElementSet s) {
  PointSet out = 0;
  for (std::size_t p = 0; p < prs.size(); ++p) {
    if (s.subset_of(prs[p])) out |= point(p);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteSpace

FiniteSpace FiniteSpace::from_closed_sets(std::size_t num_points, std::vector<PointSet> family) {
  require_points(num_points);
  FiniteSpace x{num_points, {}};
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  x.closed_sets = std::move(family);
  for (PointSet c : x.closed_sets) {
    if ((c & ~x.all()) != 0) throw Error(ErrorCode::InvariantViolation, "closed set outside the space");
  }
  if (!x.is_closed(0) || !x.is_closed(x.all())) {
    throw Error(ErrorCode::InvariantViolation, "empty set and whole space must be closed");
  }
  for (PointSet c : x.closed_sets) {
    for (PointSet d : x.closed_sets) {
      if (!x.is_closed(c | d) || !x.is_closed(c & d)) {
        throw Error(ErrorCode::InvariantViolation, "closed sets not stable under union and intersection");
      }
    }
  }
  return x;
}

bool FiniteSpace::is_closed(PointSet s) const { return std::binary_search(closed_sets.begin(), closed_sets.end(), s); }

PointSet FiniteSpace::closure(PointSet s) const {
  PointSet out = all();
  for (PointSet c : closed_sets) {
    if ((s & ~c) == 0) out &= c;
  }
  return out;
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  std::vector<PointSet> out;
  for (PointSet c : closed_sets) out.push_back(all() & ~c);
  std::sort(out.begin(), out.end());
  return out;
}

bool check_t0(const FiniteSpace& x) {
  std::vector<PointSet> closures;
  for (std::size_t p = 0; p < x.num_points; ++p) closures.push_back(x.closure(point(p)));
  std::sort(closures.begin(), closures.end());
  return std::adjacent_find(closures.begin(), closures.end()) == closures.end();
}

std::vector<GenericPoint> sober_report(const FiniteSpace& x) {
  std::vector<GenericPoint> out;
  for (PointSet c : x.closed_sets) {
    if (c == 0) continue;
    bool reducible = false;
    for (PointSet c1 : x.closed_sets) {
      if (c1 == c || (c1 & ~c) != 0) continue;
      for (PointSet c2 : x.closed_sets) {
        if (c2 != c && (c2 & ~c) == 0 && (c1 | c2) == c) {
          reducible = true;
          break;
        }
      }
      if (reducible) break;
    }
    if (reducible) continue;

    std::optional<std::size_t> generic;
    for (std::size_t p = 0; p < x.num_points; ++p) {
      if ((c & point(p)) == 0 || x.closure(point(p)) != c) continue;
      if (generic) {
        throw Error(ErrorCode::NotSober, "irreducible closed set with two generic points",
                    {static_cast<Element>(*generic), static_cast<Element>(p)});
      }
      generic = p;
    }
    if (!generic) throw Error(ErrorCode::NotSober, "irreducible closed set without a generic point");
    out.push_back({c, *generic});
  }
  return out;
}

bool is_homeomorphism(const FiniteSpace& x, const FiniteSpace& y, std::span<const std::size_t> map) {
  if (map.size() != x.num_points || x.num_points != y.num_points) return false;
  PointSet hit = 0;
  for (std::size_t target : map) {
    if (target >= y.num_points || (hit & point(target)) != 0) return false;
    hit |= point(target);
  }
  std::vector<PointSet> image;
  for (PointSet c : x.closed_sets) {
    PointSet mapped = 0;
    for (std::size_t p = 0; p < x.num_points; ++p) {
      if (c & point(p)) mapped |= point(map[p]);
    }
    image.push_back(mapped);
  }
  std::sort(image.begin(), image.end());
  return image == y.closed_sets;
}

// ---------------------------------------------------------------------------
// Spectra

std::vector<ElementSet> closed_W(const Algebra& a, ElementSet s, const Budget& budget) {
  std::vector<ElementSet> out;
  for (ElementSet p : enumerate_pr(a, budget)) {
    if (s.subset_of(p)) out.push_back(p);
  }
  return out;
}

std::vector<Congruence> closed_V(const Algebra& a, ElementSet s, const Budget& budget) {
  std::vector<Congruence> out;
  for (const Congruence& r : spec(a, budget)) {
    if (s.subset_of(ideal_of(a, r))) out.push_back(r);
  }
  return out;
}

std::vector<ElementSet> basic_open_D(const Algebra& a, Element f, const Budget& budget) {
  std::vector<ElementSet> out;
  for (ElementSet p : enumerate_prs(a, budget)) {
    if (!p.contains(f)) out.push_back(p);
  }
  return out;
}

Spectrum<ElementSet> prs_space(const Algebra& a, const Budget& budget) {
  Spectrum<ElementSet> out;
  out.points = enumerate_prs(a, budget);
  out.space = ideal_point_space(a, out.points, budget);
  return out;
}

Spectrum<ElementSet> pr_space(const Algebra& a, const Budget& budget) {
  Spectrum<ElementSet> out;
  out.points = enumerate_pr(a, budget);
  out.space = ideal_point_space(a, out.points, budget);
  return out;
}

Spectrum<Congruence> maxspec_space(const Algebra& a, const Budget& budget) {
  Spectrum<Congruence> out;
  out.points = maxspec(a, budget);
  std::vector<ElementSet> zero_classes;
  for (const Congruence& r : out.points) zero_classes.push_back(ideal_of(a, r));
  out.space = ideal_point_space(a, zero_classes, budget);
  return out;
}

// ---------------------------------------------------------------------------
// Quasi-compactness witness

namespace {

std::vector<Element> extract_subcover(const Algebra& a, std::span<const Element> generators,
                                      std::span<const ElementSet> prs) {
  if (generators.size() > 32) throw Error(ErrorCode::SizeLimit, "at most 32 generators");
  for (Element g : generators) {
    if (g >= a.size()) throw Error(ErrorCode::BadTable, "generator out of range", {g});
  }

  // For each element of <generators>, the smallest set of generator positions
  // (by count, then bitmask) taking part in some sum a_1 g_1 + ... + a_k g_k
  // equal to it.
  using Mask = std::uint32_t;
  std::vector<std::optional<Mask>> provenance(a.size());
  auto better = [](Mask m, const std::optional<Mask>& current) {
    if (!current) return true;
    int pm = std::popcount(m), pc = std::popcount(*current);
    return pm < pc || (pm == pc && m < *current);
  };
  provenance[Algebra::zero] = Mask{0};
  for (std::size_t i = 0; i < generators.size(); ++i) {
    for (Element x = 0; x < a.size(); ++x) {
      Element term = a.mul(x, generators[i]);
      Mask m = Mask{1} << i;
      if (better(m, provenance[term])) provenance[term] = m;
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < a.size(); ++x) {
      if (!provenance[x]) continue;
      for (Element y = 0; y < a.size(); ++y) {
        if (!provenance[y]) continue;
        Element s = a.add(x, y);
        Mask m = *provenance[x] | *provenance[y];
        if (better(m, provenance[s])) {
          provenance[s] = m;
          changed = true;
        }
      }
    }
  }

  // x with 1 + x = x, i.e. 1 in the saturation of <generators>
  std::optional<Mask> chosen;
  for (Element x = 0; x < a.size(); ++x) {
    if (provenance[x] && a.add(Algebra::one, x) == x && better(*provenance[x], chosen)) chosen = provenance[x];
  }
  if (!chosen) {
    throw Error(ErrorCode::NotACover, "no x in the generated ideal satisfies 1 + x = x");
  }

  std::vector<Element> subcover;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (*chosen & (Mask{1} << i)) subcover.push_back(generators[i]);
  }

  PointSet covered = 0;
  for (Element f : subcover) covered |= basic_open_points(a, prs, f);
  PointSet all = prs.size() == 64 ? ~PointSet{0} : (PointSet{1} << prs.size()) - 1;
  if (covered != all) throw Error(ErrorCode::InvariantViolation, "extracted generators do not cover Pr_s(A)");
  return subcover;
}

}  // namespace

std::vector<Element> extract_finite_subcover(const Algebra& a, std::span<const Element> generators,
                                             const Budget& budget) {
  require_within(budget, a.size(), "subcover extraction");
  return extract_subcover(a, generators, enumerate_prs(a, budget));
}

// ---------------------------------------------------------------------------
// Closed subspaces

ClosedSubspaceHomeomorphism closed_subspace_homeo(const Algebra& a, ElementSet s, const Budget& budget) {
  if (!s.subset_of(a.carrier())) throw Error(ErrorCode::BadTable, "subset outside the carrier");
  const ElementSet ideal = saturation(a, ideal_generated(a, s));
  const Spectrum<ElementSet> prs = prs_space(a, budget);

  std::vector<std::size_t> in_f;
  for (std::size_t p = 0; p < prs.points.size(); ++p) {
    if (s.subset_of(prs.points[p])) in_f.push_back(p);
  }
  if (in_f.empty()) throw Error(ErrorCode::EmptyClosedSet, "Pr_s(A) ∩ W(S) is empty");
  if (closed_points(prs.points, s) != closed_points(prs.points, ideal)) {
    throw Error(ErrorCode::InvariantViolation, "W(S) and W(sat<S>) differ on Pr_s(A)");
  }

  Spectrum<ElementSet> f;
  for (std::size_t p : in_f) f.points.push_back(prs.points[p]);
  std::vector<PointSet> induced;
  for (PointSet c : prs.space.closed_sets) {
    PointSet restricted = 0;
    for (std::size_t k = 0; k < in_f.size(); ++k) {
      if (c & point(in_f[k])) restricted |= point(k);
    }
    induced.push_back(restricted);
  }
  f.space = FiniteSpace::from_closed_sets(in_f.size(), std::move(induced));

  auto [b, pi] = quotient(a, congruence_from_ideal(a, ideal));
  Spectrum<ElementSet> prs_b = prs_space(b, budget);

  std::vector<std::size_t> psi;
  for (ElementSet q : prs_b.points) {
    ElementSet pre = pi.preimage(q);
    auto it = std::find(f.points.begin(), f.points.end(), pre);
    if (it == f.points.end()) {
      throw Error(ErrorCode::InvariantViolation, "preimage of a saturated prime of A/R_I is not in F");
    }
    psi.push_back(static_cast<std::size_t>(it - f.points.begin()));
  }
  if (!is_homeomorphism(prs_b.space, f.space, psi)) {
    throw Error(ErrorCode::InvariantViolation, "Q -> π⁻¹(Q) is not a homeomorphism onto F");
  }
  return {ideal, std::move(f), std::move(b), std::move(pi), std::move(prs_b), std::move(psi)};
}

// ---------------------------------------------------------------------------
// Spectral verdict

SpectralReport spectral_report(const Algebra& a, const Budget& budget) {
  SpectralReport report;
  const Spectrum<ElementSet> prs = prs_space(a, budget);
  const FiniteSpace& x = prs.space;
  const std::size_t n = a.size();

  report.t0 = check_t0(x);
  try {
    report.generic_points = sober_report(x);
    report.sober = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotSober) throw;
  }

  std::vector<PointSet> d(n);
  for (Element f = 0; f < n; ++f) d[f] = basic_open_points(a, prs.points, f);

  // Every cover by basic opens yields a subcover through 1 + x = x, and the
  // mechanism fails exactly on non-covers.
  report.quasi_compact = true;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<Element> fs = ElementSet::from_bits(mask).elements();
    PointSet covered = 0;
    for (Element f : fs) covered |= d[f];
    bool cover = covered == x.all();
    try {
      extract_subcover(a, fs, prs.points);
      if (!cover) report.quasi_compact = false;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotACover) throw;
      if (cover) report.quasi_compact = false;
    }
    if (!report.quasi_compact) break;
  }

  report.basic_opens_form_basis = std::all_of(d.begin(), d.end(), [&](PointSet o) { return x.is_open(o); });
  for (PointSet o : x.open_sets()) {
    PointSet from_basis = 0;
    for (PointSet df : d) {
      if ((df & ~o) == 0) from_basis |= df;
    }
    if (from_basis != o) report.basic_opens_form_basis = false;
  }

  report.finite_type = true;
  for (PointSet o : x.open_sets()) {
    const PointSet complement = x.all() & ~o;
    ElementSet i = a.carrier();
    for (std::size_t p = 0; p < prs.points.size(); ++p) {
      if (complement & point(p)) i &= prs.points[p];
    }
    ElementSet gens;
    for (Element g : i.elements()) {
      if (!ideal_generated(a, gens).contains(g)) gens.insert(g);
    }
    PointSet union_of_d = 0;
    for (Element g : gens.elements()) union_of_d |= d[g];
    if (ideal_generated(a, gens) != i || gens.size() > n || union_of_d != o ||
        closed_points(prs.points, i) != complement) {
      report.finite_type = false;
    }
  }

  report.intersection_stable = true;
  for (Element f = 0; f < n; ++f) {
    for (Element g = 0; g < n; ++g) {
      if ((d[f] & d[g]) != d[a.mul(f, g)]) report.intersection_stable = false;
    }
  }
  const auto ideals = enumerate_ideals(a, budget);
  for (ElementSet i : ideals) {
    for (ElementSet j : ideals) {
      PointSet lhs = closed_points(prs.points, i) | closed_points(prs.points, j);
      if (lhs != closed_points(prs.points, ideal_product(a, i, j))) report.intersection_stable = false;
    }
  }
  return report;
}

}  // namespace b1
