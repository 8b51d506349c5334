#include "b1/theorems.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "b1/classify.hpp"
#include "b1/congruences.hpp"
#include "b1/ideals.hpp"
#include "b1/report.hpp"
#include "b1/topology.hpp"

namespace b1 {

std::string_view to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Pass: return "PASS";
    case VerdictStatus::Fail: return "FAIL";
    case VerdictStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

const std::vector<std::string>& theorem_tags() {
  static const std::vector<std::string> tags{
      "alpha-beta-homeomorphism",     "monoid-psi-bijection", "saturated-prime-existence",
      "pullback-refinement",          "pullback-maxspec-square", "nilradical-intersection",
      "nilradical-closure-intersection", "root-lemma",          "root-intersection",
      "t0-quasi-compact",             "basic-open-properties", "spectral-space",
      "closed-subspace-homeomorphism", "monogenic-structure",
  };
  return tags;
}

const std::vector<std::string>& oracle_tags() {
  static const std::vector<std::string> tags{"oracle-congruence-scan", "oracle-saturation"};
  return tags;
}

namespace {

struct Skip {
  std::string reason;
};

// Returns an empty string on success, otherwise the first counterexample.
using Check = std::function<std::string()>;

Verdict run(std::string tag, std::string statement, const Check& check) {
  Verdict v{std::move(tag), std::move(statement), VerdictStatus::Pass, ""};
  try {
    v.detail = check();
    if (!v.detail.empty()) v.status = VerdictStatus::Fail;
  } catch (const Skip& s) {
    v.status = VerdictStatus::Skipped;
    v.detail = s.reason;
  } catch (const Error& e) {
    v.status = e.code() == ErrorCode::SizeLimit ? VerdictStatus::Skipped : VerdictStatus::Fail;
    v.detail = e.what();
  }
  return v;
}

bool contains(std::span<const ElementSet> family, ElementSet s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

bool contains(std::span<const Congruence> family, const Congruence& r) {
  return std::find(family.begin(), family.end(), r) != family.end();
}

std::string describe(const Morphism& phi) {
  std::string out = "φ = [";
  for (std::size_t i = 0; i < phi.map().size(); ++i) out += (i ? "," : "") + std::to_string(phi.map()[i]);
  return out + "]";
}

class Suite {
 public:
  Suite(const Algebra& a, const CheckOptions& options) : a_(a), options_(options), budget_(options.budget) {}

  std::vector<Verdict> verdicts() {
    std::vector<Verdict> out;
    out.push_back(run("alpha-beta-homeomorphism",
                      "alpha: Pr_s(A) -> MaxSpec(A) and beta = I(-) are inverse bijections and alpha is a "
                      "homeomorphism",
                      [&] { return alpha_beta(); }));
    out.push_back(run("monoid-psi-bijection", "psi_M: Spec_D(M) -> MaxSpec(F(M)) is a bijection",
                      [&] { return monoid_psi(); }));
    out.push_back(run("saturated-prime-existence",
                      "every proper saturated ideal lies in a saturated prime ideal",
                      [&] { return saturated_prime_existence(); }));
    out.push_back(run("pullback-refinement", "R_{phi^-1(J)} <= phi~(R_J) for every morphism phi and ideal J",
                      [&] { return pullback_refinement(); }));
    out.push_back(run("pullback-maxspec-square",
                      "phi~ maps MaxSpec(C) into MaxSpec(A) and phi~ . alpha_C = alpha_A . phi^-1",
                      [&] { return pullback_square(); }));
    out.push_back(run("nilradical-intersection", "Nil(A) is a saturated ideal equal to ∩Pr(A) and ∩Pr_s(A)",
                      [&] { return nilradical_intersection(); }));
    out.push_back(run("nilradical-closure-intersection", "Nil(A) = ∩ of the saturations of the primes",
                      [&] { return nilradical_closure(); }));
    out.push_back(run("root-lemma",
                      "r(I) is an ideal, sat(r(I)) ⊆ r(sat(I)), r(I) saturated for saturated I, r(0) = Nil(A)",
                      [&] { return root_lemma(); }));
    out.push_back(run("root-intersection", "r(I) = ∩{P in Pr_s(A) | I ⊆ P} for every saturated ideal I",
                      [&] { return root_intersection(); }));
    out.push_back(run("t0-quasi-compact", "Pr_s(A) and MaxSpec(A) are T0 and quasi-compact",
                      [&] { return t0_quasi_compact(); }));
    out.push_back(run("basic-open-properties",
                      "the D(f) form a basis of quasi-compact opens, stable under intersection, and irreducible "
                      "closed sets have unique generic points",
                      [&] { return basic_open_properties(); }));
    out.push_back(run("spectral-space", "Pr_s(A) and MaxSpec(A) are spectral spaces",
                      [&] { return spectral_space(); }));
    out.push_back(run("closed-subspace-homeomorphism",
                      "every nonempty closed F = Pr_s(A) ∩ W(S) is homeomorphic to Pr_s(A / R_I), I = sat<S>",
                      [&] { return closed_subspace(); }));
    out.push_back(run("monogenic-structure",
                      "monogenic algebras fall in exactly one case, with the matching Pr_s(A) and radical",
                      [&] { return monogenic_structure(); }));
    if (options_.oracle) {
      out.push_back(run("oracle-congruence-scan", "principal-closure congruence enumeration equals the partition scan",
                        [&] { return oracle_congruence_scan(); }));
      out.push_back(run("oracle-saturation",
                        "sat(J) is the zero class of the least congruence whose zero class contains J",
                        [&] { return oracle_saturation(); }));
    }
    return out;
  }

 private:
  const std::vector<ElementSet>& ideals() {
    if (!ideals_) ideals_ = enumerate_ideals(a_, budget_);
    return *ideals_;
  }
  const std::vector<ElementSet>& prs() {
    if (!prs_) prs_ = enumerate_prs(a_, budget_);
    return *prs_;
  }
  const std::vector<Congruence>& lattice() {
    if (!lattice_) lattice_ = enumerate_congruences(a_, budget_);
    return *lattice_;
  }
  const SpectralReport& report() {
    if (!report_) report_ = spectral_report(a_, budget_);
    return *report_;
  }

  // Morphisms out of A: to B1, to A itself, and every quotient projection.
  const std::vector<Morphism>& morphisms() {
    if (morphisms_) return *morphisms_;
    std::vector<Morphism> out = enumerate_morphisms(a_, boolean_semifield(), budget_);
    try {
      for (Morphism& m : enumerate_morphisms(a_, a_, budget_)) out.push_back(std::move(m));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SizeLimit) throw;
    }
    for (const Congruence& r : lattice()) out.push_back(quotient(a_, r).second);
    morphisms_ = std::move(out);
    return *morphisms_;
  }

  std::string alpha_beta() {
    const auto prs_sp = prs_space(a_, budget_);
    const auto ms_sp = maxspec_space(a_, budget_);
    if (prs_sp.points.size() != ms_sp.points.size()) return "|Pr_s(A)| != |MaxSpec(A)|";
    std::vector<std::size_t> map;
    for (ElementSet p : prs_sp.points) {
      Congruence r = alpha(a_, p);
      auto it = std::find(ms_sp.points.begin(), ms_sp.points.end(), r);
      if (it == ms_sp.points.end()) return "alpha(" + format_set(p) + ") is not maximal";
      if (beta(a_, r) != p) return "beta(alpha(" + format_set(p) + ")) != P";
      map.push_back(static_cast<std::size_t>(it - ms_sp.points.begin()));
    }
    for (const Congruence& r : ms_sp.points) {
      ElementSet p = beta(a_, r);
      if (!contains(prs_sp.points, p)) return "beta(" + format_partition(r) + ") is not a saturated prime";
      if (alpha(a_, p) != r) return "alpha(beta(" + format_partition(r) + ")) != R";
    }
    if (!is_homeomorphism(prs_sp.space, ms_sp.space, map)) return "alpha does not match the closed sets";
    return "";
  }

  std::string monoid_psi() {
    if (!options_.monoid) throw Skip{"input is not a monoid algebra F(M)"};
    const Monoid& m = *options_.monoid;
    const MonoidAlgebra f = monoid_algebra(m);
    if (!(f.algebra == a_)) return "algebra under test is not F(M)";
    const auto spec_d = deitmar_spectrum(m);
    const auto ms = maxspec(a_, budget_);
    std::set<ElementSet> tildes;
    std::vector<Congruence> images;
    for (ElementSet p : spec_d) {
      tildes.insert(tilde(m, f, p));
      Congruence r = psi(m, f, p);
      if (!contains(ms, r)) return "psi(" + format_set(p) + ") is not maximal";
      if (contains(images, r)) return "psi is not injective at " + format_set(p);
      images.push_back(r);
    }
    if (tildes.size() != spec_d.size()) return "tilde is not injective";
    if (images.size() != ms.size()) return "psi is not surjective";
    if (m.is_group()) {
      if (ms.size() != 1) return "group with |MaxSpec(F(G))| != 1";
      if (prs() != std::vector<ElementSet>{ElementSet{0}}) return "group with Pr_s(F(G)) != {{0}}";
    }
    return "";
  }

  std::string saturated_prime_existence() {
    for (ElementSet i : enumerate_saturated_ideals(a_, budget_)) {
      if (i == a_.carrier()) continue;
      if (std::none_of(prs().begin(), prs().end(), [&](ElementSet p) { return i.subset_of(p); })) {
        return "no saturated prime contains " + format_set(i);
      }
    }
    return "";
  }

  std::string pullback_refinement() {
    for (const Morphism& phi : morphisms()) {
      const Algebra& c = phi.target();
      for (ElementSet j : enumerate_ideals(c, budget_)) {
        Congruence lhs = congruence_from_ideal(a_, phi.preimage(j));
        Congruence rhs = pullback(phi, congruence_from_ideal(c, j));
        if (!lhs.refines(rhs)) return describe(phi) + ", J = " + format_set(j);
      }
    }
    return "";
  }

  std::string pullback_square() {
    const auto ms_a = maxspec(a_, budget_);
    for (const Morphism& phi : morphisms()) {
      const Algebra& c = phi.target();
      for (const Congruence& r : maxspec(c, budget_)) {
        if (!contains(ms_a, pullback(phi, r))) return describe(phi) + " pulls back a maximal congruence to a non-maximal one";
      }
      for (ElementSet p : enumerate_prs(c, budget_)) {
        ElementSet pre = phi.preimage(p);
        if (!contains(prs(), pre)) return describe(phi) + ": preimage of " + format_set(p) + " not in Pr_s(A)";
        if (pullback(phi, alpha(c, p)) != alpha(a_, pre)) return describe(phi) + ": square fails at " + format_set(p);
      }
    }
    return "";
  }

  std::string nilradical_intersection() {
    const ElementSet nil = nilradical(a_);
    if (!is_ideal(a_, nil) || !is_saturated(a_, nil)) return "Nil(A) is not a saturated ideal";
    const auto pr = enumerate_pr(a_, budget_);
    if (intersection_of(a_, pr) != nil) return "∩Pr(A) = " + format_set(intersection_of(a_, pr));
    if (intersection_of(a_, prs()) != nil) return "∩Pr_s(A) = " + format_set(intersection_of(a_, prs()));
    return "";
  }

  std::string nilradical_closure() {
    std::vector<ElementSet> closures;
    for (ElementSet p : enumerate_pr(a_, budget_)) closures.push_back(saturation(a_, p));
    ElementSet meet = intersection_of(a_, closures);
    if (meet != nilradical(a_)) return "∩ sat(P) = " + format_set(meet);
    return "";
  }

  std::string root_lemma() {
    for (ElementSet i : ideals()) {
      ElementSet r = root(a_, i);
      if (!is_ideal(a_, r)) return "r(" + format_set(i) + ") is not an ideal";
      if (!saturation(a_, r).subset_of(root(a_, saturation(a_, i)))) return "sat(r(I)) ⊄ r(sat(I)) at " + format_set(i);
      if (is_saturated(a_, i) && !is_saturated(a_, r)) return "r(" + format_set(i) + ") is not saturated";
    }
    if (root(a_, ElementSet{0}) != nilradical(a_)) return "r({0}) != Nil(A)";
    return "";
  }

  std::string root_intersection() {
    for (ElementSet i : enumerate_saturated_ideals(a_, budget_)) {
      std::vector<ElementSet> over;
      for (ElementSet p : prs()) {
        if (i.subset_of(p)) over.push_back(p);
      }
      if (root(a_, i) != intersection_of(a_, over)) return "fails at I = " + format_set(i);
    }
    return "";
  }

  std::string t0_quasi_compact() {
    if (!report().t0) return "Pr_s(A) is not T0";
    if (!check_t0(maxspec_space(a_, budget_).space)) return "MaxSpec(A) is not T0";
    if (!report().quasi_compact) return "a basic-open cover has no extracted subcover";
    return "";
  }

  std::string basic_open_properties() {
    const SpectralReport& r = report();
    if (!r.basic_opens_form_basis) return "the D(f) do not form a basis";
    if (!r.finite_type) return "an open set is not a finite union of D(g)";
    if (!r.intersection_stable) return "D(f) ∩ D(g) != D(fg) or W(I) ∪ W(J) != W(IJ)";
    if (!r.sober) return "an irreducible closed set lacks a unique generic point";
    return "";
  }

  std::string spectral_space() {
    if (!report().spectral()) return "Pr_s(A) is not spectral";
    const FiniteSpace ms = maxspec_space(a_, budget_).space;
    if (!check_t0(ms)) return "MaxSpec(A) is not T0";
    sober_report(ms);
    return "";
  }

  std::string closed_subspace() {
    std::set<std::uint32_t> seen;
    for (ElementSet i : ideals()) {
      std::size_t in_f = static_cast<std::size_t>(
          std::count_if(prs().begin(), prs().end(), [&](ElementSet p) { return i.subset_of(p); }));
      if (in_f == 0) {
        try {
          closed_subspace_homeo(a_, i, budget_);
          return "empty closed set accepted for S = " + format_set(i);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::EmptyClosedSet) throw;
        }
        continue;
      }
      std::uint32_t key = 0;
      for (std::size_t p = 0; p < prs().size(); ++p) {
        if (i.subset_of(prs()[p])) key |= std::uint32_t{1} << p;
      }
      if (prs().size() <= 32 && !seen.insert(key).second) continue;
      const auto h = closed_subspace_homeo(a_, i, budget_);
      if (h.closed_set.points.size() != in_f) return "F has the wrong size for S = " + format_set(i);
    }
    return "";
  }

  std::string monogenic_structure() {
    std::vector<Element> generators;
    for (Element g = 2; g < a_.size(); ++g) {
      if (is_generated_by(a_, g)) generators.push_back(g);
    }
    if (generators.empty()) throw Skip{"algebra is not monogenic"};
    const ElementSet nil = nilradical(a_);
    const ElementSet zero{0};
    for (Element g : generators) {
      const MonogenicCase c = classify_case(a_, g);
      const ElementSet ga = principal_ideal(a_, g);
      const std::string at = "α = " + std::to_string(g) + ", case " + std::string(to_string(c)) + ": ";
      bool has_uv = false;
      for (Element u = 0; u < a_.size(); ++u) {
        for (Element v = 0; v < a_.size(); ++v) has_uv |= a_.mul(g, u) == a_.add(Algebra::one, a_.mul(g, v));
      }
      if (is_nilpotent(a_, g) && has_uv) return at + "α nilpotent and αu = 1 + αv solvable";
      switch (c) {
        case MonogenicCase::I: {
          if (prs() != std::vector<ElementSet>{ga}) return at + "Pr_s(A) != {αA}";
          if (nil != ga) return at + "Nil(A) != αA";
          auto [b, pi] = quotient(a_, congruence_from_ideal(a_, nil));
          if (!find_isomorphism(b, boolean_semifield())) return at + "A / R_Nil is not B1";
          break;
        }
        case MonogenicCase::II: {
          if (prs() != std::vector<ElementSet>{zero, ga}) return at + "Pr_s(A) != {{0}, αA}";
          if (nil != zero || !is_prime_ideal(a_, zero)) return at + "A is not integral";
          const auto sp = prs_space(a_, budget_).space;
          if (sp.closure(1) != sp.all()) return at + "{0} is not a generic point";
          if (!sp.is_closed(2)) return at + "{αA} is not closed";
          break;
        }
        case MonogenicCase::III: {
          if (prs() != std::vector<ElementSet>{zero}) return at + "Pr_s(A) != {{0}}";
          if (nil != zero || !is_prime_ideal(a_, zero)) return at + "A is not integral";
          if (ga != a_.carrier() && is_saturated(a_, ga)) return at + "proper αA is saturated";
          break;
        }
      }
    }
    return "";
  }

  std::string oracle_congruence_scan() {
    auto closed = lattice();
    auto scanned = enumerate_congruences_by_scan(a_, budget_);
    std::sort(closed.begin(), closed.end());
    std::sort(scanned.begin(), scanned.end());
    if (closed != scanned) {
      return std::to_string(closed.size()) + " congruences by closure, " + std::to_string(scanned.size()) + " by scan";
    }
    return "";
  }

  std::string oracle_saturation() {
    for (ElementSet j : ideals()) {
      std::vector<const Congruence*> over;
      for (const Congruence& r : lattice()) {
        if (j.subset_of(ideal_of(a_, r))) over.push_back(&r);
      }
      const Congruence* least = nullptr;
      for (const Congruence* r : over) {
        if (std::all_of(over.begin(), over.end(), [&](const Congruence* s) { return r->refines(*s); })) least = r;
      }
      if (!least) return "no least congruence over J = " + format_set(j);
      if (ideal_of(a_, *least) != saturation(a_, j)) return "sat(J) differs at J = " + format_set(j);
      if (*least != congruence_from_ideal(a_, j)) return "R_J is not least at J = " + format_set(j);
    }
    return "";
  }

  const Algebra& a_;
  const CheckOptions& options_;
  Budget budget_;
  std::optional<std::vector<ElementSet>> ideals_;
  std::optional<std::vector<ElementSet>> prs_;
  std::optional<std::vector<Congruence>> lattice_;
  std::optional<SpectralReport> report_;
  std::optional<std::vector<Morphism>> morphisms_;
};

}  // namespace

std::vector<Verdict> check_theorems(const Algebra& a, const CheckOptions& options) {
  return Suite(a, options).verdicts();
}

}  // namespace b1
