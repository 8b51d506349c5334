#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "b1/algebra.hpp"

namespace b1 {

/// A partition of the carrier {0..n-1}, stored as a class id per element.
/// Class ids are assigned in order of least member, so two partitions are
/// equal iff their id arrays are equal. Whether the partition is compatible
/// with a particular algebra is checked by is_congruence().
class Congruence {
 public:
  /// Any labelling of the classes; it is renumbered canonically.
  static Congruence from_labels(std::span<const Element> labels);
  static Congruence from_classes(std::size_t n, std::span<const ElementSet> classes);
  static Congruence equality(std::size_t n);
  /// The one-class congruence.
  static Congruence trivial(std::size_t n);

  std::size_t size() const { return class_of_.size(); }
  std::size_t num_classes() const { return num_classes_; }
  Element class_of(Element x) const { return class_of_[x]; }
  std::span<const Element> class_ids() const { return class_of_; }
  bool related(Element x, Element y) const { return class_of_[x] == class_of_[y]; }

  /// Members of the class with the given id.
  ElementSet class_members(Element id) const;
  std::vector<ElementSet> classes() const;

  bool is_trivial() const { return num_classes_ == 1; }
  bool is_equality() const { return num_classes_ == size(); }

  /// this <= other: every class of this lies inside a class of other.
  bool refines(const Congruence& other) const;

  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence& a, const Congruence& b) { return a.class_of_ <=> b.class_of_; }

 private:
  explicit Congruence(std::vector<Element> canonical_ids);

  std::vector<Element> class_of_;
  std::size_t num_classes_ = 0;
};

bool is_congruence(const Algebra& a, const Congruence& r);

/// Smallest congruence containing all the given pairs.
Congruence congruence_generated(const Algebra& a, std::span<const std::pair<Element, Element>> pairs);

/// Smallest congruence containing r and the pair (x, y).
Congruence congruence_with_pair(const Algebra& a, const Congruence& r, Element x, Element y);

Congruence join(const Algebra& a, const Congruence& r, const Congruence& s);
Congruence meet(const Congruence& r, const Congruence& s);

/// R_J: x ~ y iff x + z = y + z for some z in J. The result is checked to be
/// a congruence containing J in its zero class.
Congruence congruence_from_ideal(const Algebra& a, ElementSet ideal);

/// I(R): the class of 0, re-verified to be an ideal.
ElementSet ideal_of(const Algebra& a, const Congruence& r);

/// All congruences, built by closing the principal congruences under join.
/// Sorted by decreasing number of classes, then by class ids, which is a
/// linear extension of refinement: equality first, trivial last.
std::vector<Congruence> enumerate_congruences(const Algebra& a, const Budget& budget = {});

inline constexpr std::size_t kMaxPartitionScan = 10;

/// Same set, found by scanning every partition of the carrier and keeping
/// the compatible ones. Used for cross-validation; throws SizeLimit above
/// kMaxPartitionScan elements.
std::vector<Congruence> enumerate_congruences_by_scan(const Algebra& a, const Budget& budget = {});

/// Nontrivial, and ab R 0 implies a R 0 or b R 0.
bool is_prime_congruence(const Algebra& a, const Congruence& r);

/// Spec(A): prime congruences, in enumeration order.
std::vector<Congruence> spec(const Algebra& a, const Budget& budget = {});
std::vector<Congruence> spec(const Algebra& a, std::span<const Congruence> lattice);

/// MaxSpec(A): nontrivial congruences maximal under refinement, decided
/// against the full enumerated lattice.
std::vector<Congruence> maxspec(const Algebra& a, const Budget& budget = {});
std::vector<Congruence> maxspec(std::span<const Congruence> lattice);

/// Direct test: r is nontrivial and adding any unrelated pair collapses it.
bool is_maximal_congruence(const Algebra& a, const Congruence& r);

/// S_P: the two-class congruence {P, A \ P} for a saturated prime ideal P.
/// Throws NotSaturatedPrime otherwise.
Congruence alpha(const Algebra& a, ElementSet prime);

/// I(R) for a maximal congruence R. Throws NotMaximal otherwise.
ElementSet beta(const Algebra& a, const Congruence& r);

/// The congruence a ~ a' iff phi(a) R phi(a') on phi's source.
/// Throws Mismatch unless r is a congruence of phi's target.
Congruence pullback(const Morphism& phi, const Congruence& r);

}  // namespace b1
