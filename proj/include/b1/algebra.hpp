#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "b1/element_set.hpp"
#include "b1/error.hpp"

namespace b1 {

class Congruence;

/// Square operation table, row-major: entry (x, y) at index x * n + y.
using Table = std::vector<Element>;

/// A finite B1-algebra: a commutative semiring with idempotent addition.
///
/// Elements are the indices 0..n-1; index 0 is the additive identity and
/// index 1 the multiplicative identity. Instances are immutable handles to
/// shared tables, so copying is cheap and values can be shared freely
/// between threads.
class Algebra {
 public:
  static constexpr Element zero = 0;
  static constexpr Element one = 1;

  /// Validates every axiom instance exhaustively and throws Error naming the
  /// witnessing elements on the first violation. The one-element algebra is
  /// rejected with DegenerateAlgebra.
  static Algebra build(std::size_t n, Table add, Table mul);

  /// Same checks, but the one-element algebra is accepted. Quotients use this.
  static Algebra build_allow_degenerate(std::size_t n, Table add, Table mul);

  std::size_t size() const { return data_->n; }
  bool is_degenerate() const { return data_->n == 1; }
  ElementSet carrier() const { return ElementSet::full(size()); }
  /// Index of the multiplicative identity: 1, or 0 in the degenerate algebra.
  Element unit() const { return is_degenerate() ? zero : one; }

  Element add(Element x, Element y) const { return data_->add[x * data_->n + y]; }
  Element mul(Element x, Element y) const { return data_->mul[x * data_->n + y]; }

  const Table& add_table() const { return data_->add; }
  const Table& mul_table() const { return data_->mul; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.data_ == b.data_ ||
           (a.data_->n == b.data_->n && a.data_->add == b.data_->add && a.data_->mul == b.data_->mul);
  }

 private:
  struct Tables {
    std::size_t n;
    Table add;
    Table mul;
  };
  explicit Algebra(std::shared_ptr<const Tables> data) : data_(std::move(data)) {}
  static Algebra validated(std::size_t n, Table add, Table mul, bool allow_degenerate);

  std::shared_ptr<const Tables> data_;
};

/// The two-element semifield {0, 1} with 1 + 1 = 1.
Algebra boolean_semifield();

/// Returns the first axiom violation as an Error without throwing, or nullopt.
std::optional<Error> find_axiom_violation(std::size_t n, const Table& add, const Table& mul);

/// x <= y in the order induced by addition, i.e. x + y = y.
bool natural_leq(const Algebra& a, Element x, Element y);

/// x^k for k >= 0.
Element power(const Algebra& a, Element x, std::size_t k);

/// Relabels `a` by `perm` (old index -> new index). perm must fix 0 and 1.
Algebra relabel(const Algebra& a, std::span<const Element> perm);

/// A structure-preserving map between two algebras.
class Morphism {
 public:
  /// Throws NotAMorphism naming the first broken law.
  static Morphism make(Algebra source, Algebra target, std::vector<Element> map);

  static Morphism identity(const Algebra& a);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  std::span<const Element> map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  ElementSet preimage(ElementSet s) const;
  ElementSet image(ElementSet s) const;
  bool is_surjective() const;
  bool is_injective() const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.map_ == b.map_ && a.source_ == b.source_ && a.target_ == b.target_;
  }

 private:
  Morphism(Algebra source, Algebra target, std::vector<Element> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  Algebra source_;
  Algebra target_;
  std::vector<Element> map_;
};

/// second ∘ first. Throws Mismatch unless first.target() == second.source().
Morphism compose(const Morphism& first, const Morphism& second);

/// All morphisms a -> c, ordered lexicographically by their map arrays.
/// Throws SizeLimit when |c|^|a| exceeds the budget.
std::vector<Morphism> enumerate_morphisms(const Algebra& a, const Algebra& c, const Budget& budget = {});

/// Quotient of `a` by `r`: classes are numbered by least member, so the class
/// of 0 is the new 0 and (unless r is trivial) the class of 1 is the new 1.
/// The trivial congruence yields the degenerate one-element algebra.
std::pair<Algebra, Morphism> quotient(const Algebra& a, const Congruence& r);

/// Lexicographically least (add, mul) table pair over all relabelings fixing
/// 0 and 1. Two algebras are isomorphic iff their canonical forms agree.
struct CanonicalForm {
  std::size_t size = 0;
  Table add;
  Table mul;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t kMaxCanonicalSize = 10;

CanonicalForm canonical_form(const Algebra& a);

/// The algebra rebuilt from its canonical tables.
Algebra canonical_algebra(const Algebra& a);

/// Bijection a -> b preserving both operations, found by backtracking.
/// Independent of canonical_form.
std::optional<std::vector<Element>> find_isomorphism(const Algebra& a, const Algebra& b);

}  // namespace b1
