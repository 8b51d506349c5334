#pragma once

#include <cstddef>
#include <vector>

#include "b1/algebra.hpp"
#include "b1/congruences.hpp"

namespace b1 {

/// A finite commutative monoid given by its operation table.
class Monoid {
 public:
  /// Throws NotAMonoid naming the witness of the first failed law.
  static Monoid build(std::size_t n, Table op, Element identity);

  std::size_t size() const { return n_; }
  Element identity() const { return identity_; }
  Element op(Element x, Element y) const { return op_[x * n_ + y]; }
  const Table& table() const { return op_; }
  bool is_group() const;

  friend bool operator==(const Monoid&, const Monoid&) = default;

 private:
  Monoid(std::size_t n, Table op, Element identity) : n_(n), op_(std::move(op)), identity_(identity) {}

  std::size_t n_;
  Table op_;
  Element identity_;
};

/// Cyclic group of order n with identity 0.
Monoid cyclic_group(std::size_t n);

/// All commutative monoids of size n up to isomorphism (identity at index 0).
std::vector<Monoid> enumerate_monoids(std::size_t n);

/// M·P ⊆ P.
bool is_monoid_ideal(const Monoid& m, ElementSet p);

/// Ideal, P != M, and xy in P implies x in P or y in P. The empty set counts.
bool is_prime_monoid_ideal(const Monoid& m, ElementSet p);

/// Spec_D(M): every prime ideal, including the empty one, sorted by bitmask.
std::vector<ElementSet> deitmar_spectrum(const Monoid& m);

inline constexpr std::size_t kMaxMonoidForAlgebra = 4;

/// F(M) = B1[M]: finite subsets of M under union and elementwise product.
/// Element 0 is the empty set, element 1 is {e}; the rest follow in
/// increasing bitmask order.
struct MonoidAlgebra {
  Algebra algebra;
  std::vector<Element> embedding;     // m -> element {m}
  std::vector<ElementSet> components;  // element -> subset of M it stands for
};

/// Throws SizeLimit when |M| exceeds max_monoid_size.
MonoidAlgebra monoid_algebra(const Monoid& m, std::size_t max_monoid_size = kMaxMonoidForAlgebra);

/// P̃: saturation of the ideal of F(M) generated by the singletons of P.
/// Checked against the description "every component lies in P" and checked
/// to be a saturated prime. Throws NotPrime if P is not in Spec_D(M).
ElementSet tilde(const Monoid& m, const MonoidAlgebra& f, ElementSet p);

/// ψ_M(P) = alpha(F(M), P̃).
Congruence psi(const Monoid& m, const MonoidAlgebra& f, ElementSet p);

}  // namespace b1
