#pragma once

#include <span>
#include <vector>

#include "b1/algebra.hpp"

namespace b1 {

// Ideals are represented by their member sets. Functions taking an ideal
// argument check the ideal axioms and throw NotAnIdeal otherwise.

/// Contains 0, closed under +, and absorbing under multiplication by A.
bool is_ideal(const Algebra& a, ElementSet s);

/// Smallest ideal containing s: the finite sums of multiples of members of s.
ElementSet ideal_generated(const Algebra& a, ElementSet s);

/// The principal ideal xA.
ElementSet principal_ideal(const Algebra& a, Element x);

/// Closure J̄ = { x | x + z = z for some z in J }, the zero class of the
/// smallest congruence whose zero class contains J.
ElementSet saturation(const Algebra& a, ElementSet ideal);

bool is_saturated(const Algebra& a, ElementSet ideal);

/// Proper, and ab in I implies a in I or b in I.
bool is_prime_ideal(const Algebra& a, ElementSet ideal);

/// All ideals, sorted by bitmask. Generated bottom-up from principal ideals
/// closed under sums. Throws SizeLimit when |a| exceeds budget.max_size.
std::vector<ElementSet> enumerate_ideals(const Algebra& a, const Budget& budget = {});

std::vector<ElementSet> enumerate_saturated_ideals(const Algebra& a, const Budget& budget = {});

/// Pr(A): the prime ideals.
std::vector<ElementSet> enumerate_pr(const Algebra& a, const Budget& budget = {});

/// Pr_s(A): the saturated prime ideals.
std::vector<ElementSet> enumerate_prs(const Algebra& a, const Budget& budget = {});

/// I + J.
ElementSet ideal_sum(const Algebra& a, ElementSet i, ElementSet j);

/// IJ, the ideal generated by the products ab with a in I and b in J.
ElementSet ideal_product(const Algebra& a, ElementSet i, ElementSet j);

/// x, x^2, x^3, ... up to (and excluding) the first repeated power.
std::vector<Element> power_sequence(const Algebra& a, Element x);

bool is_nilpotent(const Algebra& a, Element x);

/// Nil(A) = { x | x^n = 0 for some n >= 1 }.
ElementSet nilradical(const Algebra& a);

/// r(I) = { x | x^n in I for some n >= 1 }.
ElementSet root(const Algebra& a, ElementSet ideal);

/// Intersection of a family of subsets; the empty family gives the carrier.
ElementSet intersection_of(const Algebra& a, std::span<const ElementSet> family);

}  // namespace b1
