#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "b1/algebra.hpp"

namespace b1 {

/// Closure of gens ∪ {0, 1} under + and ·.
ElementSet generated_subalgebra(const Algebra& a, ElementSet gens);

/// True iff 0, 1 and g generate all of a.
bool is_generated_by(const Algebra& a, Element g);

/// The three kinds of monogenic algebra with generator α:
///   I   α nilpotent
///   II  α not nilpotent, and no (u, v) with αu = 1 + αv
///   III α not nilpotent, and αu = 1 + αv for some (u, v)
enum class MonogenicCase { I, II, III };

std::string_view to_string(MonogenicCase c);

/// Throws TrivialGenerator for g in {0, 1}, NotMonogenic if g does not
/// generate a.
MonogenicCase classify_case(const Algebra& a, Element g);

/// Join tables of every lattice on {0..n-1} having 0 as bottom (labelled,
/// not up to isomorphism).
std::vector<Table> enumerate_join_tables(std::size_t n);

/// Every multiplication table making (join, ·) a B1-algebra with identity 1.
std::vector<Table> enumerate_multiplications(std::size_t n, const Table& join);

/// All B1-algebras of size n up to isomorphism, each in canonical labelling,
/// sorted by canonical form.
std::vector<Algebra> enumerate_algebras(std::size_t n);

struct MonogenicRecord {
  Algebra algebra;                 // canonical labelling
  Element generator;               // least generating index
  MonogenicCase case_tag;
  std::vector<ElementSet> prs_shape;
  std::vector<std::pair<Element, MonogenicCase>> generator_cases;  // every generator with its case
  bool generator_independent() const;
};

struct CensusResult {
  std::vector<MonogenicRecord> records;  // by cardinality, then canonical form
  std::size_t count(std::size_t cardinality, MonogenicCase c) const;
  std::size_t count(MonogenicCase c) const;
  /// Records whose generators disagree on the case.
  std::vector<const MonogenicRecord*> discrepancies() const;
};

inline constexpr std::size_t kMaxCensusCardinality = 6;

/// Monogenic algebras with 3 <= |A| <= max_card, up to isomorphism.
/// Throws SizeLimit outside [3, 6].
CensusResult census(std::size_t max_card);

}  // namespace b1
