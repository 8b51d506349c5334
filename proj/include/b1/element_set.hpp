#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace b1 {

/// Index of an element of a finite structure. 0 and 1 are reserved for the
/// additive and multiplicative identities of an algebra.
using Element = std::uint16_t;

inline constexpr std::size_t kMaxElements = 32;

/// Subset of a carrier {0, ..., n-1}, n <= 32, stored as a bitmask.
/// Ordering is by bitmask value, which is the canonical listing order.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<Element> elems) {
    for (Element e : elems) insert(e);
  }

  static constexpr ElementSet from_bits(std::uint32_t bits) {
    ElementSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr ElementSet singleton(Element e) { return from_bits(std::uint32_t{1} << e); }
  static constexpr ElementSet full(std::size_t n) {
    return from_bits(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint32_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint32_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Element>(std::countr_zero(b)));
    return out;
  }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
  // set difference
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
  constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(ElementSet, ElementSet) = default;
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace b1
