#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace smoothorb {

inline constexpr int kMaxGroundSet = 64;

/// Subset of the 1-based ground set [n], packed into one machine word.
/// Element e lives in bit e-1, so ordering by the raw word is the canonical
/// basis order used throughout the library.
class BasisSet {
 public:
  constexpr BasisSet() = default;

  static constexpr BasisSet from_bits(std::uint64_t bits) { return BasisSet(bits); }

  /// Throws Errc::ElementOutOfRange for elements outside [1, 64].
  static BasisSet from_elements(std::span<const int> elements);
  static BasisSet from_elements(std::initializer_list<int> elements) {
    return from_elements(std::span<const int>(elements.begin(), elements.size()));
  }

  /// The full ground set [n].
  static constexpr BasisSet ground(int n) {
    return BasisSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  static constexpr BasisSet singleton(int e) { return BasisSet(std::uint64_t{1} << (e - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return e >= 1 && e <= 64 && ((bits_ >> (e - 1)) & 1U); }
  constexpr bool contains(BasisSet other) const { return (bits_ & other.bits_) == other.bits_; }
  constexpr bool disjoint(BasisSet other) const { return (bits_ & other.bits_) == 0; }

  /// Smallest element, or 0 when empty.
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element, or 0 when empty.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr BasisSet with(int e) const { return BasisSet(bits_ | singleton(e).bits_); }
  constexpr BasisSet without(int e) const { return BasisSet(bits_ & ~singleton(e).bits_); }
  /// (this \ {out}) ∪ {in}
  constexpr BasisSet exchange(int out, int in) const { return without(out).with(in); }

  /// Shift every element up by `offset`.
  constexpr BasisSet shifted(int offset) const { return BasisSet(offset >= 64 ? 0 : bits_ << offset); }

  std::vector<int> elements() const;

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  friend constexpr BasisSet operator|(BasisSet a, BasisSet b) { return BasisSet(a.bits_ | b.bits_); }
  friend constexpr BasisSet operator&(BasisSet a, BasisSet b) { return BasisSet(a.bits_ & b.bits_); }
  friend constexpr BasisSet operator^(BasisSet a, BasisSet b) { return BasisSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend constexpr BasisSet operator-(BasisSet a, BasisSet b) { return BasisSet(a.bits_ & ~b.bits_); }

  friend constexpr bool operator==(BasisSet, BasisSet) = default;
  friend constexpr std::strong_ordering operator<=>(BasisSet a, BasisSet b) { return a.bits_ <=> b.bits_; }

 private:
  constexpr explicit BasisSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

/// "1 2 5"; the empty set prints as "".
std::string to_string(BasisSet s);
/// "{1,2,5}"
std::string to_brace_string(BasisSet s);

/// All k-subsets of [n] in canonical order.
std::vector<BasisSet> k_subsets(int n, int k);

std::uint64_t binomial(int n, int k);

}  // namespace smoothorb
