#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace parind {

/// A subset of the simple roots, stored as a bitmask over 0-based indices.
class Subset {
 public:
  static constexpr int kMaxRank = 31;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset full(int rank) {
    return Subset(rank >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << rank) - 1));
  }
  static constexpr Subset single(int i) { return Subset(std::uint32_t{1} << i); }
  static Subset of(std::initializer_list<int> indices) {
    Subset s;
    for (int i : indices) s = s.with(i);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr Subset with(int i) const { return Subset(bits_ | (std::uint32_t{1} << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(std::uint32_t{1} << i)); }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// "a1,a3" style, 1-based; empty subset prints as "".
  std::string to_string() const {
    std::string s;
    for (int i : elements()) {
      if (!s.empty()) s += ',';
      s += 'a' + std::to_string(i + 1);
    }
    return s;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// All subsets of `ambient`, in increasing bitmask order.
inline std::vector<Subset> subsets_of(Subset ambient) {
  std::vector<Subset> out;
  std::uint32_t a = ambient.bits();
  std::uint32_t s = 0;
  while (true) {
    out.emplace_back(s);
    if (s == a) break;
    s = (s - a) & a;
  }
  return out;
}

}  // namespace parind
