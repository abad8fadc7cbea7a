#ifndef TLAB_VERTEX_SET_HPP
#define TLAB_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace tlab {

/// Maximum vertex count handled by the search engines (one machine word).
inline constexpr int kWordVertices = 64;

/// A subset of {0..63} stored as one machine word.
class VertexSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator &operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator &) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vs) {
    for (int v : vs)
      insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet first(int n) {
    assert(n >= 0 && n <= kWordVertices);
    return VertexSet(n == kWordVertices ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; the set must be non-empty.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }

  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet &operator&=(VertexSet o) { return *this = *this & o; }
  constexpr VertexSet &operator|=(VertexSet o) { return *this = *this | o; }
  constexpr VertexSet &operator-=(VertexSet o) { return *this = *this - o; }

  constexpr bool operator==(const VertexSet &) const = default;

private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member lists ({0} < {0,1} < {1}).
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0)
    return false;
  const int p = std::countr_zero(diff);
  const std::uint64_t upper = p == 63 ? 0 : ~std::uint64_t{0} << (p + 1);
  // The lists agree below p; whichever holds p is smaller unless the other
  // one ends there.
  if (a.contains(p))
    return (b.bits() & upper) != 0;
  return (a.bits() & upper) == 0;
}

/// "{0,2,5}"
inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first)
      out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

} // namespace tlab

#endif // TLAB_VERTEX_SET_HPP
