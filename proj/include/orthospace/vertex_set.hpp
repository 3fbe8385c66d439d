#ifndef ORTHOSPACE_VERTEX_SET_HPP
#define ORTHOSPACE_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace orthospace {

/// Subset of vertices as a single 64-bit word. Vertex capacity is fixed at
/// 64 so that all set algebra is one machine instruction wide.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;

  static constexpr VertexSet of_bits(std::uint64_t bits) { return VertexSet(bits); }

  static constexpr VertexSet single(int v) {
    assert(v >= 0 && v < kCapacity);
    return VertexSet(std::uint64_t{1} << v);
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    assert(n >= 0 && n <= kCapacity);
    return n == kCapacity ? VertexSet(~std::uint64_t{0})
                          : VertexSet((std::uint64_t{1} << n) - 1);
  }

  static constexpr VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  /// Smallest member; undefined on the empty set.
  constexpr int min() const {
    assert(!empty());
    return std::countr_zero(bits_);
  }

  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Ascending iteration over members.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  /// Lexicographic order on ascending member lists ({0,5} < {1}, {0} < {0,1}).
  /// This is the canonical order used for reported clique families and
  /// lattice elements.
  static constexpr bool member_lex_less(VertexSet a, VertexSet b) {
    std::uint64_t x = a.bits_, y = b.bits_;
    while (x != 0 && y != 0) {
      int va = std::countr_zero(x), vb = std::countr_zero(y);
      if (va != vb) return va < vb;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

struct VertexSetMemberLexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const {
    return VertexSet::member_lex_less(a, b);
  }
};

}  // namespace orthospace

#endif  // ORTHOSPACE_VERTEX_SET_HPP
