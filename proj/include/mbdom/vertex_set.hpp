#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbdom {

/// Maximum number of vertices a graph may have; one VertexSet is one word.
inline constexpr int kMaxVertices = 64;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Fixed-width set of vertex indices in [0, 64).
 *
 * Plain value type; all set algebra is branch-free word arithmetic.
 */
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  static constexpr VertexSet from_bits(std::uint64_t bits) noexcept { return VertexSet(bits); }
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) insert(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) noexcept {
    if (n <= 0) return VertexSet{};
    if (n >= 64) return VertexSet(~std::uint64_t{0});
    return VertexSet((std::uint64_t{1} << n) - 1);
  }
  static VertexSet singleton(int v) { return VertexSet(bit(v)); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int v) const noexcept {
    return v >= 0 && v < 64 && ((bits_ >> v) & 1U);
  }
  /// Least element; undefined on the empty set.
  constexpr int first() const noexcept { return std::countr_zero(bits_); }

  void insert(int v) { bits_ |= bit(v); }
  void erase(int v) { bits_ &= ~bit(v); }

  constexpr bool is_subset_of(VertexSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const noexcept { return (bits_ & o.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return VertexSet(a.bits_ & ~b.bits_); }
  VertexSet& operator|=(VertexSet o) noexcept { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) noexcept { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) noexcept = default;

  /// Forward iterator over members in increasing order.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const noexcept { return iterator{bits_}; }
  constexpr iterator end() const noexcept { return iterator{0}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(size());
    for (int v : *this) out.push_back(v);
    return out;
  }

  /// "{0,3,4}"
  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for (int v : *this) {
      if (!first_item) s += ',';
      s += std::to_string(v);
      first_item = false;
    }
    return s + "}";
  }

 private:
  static std::uint64_t bit(int v) {
    if (v < 0 || v >= kMaxVertices) throw Error("vertex index " + std::to_string(v) + " out of range");
    return std::uint64_t{1} << v;
  }

  std::uint64_t bits_ = 0;
};

}  // namespace mbdom

template <>
struct std::hash<mbdom::VertexSet> {
  std::size_t operator()(mbdom::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
