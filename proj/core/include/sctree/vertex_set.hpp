#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <string>
#include <vector>

namespace sctree {

// Vertex indices are dense in [0, kMaxVertices).
inline constexpr std::size_t kMaxVertices = 64;

using Labels = std::vector<std::string>;

class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<std::size_t> vertices);

  static VertexSet from_indices(const std::vector<std::size_t>& vertices);
  static constexpr VertexSet singleton(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
  // {0, ..., n-1}
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t v) const { return v < 64 && ((bits_ >> v) & 1U) != 0; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  // Smallest element; undefined on the empty set.
  constexpr std::size_t front() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }
  constexpr std::size_t back() const { return 63 - static_cast<std::size_t>(std::countl_zero(bits_)); }

  constexpr void insert(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr VertexSet with(std::size_t v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(std::size_t v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }
  std::vector<std::size_t> to_vector() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic order on the sorted vertex lists; a proper prefix sorts first.
bool lex_less(VertexSet a, VertexSet b);

struct LexLess {
  bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

void sort_lex(std::vector<VertexSet>& sets);

// Keeps only inclusion-maximal sets (duplicates collapse), sorted lexicographically.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);
// Keeps only inclusion-minimal sets, sorted lexicographically.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);

bool is_antichain(const std::vector<VertexSet>& sets);

std::string format_set(VertexSet s, const Labels& labels);

}  // namespace sctree

template <>
struct std::hash<sctree::VertexSet> {
  std::size_t operator()(sctree::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
