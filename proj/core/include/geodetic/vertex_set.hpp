#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace geodetic {

using Vertex = std::uint32_t;

/// Fixed-capacity bit set over vertex ids 0..capacity-1 with a cached
/// cardinality. Binary operations require equal capacities.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_(word_count(capacity), 0) {}
  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t capacity);
  static VertexSet from_members(std::size_t capacity,
                                std::span<const Vertex> members);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Vertex v) const noexcept {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  void insert(Vertex v) noexcept {
    Word& w = words_[v / kWordBits];
    const Word bit = Word{1} << (v % kWordBits);
    size_ += (w & bit) ? 0 : 1;
    w |= bit;
  }

  void erase(Vertex v) noexcept {
    Word& w = words_[v / kWordBits];
    const Word bit = Word{1} << (v % kWordBits);
    size_ -= (w & bit) ? 1 : 0;
    w &= ~bit;
  }

  void clear() noexcept;

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) {
    return lhs |= rhs;
  }
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) {
    return lhs &= rhs;
  }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) {
    return lhs -= rhs;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }

  bool is_subset_of(const VertexSet& other) const noexcept;

  /// |this \ other| without materializing the difference.
  std::size_t count_minus(const VertexSet& other) const noexcept;

  /// Ascending list of members.
  std::vector<Vertex> members() const;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        fn(static_cast<Vertex>(w * kWordBits + bit));
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const noexcept { return words_; }

  static std::size_t word_count(std::size_t capacity) noexcept {
    return (capacity + kWordBits - 1) / kWordBits;
  }

 private:
  void recount() noexcept;

  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// |a ∪ b ∪ c| for equal-capacity sets, without allocation.
std::size_t union_size(const VertexSet& a, const VertexSet& b,
                       const VertexSet& c) noexcept;

}  // namespace geodetic
