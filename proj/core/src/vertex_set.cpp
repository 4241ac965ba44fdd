#include "geodetic/vertex_set.hpp"

#include <cassert>

namespace geodetic {

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
    : VertexSet(capacity) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t capacity) {
  VertexSet s(capacity);
  for (auto& w : s.words_) w = ~Word{0};
  if (const std::size_t tail = capacity % kWordBits; tail != 0) {
    s.words_.back() = (Word{1} << tail) - 1;
  }
  s.size_ = capacity;
  return s;
}

VertexSet VertexSet::from_members(std::size_t capacity,
                                  std::span<const Vertex> members) {
  VertexSet s(capacity);
  for (Vertex v : members) s.insert(v);
  return s;
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
  size_ = 0;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  assert(capacity_ == other.capacity_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

std::size_t VertexSet::count_minus(const VertexSet& other) const noexcept {
  assert(capacity_ == other.capacity_);
  std::size_t count = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
  }
  return count;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::recount() noexcept {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  size_ = count;
}

std::size_t union_size(const VertexSet& a, const VertexSet& b,
                       const VertexSet& c) noexcept {
  const auto wa = a.words();
  const auto wb = b.words();
  const auto wc = c.words();
  assert(wa.size() == wb.size() && wb.size() == wc.size());
  std::size_t count = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(wa[i] | wb[i] | wc[i]));
  }
  return count;
}

}  // namespace geodetic
