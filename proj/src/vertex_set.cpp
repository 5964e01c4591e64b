#include "polybound/vertex_set.hpp"

#include <algorithm>

namespace polybound {

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<std::size_t> members) : VertexSet(capacity) {
  for (auto m : members) insert(m);
}

VertexSet VertexSet::full(std::size_t capacity) {
  VertexSet s(capacity);
  for (std::size_t i = 0; i < capacity; ++i) s.insert(i);
  return s;
}

VertexSet VertexSet::from_indices(std::size_t capacity, const std::vector<std::size_t>& members) {
  VertexSet s(capacity);
  for (auto m : members) s.insert(m);
  return s;
}

std::size_t VertexSet::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::size_t VertexSet::first_not_in(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i] & ~other.words_[i];
    if (w) return i * 64 + static_cast<std::size_t>(std::countr_zero(w));
  }
  return capacity_;
}

std::size_t VertexSet::next(std::size_t from) const {
  if (from >= capacity_) return capacity_;
  std::size_t wi = from >> 6;
  std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
  for (;;) {
    if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return capacity_;
    w = words_[wi];
  }
}

std::vector<std::size_t> VertexSet::to_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = next(0); i < capacity_; i = next(i + 1)) out.push_back(i);
  return out;
}

VertexSet VertexSet::restrict_to(const std::vector<std::size_t>& kept) const {
  VertexSet out(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (contains(kept[i])) out.insert(i);
  }
  return out;
}

bool VertexSet::lex_less(const VertexSet& other) const {
  std::size_t a = next(0);
  std::size_t b = other.next(0);
  while (a < capacity_ && b < other.capacity_) {
    if (a != b) return a < b;
    a = next(a + 1);
    b = other.next(b + 1);
  }
  return a >= capacity_ && b < other.capacity_;
}

std::size_t VertexSet::hash() const {
  std::size_t h = capacity_;
  for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto i : to_indices()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace polybound
