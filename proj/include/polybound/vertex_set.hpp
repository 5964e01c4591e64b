#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace polybound {

// Fixed-capacity bit vector over vertex indices [0, capacity).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t capacity) : capacity_(capacity), words_((capacity + 63) / 64, 0) {}
  VertexSet(std::size_t capacity, std::initializer_list<std::size_t> members);

  static VertexSet full(std::size_t capacity);
  static VertexSet from_indices(std::size_t capacity, const std::vector<std::size_t>& members);

  std::size_t capacity() const { return capacity_; }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  std::size_t count() const;
  bool empty() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Smallest member not contained in `other`, or capacity() if none.
  std::size_t first_not_in(const VertexSet& other) const;
  /// Smallest member >= from, or capacity() if none.
  std::size_t next(std::size_t from) const;

  std::vector<std::size_t> to_indices() const;

  /// Keeps only the positions listed in `kept`, renumbered 0..kept.size()-1.
  VertexSet restrict_to(const std::vector<std::size_t>& kept) const;

  bool operator==(const VertexSet& other) const = default;
  /// Lexicographic order on the sorted member lists.
  bool lex_less(const VertexSet& other) const;

  std::size_t hash() const;

  std::string to_string() const;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace polybound
