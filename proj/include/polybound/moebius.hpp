#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polybound/face_tree.hpp"
#include "polybound/hasse.hpp"
#include "polybound/polyhedron.hpp"

namespace polybound {

/// All vertex sets of proper faces of an unbounded polyhedron (nonempty
/// intersections of incidence rows) plus the empty set, with their Möbius
/// numbers. Elements are sorted by (cardinality, vertex list); the artificial
/// top element is kept apart.
struct VertexPoset {
  std::vector<VertexSet> elements;
  std::vector<std::int64_t> mu;
  std::int64_t top_mu = 0;

  std::size_t size() const { return elements.size(); }
};

inline constexpr std::size_t kDefaultPosetBudget = 5'000'000;

VertexPoset vertex_poset(const IncidenceMatrix& inc, std::size_t budget = kDefaultPosetBudget);

/// Elements with nonzero Möbius number: exactly the vertex sets of bounded faces.
std::vector<VertexSet> moebius_oracle_filter(const VertexPoset& vp);

/// Bounded elements strictly below a poset element, with their Möbius
/// numbers, indexed through a face tree.
class BelowSet {
 public:
  /// Adds (element, mu) unless the element is present already.
  void add(const VertexSet& element, std::int64_t mu, const ClosureOperator& cl);
  void merge(const BelowSet& other, const ClosureOperator& cl);

  std::int64_t sum() const;
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<VertexSet, std::int64_t>>& entries() const { return entries_; }

 private:
  FaceTree index_;
  std::vector<std::pair<VertexSet, std::int64_t>> entries_;
};

enum class QueueOrder {
  Cardinality,  // pop the smallest vertex set first
  Fifo,         // plain breadth-first order
};

struct MoebiusOptions {
  std::optional<int> max_dim;
  QueueOrder order = QueueOrder::Cardinality;
};

/// Hasse diagram of the bounded faces from the incidences of the unbounded
/// polyhedron alone. Boundedness of each discovered face is decided by its
/// Möbius number, accumulated from the faces already processed below it.
HasseDiagram moebius_generation(const IncidenceMatrix& inc, const MoebiusOptions& options = {});

}  // namespace polybound
