#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polybound/polyhedron.hpp"
#include "polybound/vertex_set.hpp"

namespace polybound {

/// The closure operator of an incidence matrix: the intersection of all facet
/// rows containing a set, or nullopt (the improper face) if no row does.
class ClosureOperator {
 public:
  explicit ClosureOperator(const IncidenceMatrix& inc) : inc_(&inc) {}

  std::optional<VertexSet> operator()(const VertexSet& s) const;

  const IncidenceMatrix& incidences() const { return *inc_; }

 private:
  const IncidenceMatrix* inc_;
};

std::optional<VertexSet> closure(const VertexSet& s, const IncidenceMatrix& inc);

/// Inclusion-minimal proper faces strictly containing the closed set H, in
/// order of their smallest generating vertex.
std::vector<VertexSet> covers(const VertexSet& h, const IncidenceMatrix& inc);

/// Trie over canonical generator sequences. The path of a face F appends, at
/// each step, the smallest vertex of F outside the closure of the generators
/// chosen so far; so every closed set has exactly one path.
class FaceTree {
 public:
  FaceTree() : nodes_(1) {}

  /// Returns (stored id, false) if F is present; otherwise stores fresh_id and
  /// returns (fresh_id, true). F must be a closed set.
  std::pair<std::size_t, bool> insert_or_find(const VertexSet& face, const ClosureOperator& cl, std::size_t fresh_id);

  std::optional<std::size_t> find(const VertexSet& face, const ClosureOperator& cl) const;

  std::size_t trie_size() const { return nodes_.size(); }

 private:
  struct Node {
    std::vector<std::pair<std::size_t, std::size_t>> children;  // (vertex, node), sorted
    std::optional<std::size_t> payload;
  };

  std::optional<std::size_t> child(std::size_t node, std::size_t vertex) const;

  std::vector<Node> nodes_;
  // The empty set, when it is not closed (every facet shares a vertex).
  std::optional<std::size_t> empty_payload_;
};

}  // namespace polybound
