#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polybound/polyhedron.hpp"
#include "polybound/vertex_set.hpp"

namespace polybound {

struct Face {
  VertexSet vertices;
  int rank = -1;
};

/// Ranked DAG of faces. Node 0 is the empty face (rank -1). Arcs go from a
/// face to a face of rank one higher that contains it.
struct HasseDiagram {
  std::size_t n_vertices = 0;
  std::vector<Face> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  std::optional<VertexSet> far_face;

  std::size_t size() const { return nodes.size(); }

  /// Face counts by rank 0..max rank (the empty face is not counted).
  std::vector<std::size_t> f_vector() const;

  /// Same diagram with nodes sorted by (rank, vertex list) and arcs sorted.
  /// Two diagrams are isomorphic up to id renaming iff canonical forms match.
  HasseDiagram canonical() const;

  /// Nodes of rank <= max_rank and the arcs among them.
  HasseDiagram restrict_rank(int max_rank) const;

  bool same_faces_and_arcs(const HasseDiagram& other) const;

  /// Throws Error(Invariant) unless arcs join consecutive ranks along strict
  /// inclusions, vertex sets are distinct and every non-root node has an
  /// in-arc.
  void check_invariants() const;
};

}  // namespace polybound
