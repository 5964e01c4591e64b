#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "polybound/matrix.hpp"
#include "polybound/vertex_set.hpp"

namespace polybound {

/// One row a·x <= b.
struct Inequality {
  Vector a;
  Rational b;

  bool operator==(const Inequality&) const = default;
};

/// Inequality description {x : a_i·x <= b_i for all rows}.
struct HRep {
  std::size_t dim = 0;
  std::vector<Inequality> rows;

  Matrix matrix() const;
  Vector rhs() const;
  /// Throws Error(Input) unless dim >= 1, rows nonempty and every row has dim entries.
  void validate() const;

  bool operator==(const HRep&) const = default;
};

/// Vertices and (normalized) rays, both sorted lexicographically.
struct VRep {
  std::size_t dim = 0;
  std::vector<Vector> vertices;
  std::vector<Vector> rays;

  bool operator==(const VRep&) const = default;
};

/// Output of the projective closure. The map p -> x̄ is the composition of
/// the translation by -translation, the linear map rho, and the projective
/// map z -> z / (1 + Σz). Its image lies in the standard simplex and the far
/// face sits on Σx = 1.
struct ClosureResult {
  HRep closure;
  Vector translation;
  Matrix rho;
  Matrix rho_inverse;
  std::size_t far_inequality = 0;
  /// Input row indices whose normals form the chosen dual basis.
  std::vector<std::size_t> basis_rows;

  Vector map_point(const Vector& p) const;
  /// Inverse map for a closure point with Σx < 1.
  Vector pull_back_point(const Vector& x) const;
  /// Recession direction of the input for a closure point with Σx = 1.
  Vector pull_back_direction(const Vector& x) const;
};

/// Facet × vertex incidences. Rows are facets, columns vertices.
struct IncidenceMatrix {
  std::size_t n_vertices = 0;
  std::vector<VertexSet> facets;
  std::optional<VertexSet> far_face;
  std::optional<std::size_t> dim;
  /// Row of the source HRep behind each facet, when known.
  std::vector<std::size_t> source_rows;

  std::size_t n_facets() const { return facets.size(); }
  std::size_t alpha() const;
  bool incident(std::size_t f, std::size_t v) const { return facets[f].contains(v); }
  /// Facets containing vertex v.
  VertexSet facets_of_vertex(std::size_t v) const;

  /// Incidences of P alone: drops far columns and the far-face row.
  IncidenceMatrix without_far_face() const;

  /// Checks the pointedness invariant (every facet row nonempty) and, when
  /// dim is attached, that every column has at least dim ones.
  void validate() const;
};

struct Graph {
  std::size_t node_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, sorted

  std::vector<std::vector<std::size_t>> adjacency() const;
};

// Budget for the number of row subsets brute force may examine.
inline constexpr unsigned long long kDefaultBruteForceBudget = 10'000'000ULL;

ClosureResult projective_closure(const HRep& h);

/// Reference enumeration: solves every d-subset of rows. Rays come from the
/// far vertices of the projective closure.
VRep enumerate_vertices_bruteforce(const HRep& h, unsigned long long budget = kDefaultBruteForceBudget);

/// Vertices of a polytope contained in the standard simplex, by exact
/// double description starting from that simplex. Sorted lexicographically.
std::vector<Vector> enumerate_simplex_polytope_vertices(const HRep& h);

/// Vertices and rays of any pointed polyhedron via its projective closure.
VRep enumerate_vertices(const HRep& h);

IncidenceMatrix compute_incidences(const HRep& h, const VRep& v);

VertexSet far_face_vertices(const ClosureResult& c, const VRep& closure_vertices);

bool is_simple(const IncidenceMatrix& inc, std::size_t d);

/// Edges of a simple polytope: u ~ v iff they share exactly d-1 facets.
Graph vertex_edge_graph(const IncidenceMatrix& inc, std::size_t d);

/// Edges of any polytope: u ~ v iff no third vertex lies on every facet
/// containing both.
Graph combinatorial_vertex_graph(const IncidenceMatrix& inc);

struct ReverseSearchResult {
  VRep vertices;                 // rays left empty
  Graph graph;                   // bounded edges, indices into vertices
  /// (vertex index, basis row dropped) for each unbounded edge direction.
  std::vector<std::pair<std::size_t, std::size_t>> unbounded_edges;
};

/// Avis-Fukuda reverse search over the bases of a simple pointed polyhedron.
/// The objective must attain its maximum and separate adjacent vertices.
ReverseSearchResult reverse_search_vertices(const HRep& h, const Vector& objective);

/// Positive combination of all row normals plus a small deterministic tilt;
/// bounded above on any pointed polyhedron.
Vector bounded_objective(const HRep& h);

}  // namespace polybound
