#pragma once

#include <cstdint>
#include <vector>

#include "polybound/polyhedron.hpp"

namespace polybound {

/// Degree histograms of the vertex-edge graph of the closure, oriented by a
/// generic objective that is largest on the far face.
struct HVector {
  std::vector<std::uint64_t> h;          // out-degree counts over vertices of P
  std::vector<std::uint64_t> h_inf;      // in-degree counts over far vertices
  std::vector<std::uint64_t> h_closure;  // out-degree counts over all closure vertices
};

struct FVector {
  std::vector<std::uint64_t> f;  // f_0 .. f_d

  std::uint64_t total() const;  // Σ f_k + 1 (the empty face)
};

struct SimpleFaceNumbers {
  FVector f_bounded;
  FVector f_all;
  HVector h;
  Vector objective;
};

/// Objective (1,...,1) + eps·(1, q, q², ...) with q drawn from `seed`, eps
/// halved per retry until the values on all closure vertices are pairwise
/// distinct and every far vertex beats every other vertex.
Vector generic_ray_objective(const VRep& closure_vertices, const VertexSet& far, std::uint64_t seed = 1);

/// Face numbers of the bounded subcomplex and of P itself for a simple
/// polyhedron, from the incidences and vertex coordinates of its closure.
SimpleFaceNumbers f_vector_simple(const IncidenceMatrix& inc, const VRep& closure_vertices, std::size_t d,
                                  std::uint64_t seed = 1);

/// f_k = Σ_{i>=k} C(i,k) (h_i - h_inf_i) for a simple closure.
FVector f_from_closure_h(const std::vector<std::uint64_t>& h_closure, const std::vector<std::uint64_t>& h_inf,
                         std::size_t d);

}  // namespace polybound
