#pragma once

#include <optional>

#include "polybound/face_tree.hpp"
#include "polybound/hasse.hpp"
#include "polybound/polyhedron.hpp"

namespace polybound {

/// Hasse diagram of the bounded faces, from the incidences of the projective
/// closure and its far face: a breadth-first walk up from the empty face that
/// never leaves the bounded faces. With max_dim set, faces above that rank
/// are not generated.
HasseDiagram selective_generation(const IncidenceMatrix& inc, std::optional<int> max_dim = std::nullopt);

/// Complete face lattice of a polytope, including the top node.
HasseDiagram full_face_lattice(const IncidenceMatrix& inc);

/// Drops every face meeting `far`, and the top node.
HasseDiagram filter_bounded(const HasseDiagram& hd, const VertexSet& far);

}  // namespace polybound
