#pragma once

#include <iosfwd>
#include <string>

#include "polybound/hasse.hpp"
#include "polybound/polyhedron.hpp"
#include "polybound/simple_fvector.hpp"

namespace polybound {

// Text formats. All readers throw Error(Input) with a line number on
// malformed input.
//
//   polybound-hrep 1          polybound-vrep 1        polybound-inc 1
//   dim <d> rows <m>          dim <d>                 facets <m> vertices <n>
//   a_1 ... a_d b   (m lines) vertices <k>            <n chars of 0/1> (m lines)
//                             <d rationals> (k lines) farface <indices>  (optional)
//                             rays <r>
//                             <d rationals> (r lines)

void write_hrep(std::ostream& os, const HRep& h);
HRep read_hrep(std::istream& is);

void write_vrep(std::ostream& os, const VRep& v);
VRep read_vrep(std::istream& is);

void write_incidence(std::ostream& os, const IncidenceMatrix& inc);
IncidenceMatrix read_incidence(std::istream& is);

/// {"n_vertices", "far_face", "faces", "arcs", "f_vector"}, faces sorted by
/// (rank, vertices) and numbered in that order.
std::string hasse_to_json(const HasseDiagram& hd);
HasseDiagram hasse_from_json(const std::string& text);

std::string fvector_to_json(const SimpleFaceNumbers& numbers);

/// "f = (f_0, ..., f_d)"
std::string format_fvector(const std::vector<std::uint64_t>& f);

}  // namespace polybound
