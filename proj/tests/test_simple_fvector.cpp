#include <doctest.h>

#include "polybound/bounded_complex.hpp"
#include "polybound/error.hpp"
#include "polybound/generators.hpp"
#include "polybound/simple_fvector.hpp"
#include "support.hpp"

using namespace polybound;
using testing::vec;

namespace {

SimpleFaceNumbers numbers_of(const HRep& h, std::uint64_t seed = 1) {
  const auto c = close_and_enumerate(h);
  return f_vector_simple(c.incidences, c.vertices, h.dim, seed);
}

std::vector<std::uint64_t> rank_histogram(const HasseDiagram& hd, std::size_t d) {
  std::vector<std::uint64_t> f(d + 1, 0);
  for (const auto& n : hd.nodes) {
    if (n.rank >= 0) ++f[static_cast<std::size_t>(n.rank)];
  }
  return f;
}

// phi from the lattice: faces of the closure not inside the far face, plus the empty face.
std::uint64_t phi_from_lattice(const IncidenceMatrix& inc) {
  std::uint64_t phi = 1;
  for (const auto& n : full_face_lattice(inc).nodes) {
    if (n.rank >= 0 && !n.vertices.is_subset_of(*inc.far_face)) ++phi;
  }
  return phi;
}

std::vector<std::uint64_t> dwarfed_f_bounded(std::size_t d) {
  std::vector<std::uint64_t> f(d + 1, 0);
  f[0] = d + 1;
  f[1] = d;
  return f;
}

}  // namespace

TEST_CASE("generic_ray_objective") {
  SUBCASE("segment") {
    VRep v{1, {vec({0}), vec({1})}, {}};
    const auto c = generic_ray_objective(v, VertexSet(2, {1}));
    CHECK(c[0] > 0);
  }
  SUBCASE("triangle") {
    VRep v{2, {vec({0, 0}), vec({0, 1}), vec({1, 0})}, {}};
    const auto c = generic_ray_objective(v, VertexSet(3, {1, 2}));
    CHECK(c[0] > 0);
    CHECK(c[1] > 0);
    CHECK(c[0] != c[1]);
  }
  SUBCASE("dwarfed cube reversal: close to the coordinate sum") {
    const auto cl = close_and_enumerate(dwarfed_cube(4).unbounded);
    const auto c = generic_ray_objective(cl.vertices, *cl.incidences.far_face);
    for (const auto& ci : c) {
      CHECK(ci > 1);
      CHECK(ci < make_rational(11, 10));
    }
  }
  CHECK_THROWS_AS(generic_ray_objective(VRep{1, {vec({0})}, {}}, VertexSet(1)), Error);
}

TEST_CASE("f_vector_simple examples") {
  const auto d2 = numbers_of(dwarfed_cube(2).unbounded);
  CHECK(d2.f_bounded.f == std::vector<std::uint64_t>{3, 2, 0});
  CHECK(d2.f_all.total() == 9);

  const auto d5 = numbers_of(dwarfed_cube(5).unbounded);
  CHECK(d5.f_bounded.f == std::vector<std::uint64_t>{6, 5, 0, 0, 0, 0});
  CHECK(d5.f_bounded.total() == 12);

  CHECK(numbers_of(tropical_hrep(cyclic_matrix(3, 3))).f_bounded.total() == 14);
}

TEST_CASE("f_vector_simple rejects non-simple input") {
  CHECK_THROWS_AS(numbers_of(tropical_hrep(permutohedron_matrix(3))), Error);
}

TEST_CASE("h-vector face numbers against the lattice on simple instances") {
  std::vector<HRep> cases;
  for (std::size_t d = 2; d <= 7; ++d) cases.push_back(dwarfed_cube(d).unbounded);
  cases.push_back(testing::quadrant());
  cases.push_back(testing::strip());
  cases.push_back(testing::half_line());
  cases.push_back(tropical_hrep(cyclic_matrix(3, 3)));
  cases.push_back(tropical_hrep(cyclic_matrix(4, 4)));
  cases.push_back(tropical_hrep(cyclic_matrix(3, 5)));
  for (std::uint64_t s = 1; s <= 80; ++s) cases.push_back(testing::random_small_polyhedron(s));
  std::size_t checked = 0;
  for (const auto& h : cases) {
    const auto c = close_and_enumerate(h);
    if (c.incidences.far_face->empty()) continue;  // a polytope
    bool simple = true;
    for (std::size_t v = 0; v < c.incidences.n_vertices; ++v) {
      if (!c.incidences.far_face->contains(v)) simple = simple && c.incidences.facets_of_vertex(v).count() == h.dim;
    }
    if (!simple) continue;
    const auto a = f_vector_simple(c.incidences, c.vertices, h.dim, 1);
    const auto b = f_vector_simple(c.incidences, c.vertices, h.dim, 99);
    CHECK(a.f_bounded.f == b.f_bounded.f);
    CHECK(a.f_all.f == b.f_all.f);
    CHECK(a.f_bounded.f == rank_histogram(selective_generation(c.incidences), h.dim));
    if (c.incidences.n_vertices <= 60) CHECK(a.f_all.total() == phi_from_lattice(c.incidences));
    // h-vector bookkeeping
    std::uint64_t near = 0, sum_h = 0, sum_inf = 0;
    for (std::size_t v = 0; v < c.incidences.n_vertices; ++v) near += !c.incidences.far_face->contains(v);
    for (auto x : a.h.h) sum_h += x;
    for (auto x : a.h.h_inf) sum_inf += x;
    CHECK(sum_h == near);
    CHECK(sum_inf == c.incidences.far_face->count());
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("out-degree sum equals arcs leaving vertices of P") {
  const auto c = close_and_enumerate(dwarfed_cube(4).unbounded);
  const auto n = f_vector_simple(c.incidences, c.vertices, 4);
  const auto g = vertex_edge_graph(c.incidences, 4);
  std::vector<Rational> val;
  for (const auto& p : c.vertices.vertices) val.push_back(dot(n.objective, p));
  std::uint64_t arcs = 0;
  for (auto [u, v] : g.edges) {
    const auto lo = val[u] < val[v] ? u : v;
    arcs += !c.incidences.far_face->contains(lo);
  }
  std::uint64_t weighted = 0;
  for (std::size_t k = 0; k < n.h.h.size(); ++k) weighted += k * n.h.h[k];
  CHECK(weighted == arcs);
}

TEST_CASE("closure h-vector formula on simple closures") {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto c = close_and_enumerate(dwarfed_cube(d).unbounded);
    REQUIRE(is_simple(c.incidences, d));
    const auto n = f_vector_simple(c.incidences, c.vertices, d);
    CHECK(f_from_closure_h(n.h.h_closure, n.h.h_inf, d).f == n.f_bounded.f);
    CHECK(n.f_bounded.f == dwarfed_f_bounded(d));
  }
}
