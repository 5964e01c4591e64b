#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "polybound/hasse.hpp"
#include "polybound/pipeline.hpp"
#include "polybound/polyhedron.hpp"
#include "polybound/random.hpp"

namespace testing {

using namespace polybound;

// Rows given as integer coefficients followed by the right-hand side.
inline HRep hrep(std::size_t dim, const std::vector<std::vector<long>>& rows) {
  HRep h;
  h.dim = dim;
  for (const auto& r : rows) {
    Inequality q;
    for (std::size_t j = 0; j < dim; ++j) q.a.push_back(Rational(r[j]));
    q.b = Rational(r[dim]);
    h.rows.push_back(std::move(q));
  }
  return h;
}

inline Vector vec(const std::vector<long>& v) {
  Vector out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

inline HRep unit_square() { return hrep(2, {{-1, 0, 0}, {1, 0, 1}, {0, -1, 0}, {0, 1, 1}}); }
inline HRep unit_cube() {
  return hrep(3, {{-1, 0, 0, 0}, {1, 0, 0, 1}, {0, -1, 0, 0}, {0, 1, 0, 1}, {0, 0, -1, 0}, {0, 0, 1, 1}});
}
inline HRep half_line() { return hrep(1, {{-1, 0}}); }
inline HRep quadrant() { return hrep(2, {{-1, 0, 0}, {0, -1, 0}}); }
// y >= 0, y <= 1, x >= 0
inline HRep strip() { return hrep(2, {{0, -1, 0}, {0, 1, 1}, {-1, 0, 0}}); }

// Square with vertices 0..3 in cyclic order and facets {01},{12},{23},{30}.
inline IncidenceMatrix square_incidences() {
  IncidenceMatrix inc;
  inc.n_vertices = 4;
  inc.facets = {VertexSet(4, {0, 1}), VertexSet(4, {1, 2}), VertexSet(4, {2, 3}), VertexSet(4, {3, 0})};
  inc.dim = 2;
  return inc;
}

// Random pointed polyhedron: x >= 0 plus a few random cuts through the
// positive orthant. Frequently degenerate and unbounded.
inline HRep random_small_polyhedron(std::uint64_t seed) {
  SplitMix64 rng(seed);
  const std::size_t d = 2 + rng.uniform_inclusive(2);
  const std::size_t extra = 2 + rng.uniform_inclusive(3);
  HRep h;
  h.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    Vector a(d, Rational(0));
    a[i] = -1;
    h.rows.push_back({a, Rational(0)});
  }
  for (std::size_t k = 0; k < extra; ++k) {
    Vector a(d);
    for (auto& x : a) x = Rational(static_cast<long>(rng.uniform_inclusive(4)) - 1);
    h.rows.push_back({a, Rational(static_cast<long>(1 + rng.uniform_inclusive(4)))});
  }
  return h;
}

// Every vertex of P lies on exactly dim rows of h (no degenerate vertex,
// redundant rows included).
inline bool nondegenerate(const HRep& h) {
  for (const auto& v : enumerate_vertices(h).vertices) {
    std::size_t tight = 0;
    for (const auto& r : h.rows) tight += dot(r.a, v) == r.b;
    if (tight != h.dim) return false;
  }
  return true;
}

// ---- independent face-lattice oracle -------------------------------------

using Members = std::vector<std::size_t>;

struct LatticeOracle {
  std::vector<Members> faces;  // proper faces incl. the empty one, sorted
  std::map<Members, int> rank;
  std::set<std::pair<Members, Members>> arcs;  // cover relations among proper faces
};

// Every face of a polytope is an intersection of facets, so the proper faces
// are the closure of the facet rows under pairwise intersection.
inline LatticeOracle lattice_oracle(const IncidenceMatrix& inc) {
  std::set<Members> all;
  std::vector<VertexSet> frontier;
  auto add = [&](const VertexSet& s) {
    if (all.insert(s.to_indices()).second) frontier.push_back(s);
  };
  add(VertexSet(inc.n_vertices));
  for (const auto& f : inc.facets) add(f);
  std::vector<VertexSet> known(frontier);
  while (!frontier.empty()) {
    auto batch = std::move(frontier);
    frontier.clear();
    for (const auto& s : batch) {
      for (const auto& f : inc.facets) {
        VertexSet t = s & f;
        if (all.count(t.to_indices()) == 0) {
          add(t);
          known.push_back(t);
        }
      }
    }
  }
  LatticeOracle out;
  out.faces.assign(all.begin(), all.end());
  std::sort(out.faces.begin(), out.faces.end(), [](const Members& a, const Members& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  auto subset = [](const Members& a, const Members& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (const auto& g : out.faces) {
    int r = -1;
    for (const auto& h : out.faces) {
      if (!subset(h, g)) continue;
      r = std::max(r, out.rank[h] + 1);
      bool cover = true;
      for (const auto& k : out.faces) {
        if (subset(h, k) && subset(k, g)) {
          cover = false;
          break;
        }
      }
      if (cover) out.arcs.insert({h, g});
    }
    out.rank[g] = r;
  }
  return out;
}

struct DiagramShape {
  std::set<std::pair<Members, int>> nodes;
  std::set<std::pair<Members, Members>> arcs;
  bool operator==(const DiagramShape&) const = default;
};

inline DiagramShape shape_of(const HasseDiagram& hd) {
  DiagramShape s;
  for (const auto& n : hd.nodes) s.nodes.insert({n.vertices.to_indices(), n.rank});
  for (auto [lo, hi] : hd.arcs) s.arcs.insert({hd.nodes[lo].vertices.to_indices(), hd.nodes[hi].vertices.to_indices()});
  return s;
}

// Bounded part of the oracle lattice: faces avoiding `far`, arcs among them.
inline DiagramShape bounded_oracle(const IncidenceMatrix& inc, const VertexSet& far) {
  const auto lat = lattice_oracle(inc);
  const auto far_members = far.to_indices();
  auto bounded = [&](const Members& m) {
    for (auto v : m) {
      if (std::binary_search(far_members.begin(), far_members.end(), v)) return false;
    }
    return true;
  };
  DiagramShape s;
  for (const auto& f : lat.faces) {
    if (bounded(f)) s.nodes.insert({f, lat.rank.at(f)});
  }
  for (const auto& [lo, hi] : lat.arcs) {
    if (bounded(lo) && bounded(hi)) s.arcs.insert({lo, hi});
  }
  return s;
}

// ---- independent Möbius oracle -------------------------------------------

// Möbius numbers of the intersection poset of the rows of `inc` (plus the
// empty set), by the defining recursion mu(x) = -sum_{y < x} mu(y).
inline std::map<Members, long> moebius_oracle(const IncidenceMatrix& inc) {
  const auto lat = lattice_oracle(inc);
  std::map<Members, long> mu;
  for (const auto& g : lat.faces) {
    if (g.empty()) {
      mu[g] = 1;
      continue;
    }
    long s = 0;
    for (const auto& [h, m] : mu) {
      if (h.size() < g.size() && std::includes(g.begin(), g.end(), h.begin(), h.end())) s += m;
    }
    mu[g] = -s;
  }
  return mu;
}

inline std::set<Members> as_members(const std::vector<VertexSet>& sets) {
  std::set<Members> out;
  for (const auto& s : sets) out.insert(s.to_indices());
  return out;
}

}  // namespace testing
