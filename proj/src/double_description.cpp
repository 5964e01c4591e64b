// Double description (Motzkin) over homogeneous integer coordinates for
// polytopes inside the standard simplex. The simplex itself is the initial
// polytope, so no lineality handling is needed.
#include <algorithm>
#include <set>

#include "polybound/error.hpp"
#include "polybound/polyhedron.hpp"

namespace polybound {

namespace {

using IntVector = std::vector<Integer>;

struct Ray {
  IntVector coords;  // (t, x_1, ..., x_d), t > 0 for every generator here
  VertexSet zeros;   // processed constraints tight at this ray
};

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
}

// Row a·x <= b as the homogeneous functional (b, -a) >= 0 with integer entries.
IntVector homogenize(const Inequality& row) {
  Integer l = row.b.get_den();
  for (const auto& x : row.a) l = lcm(l, x.get_den());
  IntVector g(row.a.size() + 1);
  g[0] = Integer(row.b * l);
  for (std::size_t i = 0; i < row.a.size(); ++i) g[i + 1] = Integer(-row.a[i] * l);
  make_primitive(g);
  return g;
}

Integer evaluate(const IntVector& g, const IntVector& r) {
  Integer s = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0 && r[i] != 0) s += g[i] * r[i];
  }
  return s;
}

}  // namespace

std::vector<Vector> enumerate_simplex_polytope_vertices(const HRep& h) {
  h.validate();
  const std::size_t d = h.dim;
  const std::size_t simplex_rows = d + 1;
  const std::size_t total = simplex_rows + h.rows.size();

  std::vector<IntVector> constraints;
  constraints.reserve(h.rows.size());
  for (const auto& row : h.rows) constraints.push_back(homogenize(row));

  // Simplex facets: index i < d is x_{i+1} >= 0, index d is Σx <= 1.
  std::vector<Ray> rays;
  {
    Ray origin{IntVector(d + 1, Integer(0)), VertexSet(total)};
    origin.coords[0] = 1;
    for (std::size_t i = 0; i < d; ++i) origin.zeros.insert(i);
    rays.push_back(std::move(origin));
    for (std::size_t k = 0; k < d; ++k) {
      Ray corner{IntVector(d + 1, Integer(0)), VertexSet(total)};
      corner.coords[0] = 1;
      corner.coords[k + 1] = 1;
      for (std::size_t i = 0; i < d; ++i) {
        if (i != k) corner.zeros.insert(i);
      }
      corner.zeros.insert(d);
      rays.push_back(std::move(corner));
    }
  }

  std::vector<bool> done(h.rows.size(), false);
  std::vector<Integer> values;
  for (std::size_t step = 0; step < h.rows.size(); ++step) {
    // Insert next the row cutting off the fewest current generators; rows
    // that cut nothing go first since they only record tightness.
    std::size_t pick = h.rows.size();
    std::size_t best_cut = 0;
    for (std::size_t k = 0; k < h.rows.size(); ++k) {
      if (done[k]) continue;
      std::size_t cut = 0;
      for (const auto& r : rays) cut += (evaluate(constraints[k], r.coords) < 0) ? 1 : 0;
      if (pick == h.rows.size() || cut < best_cut) {
        pick = k;
        best_cut = cut;
        if (cut == 0) break;
      }
    }
    done[pick] = true;
    const IntVector& g = constraints[pick];
    const std::size_t tag = simplex_rows + pick;

    values.resize(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      values[i] = evaluate(g, rays[i].coords);
      const int s = sgn(values[i]);
      if (s > 0) pos.push_back(i);
      else if (s < 0) neg.push_back(i);
    }

    std::vector<Ray> created;
    if (!neg.empty()) {
      for (auto p : pos) {
        for (auto n : neg) {
          VertexSet common = rays[p].zeros & rays[n].zeros;
          if (common.count() + 1 < d) continue;
          bool adjacent = true;
          for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
            if (w != p && w != n && common.is_subset_of(rays[w].zeros)) adjacent = false;
          }
          if (!adjacent) continue;
          Ray fresh{IntVector(d + 1), std::move(common)};
          const Integer wp = values[p];
          const Integer wn = -values[n];
          for (std::size_t c = 0; c <= d; ++c) fresh.coords[c] = wp * rays[n].coords[c] + wn * rays[p].coords[c];
          make_primitive(fresh.coords);
          fresh.zeros.insert(tag);
          created.push_back(std::move(fresh));
        }
      }
    }

    std::vector<Ray> next;
    next.reserve(rays.size() - neg.size() + created.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int s = sgn(values[i]);
      if (s < 0) continue;
      if (s == 0) rays[i].zeros.insert(tag);
      next.push_back(std::move(rays[i]));
    }
    for (auto& r : created) next.push_back(std::move(r));
    rays = std::move(next);
    if (rays.empty()) return {};
  }

  std::set<Vector> vertices;
  for (const auto& r : rays) {
    if (r.coords[0] <= 0) throw invariant_error("double description produced a point at infinity");
    Vector x(d);
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = Rational(r.coords[i + 1], r.coords[0]);
      x[i].canonicalize();
    }
    vertices.insert(std::move(x));
  }
  return {vertices.begin(), vertices.end()};
}

}  // namespace polybound
