#include "polybound/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "polybound/error.hpp"
#include "polybound/lp.hpp"
#include "polybound/random.hpp"

namespace polybound {

Matrix HRep::matrix() const {
  Matrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r].a[c];
  }
  return m;
}

Vector HRep::rhs() const {
  Vector b;
  b.reserve(rows.size());
  for (const auto& row : rows) b.push_back(row.b);
  return b;
}

void HRep::validate() const {
  if (dim == 0) throw input_error("H-representation needs dim >= 1");
  if (rows.empty()) throw input_error("H-representation needs at least one row");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].a.size() != dim) {
      throw input_error("row " + std::to_string(r) + " has " + std::to_string(rows[r].a.size()) +
                        " coefficients, expected " + std::to_string(dim));
    }
  }
}

std::size_t IncidenceMatrix::alpha() const {
  std::size_t total = 0;
  for (const auto& f : facets) total += f.count();
  return total;
}

VertexSet IncidenceMatrix::facets_of_vertex(std::size_t v) const {
  VertexSet out(facets.size());
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (facets[f].contains(v)) out.insert(f);
  }
  return out;
}

IncidenceMatrix IncidenceMatrix::without_far_face() const {
  if (!far_face) return *this;
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < n_vertices; ++v) {
    if (!far_face->contains(v)) kept.push_back(v);
  }
  IncidenceMatrix out;
  out.n_vertices = kept.size();
  out.dim = dim;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (facets[f] == *far_face) continue;
    VertexSet row = facets[f].restrict_to(kept);
    if (row.empty()) continue;
    out.facets.push_back(std::move(row));
    if (f < source_rows.size()) out.source_rows.push_back(source_rows[f]);
  }
  return out;
}

void IncidenceMatrix::validate() const {
  for (std::size_t f = 0; f < facets.size(); ++f) {
    if (facets[f].capacity() != n_vertices) throw input_error("incidence row width mismatch");
    if (facets[f].empty()) throw input_error("facet " + std::to_string(f) + " contains no vertex");
  }
  if (far_face && far_face->capacity() != n_vertices) throw input_error("far face width mismatch");
  if (dim) {
    std::vector<std::size_t> column(n_vertices, 0);
    for (const auto& f : facets) {
      for (auto v : f.to_indices()) ++column[v];
    }
    for (std::size_t v = 0; v < n_vertices; ++v) {
      if (column[v] < *dim) {
        throw input_error("vertex " + std::to_string(v) + " lies on " + std::to_string(column[v]) +
                          " facets, fewer than the dimension " + std::to_string(*dim));
      }
    }
  }
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(node_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// ---------------------------------------------------------------------------
// Projective closure

Vector ClosureResult::map_point(const Vector& p) const {
  Vector shifted(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) shifted[i] = p[i] - translation[i];
  Vector z = rho * shifted;
  Rational denom = 1;
  for (const auto& zi : z) denom += zi;
  for (auto& zi : z) zi /= denom;
  return z;
}

Vector ClosureResult::pull_back_point(const Vector& x) const {
  Rational denom = 1;
  for (const auto& xi : x) denom -= xi;
  if (denom <= 0) throw input_error("point lies on the far face; it has no preimage");
  Vector z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] / denom;
  Vector p = rho_inverse * z;
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += translation[i];
  return p;
}

Vector ClosureResult::pull_back_direction(const Vector& x) const {
  return normalize_direction(rho_inverse * x);
}

namespace {

// Positive rescaling of a row to coprime integers.
Inequality primitive(Inequality row) {
  Integer l = 1;
  for (const auto& x : row.a) l = lcm(l, x.get_den());
  l = lcm(l, row.b.get_den());
  Integer g = 0;
  for (auto& x : row.a) {
    x *= l;
    g = gcd(g, x.get_num());
  }
  row.b *= l;
  g = gcd(g, row.b.get_num());
  if (g > 1) {
    for (auto& x : row.a) x /= g;
    row.b /= g;
  }
  return row;
}

}  // namespace

ClosureResult projective_closure(const HRep& h) {
  h.validate();
  const std::size_t d = h.dim;
  const Matrix a = h.matrix();
  const Vector b = h.rhs();

  auto lp = lp_solve(a, b, Vector(d), Sense::Maximize);
  if (lp.status != LpStatus::Optimal) throw input_error("empty polyhedron");
  const Vector& v = *lp.point;

  std::vector<std::size_t> basis;
  std::vector<Vector> chosen;
  for (auto r : active_rows(a, b, v)) {
    chosen.push_back(h.rows[r].a);
    if (rank(Matrix::from_rows(chosen, d)) == chosen.size()) {
      basis.push_back(r);
      if (basis.size() == d) break;
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() < d) throw input_error("not pointed");

  Matrix bmat = Matrix::from_rows(chosen, d);
  Matrix binv = *inverse(bmat);

  ClosureResult out;
  out.translation = v;
  out.basis_rows = basis;
  out.rho = Matrix(d, d);
  out.rho_inverse = Matrix(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      out.rho(r, c) = -bmat(r, c);
      out.rho_inverse(r, c) = -binv(r, c);
    }
  }

  // In z = rho(x - v) coordinates the rows read (-a B^{-1}) z <= b - a·v, and
  // z = x̄ / (1 - Σx̄) turns them into (-a B^{-1} + (b - a·v) 1ᵀ) x̄ <= b - a·v.
  out.closure.dim = d;
  for (std::size_t r = 0; r < h.rows.size(); ++r) {
    const Vector& ar = h.rows[r].a;
    Rational slack = h.rows[r].b - dot(ar, v);
    Inequality row;
    row.a.resize(d);
    for (std::size_t c = 0; c < d; ++c) {
      Rational coeff = 0;
      for (std::size_t k = 0; k < d; ++k) coeff -= ar[k] * binv(k, c);
      row.a[c] = coeff + slack;
    }
    row.b = slack;
    out.closure.rows.push_back(primitive(std::move(row)));
  }
  out.closure.rows.push_back({Vector(d, Rational(1)), Rational(1)});
  out.far_inequality = out.closure.rows.size() - 1;
  return out;
}

// ---------------------------------------------------------------------------
// Vertex enumeration

namespace {

unsigned long long binomial_capped(std::size_t n, std::size_t k, unsigned long long cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    value = value * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (value > static_cast<long double>(cap)) return cap + 1;
  }
  return static_cast<unsigned long long>(value + 0.5L);
}

// Unique solution of the square system, or nullopt when singular.
std::optional<Vector> solve_square(const HRep& h, const std::vector<std::size_t>& rows) {
  const std::size_t d = h.dim;
  Matrix m(d, d);
  Vector rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t c = 0; c < d; ++c) m(i, c) = h.rows[rows[i]].a[c];
    rhs[i] = h.rows[rows[i]].b;
  }
  if (rank(m) < d) return std::nullopt;
  return solve_linear_system(m, rhs);
}

bool satisfies(const HRep& h, const Vector& x) {
  return std::all_of(h.rows.begin(), h.rows.end(), [&](const Inequality& r) { return dot(r.a, x) <= r.b; });
}

struct Overflow {};

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < -INT64_MAX) throw Overflow{};
  return static_cast<std::int64_t>(v);
}

// Rows (a, -b) scaled to integers, or nullopt if some entry leaves int64.
std::optional<std::vector<std::vector<std::int64_t>>> integer_rows(const HRep& h) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : h.rows) {
    Integer l = 1;
    for (const auto& x : row.a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), row.b.get_den_mpz_t());
    std::vector<std::int64_t> r;
    auto push = [&](const Rational& x) {
      const Integer v = x.get_num() * (l / x.get_den());
      if (!v.fits_slong_p()) return false;
      r.push_back(v.get_si());
      return true;
    };
    for (const auto& x : row.a) {
      if (!push(x)) return std::nullopt;
    }
    if (!push(-row.b)) return std::nullopt;
    out.push_back(std::move(r));
  }
  return out;
}

// Depth-first walk over row subsets in homogeneous coordinates (x, t). The
// kernel of the chosen rows is updated one row at a time; a row that vanishes
// on the kernel makes every superset singular, so that subtree is skipped.
class IntegerBruteForce {
 public:
  explicit IntegerBruteForce(std::vector<std::vector<std::int64_t>> rows, std::size_t d)
      : rows_(std::move(rows)), d_(d), m_(rows_.size()) {}

  std::set<Vector> run() {
    std::vector<std::vector<std::int64_t>> kernel(d_ + 1, std::vector<std::int64_t>(d_ + 1, 0));
    for (std::size_t i = 0; i <= d_; ++i) kernel[i][i] = 1;
    descend(0, 0, kernel);
    return std::move(found_);
  }

 private:
  std::int64_t eval(std::size_t r, const std::vector<std::int64_t>& k) const {
    __int128 s = 0;
    for (std::size_t c = 0; c <= d_; ++c) s += static_cast<__int128>(rows_[r][c]) * k[c];
    return checked(s);
  }

  void descend(std::size_t start, std::size_t depth, const std::vector<std::vector<std::int64_t>>& kernel) {
    if (depth == d_) {
      leaf(kernel[0]);
      return;
    }
    for (std::size_t r = start; r + (d_ - depth) <= m_; ++r) {
      std::vector<std::int64_t> val(kernel.size());
      std::size_t pivot = kernel.size();
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        val[i] = eval(r, kernel[i]);
        if (val[i] != 0 && pivot == kernel.size()) pivot = i;
      }
      if (pivot == kernel.size()) continue;
      std::vector<std::vector<std::int64_t>> next;
      next.reserve(kernel.size() - 1);
      for (std::size_t i = 0; i < kernel.size(); ++i) {
        if (i == pivot) continue;
        std::vector<std::int64_t> v(d_ + 1);
        std::int64_t g = 0;
        for (std::size_t c = 0; c <= d_; ++c) {
          v[c] = checked(static_cast<__int128>(val[pivot]) * kernel[i][c] -
                         static_cast<__int128>(val[i]) * kernel[pivot][c]);
          g = std::gcd(g, v[c]);
        }
        if (g > 1) {
          for (auto& x : v) x /= g;
        }
        next.push_back(std::move(v));
      }
      descend(r + 1, depth + 1, next);
    }
  }

  void leaf(std::vector<std::int64_t> k) {
    if (k[d_] == 0) return;  // direction, not a point
    if (k[d_] < 0) {
      for (auto& x : k) x = -x;
    }
    // start with the row that failed last time; most candidates die there
    if (eval(last_violated_, k) > 0) return;
    for (std::size_t r = 0; r < m_; ++r) {
      if (eval(r, k) > 0) {
        last_violated_ = r;
        return;
      }
    }
    Vector x(d_);
    for (std::size_t c = 0; c < d_; ++c) x[c] = make_rational(k[c], k[d_]);
    found_.insert(std::move(x));
  }

  std::vector<std::vector<std::int64_t>> rows_;
  std::size_t d_;
  std::size_t m_;
  std::size_t last_violated_ = 0;
  std::set<Vector> found_;
};

std::vector<Vector> bruteforce_points(const HRep& h, unsigned long long& budget_left) {
  const std::size_t m = h.rows.size();
  const std::size_t d = h.dim;
  if (m < d) return {};
  const auto subsets = binomial_capped(m, d, budget_left);
  if (subsets > budget_left) {
    throw budget_error("instance too large for brute force (" + std::to_string(m) + " choose " +
                       std::to_string(d) + " row subsets exceed the budget)");
  }
  budget_left -= subsets;

  if (auto rows = integer_rows(h)) {
    try {
      auto found = IntegerBruteForce(std::move(*rows), d).run();
      return {found.begin(), found.end()};
    } catch (const Overflow&) {
      // retry below with rationals
    }
  }

  std::set<Vector> found;
  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    if (auto x = solve_square(h, pick); x && satisfies(h, *x)) found.insert(std::move(*x));
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

}  // namespace

VRep enumerate_vertices_bruteforce(const HRep& h, unsigned long long budget) {
  h.validate();
  VRep out;
  out.dim = h.dim;
  unsigned long long left = budget;
  out.vertices = bruteforce_points(h, left);
  if (out.vertices.empty()) return out;

  const ClosureResult closure = projective_closure(h);
  std::set<Vector> rays;
  for (const auto& x : bruteforce_points(closure.closure, left)) {
    Rational sum = 0;
    for (const auto& xi : x) sum += xi;
    if (sum == 1) rays.insert(closure.pull_back_direction(x));
  }
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

VRep enumerate_vertices(const HRep& h) {
  const ClosureResult closure = projective_closure(h);
  VRep out;
  out.dim = h.dim;
  std::set<Vector> rays;
  for (const auto& x : enumerate_simplex_polytope_vertices(closure.closure)) {
    Rational sum = 0;
    for (const auto& xi : x) sum += xi;
    if (sum == 1) rays.insert(closure.pull_back_direction(x));
    else out.vertices.push_back(closure.pull_back_point(x));
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  out.rays.assign(rays.begin(), rays.end());
  return out;
}

// ---------------------------------------------------------------------------
// Incidences

namespace {

// Dimension of aff(points) + cone(directions).
int hull_dimension(const std::vector<const Vector*>& points, const std::vector<const Vector*>& dirs,
                   std::size_t dim) {
  if (points.empty()) return -1;
  std::vector<Vector> gens;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector diff(dim);
    for (std::size_t c = 0; c < dim; ++c) diff[c] = (*points[i])[c] - (*points[0])[c];
    gens.push_back(std::move(diff));
  }
  for (const auto* r : dirs) gens.push_back(*r);
  if (gens.empty()) return 0;
  return static_cast<int>(rank(Matrix::from_rows(gens, dim)));
}

}  // namespace

IncidenceMatrix compute_incidences(const HRep& h, const VRep& v) {
  h.validate();
  const std::size_t n = v.vertices.size();
  std::vector<const Vector*> all_points;
  std::vector<const Vector*> all_dirs;
  for (const auto& p : v.vertices) all_points.push_back(&p);
  for (const auto& r : v.rays) all_dirs.push_back(&r);
  const int full_dim = hull_dimension(all_points, all_dirs, h.dim);

  IncidenceMatrix inc;
  inc.n_vertices = n;
  if (full_dim >= 0) inc.dim = static_cast<std::size_t>(full_dim);

  std::set<std::vector<std::size_t>> seen;
  for (std::size_t r = 0; r < h.rows.size(); ++r) {
    const auto& row = h.rows[r];
    VertexSet tight(n);
    std::vector<const Vector*> tight_points;
    std::vector<const Vector*> tight_dirs;
    for (std::size_t i = 0; i < n; ++i) {
      const Rational lhs = dot(row.a, v.vertices[i]);
      if (lhs > row.b) throw input_error("point outside polyhedron (vertex " + std::to_string(i) + ", row " +
                                         std::to_string(r) + ")");
      if (lhs == row.b) {
        tight.insert(i);
        tight_points.push_back(&v.vertices[i]);
      }
    }
    for (const auto& ray : v.rays) {
      const Rational slope = dot(row.a, ray);
      if (slope > 0) throw input_error("ray leaves the polyhedron at row " + std::to_string(r));
      if (slope == 0) tight_dirs.push_back(&ray);
    }
    if (hull_dimension(tight_points, tight_dirs, h.dim) != full_dim - 1) continue;
    std::vector<std::size_t> key = tight.to_indices();
    // Rays tight at the row matter for distinguishing unbounded facets with
    // equal vertex sets.
    for (std::size_t k = 0; k < v.rays.size(); ++k) {
      if (dot(row.a, v.rays[k]) == 0) key.push_back(n + k);
    }
    if (!seen.insert(key).second) continue;
    inc.facets.push_back(std::move(tight));
    inc.source_rows.push_back(r);
  }
  return inc;
}

VertexSet far_face_vertices(const ClosureResult& c, const VRep& closure_vertices) {
  (void)c;
  const std::size_t n = closure_vertices.vertices.size();
  VertexSet far(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational sum = 0;
    for (const auto& x : closure_vertices.vertices[i]) sum += x;
    if (sum == 1) far.insert(i);
  }
  return far;
}

bool is_simple(const IncidenceMatrix& inc, std::size_t d) {
  std::vector<std::size_t> column(inc.n_vertices, 0);
  for (const auto& f : inc.facets) {
    for (auto v : f.to_indices()) ++column[v];
  }
  return std::all_of(column.begin(), column.end(), [d](std::size_t c) { return c == d; });
}

Graph vertex_edge_graph(const IncidenceMatrix& inc, std::size_t d) {
  if (!is_simple(inc, d)) throw input_error("vertex_edge_graph requires a simple polytope");
  Graph g;
  g.node_count = inc.n_vertices;
  std::vector<VertexSet> cols;
  for (std::size_t v = 0; v < inc.n_vertices; ++v) cols.push_back(inc.facets_of_vertex(v));
  for (std::size_t u = 0; u < inc.n_vertices; ++u) {
    for (std::size_t v = u + 1; v < inc.n_vertices; ++v) {
      if ((cols[u] & cols[v]).count() + 1 == d) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

Graph combinatorial_vertex_graph(const IncidenceMatrix& inc) {
  Graph g;
  g.node_count = inc.n_vertices;
  std::vector<VertexSet> cols;
  for (std::size_t v = 0; v < inc.n_vertices; ++v) cols.push_back(inc.facets_of_vertex(v));
  for (std::size_t u = 0; u < inc.n_vertices; ++u) {
    for (std::size_t v = u + 1; v < inc.n_vertices; ++v) {
      const VertexSet common = cols[u] & cols[v];
      if (inc.dim && common.count() + 1 < *inc.dim) continue;
      bool edge = true;
      for (std::size_t w = 0; w < inc.n_vertices && edge; ++w) {
        if (w != u && w != v && common.is_subset_of(cols[w])) edge = false;
      }
      if (edge) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

Vector bounded_objective(const HRep& h) {
  SplitMix64 rng(0x5eedULL + h.rows.size());
  Vector c(h.dim);
  for (const auto& row : h.rows) {
    const Rational weight = make_rational(static_cast<long>(rng.uniform_inclusive(1UL << 20)) + (1L << 20), 1L << 20);
    for (std::size_t i = 0; i < h.dim; ++i) c[i] += weight * row.a[i];
  }
  return c;
}

}  // namespace polybound
