#include "polybound/simple_fvector.hpp"

#include <algorithm>
#include <set>

#include "polybound/error.hpp"
#include "polybound/random.hpp"

namespace polybound {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) throw budget_error("binomial coefficient overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t checked_mul_add(std::uint64_t acc, std::uint64_t a, std::uint64_t b) {
  std::uint64_t prod = 0;
  if (__builtin_mul_overflow(a, b, &prod) || __builtin_add_overflow(acc, prod, &acc)) {
    throw budget_error("face count overflows 64 bits");
  }
  return acc;
}

}  // namespace

std::uint64_t FVector::total() const {
  std::uint64_t t = 1;
  for (auto x : f) t += x;
  return t;
}

Vector generic_ray_objective(const VRep& closure_vertices, const VertexSet& far, std::uint64_t seed) {
  if (far.empty()) throw input_error("generic_ray_objective needs a nonempty far face");
  const auto& pts = closure_vertices.vertices;
  const std::size_t d = closure_vertices.dim;
  SplitMix64 rng(seed);
  Rational eps = make_rational(1, 1024);
  for (int attempt = 0; attempt < 64; ++attempt, eps /= 2) {
    const Rational q = make_rational(static_cast<long>(rng.uniform_inclusive(1UL << 20)) + (1L << 20), 1L << 20);
    Vector c(d);
    Rational power = 1;
    for (std::size_t i = 0; i < d; ++i) {
      c[i] = 1 + eps * power;
      power *= q;
    }
    std::vector<Rational> values;
    values.reserve(pts.size());
    for (const auto& p : pts) values.push_back(dot(c, p));
    std::set<Rational> distinct(values.begin(), values.end());
    if (distinct.size() != values.size()) continue;
    std::optional<Rational> min_far, max_near;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (far.contains(i)) {
        if (!min_far || values[i] < *min_far) min_far = values[i];
      } else if (!max_near || values[i] > *max_near) {
        max_near = values[i];
      }
    }
    if (!max_near || *min_far > *max_near) return c;
  }
  throw budget_error("no generic far-dominant objective found within 64 attempts");
}

FVector f_from_closure_h(const std::vector<std::uint64_t>& h_closure, const std::vector<std::uint64_t>& h_inf,
                         std::size_t d) {
  FVector out;
  out.f.assign(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    std::int64_t sum = 0;
    for (std::size_t i = k; i <= d; ++i) {
      const std::int64_t hi = i < h_closure.size() ? static_cast<std::int64_t>(h_closure[i]) : 0;
      const std::int64_t hf = i < h_inf.size() ? static_cast<std::int64_t>(h_inf[i]) : 0;
      sum += static_cast<std::int64_t>(binomial(i, k)) * (hi - hf);
    }
    if (sum < 0) throw invariant_error("negative face number from h-vector");
    out.f[k] = static_cast<std::uint64_t>(sum);
  }
  return out;
}

SimpleFaceNumbers f_vector_simple(const IncidenceMatrix& inc, const VRep& closure_vertices, std::size_t d,
                                  std::uint64_t seed) {
  if (!inc.far_face) throw input_error("f_vector_simple needs the far face");
  const VertexSet& far = *inc.far_face;
  const std::size_t n = inc.n_vertices;
  if (closure_vertices.vertices.size() != n) throw input_error("coordinates do not match the incidence matrix");

  std::vector<VertexSet> cols;
  for (std::size_t v = 0; v < n; ++v) {
    cols.push_back(inc.facets_of_vertex(v));
    if (!far.contains(v) && cols.back().count() != d) {
      throw input_error("not simple: vertex " + std::to_string(v) + " lies on " +
                        std::to_string(cols.back().count()) + " facets");
    }
  }
  bool closure_simple = true;
  for (std::size_t v = 0; v < n; ++v) closure_simple = closure_simple && cols[v].count() == d;

  // At a simple vertex an edge is the meet of d-1 of its facets; between two
  // far vertices fall back to the general combinatorial test.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const VertexSet common = cols[u] & cols[v];
      if (!far.contains(u) || !far.contains(v)) {
        if (common.count() + 1 == d) edges.emplace_back(u, v);
        continue;
      }
      if (common.count() + 1 < d) continue;
      bool edge = true;
      for (std::size_t w = 0; w < n && edge; ++w) {
        if (w != u && w != v && common.is_subset_of(cols[w])) edge = false;
      }
      if (edge) edges.emplace_back(u, v);
    }
  }

  SimpleFaceNumbers out;
  out.objective = generic_ray_objective(closure_vertices, far, seed);
  std::vector<Rational> value;
  for (const auto& p : closure_vertices.vertices) value.push_back(dot(out.objective, p));

  std::vector<std::size_t> outdeg(n, 0), indeg(n, 0);
  for (auto [u, v] : edges) {
    if (value[u] < value[v]) {
      ++outdeg[u];
      ++indeg[v];
    } else {
      ++outdeg[v];
      ++indeg[u];
    }
  }

  std::size_t width = d + 1;
  for (std::size_t v = 0; v < n; ++v) width = std::max({width, outdeg[v] + 1, indeg[v] + 1});
  out.h.h.assign(d + 1, 0);
  out.h.h_inf.assign(width, 0);
  out.h.h_closure.assign(width, 0);
  for (std::size_t v = 0; v < n; ++v) {
    ++out.h.h_closure[outdeg[v]];
    if (far.contains(v)) ++out.h.h_inf[indeg[v]];
    else ++out.h.h[outdeg[v]];
  }

  // Faces of P counted at their minimal vertex; bounded faces counted at
  // their maximal vertex, which never lies on the far face, using the in-arcs
  // there (d minus the out-degree).
  out.f_all.f.assign(d + 1, 0);
  out.f_bounded.f.assign(d + 1, 0);
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t i = 0; i <= d; ++i) {
      out.f_all.f[k] = checked_mul_add(out.f_all.f[k], binomial(i, k), out.h.h[i]);
      out.f_bounded.f[k] = checked_mul_add(out.f_bounded.f[k], binomial(d - i, k), out.h.h[i]);
    }
  }

  if (closure_simple) {
    const FVector check = f_from_closure_h(out.h.h_closure, out.h.h_inf, d);
    if (check.f != out.f_bounded.f) throw invariant_error("h-vector identities disagree on a simple closure");
  }
  return out;
}

}  // namespace polybound
