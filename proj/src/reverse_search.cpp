// Reverse search for simple polyhedra. Every vertex is identified with its
// basis (the d rows tight there); the parent of a basis is the one reached by
// a simplex pivot under Bland's rule toward the objective optimum, and the
// search walks the resulting tree downwards from the optimum without storing
// visited bases.
#include <algorithm>
#include <map>

#include "polybound/error.hpp"
#include "polybound/lp.hpp"
#include "polybound/polyhedron.hpp"

namespace polybound {

namespace {

using Basis = std::vector<std::size_t>;  // sorted row indices

class Pivoting {
 public:
  Pivoting(const HRep& h, const Vector& c) : h_(h), c_(c), d_(h.dim) {}

  struct Local {
    Vector vertex;
    Matrix inverse;  // B^{-1}; column j gives the edge leaving basis row j
  };

  Local local(const Basis& basis) const {
    Matrix b(d_, d_);
    Vector rhs(d_);
    for (std::size_t i = 0; i < d_; ++i) {
      for (std::size_t k = 0; k < d_; ++k) b(i, k) = h_.rows[basis[i]].a[k];
      rhs[i] = h_.rows[basis[i]].b;
    }
    auto inv = inverse(b);
    if (!inv) throw invariant_error("singular basis during reverse search");
    Vector x = *inv * rhs;
    return {std::move(x), std::move(*inv)};
  }

  Vector direction(const Local& loc, std::size_t j) const {
    Vector dir(d_);
    for (std::size_t k = 0; k < d_; ++k) dir[k] = -loc.inverse(k, j);
    return dir;
  }

  // Neighbor basis along the edge that leaves basis[j]; nullopt if the edge
  // is unbounded.
  std::optional<Basis> neighbor(const Basis& basis, const Local& loc, std::size_t j) const {
    const Vector dir = direction(loc, j);
    std::optional<std::size_t> entering;
    Rational best;
    bool tie = false;
    for (std::size_t f = 0; f < h_.rows.size(); ++f) {
      if (std::binary_search(basis.begin(), basis.end(), f)) continue;
      const Rational rate = dot(h_.rows[f].a, dir);
      if (rate <= 0) continue;
      Rational step = (h_.rows[f].b - dot(h_.rows[f].a, loc.vertex)) / rate;
      if (step == 0) throw input_error("not simple: degenerate vertex met during pivoting");
      if (!entering || step < best) {
        entering = f;
        best = std::move(step);
        tie = false;
      } else if (step == best) {
        tie = true;
      }
    }
    if (!entering) return std::nullopt;
    if (tie) throw input_error("not simple: degenerate vertex met during pivoting");
    Basis next = basis;
    next[j] = *entering;
    std::sort(next.begin(), next.end());
    return next;
  }

  // Bland's rule: the improving edge leaving the smallest basis row.
  std::optional<Basis> parent(const Basis& basis) const {
    const Local loc = local(basis);
    for (std::size_t j = 0; j < d_; ++j) {
      const Rational gain = dot(c_, direction(loc, j));
      if (gain == 0) throw input_error("objective not generic");
      if (gain > 0) {
        auto next = neighbor(basis, loc, j);
        if (!next) throw input_error("objective unbounded on the polyhedron");
        return next;
      }
    }
    return std::nullopt;
  }

 private:
  const HRep& h_;
  const Vector& c_;
  std::size_t d_;
};

}  // namespace

ReverseSearchResult reverse_search_vertices(const HRep& h, const Vector& objective) {
  h.validate();
  if (objective.size() != h.dim) throw input_error("objective has wrong dimension");
  const std::size_t d = h.dim;
  const Matrix a = h.matrix();
  const Vector b = h.rhs();

  auto lp = lp_solve(a, b, objective, Sense::Maximize);
  if (lp.status == LpStatus::Infeasible) throw input_error("empty polyhedron");
  if (lp.status == LpStatus::Unbounded) throw input_error("objective unbounded on the polyhedron");
  Basis root = active_rows(a, b, *lp.point);
  if (root.size() != d) {
    if (root.size() > d) throw input_error("not simple: optimum lies on more than d rows");
    throw input_error("not pointed");
  }

  Pivoting piv(h, objective);
  std::map<Basis, Vector> vertex_of;
  std::vector<std::pair<Basis, Basis>> edge_bases;
  std::vector<std::pair<Basis, std::size_t>> unbounded;

  struct Frame {
    Basis basis;
    Pivoting::Local loc;
    std::size_t next_j = 0;
  };
  std::vector<Frame> stack;
  stack.push_back({root, piv.local(root)});
  vertex_of.emplace(root, stack.back().loc.vertex);
  if (piv.parent(root)) throw input_error("objective not generic");

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next_j == d) {
      stack.pop_back();
      continue;
    }
    const std::size_t j = top.next_j++;
    const Rational gain = dot(objective, piv.direction(top.loc, j));
    if (gain == 0) throw input_error("objective not generic");
    auto nb = piv.neighbor(top.basis, top.loc, j);
    if (!nb) {
      unbounded.emplace_back(top.basis, top.basis[j]);
      continue;
    }
    if (top.basis < *nb) edge_bases.emplace_back(top.basis, *nb);
    // Only edges going down in objective can be tree edges into a child.
    if (gain > 0) continue;
    if (piv.parent(*nb) == top.basis) {
      Basis child = *nb;
      auto loc = piv.local(child);
      vertex_of.emplace(child, loc.vertex);
      stack.push_back({std::move(child), std::move(loc)});
    }
  }

  ReverseSearchResult out;
  out.vertices.dim = d;
  std::vector<std::pair<Vector, Basis>> ordered;
  for (const auto& [basis, x] : vertex_of) ordered.emplace_back(x, basis);
  std::sort(ordered.begin(), ordered.end());
  std::map<Basis, std::size_t> index;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (i > 0 && ordered[i].first == ordered[i - 1].first) throw input_error("not simple: vertex with two bases");
    index[ordered[i].second] = i;
    out.vertices.vertices.push_back(ordered[i].first);
  }
  out.graph.node_count = ordered.size();
  for (const auto& [u, v] : edge_bases) {
    auto a_i = index.at(u);
    auto b_i = index.at(v);
    out.graph.edges.emplace_back(std::min(a_i, b_i), std::max(a_i, b_i));
  }
  std::sort(out.graph.edges.begin(), out.graph.edges.end());
  out.graph.edges.erase(std::unique(out.graph.edges.begin(), out.graph.edges.end()), out.graph.edges.end());
  for (const auto& [basis, row] : unbounded) out.unbounded_edges.emplace_back(index.at(basis), row);
  std::sort(out.unbounded_edges.begin(), out.unbounded_edges.end());
  return out;
}

}  // namespace polybound
