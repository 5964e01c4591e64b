#include "polybound/bounded_complex.hpp"

#include <algorithm>
#include <deque>

#include "polybound/error.hpp"

namespace polybound {

// ---------------------------------------------------------------------------
// HasseDiagram

std::vector<std::size_t> HasseDiagram::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& node : nodes) {
    if (node.rank < 0) continue;
    if (f.size() <= static_cast<std::size_t>(node.rank)) f.resize(node.rank + 1, 0);
    ++f[node.rank];
  }
  return f;
}

HasseDiagram HasseDiagram::canonical() const {
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].rank != nodes[b].rank) return nodes[a].rank < nodes[b].rank;
    return nodes[a].vertices.lex_less(nodes[b].vertices);
  });
  std::vector<std::size_t> new_id(nodes.size());
  HasseDiagram out;
  out.n_vertices = n_vertices;
  out.far_face = far_face;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = i;
    out.nodes.push_back(nodes[order[i]]);
  }
  for (auto [lo, hi] : arcs) out.arcs.emplace_back(new_id[lo], new_id[hi]);
  std::sort(out.arcs.begin(), out.arcs.end());
  out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()), out.arcs.end());
  return out;
}

HasseDiagram HasseDiagram::restrict_rank(int max_rank) const {
  HasseDiagram out;
  out.n_vertices = n_vertices;
  out.far_face = far_face;
  std::vector<std::size_t> new_id(nodes.size(), SIZE_MAX);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].rank > max_rank) continue;
    new_id[i] = out.nodes.size();
    out.nodes.push_back(nodes[i]);
  }
  for (auto [lo, hi] : arcs) {
    if (new_id[lo] != SIZE_MAX && new_id[hi] != SIZE_MAX) out.arcs.emplace_back(new_id[lo], new_id[hi]);
  }
  return out;
}

bool HasseDiagram::same_faces_and_arcs(const HasseDiagram& other) const {
  const HasseDiagram a = canonical();
  const HasseDiagram b = other.canonical();
  if (a.nodes.size() != b.nodes.size() || a.arcs != b.arcs) return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    if (a.nodes[i].rank != b.nodes[i].rank || !(a.nodes[i].vertices == b.nodes[i].vertices)) return false;
  }
  return true;
}

void HasseDiagram::check_invariants() const {
  if (nodes.empty() || nodes[0].rank != -1 || !nodes[0].vertices.empty()) {
    throw invariant_error("Hasse diagram must start with the empty face");
  }
  std::vector<bool> has_in(nodes.size(), false);
  for (auto [lo, hi] : arcs) {
    if (lo >= nodes.size() || hi >= nodes.size()) throw invariant_error("arc endpoint out of range");
    if (nodes[hi].rank != nodes[lo].rank + 1) throw invariant_error("arc does not join consecutive ranks");
    if (!nodes[lo].vertices.is_subset_of(nodes[hi].vertices) || nodes[lo].vertices == nodes[hi].vertices) {
      throw invariant_error("arc is not a strict inclusion");
    }
    has_in[hi] = true;
  }
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!has_in[i]) throw invariant_error("face " + nodes[i].vertices.to_string() + " has no lower cover");
  }
  auto c = canonical();
  for (std::size_t i = 1; i < c.nodes.size(); ++i) {
    if (c.nodes[i].rank == c.nodes[i - 1].rank && c.nodes[i].vertices == c.nodes[i - 1].vertices) {
      throw invariant_error("duplicate face " + c.nodes[i].vertices.to_string());
    }
  }
}

// ---------------------------------------------------------------------------
// Generation

namespace {

HasseDiagram empty_diagram(const IncidenceMatrix& inc) {
  HasseDiagram hd;
  hd.n_vertices = inc.n_vertices;
  hd.far_face = inc.far_face;
  hd.nodes.push_back({VertexSet(inc.n_vertices), -1});
  return hd;
}

}  // namespace

HasseDiagram selective_generation(const IncidenceMatrix& inc, std::optional<int> max_dim) {
  if (!inc.far_face) throw input_error("far face required; use moebius_generation");
  const VertexSet& far = *inc.far_face;
  const ClosureOperator cl(inc);
  HasseDiagram hd = empty_diagram(inc);
  FaceTree tree;
  tree.insert_or_find(hd.nodes[0].vertices, cl, 0);

  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t h = queue.front();
    queue.pop_front();
    if (max_dim && hd.nodes[h].rank >= *max_dim) continue;
    const VertexSet current = hd.nodes[h].vertices;
    const int rank = hd.nodes[h].rank;
    for (auto& g : covers(current, inc)) {
      if (g.intersects(far)) continue;
      auto [id, fresh] = tree.insert_or_find(g, cl, hd.nodes.size());
      if (fresh) {
        hd.nodes.push_back({std::move(g), rank + 1});
        queue.push_back(id);
      }
      hd.arcs.emplace_back(h, id);
    }
  }
  return hd;
}

HasseDiagram full_face_lattice(const IncidenceMatrix& inc) {
  const ClosureOperator cl(inc);
  HasseDiagram hd = empty_diagram(inc);
  hd.far_face.reset();
  FaceTree tree;
  tree.insert_or_find(hd.nodes[0].vertices, cl, 0);

  std::vector<std::size_t> coatoms;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t h = queue.front();
    queue.pop_front();
    const VertexSet current = hd.nodes[h].vertices;
    const int rank = hd.nodes[h].rank;
    auto ups = covers(current, inc);
    if (ups.empty()) coatoms.push_back(h);
    for (auto& g : ups) {
      auto [id, fresh] = tree.insert_or_find(g, cl, hd.nodes.size());
      if (fresh) {
        hd.nodes.push_back({std::move(g), rank + 1});
        queue.push_back(id);
      }
      hd.arcs.emplace_back(h, id);
    }
  }
  if (!coatoms.empty()) {
    const std::size_t top = hd.nodes.size();
    hd.nodes.push_back({VertexSet::full(inc.n_vertices), hd.nodes[coatoms.front()].rank + 1});
    for (auto c : coatoms) hd.arcs.emplace_back(c, top);
  }
  return hd;
}

HasseDiagram filter_bounded(const HasseDiagram& hd, const VertexSet& far) {
  HasseDiagram out;
  out.n_vertices = hd.n_vertices;
  out.far_face = far;
  const VertexSet whole = VertexSet::full(hd.n_vertices);
  std::vector<std::size_t> new_id(hd.nodes.size(), SIZE_MAX);
  for (std::size_t i = 0; i < hd.nodes.size(); ++i) {
    const auto& node = hd.nodes[i];
    const bool is_top = node.rank >= 0 && node.vertices == whole;
    if (is_top || node.vertices.intersects(far)) continue;
    new_id[i] = out.nodes.size();
    out.nodes.push_back(node);
  }
  for (auto [lo, hi] : hd.arcs) {
    if (new_id[lo] != SIZE_MAX && new_id[hi] != SIZE_MAX) out.arcs.emplace_back(new_id[lo], new_id[hi]);
  }
  return out;
}

}  // namespace polybound
