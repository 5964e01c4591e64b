#include "polybound/face_tree.hpp"

#include <algorithm>
#include <unordered_map>

#include "polybound/error.hpp"

namespace polybound {

std::optional<VertexSet> ClosureOperator::operator()(const VertexSet& s) const {
  std::optional<VertexSet> result;
  for (const auto& row : inc_->facets) {
    if (!s.is_subset_of(row)) continue;
    if (result) *result &= row;
    else result = row;
  }
  return result;
}

std::optional<VertexSet> closure(const VertexSet& s, const IncidenceMatrix& inc) {
  return ClosureOperator(inc)(s);
}

std::vector<VertexSet> covers(const VertexSet& h, const IncidenceMatrix& inc) {
  const ClosureOperator cl(inc);
  std::vector<VertexSet> candidates;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> hits;
  for (std::size_t v = 0; v < inc.n_vertices; ++v) {
    if (h.contains(v)) continue;
    VertexSet grown = h;
    grown.insert(v);
    auto g = cl(grown);
    if (!g) continue;
    auto [it, fresh] = hits.try_emplace(*g, 0);
    if (fresh) candidates.push_back(*g);
    ++it->second;
  }
  // A candidate G is minimal iff every vertex of G \ H generates G itself.
  const std::size_t base = h.count();
  std::vector<VertexSet> out;
  for (auto& g : candidates) {
    if (hits[g] == g.count() - base) out.push_back(std::move(g));
  }
  return out;
}

std::optional<std::size_t> FaceTree::child(std::size_t node, std::size_t vertex) const {
  const auto& ch = nodes_[node].children;
  auto it = std::lower_bound(ch.begin(), ch.end(), std::make_pair(vertex, std::size_t{0}));
  if (it != ch.end() && it->first == vertex) return it->second;
  return std::nullopt;
}

std::pair<std::size_t, bool> FaceTree::insert_or_find(const VertexSet& face, const ClosureOperator& cl,
                                                      std::size_t fresh_id) {
  std::size_t node = 0;
  auto current = cl(VertexSet(face.capacity()));
  if (!current) current = VertexSet(face.capacity());
  if (face.empty() && !current->empty()) {
    if (empty_payload_) return {*empty_payload_, false};
    empty_payload_ = fresh_id;
    return {fresh_id, true};
  }
  while (!(*current == face)) {
    const std::size_t v = face.first_not_in(*current);
    if (v == face.capacity()) throw invariant_error("face tree: set is not closed: " + face.to_string());
    auto next = child(node, v);
    if (!next) {
      nodes_.emplace_back();
      next = nodes_.size() - 1;
      auto& ch = nodes_[node].children;
      ch.insert(std::lower_bound(ch.begin(), ch.end(), std::make_pair(v, std::size_t{0})), {v, *next});
    }
    node = *next;
    current->insert(v);
    current = cl(*current);
    if (!current || !current->is_subset_of(face)) {
      throw invariant_error("face tree: set is not closed: " + face.to_string());
    }
  }
  if (nodes_[node].payload) return {*nodes_[node].payload, false};
  nodes_[node].payload = fresh_id;
  return {fresh_id, true};
}

std::optional<std::size_t> FaceTree::find(const VertexSet& face, const ClosureOperator& cl) const {
  std::size_t node = 0;
  auto current = cl(VertexSet(face.capacity()));
  if (!current) current = VertexSet(face.capacity());
  if (face.empty() && !current->empty()) return empty_payload_;
  while (!(*current == face)) {
    const std::size_t v = face.first_not_in(*current);
    if (v == face.capacity()) return std::nullopt;
    auto next = child(node, v);
    if (!next) return std::nullopt;
    node = *next;
    current->insert(v);
    current = cl(*current);
    if (!current || !current->is_subset_of(face)) return std::nullopt;
  }
  return nodes_[node].payload;
}

}  // namespace polybound
