#include "polybound/moebius.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "polybound/error.hpp"

namespace polybound {

VertexPoset vertex_poset(const IncidenceMatrix& inc, std::size_t budget) {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> work;
  for (const auto& row : inc.facets) {
    if (!row.empty() && seen.insert(row).second) work.push_back(row);
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (const auto& row : inc.facets) {
      VertexSet meet = work[i] & row;
      if (meet.empty() || seen.count(meet)) continue;
      if (seen.size() + 1 > budget) throw budget_error("vertex poset exceeds element budget");
      seen.insert(meet);
      work.push_back(std::move(meet));
    }
  }
  work.push_back(VertexSet(inc.n_vertices));
  std::sort(work.begin(), work.end(), [](const VertexSet& a, const VertexSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
  });

  VertexPoset vp;
  vp.elements = std::move(work);
  vp.mu.assign(vp.elements.size(), 0);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < vp.elements.size(); ++i) {
    if (i == 0) {
      vp.mu[0] = 1;
    } else {
      std::int64_t s = 0;
      const auto ci = vp.elements[i].count();
      for (std::size_t j = 0; j < i && vp.elements[j].count() < ci; ++j) {
        if (vp.mu[j] != 0 && vp.elements[j].is_subset_of(vp.elements[i])) s += vp.mu[j];
      }
      vp.mu[i] = -s;
    }
    total += vp.mu[i];
  }
  vp.top_mu = -total;
  return vp;
}

std::vector<VertexSet> moebius_oracle_filter(const VertexPoset& vp) {
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < vp.elements.size(); ++i) {
    if (vp.mu[i] != 0) out.push_back(vp.elements[i]);
  }
  return out;
}

void BelowSet::add(const VertexSet& element, std::int64_t mu, const ClosureOperator& cl) {
  if (mu == 0) return;
  auto [id, fresh] = index_.insert_or_find(element, cl, entries_.size());
  (void)id;
  if (fresh) entries_.emplace_back(element, mu);
}

void BelowSet::merge(const BelowSet& other, const ClosureOperator& cl) {
  for (const auto& [element, mu] : other.entries_) add(element, mu, cl);
}

std::int64_t BelowSet::sum() const {
  std::int64_t s = 0;
  for (const auto& e : entries_) s += e.second;
  return s;
}

HasseDiagram moebius_generation(const IncidenceMatrix& inc, const MoebiusOptions& options) {
  const ClosureOperator cl(inc);

  struct Item {
    VertexSet vertices;
    int rank;
    BelowSet below;
    std::vector<std::size_t> lower;  // items that generated this one
    std::int64_t mu = 0;
    bool bounded = false;
  };
  std::vector<Item> items;
  FaceTree tree;

  const VertexSet empty(inc.n_vertices);
  tree.insert_or_find(empty, cl, 0);
  items.push_back({empty, -1, {}, {}, 1, false});

  // (cardinality or 0, discovery index) with the smallest on top.
  using Key = std::pair<std::size_t, std::size_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<>> queue;
  auto push = [&](std::size_t id) {
    const std::size_t primary = options.order == QueueOrder::Cardinality ? items[id].vertices.count() : 0;
    queue.emplace(primary, id);
  };
  push(0);

  while (!queue.empty()) {
    const std::size_t h = queue.top().second;
    queue.pop();
    Item& item = items[h];
    item.mu = (h == 0) ? 1 : -item.below.sum();
    if (item.mu == 0) continue;
    item.bounded = true;
    if (options.max_dim && item.rank >= *options.max_dim) continue;

    const VertexSet current = item.vertices;
    const int rank = item.rank;
    const std::int64_t mu = item.mu;
    for (auto& g : covers(current, inc)) {
      auto [id, fresh] = tree.insert_or_find(g, cl, items.size());
      if (fresh) {
        items.push_back({std::move(g), rank + 1, {}, {}, 0, false});
        push(id);
      }
      // items may have reallocated; index afresh.
      items[id].below.merge(items[h].below, cl);
      items[id].below.add(items[h].vertices, mu, cl);
      items[id].lower.push_back(h);
    }
  }

  HasseDiagram hd;
  hd.n_vertices = inc.n_vertices;
  std::vector<std::size_t> new_id(items.size(), SIZE_MAX);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].bounded) continue;
    new_id[i] = hd.nodes.size();
    hd.nodes.push_back({items[i].vertices, items[i].rank});
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].bounded) continue;
    for (auto lo : items[i].lower) hd.arcs.emplace_back(new_id[lo], new_id[i]);
  }
  return hd;
}

}  // namespace polybound
