// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "polybound/bounded_complex.hpp"
#include "polybound/error.hpp"
#include "polybound/generators.hpp"
#include "polybound/lp.hpp"
#include "polybound/moebius.hpp"
#include "polybound/pipeline.hpp"
#include "polybound/random.hpp"
#include "polybound/simple_fvector.hpp"
#include "support.hpp"

using namespace polybound;
using testing::random_small_polyhedron;

namespace {

// Wall-clock limits in seconds, per criterion.
constexpr double kLimitDwarfed = 60;
constexpr double kLimitClosedForms = 600;
constexpr double kLimitThrackle = 300;
constexpr double kLimitRandom = 120;
constexpr double kLimitCyclic = 300;
constexpr double kLimitPerm3 = 60;
constexpr double kLimitPerm4 = 1800;
constexpr double kLimitOracles = 600;
constexpr double kLimitSimple = 300;
constexpr double kLimitLatticeBound = 300;
constexpr double kLimitSkeleton = 120;
constexpr double kLimitCrossChecks = 300;

// Instances with at most this many closure vertices enter the oracle suite.
constexpr std::size_t kOracleMaxVertices = 40;
constexpr std::size_t kRandomSmallInstances = 50;
constexpr std::size_t kRandomLps = 100;
constexpr std::size_t kReverseSearchMaxFacets = 25;
// Row subsets the brute-force oracle may examine; m = 25, d = 12 needs about 1.5e7.
constexpr unsigned long long kBruteForceBudget = 50'000'000ULL;

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) detail << what;
      ok = false;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > limit) {
    if (c.ok) c.detail << "took " << secs << " s, limit " << limit << " s";
    c.ok = false;
  }
  if (!c.ok) ++failures;
  std::printf("%s  criterion %2d  %-48s %8.2f s%s%s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              c.ok ? "" : "  ", c.detail.str().c_str());
  std::fflush(stdout);
}

BenchRow row(const std::string& family, std::vector<std::uint64_t> params) {
  return run_pipeline(generate_instance(family, params), {}).row;
}

std::string tuple(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  for (auto x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

std::size_t pow2(std::size_t d) { return std::size_t{1} << d; }

// Faces of the closure outside the far face, plus the empty face.
std::size_t phi_of(const HasseDiagram& lattice, const VertexSet& far) {
  std::size_t phi = 1;
  for (const auto& n : lattice.nodes) {
    if (n.rank >= 0 && !n.vertices.is_subset_of(far)) ++phi;
  }
  return phi;
}

std::vector<Instance> generated_instances() {
  std::vector<Instance> out;
  for (std::size_t d = 2; d <= 15; ++d) out.push_back(generate_instance("dwarfed-cube", {d}));
  for (std::size_t d = 3; d <= 8; ++d) out.push_back(generate_instance("thrackle", {d}));
  for (std::size_t d = 3; d <= 6; ++d) {
    for (std::uint64_t s = 1; s <= 5; ++s) out.push_back(generate_instance("random-metric", {d, s}));
  }
  for (std::size_t s = 2; s <= 5; ++s) {
    for (std::size_t t = 2; t <= 5; ++t) out.push_back(generate_instance("tropical-cyclic", {s, t}));
  }
  out.push_back(generate_instance("tropical-cyclic", {3, 10}));
  out.push_back(generate_instance("tropical-permutohedron", {2}));
  out.push_back(generate_instance("tropical-permutohedron", {3}));
  return out;
}

}  // namespace

int main() {
  criterion(1, "dwarfed cubes d = 5, 10, 15", kLimitDwarfed, [](Check& c) {
    const std::pair<std::size_t, std::array<std::size_t, 4>> expected[] = {
        {5, {11, 26, 130, 12}}, {10, {21, 101, 1010, 22}}, {15, {31, 226, 3390, 32}}};
    for (const auto& [d, e] : expected) {
      const auto r = row("dwarfed-cube", {d});
      c.expect(r.m_bar == e[0] && r.n_bar == e[1] && r.alpha == e[2] && r.phi_prime == e[3],
               "d=" + std::to_string(d) + " got " + tuple({r.m_bar, r.n_bar, r.alpha, r.phi_prime}));
    }
  });

  criterion(2, "dwarfed cube closed forms, 2 <= d <= 12", kLimitClosedForms, [](Check& c) {
    for (std::size_t d = 2; d <= 12; ++d) {
      const std::string tag = "d=" + std::to_string(d) + ": ";
      const auto closed = close_and_enumerate(dwarfed_cube(d).unbounded);
      const auto& inc = closed.incidences;
      const auto sel = selective_generation(inc);
      c.expect(sel.size() == 2 * d + 2, tag + "phi' = " + std::to_string(sel.size()));
      const std::size_t phi = pow2(d) + d * pow2(d - 1) + 1;
      if (d <= 10) {
        const auto vp = vertex_poset(inc.without_far_face());
        c.expect(vp.size() == pow2(d) + d, tag + "phi'' = " + std::to_string(vp.size()));
        const auto lat = full_face_lattice(inc);
        c.expect(phi_of(lat, *inc.far_face) == phi, tag + "phi (lattice) = " + std::to_string(phi_of(lat, *inc.far_face)));
      }
      const auto fv = f_vector_simple(inc, closed.vertices, d);
      c.expect(fv.f_all.total() == phi, tag + "phi (f_all) = " + std::to_string(fv.f_all.total()));
    }
  });

  criterion(3, "thrackle tight spans d = 3..8", kLimitThrackle, [](Check& c) {
    const std::size_t expected[] = {8, 18, 42, 100, 240, 578};
    for (std::size_t d = 3; d <= 8; ++d) {
      const auto r = row("thrackle", {d});
      c.expect(r.phi_prime == expected[d - 3] && r.n_bar == pow2(d - 1) + d,
               "d=" + std::to_string(d) + " got phi'=" + std::to_string(r.phi_prime) + " n=" + std::to_string(r.n_bar));
    }
  });

  criterion(4, "random metrics d = 5, 6 over 20 seeds", kLimitRandom, [](Check& c) {
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const auto r = row("random-metric", {5, s});
      c.expect(r.phi_prime == 42, "d=5 seed " + std::to_string(s) + " phi'=" + std::to_string(r.phi_prime));
    }
    double sum = 0;
    for (std::uint64_t s = 1; s <= 20; ++s) {
      const auto r = row("random-metric", {6, s});
      c.expect(r.phi_prime >= 90 && r.phi_prime <= 100, "d=6 seed " + std::to_string(s) + " phi'=" +
                                                           std::to_string(r.phi_prime));
      sum += static_cast<double>(r.phi_prime);
    }
    c.expect(sum / 20 >= 98, "d=6 mean " + std::to_string(sum / 20));
  });

  criterion(5, "tropical cyclic polytopes", kLimitCyclic, [](Check& c) {
    const std::tuple<std::size_t, std::size_t, std::size_t> expected[] = {
        {3, 3, 14}, {4, 4, 64}, {5, 5, 322}, {3, 10, 182}};
    for (const auto& [s, t, phi] : expected) {
      const auto r = row("tropical-cyclic", {s, t});
      c.expect(r.phi_prime == phi, "(" + std::to_string(s) + "," + std::to_string(t) + ") phi'=" +
                                       std::to_string(r.phi_prime));
    }
  });

  criterion(6, "tropical permutohedron t = 3", kLimitPerm3, [](Check& c) {
    const auto r = row("tropical-permutohedron", {3});
    c.expect(r.phi_prime == 50, "phi'=" + std::to_string(r.phi_prime));
  });

  criterion(6, "tropical permutohedron t = 4 (stretch)", kLimitPerm4, [](Check& c) {
    const auto r = row("tropical-permutohedron", {4});
    c.expect(r.phi_prime == 1424, "phi'=" + std::to_string(r.phi_prime));
  });

  criterion(7, "oracle equivalence of the three algorithms", kLimitOracles, [](Check& c) {
    std::vector<Instance> cases;
    for (auto& inst : generated_instances()) cases.push_back(std::move(inst));
    for (std::uint64_t s = 1; s <= kRandomSmallInstances; ++s) {
      cases.push_back({"random-small-" + std::to_string(s), random_small_polyhedron(1000 + s)});
    }
    std::size_t compared = 0;
    for (const auto& inst : cases) {
      const auto closed = close_and_enumerate(inst.hrep);
      const auto& inc = closed.incidences;
      const bool random_small = inst.label.rfind("random-small-", 0) == 0;
      if (!random_small && inc.n_vertices > kOracleMaxVertices) continue;
      const auto sel = selective_generation(inc);
      const auto fil = filter_bounded(full_face_lattice(inc), *inc.far_face);
      const auto moe = bounded_complex(inc, Algorithm::Moebius);
      std::set<std::vector<std::size_t>> oracle_nodes, moe_nodes;
      const auto kept_inc = inc.without_far_face();
      for (const auto& s : moebius_oracle_filter(vertex_poset(kept_inc))) oracle_nodes.insert(s.to_indices());
      for (const auto& n : moebius_generation(kept_inc).nodes) moe_nodes.insert(n.vertices.to_indices());
      c.expect(sel.same_faces_and_arcs(fil), inst.label + ": selective != filter");
      c.expect(sel.same_faces_and_arcs(moe), inst.label + ": selective != moebius");
      c.expect(oracle_nodes == moe_nodes, inst.label + ": moebius != mu oracle");
      ++compared;
    }
    c.expect(compared >= kRandomSmallInstances + 20, "only " + std::to_string(compared) + " instances compared");
  });

  criterion(8, "h-vector face numbers on simple instances", kLimitSimple, [](Check& c) {
    std::vector<Instance> cases;
    for (std::size_t d = 2; d <= 12; ++d) cases.push_back(generate_instance("dwarfed-cube", {d}));
    for (auto [s, t] : {std::pair<std::size_t, std::size_t>{3, 3}, {4, 4}, {5, 5}, {3, 10}}) {
      cases.push_back(generate_instance("tropical-cyclic", {s, t}));
    }
    for (const auto& inst : cases) {
      const auto closed = close_and_enumerate(inst.hrep);
      const std::size_t d = inst.hrep.dim;
      const auto fv = f_vector_simple(closed.incidences, closed.vertices, d);
      std::vector<std::uint64_t> hist(d + 1, 0);
      for (const auto& n : selective_generation(closed.incidences).nodes) {
        if (n.rank >= 0) ++hist[static_cast<std::size_t>(n.rank)];
      }
      c.expect(fv.f_bounded.f == hist, inst.label + ": f_bounded differs from the rank histogram");
      if (inst.label.rfind("dwarfed", 0) == 0) {
        std::vector<std::uint64_t> star(d + 1, 0);
        star[0] = d + 1;
        star[1] = d;
        c.expect(fv.f_bounded.f == star, inst.label + ": not a star");
      }
    }
  });

  criterion(9, "lattice size bound phi_bar <= 2(phi - 1)", kLimitLatticeBound, [](Check& c) {
    std::size_t checked = 0;
    for (const auto& inst : generated_instances()) {
      const auto closed = close_and_enumerate(inst.hrep);
      if (closed.incidences.n_vertices > 150) continue;
      const auto lat = full_face_lattice(closed.incidences);
      const std::size_t phi = phi_of(lat, *closed.incidences.far_face);
      c.expect(lat.size() <= 2 * (phi - 1), inst.label + ": phi_bar=" + std::to_string(lat.size()) +
                                                 " phi=" + std::to_string(phi));
      ++checked;
    }
    for (std::uint64_t s = 1; s <= kRandomSmallInstances; ++s) {
      const auto closed = close_and_enumerate(random_small_polyhedron(1000 + s));
      const auto lat = full_face_lattice(closed.incidences);
      c.expect(lat.size() <= 2 * (phi_of(lat, *closed.incidences.far_face) - 1),
               "random-small-" + std::to_string(s));
      ++checked;
    }
    c.expect(checked >= 80, "only " + std::to_string(checked) + " instances checked");
  });

  criterion(10, "1-skeleton cutoff on thrackle d = 7", kLimitSkeleton, [](Check& c) {
    const auto inc = close_and_enumerate(tight_span_hrep(thrackle_metric(7))).incidences;
    const auto full = selective_generation(inc);
    c.expect(selective_generation(inc, 1).same_faces_and_arcs(full.restrict_rank(1)), "selective cutoff differs");
    c.expect(bounded_complex(inc, Algorithm::Moebius, 1).same_faces_and_arcs(full.restrict_rank(1)),
             "moebius cutoff differs");
  });

  criterion(11, "reverse search and LP cross-checks", kLimitCrossChecks, [](Check& c) {
    std::vector<HRep> cases;
    for (std::size_t d = 2; d <= 12; ++d) {
      cases.push_back(dwarfed_cube(d).polytope);
      cases.push_back(dwarfed_cube(d).unbounded);
    }
    for (std::size_t s = 2; s <= 5; ++s) {
      for (std::size_t t = 2; t <= 5; ++t) cases.push_back(tropical_hrep(cyclic_matrix(s, t)));
    }
    for (std::uint64_t s = 1; s <= 200; ++s) cases.push_back(random_small_polyhedron(5000 + s));
    std::size_t simple_cases = 0;
    for (const auto& h : cases) {
      const auto closed = close_and_enumerate(h);
      if (closed.incidences.n_facets() > kReverseSearchMaxFacets || !testing::nondegenerate(h)) continue;
      const auto rs = reverse_search_vertices(h, bounded_objective(h));
      c.expect(rs.vertices.vertices == enumerate_vertices_bruteforce(h, kBruteForceBudget).vertices,
               "reverse search differs");
      ++simple_cases;
    }
    c.expect(simple_cases >= 40, "only " + std::to_string(simple_cases) + " simple instances");

    SplitMix64 rng(77);
    std::size_t optimal = 0;
    for (std::size_t t = 0; t < kRandomLps; ++t) {
      const std::size_t d = 2 + t % 3;
      HRep h;
      h.dim = d;
      for (std::size_t i = 0; i < d; ++i) {
        Vector a(d, Rational(0));
        a[i] = -1;
        h.rows.push_back({a, Rational(0)});
      }
      for (std::size_t k = 0; k < 2 + t % 5; ++k) {
        Vector a(d);
        for (auto& x : a) x = Rational(static_cast<long>(rng.uniform_inclusive(6)) - 2);
        h.rows.push_back({a, Rational(static_cast<long>(rng.uniform_inclusive(5)) + 1)});
      }
      Vector obj(d);
      for (auto& x : obj) x = Rational(static_cast<long>(rng.uniform_inclusive(8)) - 2);
      const auto lp = lp_solve(h.matrix(), h.rhs(), obj);
      const auto v = enumerate_vertices_bruteforce(h);
      bool improving_ray = false;
      for (const auto& r : v.rays) improving_ray = improving_ray || dot(obj, r) > 0;
      if (improving_ray) {
        c.expect(lp.status == LpStatus::Unbounded, "LP should be unbounded");
        continue;
      }
      Rational best = dot(obj, v.vertices.front());
      for (const auto& p : v.vertices) best = std::max(best, dot(obj, p));
      c.expect(lp.status == LpStatus::Optimal && *lp.objective == best, "LP optimum differs from best vertex");
      ++optimal;
    }
    c.expect(optimal >= 30, "only " + std::to_string(optimal) + " bounded LPs");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
