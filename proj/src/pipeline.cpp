#include "polybound/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "polybound/bounded_complex.hpp"
#include "polybound/error.hpp"
#include "polybound/generators.hpp"
#include "polybound/io.hpp"
#include "polybound/moebius.hpp"

namespace polybound {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "selective") return Algorithm::Selective;
  if (name == "moebius") return Algorithm::Moebius;
  if (name == "filter") return Algorithm::Filter;
  throw input_error("unknown algorithm '" + name + "' (selective, moebius, filter)");
}

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::Selective: return "selective";
    case Algorithm::Moebius: return "moebius";
    case Algorithm::Filter: return "filter";
  }
  return "?";
}

Instance generate_instance(const std::string& family, const std::vector<std::uint64_t>& params) {
  auto need = [&](std::size_t k, const char* usage) {
    if (params.size() != k) throw input_error(family + " expects parameters: " + usage);
  };
  if (family == "dwarfed-cube") {
    need(1, "d");
    return {"dwarfed-cube-" + std::to_string(params[0]), dwarfed_cube(params[0]).unbounded};
  }
  if (family == "thrackle") {
    need(1, "d");
    return {"thrackle-" + std::to_string(params[0]), tight_span_hrep(thrackle_metric(params[0]))};
  }
  if (family == "random-metric") {
    need(2, "d seed");
    return {"random-metric-" + std::to_string(params[0]) + "-s" + std::to_string(params[1]),
            tight_span_hrep(random_metric(params[0], params[1]))};
  }
  if (family == "tropical-cyclic") {
    need(2, "s t");
    return {"tropical-cyclic-" + std::to_string(params[0]) + "-" + std::to_string(params[1]),
            tropical_hrep(cyclic_matrix(params[0], params[1]))};
  }
  if (family == "tropical-permutohedron") {
    need(1, "t");
    return {"tropical-permutohedron-" + std::to_string(params[0]), tropical_hrep(permutohedron_matrix(params[0]))};
  }
  throw input_error("unknown family '" + family +
                    "' (dwarfed-cube, thrackle, random-metric, tropical-cyclic, tropical-permutohedron)");
}

namespace {

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

// Re-indexes a diagram over P's vertices to the closure's vertex numbering.
HasseDiagram lift(const HasseDiagram& hd, const std::vector<std::size_t>& kept, std::size_t n_bar,
                  const VertexSet& far) {
  HasseDiagram out;
  out.n_vertices = n_bar;
  out.far_face = far;
  out.arcs = hd.arcs;
  for (const auto& node : hd.nodes) {
    VertexSet s(n_bar);
    for (auto v : node.vertices.to_indices()) s.insert(kept[v]);
    out.nodes.push_back({std::move(s), node.rank});
  }
  return out;
}

}  // namespace

ClosedPolyhedron close_and_enumerate(const HRep& h) {
  ClosedPolyhedron out;
  out.closure = stage("close", [&] { return projective_closure(h); });
  out.vertices = stage("vertices", [&] {
    VRep v;
    v.dim = h.dim;
    v.vertices = enumerate_simplex_polytope_vertices(out.closure.closure);
    return v;
  });
  out.incidences = stage("incidences", [&] {
    auto inc = compute_incidences(out.closure.closure, out.vertices);
    inc.far_face = far_face_vertices(out.closure, out.vertices);
    return inc;
  });
  return out;
}

HasseDiagram bounded_complex(const IncidenceMatrix& closure_inc, Algorithm alg, std::optional<int> max_dim) {
  if (!closure_inc.far_face) throw input_error("closure incidences need a far face");
  const VertexSet& far = *closure_inc.far_face;
  switch (alg) {
    case Algorithm::Selective:
      return selective_generation(closure_inc, max_dim);
    case Algorithm::Filter: {
      auto hd = filter_bounded(full_face_lattice(closure_inc), far);
      return max_dim ? hd.restrict_rank(*max_dim) : hd;
    }
    case Algorithm::Moebius: {
      std::vector<std::size_t> kept;
      for (std::size_t v = 0; v < closure_inc.n_vertices; ++v) {
        if (!far.contains(v)) kept.push_back(v);
      }
      MoebiusOptions opts;
      opts.max_dim = max_dim;
      return lift(moebius_generation(closure_inc.without_far_face(), opts), kept, closure_inc.n_vertices, far);
    }
  }
  throw input_error("unknown algorithm");
}

PipelineResult run_pipeline(const Instance& instance, const PipelineOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  PipelineResult out;
  out.input = instance.hrep;
  auto closed = close_and_enumerate(instance.hrep);
  out.closure = std::move(closed.closure);
  out.closure_vertices = std::move(closed.vertices);
  out.incidences = std::move(closed.incidences);
  if (options.budget && out.incidences.n_vertices > *options.budget) {
    throw budget_error("vertices: " + std::to_string(out.incidences.n_vertices) + " closure vertices exceed the budget of " +
                       std::to_string(*options.budget));
  }

  out.diagram = stage("bounded", [&] { return bounded_complex(out.incidences, options.algorithm, options.max_dim); });
  if (options.budget && out.diagram.size() > *options.budget) {
    throw budget_error("bounded: " + std::to_string(out.diagram.size()) + " faces exceed the budget of " +
                       std::to_string(*options.budget));
  }
  if (options.verify) {
    stage("verify", [&] {
      for (Algorithm other : {Algorithm::Selective, Algorithm::Moebius}) {
        if (other == options.algorithm) continue;
        if (!bounded_complex(out.incidences, other, options.max_dim).same_faces_and_arcs(out.diagram)) {
          throw invariant_error(to_string(options.algorithm) + " and " + to_string(other) + " disagree");
        }
      }
      return 0;
    });
  }
  const auto stop = std::chrono::steady_clock::now();

  out.row.label = instance.label;
  out.row.d = instance.hrep.dim;
  out.row.m_bar = out.incidences.n_facets();
  out.row.n_bar = out.incidences.n_vertices;
  out.row.alpha = out.incidences.alpha();
  out.row.phi_prime = out.diagram.size();
  out.row.millis = std::chrono::duration<double, std::milli>(stop - start).count();

  if (options.out_dir) {
    stage("write", [&] {
      std::filesystem::create_directories(*options.out_dir);
      const auto base = *options.out_dir / instance.label;
      auto open = [&](const std::string& suffix) {
        std::ofstream os(base.string() + suffix);
        if (!os) throw input_error("cannot write " + base.string() + suffix);
        return os;
      };
      {
        auto os = open(".hrep");
        write_hrep(os, out.input);
      }
      {
        auto os = open(".closure.hrep");
        write_hrep(os, out.closure.closure);
      }
      {
        auto os = open(".closure.vrep");
        write_vrep(os, out.closure_vertices);
      }
      {
        auto os = open(".inc");
        write_incidence(os, out.incidences);
      }
      {
        auto os = open(".hasse.json");
        os << hasse_to_json(out.diagram);
      }
      return 0;
    });
  }
  return out;
}

namespace {

struct SuiteEntry {
  std::string family;
  std::vector<std::uint64_t> params;
  std::size_t group = 0;  // dimension, for random-suite summaries
};

std::vector<SuiteEntry> suite_entries(const std::string& suite, const SuiteOptions& o) {
  std::vector<SuiteEntry> out;
  if (suite == "dwarfed") {
    const std::size_t max = o.max_size ? o.max_size : 15;
    for (std::size_t d = 5; d <= max; d += 5) out.push_back({"dwarfed-cube", {d}});
  } else if (suite == "thrackle") {
    const std::size_t max = o.max_size ? o.max_size : 8;
    for (std::size_t d = 3; d <= max; ++d) out.push_back({"thrackle", {d}});
  } else if (suite == "random") {
    const std::size_t max = o.max_size ? o.max_size : 6;
    for (std::size_t d = 5; d <= max; ++d) {
      for (std::size_t s = 1; s <= o.seeds; ++s) out.push_back({"random-metric", {d, s}, d});
    }
  } else if (suite == "tropical-cyclic") {
    const std::size_t max = o.max_size ? o.max_size : 12;  // bound on d = s + t - 1
    for (std::size_t s = 3; 2 * s - 1 <= max; ++s) out.push_back({"tropical-cyclic", {s, s}});
    for (std::size_t t = 10; 3 + t - 1 <= max; t += 10) out.push_back({"tropical-cyclic", {3, t}});
  } else if (suite == "tropical-perm") {
    const std::size_t max = o.max_size ? o.max_size : 3;  // bound on t
    for (std::size_t t = 3; t <= max; ++t) out.push_back({"tropical-permutohedron", {t}});
  } else {
    throw input_error("unknown suite '" + suite + "' (dwarfed, thrackle, random, tropical-cyclic, tropical-perm)");
  }
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const SuiteOptions& options) {
  SuiteResult result;
  result.suite = suite;
  const auto entries = suite_entries(suite, options);
  for (const auto& e : entries) {
    SuiteRow row;
    try {
      PipelineOptions po;
      po.algorithm = options.algorithm;
      po.verify = options.verify;
      po.budget = options.budget;
      row.row = run_pipeline(generate_instance(e.family, e.params), po).row;
    } catch (const Error& err) {
      row.row.label = e.family;
      for (auto p : e.params) row.row.label += "-" + std::to_string(p);
      row.error = err.what();
    }
    result.rows.push_back(std::move(row));
  }
  if (suite == "random") {
    std::size_t i = 0;
    while (i < entries.size()) {
      const std::size_t d = entries[i].group;
      double sn = 0, sa = 0, sp = 0, spp = 0;
      std::size_t k = 0;
      for (; i < entries.size() && entries[i].group == d; ++i) {
        if (result.rows[i].error) continue;
        const auto& r = result.rows[i].row;
        sn += static_cast<double>(r.n_bar);
        sa += static_cast<double>(r.alpha);
        sp += static_cast<double>(r.phi_prime);
        spp += static_cast<double>(r.phi_prime) * static_cast<double>(r.phi_prime);
        ++k;
      }
      if (k == 0) continue;
      const double kd = static_cast<double>(k);
      const double mean = sp / kd;
      const double var = std::max(0.0, spp / kd - mean * mean);
      result.summaries.push_back({d, sn / kd, sa / kd, mean, std::sqrt(var), k});
    }
  }
  return result;
}

std::string format_suite(const SuiteResult& result, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    os << "instance,d,m_bar,n_bar,alpha,phi_prime,time_ms,error\n";
    for (const auto& r : result.rows) {
      os << r.row.label << ',' << r.row.d << ',' << r.row.m_bar << ',' << r.row.n_bar << ',' << r.row.alpha << ','
         << r.row.phi_prime << ',' << std::fixed << std::setprecision(1) << r.row.millis << ','
         << (r.error ? *r.error : "") << '\n';
    }
    if (!result.summaries.empty()) {
      os << "\nd,samples,mean_n_bar,mean_alpha,mean_phi_prime,stddev_phi_prime\n";
      for (const auto& s : result.summaries) {
        os << s.d << ',' << s.samples << ',' << std::setprecision(2) << s.mean_n_bar << ',' << s.mean_alpha << ','
           << s.mean_phi << ',' << s.stddev_phi << '\n';
      }
    }
    return os.str();
  }
  if (format != "table") throw input_error("unknown format '" + format + "' (csv, table)");
  os << std::left << std::setw(32) << "instance" << std::right << std::setw(5) << "d" << std::setw(8) << "m_bar"
     << std::setw(8) << "n_bar" << std::setw(10) << "alpha" << std::setw(10) << "phi'" << std::setw(12) << "time(ms)"
     << '\n';
  for (const auto& r : result.rows) {
    os << std::left << std::setw(32) << r.row.label << std::right;
    if (r.error) {
      os << "  error: " << *r.error << '\n';
      continue;
    }
    os << std::setw(5) << r.row.d << std::setw(8) << r.row.m_bar << std::setw(8) << r.row.n_bar << std::setw(10)
       << r.row.alpha << std::setw(10) << r.row.phi_prime << std::setw(12) << std::fixed << std::setprecision(1)
       << r.row.millis << '\n';
  }
  if (!result.summaries.empty()) {
    os << '\n'
       << std::setw(5) << "d" << std::setw(9) << "samples" << std::setw(12) << "mean n_bar" << std::setw(12)
       << "mean alpha" << std::setw(12) << "mean phi'" << std::setw(12) << "stddev" << '\n';
    for (const auto& s : result.summaries) {
      os << std::setw(5) << s.d << std::setw(9) << s.samples << std::fixed << std::setprecision(2) << std::setw(12)
         << s.mean_n_bar << std::setw(12) << s.mean_alpha << std::setw(12) << s.mean_phi << std::setw(12)
         << s.stddev_phi << '\n';
    }
  }
  return os.str();
}

}  // namespace polybound
