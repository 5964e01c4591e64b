// Command-line front end.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "polybound/error.hpp"
#include "polybound/io.hpp"
#include "polybound/moebius.hpp"
#include "polybound/pipeline.hpp"
#include "polybound/simple_fvector.hpp"

using namespace polybound;

namespace {

struct Source {
  std::string file;
  std::string family;
  std::vector<std::uint64_t> params;

  void attach(CLI::App* cmd) {
    cmd->add_option("input", file, "Input file");
    cmd->add_option("--family", family, "Generate the input instead of reading it");
    cmd->add_option("--params", params, "Family parameters");
  }

  Instance instance() const {
    if (!family.empty()) return generate_instance(family, params);
    if (file.empty()) throw input_error("need an input file or --family");
    std::ifstream is(file);
    if (!is) throw input_error("cannot open " + file);
    std::string label = std::filesystem::path(file).stem().string();
    return {label, read_hrep(is)};
  }
};

std::string slurp_header(const std::string& file) {
  std::ifstream is(file);
  if (!is) throw input_error("cannot open " + file);
  std::string word;
  is >> word;
  return word;
}

// Writes to out_dir/name when an output directory is set, else to stdout.
void emit(const std::string& out_dir, const std::string& name, const std::string& text) {
  if (out_dir.empty()) {
    std::cout << text;
    return;
  }
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / name;
  std::ofstream os(path);
  if (!os) throw input_error("cannot write " + path.string());
  os << text;
  std::cerr << "wrote " << path.string() << '\n';
}

template <typename W, typename T>
std::string render(W writer, const T& value) {
  std::ostringstream os;
  writer(os, value);
  return os.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Input: return 2;
    case ErrorKind::Budget: return 3;
    case ErrorKind::Invariant: return 4;
  }
  return 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded subcomplexes of unbounded polyhedra"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned long long budget = kDefaultBruteForceBudget;
  std::string out_dir;
  app.add_option("--budget", budget, "Cap on brute-force row subsets, closure vertices and generated faces")->capture_default_str();
  app.add_option("-o,--out-dir", out_dir, "Write output files here instead of stdout");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a benchmark instance as an H-representation");
  std::string gen_family;
  std::vector<std::uint64_t> gen_params;
  gen->add_option("family", gen_family, "dwarfed-cube | thrackle | random-metric | tropical-cyclic | tropical-permutohedron")
      ->required();
  gen->add_option("params", gen_params, "d | d seed | s t | t")->required();

  // close
  auto* close = app.add_subcommand("close", "Projective closure of a pointed polyhedron");
  Source close_src;
  close_src.attach(close);

  // vertices
  auto* vertices = app.add_subcommand("vertices", "Vertices and rays");
  Source vert_src;
  vert_src.attach(vertices);
  std::string method = "dd";
  vertices->add_option("--method", method, "dd | bruteforce | reverse")->capture_default_str();

  // incidences
  auto* incidences = app.add_subcommand("incidences", "Facet-vertex incidences");
  Source inc_src;
  inc_src.attach(incidences);
  bool inc_closure = false;
  incidences->add_flag("--closure", inc_closure, "Incidences of the projective closure with its far face");

  // bounded
  auto* bounded = app.add_subcommand("bounded", "Hasse diagram of the bounded subcomplex");
  Source bnd_src;
  bnd_src.attach(bounded);
  std::string alg = "selective";
  std::optional<int> max_dim;
  bool verify = false;
  bounded->add_option("--alg", alg, "selective | moebius | filter")->capture_default_str();
  bounded->add_option("--max-dim", max_dim, "Only faces up to this dimension");
  bounded->add_flag("--verify", verify, "Also run the other algorithm and compare");

  // fvector
  auto* fvector = app.add_subcommand("fvector", "Face numbers of a simple polyhedron");
  Source fv_src;
  fv_src.attach(fvector);
  bool simple = false;
  std::uint64_t fv_seed = 1;
  fvector->add_flag("--simple", simple, "Use the h-vector method for simple polyhedra")->required();
  fvector->add_option("--seed", fv_seed, "Seed for the generic objective")->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite;
  SuiteOptions suite_opts;
  std::string format = "table";
  std::string bench_alg = "selective";
  bench->add_option("--suite", suite, "dwarfed | thrackle | random | tropical-cyclic | tropical-perm")->required();
  bench->add_option("--max-size", suite_opts.max_size, "Largest instance size");
  bench->add_option("--seeds", suite_opts.seeds, "Samples per dimension (random suite)")->capture_default_str();
  bench->add_option("--format", format, "csv | table")->capture_default_str();
  bench->add_option("--alg", bench_alg, "selective | moebius | filter")->capture_default_str();
  bench->add_flag("--verify", suite_opts.verify, "Compare selective and moebius on every row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const auto inst = generate_instance(gen_family, gen_params);
      emit(out_dir, inst.label + ".hrep", render(write_hrep, inst.hrep));
    } else if (*close) {
      const auto inst = close_src.instance();
      emit(out_dir, inst.label + ".closure.hrep", render(write_hrep, projective_closure(inst.hrep).closure));
    } else if (*vertices) {
      const auto inst = vert_src.instance();
      VRep v;
      if (method == "dd") {
        v = enumerate_vertices(inst.hrep);
      } else if (method == "bruteforce") {
        v = enumerate_vertices_bruteforce(inst.hrep, budget);
      } else if (method == "reverse") {
        auto rs = reverse_search_vertices(inst.hrep, bounded_objective(inst.hrep));
        v = std::move(rs.vertices);
        v.rays = enumerate_vertices(inst.hrep).rays;
      } else {
        throw input_error("unknown method '" + method + "' (dd, bruteforce, reverse)");
      }
      emit(out_dir, inst.label + ".vrep", render(write_vrep, v));
    } else if (*incidences) {
      const auto inst = inc_src.instance();
      IncidenceMatrix inc;
      if (inc_closure) {
        inc = close_and_enumerate(inst.hrep).incidences;
      } else {
        inc = compute_incidences(inst.hrep, enumerate_vertices(inst.hrep));
      }
      emit(out_dir, inst.label + ".inc", render(write_incidence, inc));
    } else if (*bounded) {
      const Algorithm algorithm = parse_algorithm(alg);
      if (bnd_src.family.empty() && !bnd_src.file.empty() && slurp_header(bnd_src.file) == "polybound-inc") {
        std::ifstream is(bnd_src.file);
        const auto inc = read_incidence(is);
        auto hd = bounded_complex(inc, algorithm, max_dim);
        if (verify) {
          const Algorithm other = algorithm == Algorithm::Moebius ? Algorithm::Selective : Algorithm::Moebius;
          if (!bounded_complex(inc, other, max_dim).same_faces_and_arcs(hd)) {
            throw invariant_error("verify: " + alg + " and " + to_string(other) + " disagree");
          }
        }
        const auto stem = std::filesystem::path(bnd_src.file).stem().string();
        emit(out_dir, stem + ".hasse.json", hasse_to_json(hd) + "\n");
        std::cerr << "phi' = " << hd.size() << '\n';
      } else {
        PipelineOptions po;
        po.algorithm = algorithm;
        po.max_dim = max_dim;
        po.verify = verify;
        po.budget = budget;
        if (!out_dir.empty()) po.out_dir = out_dir;
        const auto result = run_pipeline(bnd_src.instance(), po);
        if (out_dir.empty()) std::cout << hasse_to_json(result.diagram) << '\n';
        const auto& r = result.row;
        std::cerr << r.label << ": d=" << r.d << " m_bar=" << r.m_bar << " n_bar=" << r.n_bar << " alpha=" << r.alpha
                  << " phi'=" << r.phi_prime << '\n';
      }
    } else if (*fvector) {
      (void)simple;
      const auto inst = fv_src.instance();
      const auto closed = close_and_enumerate(inst.hrep);
      const auto numbers = f_vector_simple(closed.incidences, closed.vertices, inst.hrep.dim, fv_seed);
      std::cerr << "bounded: " << format_fvector(numbers.f_bounded.f) << '\n'
                << "all:     " << format_fvector(numbers.f_all.f) << '\n';
      emit(out_dir, inst.label + ".fvector.json", fvector_to_json(numbers));
    } else if (*bench) {
      suite_opts.algorithm = parse_algorithm(bench_alg);
      suite_opts.budget = budget;
      const auto result = run_suite(suite, suite_opts);
      emit(out_dir, suite + (format == "csv" ? ".csv" : ".txt"), format_suite(result, format));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
