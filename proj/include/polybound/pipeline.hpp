#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "polybound/hasse.hpp"
#include "polybound/polyhedron.hpp"

namespace polybound {

enum class Algorithm { Selective, Moebius, Filter };

Algorithm parse_algorithm(const std::string& name);
std::string to_string(Algorithm alg);

struct Instance {
  std::string label;
  HRep hrep;
};

/// Families: dwarfed-cube d | thrackle d | random-metric d seed |
/// tropical-cyclic s t | tropical-permutohedron t.
Instance generate_instance(const std::string& family, const std::vector<std::uint64_t>& params);

struct BenchRow {
  std::string label;
  std::size_t d = 0;
  std::size_t m_bar = 0;
  std::size_t n_bar = 0;
  std::size_t alpha = 0;
  std::size_t phi_prime = 0;
  double millis = 0;  // informational only
};

struct PipelineOptions {
  Algorithm algorithm = Algorithm::Selective;
  std::optional<int> max_dim;
  bool verify = false;
  std::optional<std::filesystem::path> out_dir;
  /// Cap on closure vertices and on emitted faces; exceeding it is a budget error.
  std::optional<std::size_t> budget;
};

struct PipelineResult {
  BenchRow row;
  HRep input;
  ClosureResult closure;
  VRep closure_vertices;
  IncidenceMatrix incidences;  // of the closure, far face attached
  HasseDiagram diagram;        // vertex indices refer to closure_vertices
};

/// Closure, its vertices and incidences with the far face attached.
struct ClosedPolyhedron {
  ClosureResult closure;
  VRep vertices;
  IncidenceMatrix incidences;
};

ClosedPolyhedron close_and_enumerate(const HRep& h);

/// Runs one algorithm on closure incidences. Moebius runs on the incidences
/// of P (far rows and columns removed) and its result is re-indexed to the
/// closure's vertices.
HasseDiagram bounded_complex(const IncidenceMatrix& closure_inc, Algorithm alg, std::optional<int> max_dim = {});

PipelineResult run_pipeline(const Instance& instance, const PipelineOptions& options);

struct SuiteOptions {
  std::size_t max_size = 0;  // 0 selects the suite default
  std::size_t seeds = 20;
  Algorithm algorithm = Algorithm::Selective;
  bool verify = false;
  std::optional<std::size_t> budget;
};

struct SuiteRow {
  BenchRow row;
  std::optional<std::string> error;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteRow> rows;
  /// Random suite only: per dimension (d, mean n̄, mean α, mean φ', stddev φ').
  struct Summary {
    std::size_t d;
    double mean_n_bar, mean_alpha, mean_phi, stddev_phi;
    std::size_t samples;
  };
  std::vector<Summary> summaries;
};

/// Suites: dwarfed, thrackle, random, tropical-cyclic, tropical-perm.
SuiteResult run_suite(const std::string& suite, const SuiteOptions& options);

std::string format_suite(const SuiteResult& result, const std::string& format);

}  // namespace polybound
