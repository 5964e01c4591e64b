#pragma once

#include <cstdint>
#include <vector>

#include "polybound/polyhedron.hpp"

namespace polybound {

/// Symmetric distance function on points 1..d, stored as the upper triangle.
class Metric {
 public:
  explicit Metric(std::size_t d) : d_(d), entries_(d * d) {}

  std::size_t size() const { return d_; }
  /// 1-based indices, i != j.
  const Rational& operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, Rational value);

  Metric scaled(const Rational& factor) const;
  bool satisfies_triangle_inequality() const;

  bool operator==(const Metric&) const = default;

 private:
  std::size_t d_;
  std::vector<Rational> entries_;
};

struct TropicalMatrix {
  std::size_t s = 0;
  std::size_t t = 0;
  Matrix v;  // s × t
};

struct DwarfedCube {
  HRep polytope;  // 0 <= x_i <= 1, Σx_i <= 3/2; the last row is the dwarfing facet
  HRep unbounded; // dwarfing facet sent to infinity
};

DwarfedCube dwarfed_cube(std::size_t d);

/// Metric of the maximal circular split system: M(i,j) = (j-i)(d-(j-i)).
Metric thrackle_metric(std::size_t d);

/// M(i,j) = 1 + k / 2^20 with k uniform in {0, ..., 2^20}, drawn in the order
/// (1,2), (1,3), ..., (1,d), (2,3), ... from SplitMix64(seed).
Metric random_metric(std::size_t d, std::uint64_t seed);

/// Rows -x_i - x_j <= -M(i,j) for 1 <= i <= j <= d, with M(i,i) = 0.
HRep tight_span_hrep(const Metric& m);

/// Rows u_i + w_k <= v_ik over variables (u_1..u_s, w_1..w_{t-1}); w_t is
/// pinned to 0 to remove the lineality direction (1,...,1,-1,...,-1).
HRep tropical_hrep(const TropicalMatrix& v);

TropicalMatrix cyclic_matrix(std::size_t s, std::size_t t);

inline constexpr std::size_t kMaxPermutohedronRows = 40320;  // 8!

/// All permutations of (0, ..., t-1) as rows, in lexicographic order.
TropicalMatrix permutohedron_matrix(std::size_t t);

}  // namespace polybound
