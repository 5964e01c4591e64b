#pragma once

#include <optional>

#include "polybound/matrix.hpp"

namespace polybound {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::optional<Vector> point;
  std::optional<Rational> objective;
};

/// Optimizes c·x over {x : A x <= b} with a two-phase tableau simplex using
/// Bland's rule. With c = 0 this is a plain feasibility test. An optimal
/// point is moved along its optimal face until it is a vertex whenever the
/// region is pointed.
LpOutcome lp_solve(const Matrix& a, const Vector& b, const Vector& c, Sense sense = Sense::Maximize);

/// Row indices i with a_i·x = b_i.
std::vector<std::size_t> active_rows(const Matrix& a, const Vector& b, const Vector& x);

}  // namespace polybound
