#include "polybound/lp.hpp"

#include <limits>

#include "polybound/error.hpp"

namespace polybound {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Tableau {
 public:
  Tableau(const Matrix& a, const Vector& b) : m_(a.rows()), d_(a.cols()) {
    std::size_t artificials = 0;
    for (const auto& v : b) artificials += (v < 0) ? 1 : 0;
    first_artificial_ = 2 * d_ + m_;
    n_ = first_artificial_ + artificials;
    t_ = Matrix(m_, n_ + 1);
    basis_.resize(m_);
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < m_; ++i) {
      const int s = (b[i] < 0) ? -1 : 1;
      for (std::size_t j = 0; j < d_; ++j) {
        t_(i, j) = s * a(i, j);
        t_(i, d_ + j) = -s * a(i, j);
      }
      t_(i, 2 * d_ + i) = s;
      t_(i, n_) = s * b[i];
      if (s < 0) {
        t_(i, next_art) = 1;
        basis_[i] = next_art++;
      } else {
        basis_[i] = 2 * d_ + i;
      }
    }
  }

  bool has_artificials() const { return n_ > first_artificial_; }

  // Maximizes cost·z over the current feasible basis; returns false when
  // unbounded. Columns at or beyond `column_limit` never enter.
  bool maximize(const Vector& cost, std::size_t column_limit) {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < column_limit && entering == kNone; ++j) {
        if (is_basic(j)) continue;
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < m_; ++i) {
          if (t_(i, j) != 0) reduced -= cost[basis_[i]] * t_(i, j);
        }
        if (reduced > 0) entering = j;
      }
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_(i, entering) <= 0) continue;
        Rational ratio = t_(i, n_) / t_(i, entering);
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  Rational value(const Vector& cost) const {
    Rational sum = 0;
    for (std::size_t i = 0; i < m_; ++i) sum += cost[basis_[i]] * t_(i, n_);
    return sum;
  }

  // Pivots zero-level artificials out of the basis where possible.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < first_artificial_) continue;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (!is_basic(j) && t_(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Vector primal_x() const {
    Vector x(d_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < d_) x[basis_[i]] += t_(i, n_);
      else if (basis_[i] < 2 * d_) x[basis_[i] - d_] -= t_(i, n_);
    }
    return x;
  }

  std::size_t columns() const { return n_; }
  std::size_t first_artificial() const { return first_artificial_; }

 private:
  bool is_basic(std::size_t j) const {
    for (auto b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void pivot(std::size_t r, std::size_t c) {
    Rational inv = 1 / t_(r, c);
    for (std::size_t k = 0; k <= n_; ++k) t_(r, k) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || t_(i, c) == 0) continue;
      Rational factor = t_(i, c);
      for (std::size_t k = 0; k <= n_; ++k) {
        if (t_(r, k) != 0) t_(i, k) -= factor * t_(r, k);
      }
    }
    basis_[r] = c;
  }

  std::size_t m_, d_, n_ = 0, first_artificial_ = 0;
  Matrix t_;
  std::vector<std::size_t> basis_;
};

// Walks along directions inside the optimal face until the tight rows have
// full column rank. Stops early when both directions of some null vector are
// unbounded (the region contains a line).
Vector push_to_vertex(const Matrix& a, const Vector& b, Vector x) {
  const std::size_t d = a.cols();
  for (;;) {
    auto tight = active_rows(a, b, x);
    Matrix tm(tight.size(), d);
    for (std::size_t r = 0; r < tight.size(); ++r) {
      for (std::size_t c = 0; c < d; ++c) tm(r, c) = a(tight[r], c);
    }
    auto kernel = null_space(tm);
    if (kernel.empty()) return x;
    const Vector& dir = kernel.front();
    Vector slope = a * dir;
    auto step_for = [&](int s) -> std::optional<Rational> {
      std::optional<Rational> best;
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational rate = s * slope[i];
        if (rate <= 0) continue;
        Rational step = (b[i] - dot(a.row_vector(i), x)) / rate;
        if (!best || step < *best) best = step;
      }
      return best;
    };
    int s = 1;
    auto step = step_for(1);
    if (!step) {
      s = -1;
      step = step_for(-1);
    }
    if (!step) return x;
    for (std::size_t c = 0; c < d; ++c) x[c] += s * *step * dir[c];
  }
}

}  // namespace

std::vector<std::size_t> active_rows(const Matrix& a, const Vector& b, const Vector& x) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < a.cols(); ++c) lhs += a(i, c) * x[c];
    if (lhs == b[i]) rows.push_back(i);
  }
  return rows;
}

LpOutcome lp_solve(const Matrix& a, const Vector& b, const Vector& c, Sense sense) {
  if (a.rows() != b.size() || a.cols() != c.size()) {
    throw input_error("lp_solve: dimension mismatch between A (" + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + "), b (" + std::to_string(b.size()) + ") and c (" +
                      std::to_string(c.size()) + ")");
  }
  const std::size_t d = a.cols();
  Tableau tab(a, b);

  if (tab.has_artificials()) {
    Vector phase1(tab.columns());
    for (std::size_t j = tab.first_artificial(); j < tab.columns(); ++j) phase1[j] = -1;
    tab.maximize(phase1, tab.columns());
    if (tab.value(phase1) < 0) return {LpStatus::Infeasible, std::nullopt, std::nullopt};
    tab.expel_artificials();
  }

  const int s = (sense == Sense::Maximize) ? 1 : -1;
  Vector cost(tab.columns());
  for (std::size_t j = 0; j < d; ++j) {
    cost[j] = s * c[j];
    cost[d + j] = -s * c[j];
  }
  if (!tab.maximize(cost, tab.first_artificial())) {
    return {LpStatus::Unbounded, std::nullopt, std::nullopt};
  }
  Vector x = push_to_vertex(a, b, tab.primal_x());
  Rational objective = dot(c, x);
  return {LpStatus::Optimal, std::move(x), std::move(objective)};
}

}  // namespace polybound
