#include "polybound/generators.hpp"

#include <algorithm>
#include <numeric>

#include "polybound/error.hpp"
#include "polybound/random.hpp"

namespace polybound {

const Rational& Metric::operator()(std::size_t i, std::size_t j) const {
  return entries_[(i - 1) * d_ + (j - 1)];
}

void Metric::set(std::size_t i, std::size_t j, Rational value) {
  if (i == j || i < 1 || j < 1 || i > d_ || j > d_) throw input_error("metric index out of range");
  entries_[(i - 1) * d_ + (j - 1)] = value;
  entries_[(j - 1) * d_ + (i - 1)] = std::move(value);
}

Metric Metric::scaled(const Rational& factor) const {
  Metric out = *this;
  for (auto& e : out.entries_) e *= factor;
  return out;
}

bool Metric::satisfies_triangle_inequality() const {
  for (std::size_t i = 1; i <= d_; ++i) {
    for (std::size_t j = 1; j <= d_; ++j) {
      for (std::size_t k = 1; k <= d_; ++k) {
        if (i == j || j == k || i == k) continue;
        if ((*this)(i, k) > (*this)(i, j) + (*this)(j, k)) return false;
      }
    }
  }
  return true;
}

DwarfedCube dwarfed_cube(std::size_t d) {
  if (d < 2) throw input_error("dwarfed cube needs d >= 2");
  DwarfedCube out;
  out.polytope.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    Vector lower(d), upper(d);
    lower[i] = -1;
    upper[i] = 1;
    out.polytope.rows.push_back({lower, 0});
    out.polytope.rows.push_back({upper, 1});
  }
  out.polytope.rows.push_back({Vector(d, Rational(1)), make_rational(3, 2)});

  // y = x / (3/2 - Σx) maps the dwarfing facet to infinity; its inverse is
  // x = (3/2) y / (1 + Σy). Then x_i >= 0 becomes y_i >= 0, and x_i <= 1
  // becomes 3 y_i <= 2 (1 + Σy), i.e. y_i - 2 Σ_{j != i} y_j <= 2.
  out.unbounded.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    Vector lower(d);
    lower[i] = -1;
    out.unbounded.rows.push_back({lower, 0});
    Vector upper(d, Rational(-2));
    upper[i] = 1;
    out.unbounded.rows.push_back({upper, 2});
  }
  return out;
}

Metric thrackle_metric(std::size_t d) {
  if (d < 3) throw input_error("thrackle metric needs d >= 3");
  Metric m(d);
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      const long gap = static_cast<long>(j - i);
      m.set(i, j, Rational(gap * (static_cast<long>(d) - gap)));
    }
  }
  return m;
}

Metric random_metric(std::size_t d, std::uint64_t seed) {
  if (d < 3) throw input_error("random metric needs d >= 3");
  constexpr long kDenominator = 1L << 20;
  SplitMix64 rng(seed);
  Metric m(d);
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      const long k = static_cast<long>(rng.uniform_inclusive(kDenominator));
      m.set(i, j, make_rational(kDenominator + k, kDenominator));
    }
  }
  return m;
}

HRep tight_span_hrep(const Metric& m) {
  const std::size_t d = m.size();
  HRep h;
  h.dim = d;
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = i; j <= d; ++j) {
      Vector a(d);
      a[i - 1] -= 1;
      a[j - 1] -= 1;
      h.rows.push_back({std::move(a), i == j ? Rational(0) : Rational(-m(i, j))});
    }
  }
  return h;
}

HRep tropical_hrep(const TropicalMatrix& v) {
  if (v.s < 2 || v.t < 2) throw input_error("tropical matrix needs s, t >= 2");
  const std::size_t d = v.s + v.t - 1;
  HRep h;
  h.dim = d;
  for (std::size_t i = 0; i < v.s; ++i) {
    for (std::size_t k = 0; k < v.t; ++k) {
      Vector a(d);
      a[i] = 1;
      if (k + 1 < v.t) a[v.s + k] = 1;
      h.rows.push_back({std::move(a), v.v(i, k)});
    }
  }
  return h;
}

TropicalMatrix cyclic_matrix(std::size_t s, std::size_t t) {
  if (s < 2 || t < 2) throw input_error("cyclic matrix needs s, t >= 2");
  TropicalMatrix out{s, t, Matrix(s, t)};
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t k = 0; k < t; ++k) out.v(i, k) = Rational(static_cast<long>((i + 1) * (k + 1)));
  }
  return out;
}

TropicalMatrix permutohedron_matrix(std::size_t t) {
  if (t < 2) throw input_error("permutohedron needs t >= 2");
  std::size_t rows = 1;
  for (std::size_t k = 2; k <= t; ++k) {
    rows *= k;
    if (rows > kMaxPermutohedronRows) throw budget_error("t! exceeds the permutohedron row budget");
  }
  TropicalMatrix out{rows, t, Matrix(rows, t)};
  std::vector<long> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t r = 0;
  do {
    for (std::size_t k = 0; k < t; ++k) out.v(r, k) = Rational(perm[k]);
    ++r;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace polybound
