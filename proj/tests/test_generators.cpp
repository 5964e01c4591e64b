#include <doctest.h>

#include "polybound/bounded_complex.hpp"
#include "polybound/error.hpp"
#include "polybound/generators.hpp"
#include "polybound/moebius.hpp"
#include "support.hpp"

using namespace polybound;
using testing::vec;

TEST_CASE("dwarfed cube d=2") {
  const auto dw = dwarfed_cube(2);
  CHECK(dw.polytope.rows.size() == 5);
  const auto v = enumerate_vertices_bruteforce(dw.polytope);
  std::vector<Vector> expected{vec({0, 0}), vec({0, 1}), Vector{Rational(1, 2), Rational(1)}, vec({1, 0}),
                               Vector{Rational(1), Rational(1, 2)}};
  std::sort(expected.begin(), expected.end());
  CHECK(v.vertices == expected);
  // the reversal has no dwarfing facet left: it is unbounded
  CHECK_FALSE(enumerate_vertices_bruteforce(dw.unbounded).rays.empty());
}

TEST_CASE("dwarfed cube closed forms") {
  for (std::size_t d = 2; d <= 15; ++d) {
    const auto row = run_pipeline(generate_instance("dwarfed-cube", {d}), {}).row;
    CHECK(row.m_bar == 2 * d + 1);
    CHECK(row.n_bar == d * d + 1);
    CHECK(row.alpha == d * row.n_bar);
    CHECK(row.phi_prime == 2 * d + 2);
  }
}

TEST_CASE("thrackle metric") {
  const auto m3 = thrackle_metric(3);
  CHECK(m3(1, 2) == 2);
  CHECK(m3(1, 3) == 2);
  CHECK(m3(2, 3) == 2);
  for (std::size_t d = 3; d <= 9; ++d) {
    const auto m = thrackle_metric(d);
    CHECK(m.satisfies_triangle_inequality());
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) CHECK(m(i, j) == m(j, i));
    }
  }
}

TEST_CASE("thrackle closed forms for 3 <= d <= 7") {
  // phi'(d) - 1 = ((1 - sqrt 2)^d + (1 + sqrt 2)^d) / 2 satisfies a_d = 2 a_{d-1} + a_{d-2}.
  std::vector<std::uint64_t> a{1, 1};
  for (std::size_t d = 2; d <= 8; ++d) a.push_back(2 * a[d - 1] + a[d - 2]);
  for (std::size_t d = 3; d <= 7; ++d) {
    const auto row = run_pipeline(generate_instance("thrackle", {d}), {}).row;
    CHECK(row.n_bar == (std::size_t{1} << (d - 1)) + d);
    CHECK(row.phi_prime == a[d] + 1);
    CHECK(row.m_bar == d * (d + 1) / 2 + 1);
  }
}

TEST_CASE("random metrics") {
  const auto a = random_metric(6, 42);
  CHECK(a == random_metric(6, 42));
  CHECK_FALSE(a == random_metric(6, 43));
  for (std::size_t i = 1; i <= 6; ++i) {
    for (std::size_t j = i + 1; j <= 6; ++j) {
      CHECK(a(i, j) >= 1);
      CHECK(a(i, j) <= 2);
      CHECK(Rational(a(i, j) * (1 << 20)).get_den() == 1);
    }
  }
  CHECK(a.satisfies_triangle_inequality());
  for (std::uint64_t s = 1; s <= 5; ++s) {
    const auto row = run_pipeline(generate_instance("random-metric", {5, s}), {}).row;
    CHECK(row.phi_prime == 42);
    CHECK(row.m_bar == 16);
  }
}

TEST_CASE("first random draw is pinned") {
  // SplitMix64(1).next() = 0x910a2dec89025cc1; 2^20 + 1 = 1048577
  const std::uint64_t first = 0x910a2dec89025cc1ULL;
  const auto m = random_metric(3, 1);
  CHECK(m(1, 2) == 1 + make_rational(static_cast<long>(first % 1048577ULL), 1L << 20));
}

TEST_CASE("tight span rows") {
  const auto h = tight_span_hrep(thrackle_metric(3));
  CHECK(h.rows.size() == 6);
  CHECK(h.rows[0].a == vec({-2, 0, 0}));
  CHECK(h.rows[0].b == 0);
  CHECK(run_pipeline({"t4", tight_span_hrep(thrackle_metric(4))}, {}).row.m_bar == 11);
}

TEST_CASE("scaling a metric keeps the face counts") {
  for (std::uint64_t s = 1; s <= 3; ++s) {
    const auto m = random_metric(5, s);
    const auto base = run_pipeline({"a", tight_span_hrep(m)}, {}).row;
    const auto scaled = run_pipeline({"b", tight_span_hrep(m.scaled(Rational(7, 3)))}, {}).row;
    CHECK(base.phi_prime == scaled.phi_prime);
    CHECK(base.n_bar == scaled.n_bar);
    CHECK(base.alpha == scaled.alpha);
  }
}

TEST_CASE("tropical matrices") {
  const auto c = cyclic_matrix(3, 3);
  CHECK(c.v == Matrix{{1, 2, 3}, {2, 4, 6}, {3, 6, 9}});
  const auto p = permutohedron_matrix(3);
  CHECK(p.s == 6);
  CHECK(p.v.row_vector(0) == vec({0, 1, 2}));
  CHECK(p.v.row_vector(5) == vec({2, 1, 0}));
  CHECK_THROWS_AS(permutohedron_matrix(9), Error);

  const auto h = tropical_hrep(c);
  CHECK(h.dim == 5);
  CHECK(h.rows.size() == 9);
  const auto row = run_pipeline({"c33", h}, {}).row;
  CHECK(row.m_bar == 10);
  CHECK(row.phi_prime == 14);
  CHECK(run_pipeline(generate_instance("tropical-cyclic", {4, 4}), {}).row.phi_prime == 64);
  const auto perm = run_pipeline(generate_instance("tropical-permutohedron", {3}), {}).row;
  CHECK(perm.d == 8);
  CHECK(perm.m_bar == 19);
  CHECK(perm.phi_prime == 50);
}

TEST_CASE("tropical polyhedra are nonempty") {
  for (auto [s, t] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 4}, {5, 3}}) {
    const auto h = tropical_hrep(cyclic_matrix(s, t));
    Vector low(h.dim, Rational(-100));
    for (std::size_t k = 0; k + 1 < t; ++k) low[s + k] = 0;
    for (const auto& r : h.rows) CHECK(dot(r.a, low) <= r.b);
  }
}

TEST_CASE("generate_instance rejects bad input") {
  CHECK_THROWS_AS(generate_instance("nope", {3}), Error);
  CHECK_THROWS_AS(generate_instance("thrackle", {}), Error);
  CHECK_THROWS_AS(generate_instance("random-metric", {5}), Error);
}
