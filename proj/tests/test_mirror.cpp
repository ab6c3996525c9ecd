#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyperfan/mirror.hpp"

using namespace hyperfan;

namespace {
MirrorGeometry geom(std::int64_t n, std::int64_t k) {
  return mirror_polynomial(HyperconifoldClass{n, k, {}});
}
}  // namespace

TEST_CASE("mirror polynomial instances") {
  MirrorGeometry coni = geom(1, 0);
  REQUIRE(coni.f.size() == 4);  // 1 + x + y + x y
  std::vector<std::pair<std::int64_t, std::int64_t>> exps;
  for (const LaurentTerm& t : coni.f) exps.emplace_back(t.ex, t.ey);
  CHECK(exps == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  MirrorGeometry g31 = geom(3, 1);
  exps.clear();
  for (const LaurentTerm& t : g31.f) exps.emplace_back(t.ex, t.ey);
  CHECK(exps == std::vector<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 0}, {1, 3}, {2, 3}});
  for (const LaurentTerm& t : g31.f) CHECK(t.coeff == 1);
}

TEST_CASE("mirror node certificates at small n") {
  auto nodes21 = mirror_nodes(geom(2, 1));
  REQUIRE(nodes21.size() == 2);
  // y^2 = (-1)^2 = 1: y in {1, -1}
  CHECK(nodes21[0].y_turns == Rational(0));
  CHECK(nodes21[1].y_turns == Rational(1, 2));

  auto nodes31 = mirror_nodes(geom(3, 1));
  REQUIRE(nodes31.size() == 3);
  for (const auto& c : nodes31) {
    // y^3 = 1: thirds of a turn
    CHECK(denominator(Rational(c.y_turns * 3)) == 1);
  }
}

TEST_CASE("nodes are distinct and nondegenerate up to n = 12") {
  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = (n == 1 ? 0 : 1); k < std::max<std::int64_t>(n, 1); ++k) {
      if (n > 1 && gcd64(k, n) != 1) continue;
      auto nodes = mirror_nodes(geom(n, k));
      CHECK(static_cast<std::int64_t>(nodes.size()) == n);
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        CHECK(nodes[i].exact_residuals);
        CHECK(nodes[i].nondegenerate);
        CHECK(std::abs(nodes[i].hessian_det) > 1e-6);
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
          CHECK(nodes[i].y_turns != nodes[j].y_turns);
          CHECK(std::abs(nodes[i].y - nodes[j].y) > 1e-6);
        }
      }
    }
  }
}

TEST_CASE("Hessian magnitude is n^2 for the vertex polynomial") {
  // det H = n^2 / y^2 at each node, |y| = 1
  for (std::int64_t n : {1, 2, 5, 10}) {
    std::int64_t k = n <= 2 ? n - 1 : (n == 5 ? 2 : 3);
    if (n == 1) k = 0;
    for (const auto& c : mirror_nodes(geom(n, k))) {
      CHECK(std::abs(std::abs(c.hessian_det) - static_cast<double>(n * n)) < 1e-6);
    }
  }
}

TEST_CASE("numeric node search cross-validates the certificates") {
  auto s21 = independent_node_search(geom(2, 1), 32);
  CHECK(s21.size() == 2);
  auto s10 = independent_node_search(geom(1, 0), 32);
  CHECK(s10.size() == 1);
  auto s52 = independent_node_search(geom(5, 2), 64);
  CHECK(s52.size() == 5);

  for (std::int64_t n = 1; n <= 6; ++n) {
    for (std::int64_t k = (n == 1 ? 0 : 1); k < std::max<std::int64_t>(n, 1); ++k) {
      if (n > 1 && gcd64(k, n) != 1) continue;
      MirrorGeometry g = geom(n, k);
      auto clusters = independent_node_search(g, 32);
      auto certs = mirror_nodes(g);
      REQUIRE(clusters.size() == certs.size());
      // every cluster sits at x = -1 with y one of the certified roots
      for (const auto& z : clusters) {
        CHECK(std::abs(z[0] - std::complex<double>(-1.0, 0.0)) < 1e-6);
        bool matched = false;
        for (const auto& c : certs)
          if (std::abs(z[1] - c.y) < 1e-6) matched = true;
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("grid precondition") {
  CHECK_THROWS_AS(independent_node_search(geom(2, 1), 8), InvalidInputError);
}
