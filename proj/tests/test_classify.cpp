#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hyperfan/classify.hpp"
#include "hyperfan/exceptional.hpp"
#include "hyperfan/matrix_id.hpp"

using namespace hyperfan;

namespace {

// brute-force orbit {±k^±1 mod n} by direct enumeration
std::set<std::int64_t> orbit_oracle(std::int64_t n, std::int64_t k) {
  std::set<std::int64_t> orbit;
  for (std::int64_t r = 0; r < n; ++r) {
    if (mod_pos(r - k, n) == 0 || mod_pos(r + k, n) == 0 ||
        mod_pos(r * k - 1, n) == 0 || mod_pos(r * k + 1, n) == 0)
      orbit.insert(r);
  }
  return orbit;
}

// interior lattice points of the (n,k) parallelogram, counted directly
int interior_count_oracle(std::int64_t n, std::int64_t k) {
  int count = 0;
  for (std::int64_t x = -n; x <= 2 * n; ++x) {
    for (std::int64_t y = -n; y <= 2 * n; ++y) {
      // strictly between the lines y=0, y=n, x = k y / n, x = 1 + k y / n
      if (y <= 0 || y >= n) continue;
      if (n * x <= k * y) continue;
      if (n * x >= n + k * y) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("canonical_form pinned examples") {
  HyperconifoldClass c = canonical_form(5, 3);
  CHECK(c.k == 2);
  CHECK(c.orbit == std::vector<std::int64_t>{2, 3});

  HyperconifoldClass c85 = canonical_form(8, 5);
  CHECK(c85.k == 3);
  CHECK(c85.orbit == std::vector<std::int64_t>{3, 5});
  CHECK_FALSE(c85 == canonical_form(8, 1));
  CHECK(canonical_form(8, 1).orbit == std::vector<std::int64_t>{1, 7});

  HyperconifoldClass coni = canonical_form(1, 0);
  CHECK(coni.is_conifold());
  CHECK(coni.orbit == std::vector<std::int64_t>{0});

  CHECK_THROWS_AS(canonical_form(6, 2), InvalidInputError);
}

TEST_CASE("canonical_form orbit matches the brute-force oracle") {
  for (std::int64_t n = 2; n <= 50; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      if (gcd64(k, n) != 1) continue;
      HyperconifoldClass c = canonical_form(n, k);
      std::set<std::int64_t> expect = orbit_oracle(n, k);
      CHECK(std::set<std::int64_t>(c.orbit.begin(), c.orbit.end()) == expect);
      CHECK(c.k == *expect.begin());
      CHECK(canonical_form(n, n - k) == c);
      CHECK(canonical_form(n, mod_inverse(k, n)) == c);
    }
  }
}

TEST_CASE("validate_weights") {
  auto c = validate_weights(5, {1, 2, 3, 4});
  REQUIRE(c.has_value());
  CHECK(c->n == 5);
  CHECK(c->k == 2);

  CHECK_FALSE(validate_weights(4, {1, 2, 2, 3}).has_value());  // gcd(2,4) != 1
  CHECK_FALSE(validate_weights(6, {1, 2, 3, 5}).has_value());  // a2+a3 != 0 mod 6
  CHECK_THROWS_AS(validate_weights(0, {0, 0, 0, 0}), InvalidInputError);

  // the theorem's normal form always validates and round-trips
  for (std::int64_t n = 1; n <= 20; ++n) {
    for (std::int64_t k = (n == 1 ? 0 : 1); k < std::max<std::int64_t>(n, 1); ++k) {
      if (n > 1 && gcd64(k, n) != 1) continue;
      auto cls = validate_weights(n, {1, k, mod_pos(n - k, n), mod_pos(n - 1, n)});
      REQUIRE(cls.has_value());
      CHECK(*cls == canonical_form(n, k));
      // Gorenstein comes for free: weights sum to 0 mod n
      CHECK(mod_pos(1 + k + (n - k) + (n - 1), n) == 0);
    }
  }
}

TEST_CASE("lens_equivalent") {
  CHECK(lens_equivalent(7, 2, 3));   // 2^-1 = 4, orbit {2,3,4,5}
  CHECK_FALSE(lens_equivalent(7, 1, 2));
  CHECK(lens_equivalent(9, 4, 4));
  CHECK_THROWS_AS(lens_equivalent(6, 2, 1), InvalidInputError);
}

TEST_CASE("lens_equivalent is an equivalence relation") {
  for (std::int64_t n = 2; n <= 30; ++n) {
    std::vector<std::int64_t> units;
    for (std::int64_t k = 1; k < n; ++k)
      if (gcd64(k, n) == 1) units.push_back(k);
    for (std::int64_t a : units) {
      CHECK(lens_equivalent(n, a, a));
      for (std::int64_t b : units) {
        CHECK(lens_equivalent(n, a, b) == lens_equivalent(n, b, a));
        for (std::int64_t c : units) {
          if (lens_equivalent(n, a, b) && lens_equivalent(n, b, c))
            CHECK(lens_equivalent(n, a, c));
        }
      }
    }
  }
}

TEST_CASE("diagram_of") {
  ToricDiagram d10 = diagram_of(1, 0);
  CHECK(d10.polygon.size() == 4);
  CHECK(d10.count(PointKind::Interior) == 0);
  CHECK(d10.lattice_area_twice() == 2);

  ToricDiagram d52 = diagram_of(5, 2);
  CHECK(d52.polygon.size() == 4);
  CHECK(d52.count(PointKind::Interior) == 4);
  CHECK(d52.count(PointKind::Vertex) == 4);
  CHECK(d52.count(PointKind::Boundary) == 0);
  CHECK(d52.lattice_area_twice() == 10);

  ToricDiagram d31 = diagram_of(3, 1);
  CHECK(d31.count(PointKind::Interior) == 2);

  CHECK_THROWS_AS(diagram_of(6, 3), InvalidInputError);
  CHECK_THROWS_AS(diagram_of(5, 0), InvalidInputError);

  for (std::int64_t n = 1; n <= 12; ++n) {
    for (std::int64_t k = (n == 1 ? 0 : 1); k < std::max<std::int64_t>(n, 1); ++k) {
      if (n > 1 && gcd64(k, n) != 1) continue;
      ToricDiagram d = diagram_of(n, k);
      CHECK(d.lattice_area_twice() == 2 * n);
      CHECK(static_cast<int>(d.count(PointKind::Interior)) == interior_count_oracle(n, k));
      CHECK(d.count(PointKind::Boundary) == 0);
    }
  }
}

TEST_CASE("matrix action identity") {
  CHECK(verify_matrix_action(5, 2));
  CHECK(verify_matrix_action(7, 1));  // right factor is the identity for k = 1
  CHECK(verify_matrix_action(2, 1));
  for (std::int64_t n = 1; n <= 20; ++n)
    for (std::int64_t k = (n == 1 ? 0 : 1); k < std::max<std::int64_t>(n, 1); ++k)
      if (n == 1 || gcd64(k, n) == 1) CHECK(verify_matrix_action(n, k));
}

TEST_CASE("identify_from_matrix on the linearized Z10 action") {
  Mat4 m;
  m << 0, -1, 0, 0,
       0, 0, -1, 0,
       0, 0, 0, -1,
       1, 1, 1, 1;
  MatrixIdentification id = identify_from_matrix(m);
  CHECK(id.order == 10);
  CHECK(id.exponents == std::array<std::int64_t, 4>{1, 3, 7, 9});
  CHECK(id.cls == canonical_form(10, 3));
}

TEST_CASE("identify_from_matrix rejects the identity and infinite order") {
  CHECK_THROWS_AS(identify_from_matrix(Mat4::Identity()), InvalidInputError);
  Mat4 shear = Mat4::Identity();
  shear(0, 1) = 1;
  CHECK_THROWS_AS(identify_from_matrix(shear, 200), InvalidInputError);
}

TEST_CASE("identify_from_matrix rejects non-isolated spectra") {
  // order 6 with weights (1,2,4,5): gcd(2,6) != 1 breaks isolation
  auto m = companion_matrix(6, {1, 2, 4, 5});
  REQUIRE(m.has_value());
  CHECK_THROWS_AS(identify_from_matrix(*m), InvalidInputError);
}

TEST_CASE("companion matrix pipeline") {
  auto m5 = companion_matrix(5, {1, 2, 3, 4});
  REQUIRE(m5.has_value());
  MatrixIdentification id = identify_from_matrix(*m5);
  CHECK(id.cls == canonical_form(5, 2));

  // round-trip over every representable class with n <= 12
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      if (gcd64(k, n) != 1) continue;
      auto m = companion_matrix(n, {1, k, mod_pos(n - k, n), mod_pos(n - 1, n)});
      if (!m.has_value()) continue;  // spectrum not Galois-closed: no integer matrix exists
      MatrixIdentification rid = identify_from_matrix(*m);
      CHECK(rid.order == n);
      CHECK(rid.cls == canonical_form(n, k));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<Integer>{1, 1, 1, 1, 1});
  CHECK(cyclotomic_polynomial(10) == std::vector<Integer>{1, -1, 1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("exceptional scan finds exactly the order-4 exchange action") {
  std::vector<ExchangeAction> actions = exceptional_scan(20);
  REQUIRE(actions.size() == 1);
  const ExchangeAction& a = actions[0];
  CHECK(a.n == 2);
  CHECK(a.k == 0);
  CHECK(a.order == 4);
  CHECK(a.p_phase == -1);
  CHECK(a.omega_phase == 1);
  CHECK(a.map_text == "(y1,y2,y3,y4) -> (i*y1, y3, -y2, i*y4)");
  CHECK_THROWS_AS(exceptional_scan(1), InvalidInputError);
}
