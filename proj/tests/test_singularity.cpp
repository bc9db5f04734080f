#include <doctest.h>

#include "residua/chern.hpp"
#include "residua/errors.hpp"
#include "residua/singularity.hpp"

using namespace residua;

namespace {

std::vector<Integer> ints(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

Integer ipow(const Integer& b, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

// Classical Euler characteristic of a smooth degree-d hypersurface in P^n:
// ((1-d)^{n+1} - 1)/d + n + 1.
Integer hypersurface_euler(int n, long d) {
  Integer num = ipow(Integer(1 - d), static_cast<unsigned long>(n + 1)) - 1;
  return num / d + n + 1;
}

// Genus formula for a smooth plane curve of degree d: chi = 2 - 2g = 3d - d^2.
Integer plane_curve_euler(long d) { return 3 * d - d * d; }

}  // namespace

TEST_CASE("Parusinski global invariant") {
  CHECK(parusinski_global(2, 2) == 1);
  CHECK(parusinski_global(4, 2) == 1);
  CHECK(parusinski_global(2, 1) == 1);
  CHECK_THROWS_AS(parusinski_global(0, 2), InvalidInput);
  CHECK_THROWS_AS(parusinski_global(2, 0), InvalidInput);
  // conic as two lines: sum mu = 1, chi = 3
  CHECK(parusinski_global(2, 2) == 1 - 3 + 3);
}

TEST_CASE("adjunction Euler characteristic") {
  CHECK(adjunction_euler(2, 2, 1) == 3);
  CHECK(adjunction_euler(2, 3, 0) == 0);
  CHECK(adjunction_euler(4, 2, 1) == 5);
  CHECK(adjunction_ring_term(4, 2) == 4);
  CHECK_THROWS_AS(adjunction_euler(1, 2, 0), InvalidInput);
  CHECK_THROWS_AS(adjunction_euler(2, 0, 0), InvalidInput);
  CHECK_THROWS_AS(adjunction_euler(2, 2, -1), InvalidInput);
  for (long d = 1; d <= 8; ++d) CHECK(adjunction_euler(2, d, 0) == plane_curve_euler(d));
  for (int n = 2; n <= 8; ++n)
    for (long d = 1; d <= 6; ++d) REQUIRE(adjunction_euler(n, d, 0) == hypersurface_euler(n, d));
}

TEST_CASE("Euler characteristic of complete intersections") {
  CHECK(euler_ci(2, ints({1})) == 2);
  CHECK(euler_ci(2, ints({3})) == 0);
  CHECK(euler_ci(3, ints({2})) == 4);
  CHECK(euler_ci(3, ints({3})) == 9);
  CHECK(euler_ci(3, ints({4})) == 24);
  CHECK(euler_ci(4, ints({2, 2})) == 8);
  CHECK(euler_ci(5, {}) == 6);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<Integer> lin(static_cast<std::size_t>(k), Integer(1));
      REQUIRE(euler_ci(n, lin) == n - k + 1);
      REQUIRE(euler_ci_multiindex(n, lin) == n - k + 1);
    }
  for (int n = 1; n <= 7; ++n)
    for (long d = 1; d <= 5; ++d) {
      REQUIRE(euler_ci(n, ints({d})) == hypersurface_euler(n, d));
      REQUIRE(euler_ci_multiindex(n, ints({d})) == hypersurface_euler(n, d));
    }
  // a curve (2,2,2) in P^4? no: (2,2) in P^3 is an elliptic quartic curve
  CHECK(euler_ci(3, ints({2, 2})) == 0);
  // points: a complete intersection of n hypersurfaces is prod d points
  CHECK(euler_ci(3, ints({2, 3, 5})) == 30);
  CHECK_THROWS_AS(euler_ci(2, ints({1, 1, 1})), InvalidInput);
  CHECK_THROWS_AS(euler_ci(2, ints({0})), InvalidInput);
  CHECK_THROWS_AS(euler_ci_multiindex(0, {}), InvalidInput);
}

TEST_CASE("StratumSpec validation") {
  CHECK_NOTHROW(StratumSpec{4, ints({1, 1}), 2, 1}.validate());
  CHECK_THROWS_AS((StratumSpec{3, ints({1, 1, 1}), 2, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((StratumSpec{3, {}, 2, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((StratumSpec{3, ints({0}), 2, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((StratumSpec{3, ints({1}), 0, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((StratumSpec{3, ints({1}), 2, -1}.validate()), InvalidInput);
}

TEST_CASE("Milnor number of a stratum") {
  const StratumSpec p4{4, ints({1, 1}), 2, 1};
  CHECK(milnor_stratum_ring(p4) == 1);
  CHECK(milnor_stratum_multiindex(p4) == 1);
  // independent: c_2(T^v P^2 (x) O(2)) on the plane S
  CHECK(integrate(top_chern_dual_tensor_line(tangent_projective(2), line_bundle(2, 2))) == 1);
  // the e_1^i misreading reproduces the printed 0
  CHECK(milnor_stratum_linear_deg_variant(p4) == 0);

  const StratumSpec line_in_p3{3, ints({1, 1}), 2, 1};
  CHECK(milnor_stratum_ring(line_in_p3) == 0);
  CHECK(milnor_stratum_multiindex(line_in_p3) == 0);
  CHECK(milnor_curve_case(line_in_p3) == 0);

  const StratumSpec cubic{3, ints({1, 1}), 3, 2};
  CHECK(milnor_stratum_ring(cubic) == 2);
  CHECK(milnor_stratum_multiindex(cubic) == 2);
  CHECK(milnor_curve_case(cubic) == 2);

  CHECK(milnor_curve_case(StratumSpec{4, ints({1, 1, 1}), 2, 1}) == 0);
  CHECK(milnor_stratum_multiindex(StratumSpec{5, ints({2, 3}), 4, 0}) == 0);
  CHECK_THROWS_AS(milnor_curve_case(p4), InvalidInput);

  // curve case written as mu * prod d * (sum d + d - (n+1))
  for (int n = 2; n <= 6; ++n)
    for (long d = 1; d <= 4; ++d)
      for (long a = 1; a <= 3; ++a) {
        std::vector<Integer> degs(static_cast<std::size_t>(n - 1), Integer(1));
        degs[0] = a;
        StratumSpec s{n, degs, d, 1};
        REQUIRE(milnor_curve_case(s) == a * (a + (n - 2) + d - (n + 1)));
        REQUIRE(milnor_stratum_ring(s) == milnor_curve_case(s));
      }
}

TEST_CASE("Milnor oracle pair on a grid") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n - 1; ++k) {
      std::vector<Integer> degs(static_cast<std::size_t>(k), Integer(1));
      while (true) {
        for (long d = 1; d <= 3; ++d)
          for (long mu = 0; mu <= 2; ++mu) {
            StratumSpec s{n, degs, d, mu};
            REQUIRE(milnor_stratum_ring(s) == milnor_stratum_multiindex(s));
          }
        std::size_t i = 0;
        for (; i < degs.size(); ++i) {
          if (degs[i] < 3) {
            ++degs[i];
            break;
          }
          degs[i] = 1;
        }
        if (i == degs.size()) break;
      }
    }
}

TEST_CASE("Parusinski closure for hypersurfaces singular along two hyperplanes") {
  for (int n = 3; n <= 9; ++n) {
    const StratumSpec s{n, ints({1, 1}), 2, 1};
    const Integer mu = milnor_stratum_ring(s);
    const Integer chi = adjunction_euler(n, 2, mu);
    CHECK(mu + sign_pow(n) * (n + 1) - sign_pow(n) * chi == parusinski_global(n, 2));
    // D = two hyperplanes meeting in a P^{n-2}
    CHECK(chi == 2 * (n) - (n - 1));
  }
}
