#include <doctest.h>

#include <random>
#include <set>

#include "residua/chern.hpp"
#include "residua/errors.hpp"

using namespace residua;

namespace {

GradedClass cls(int n, std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return make_class(n, std::move(v));
}

std::vector<Integer> ints(std::initializer_list<long> c) { return {c.begin(), c.end()}; }

// e_m by summing over every m-subset (bitmask enumeration).
Integer esym_brute(const std::vector<Integer>& v, int m) {
  Integer total = 0;
  const unsigned size = static_cast<unsigned>(v.size());
  for (unsigned mask = 0; mask < (1U << size); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    Integer p = 1;
    for (unsigned i = 0; i < size; ++i)
      if (mask & (1U << i)) p *= v[i];
    total += p;
  }
  return total;
}

// Compositions of j from subsets of the j-1 cut points.
std::set<std::vector<int>> compositions_brute(int j) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1U << (j - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int cut = 0; cut < j - 1; ++cut) {
      if (mask & (1U << cut)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.insert(parts);
  }
  return out;
}

}  // namespace

TEST_CASE("tangent bundle of projective space") {
  CHECK(tangent_projective(2).total_chern() == cls(2, {1, 3, 3}));
  CHECK(tangent_projective(4).total_chern() == cls(4, {1, 5, 10, 10, 5}));
  CHECK(tangent_projective(1).total_chern() == cls(1, {1, 2}));
  CHECK(tangent_projective(3).rank() == 3);
  CHECK_THROWS_AS(tangent_projective(0), InvalidInput);
}

TEST_CASE("line bundles and sums of lines") {
  CHECK(line_bundle(2, 4).total_chern() == cls(2, {1, 4}));
  CHECK(line_bundle(3, 0).total_chern() == GradedClass::one(3));
  CHECK(line_bundle(3, -2).total_chern() == cls(3, {1, -2}));
  CHECK(line_bundle(0, 5).total_chern() == GradedClass::one(0));

  auto two_planes = direct_sum_of_lines(4, ints({1, 1}));
  CHECK(two_planes.rank() == 2);
  CHECK(two_planes.total_chern() == cls(4, {1, 2, 1}));
  CHECK(direct_sum_of_lines(3, ints({2, 3})).total_chern() == cls(3, {1, 5, 6}));
  auto empty = direct_sum_of_lines(5, {});
  CHECK(empty.rank() == 0);
  CHECK(empty.total_chern() == GradedClass::one(5));
}

TEST_CASE("constant term of a total Chern class must be 1") {
  CHECK_THROWS_AS(FormalBundle(1, cls(2, {2, 1})), InvalidInput);
}

TEST_CASE("dual") {
  CHECK(dual(tangent_projective(2)).total_chern() == cls(2, {1, -3, 3}));
  auto e = direct_sum_of_lines(5, ints({2, -1, 3}));
  CHECK(dual(dual(e)) == e);
  CHECK(dual(line_bundle(4, 7)) == line_bundle(4, -7));
  auto t = tangent_projective(5);
  CHECK(dual(direct_sum(e, t)) == direct_sum(dual(e), dual(t)));
}

TEST_CASE("virtual difference") {
  auto ts = virtual_difference(tangent_projective(4), direct_sum_of_lines(4, ints({1, 1})));
  CHECK(ts.total_chern() == cls(4, {1, 3, 3, 1, 0}));
  CHECK(ts.rank() == 2);
  CHECK(mul(ts.total_chern(), direct_sum_of_lines(4, ints({1, 1})).total_chern()) ==
        tangent_projective(4).total_chern());

  auto e = direct_sum_of_lines(3, ints({2, 5}));
  CHECK(virtual_difference(e, direct_sum_of_lines(3, {})).total_chern() == e.total_chern());

  auto cubic = virtual_difference(tangent_projective(2), line_bundle(2, 3));
  CHECK(cubic.total_chern()[1] == 0);
  CHECK_THROWS_AS(virtual_difference(tangent_projective(2), line_bundle(3, 1)), DimensionMismatch);
}

TEST_CASE("top Chern class of a dual bundle twisted by a line bundle") {
  // Oracle: c_r(E^v (x) L) = sum_j (-1)^j c_j(E) d^{r-j}, expanded by hand from binomials.
  auto oracle = [](int n, long d) {
    Integer acc = 0;
    std::vector<Integer> dpow{1};
    for (int i = 1; i <= n; ++i) dpow.push_back(dpow.back() * d);
    for (int j = 0; j <= n; ++j) acc += (j % 2 ? -1 : 1) * binomial(n + 1, j) * dpow[static_cast<std::size_t>(n - j)];
    return acc;
  };
  CHECK(top_chern_dual_tensor_line(tangent_projective(2), line_bundle(2, 2)) == cls(2, {0, 0, 1}));
  CHECK(top_chern_dual_tensor_line(tangent_projective(4), line_bundle(4, 2)) == cls(4, {0, 0, 0, 0, 1}));
  for (int n = 1; n <= 7; ++n)
    for (long d = -3; d <= 5; ++d)
      CHECK(integrate(top_chern_dual_tensor_line(tangent_projective(n), line_bundle(n, d))) == oracle(n, d));

  auto e = tangent_projective(3);
  CHECK(top_chern_dual_tensor_line(e, line_bundle(3, 0)) == degree_part(dual(e).total_chern(), 3));
  CHECK(top_chern_dual_tensor_line(direct_sum_of_lines(3, ints({2})), line_bundle(3, 0)) == cls(3, {0, -2}));

  CHECK_THROWS_AS(top_chern_dual_tensor_line(direct_sum_of_lines(2, ints({1, 1, 1})), line_bundle(2, 1)),
                  InvalidInput);
  CHECK_THROWS_AS(top_chern_dual_tensor_line(tangent_projective(2), direct_sum_of_lines(2, ints({1, 1}))),
                  InvalidInput);
}

TEST_CASE("elementary symmetric polynomials against subset enumeration") {
  CHECK(elementary_symmetric(ints({1, 2, 3}), 2) == 11);
  CHECK(elementary_symmetric(ints({4, 9}), 0) == 1);
  CHECK(elementary_symmetric({}, 0) == 1);
  CHECK(elementary_symmetric(ints({5}), 3) == 0);
  CHECK_THROWS_AS(elementary_symmetric(ints({5}), -1), InvalidInput);
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> val(-6, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> v;
    const int len = trial % 9;
    for (int i = 0; i < len; ++i) v.emplace_back(val(rng));
    for (int m = 0; m <= len + 1; ++m) REQUIRE(elementary_symmetric(v, m) == esym_brute(v, m));
  }
}

TEST_CASE("compositions") {
  auto one = enumerate_multiindices(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts == std::vector<int>{1});

  std::set<std::vector<int>> three;
  for (const auto& L : enumerate_multiindices(3)) three.insert(L.parts);
  CHECK(three == std::set<std::vector<int>>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});

  CHECK(enumerate_multiindices(5).size() == 16);
  for (int j = 1; j <= 10; ++j) {
    auto all = enumerate_multiindices(j);
    std::set<std::vector<int>> got;
    for (const auto& L : all) {
      REQUIRE(L.weight() == j);
      for (int p : L.parts) REQUIRE(p >= 1);
      got.insert(L.parts);
    }
    REQUIRE(got.size() == all.size());
    REQUIRE(got == compositions_brute(j));
    REQUIRE(all.size() == (std::size_t{1} << (j - 1)));
  }
  CHECK_THROWS_AS(enumerate_multiindices(0), InvalidInput);
}

TEST_CASE("inverse Chern class by multi-index expansion") {
  CHECK(inverse_total_chern_multiindex(line_bundle(4, 2), 3) == cls(4, {0, 0, 0, -8}));
  CHECK(inverse_total_chern_multiindex(line_bundle(4, 2), 0) == GradedClass::one(4));
  CHECK(inverse_total_chern_multiindex(direct_sum_of_lines(4, ints({1, 1})), 2) == cls(4, {0, 0, 3}));
  CHECK(inverse_total_chern_multiindex(line_bundle(3, 2), 5).is_zero());

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<Integer> c{1};
      for (int i = 1; i <= n; ++i) c.emplace_back(coef(rng));
      FormalBundle e(0, make_class(n, c), true);
      auto inv = invert(e.total_chern());
      for (int j = 0; j <= n; ++j) REQUIRE(inverse_total_chern_multiindex(e, j) == degree_part(inv, j));
    }
  }
}
