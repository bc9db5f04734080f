#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "residua/integer.hpp"

namespace residua {

enum class Verdict { pass, fail, inconclusive };

std::string_view verdict_name(Verdict v);

// Outcome of a necessary-condition test. A fail is a certificate that the
// inputs cannot describe an invariant algebraic solution; a pass proves nothing.
struct CheckReport {
  std::string check_name;
  Verdict verdict = Verdict::inconclusive;
  std::vector<std::pair<std::string, Integer>> witness;
  std::vector<std::string> notes;

  const Integer* find(std::string_view key) const;
};

// mu - (-1)^n chi must vanish mod k.
CheckReport congruence_check(int n, const Integer& k, const Integer& chi, const Integer& mu_total);

// X^n + b_{n-1} X^{n-1} + ... + b_0, which has the degree of every invariant
// hypersurface with the given (chi, mu) as a root.
struct AdjunctionPolynomial {
  std::vector<Integer> coeffs;  // coeffs[i] multiplies X^i

  Integer evaluate(const Integer& x) const;
  std::string to_string() const;
};

AdjunctionPolynomial adjunction_polynomial(int n, const Integer& chi, const Integer& mu_total);
CheckReport polynomial_root_check(int n, const Integer& k, const Integer& chi, const Integer& mu_total);

CheckReport min_degree_check(bool irreducible, bool has_singularity, const Integer& curve_degree);

// 2k - k^2 + dk + mu
Integer schwartz_sum(const Integer& curve_degree, const Integer& foliation_degree, const Integer& mu_total);

struct CurveFoliationData {
  Integer foliation_degree = 0;
  Integer curve_degree = 1;
  std::optional<Integer> num_sing_points;
  std::optional<Integer> mu_total;
  std::optional<Integer> chi;
  bool irreducible = true;
  bool nodal_only = false;
  bool non_dicritical = false;
};

CheckReport sing_count_bound(const CurveFoliationData& data);

}  // namespace residua
