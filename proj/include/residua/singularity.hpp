#pragma once

#include <span>
#include <string>
#include <vector>

#include "residua/integer.hpp"

namespace residua {

// One connected singular stratum S of a degree-d hypersurface D in P^n, with
// S a smooth complete intersection of multidegree (d_1..d_k), k <= n-1, and
// transversal Milnor number mu constant along S.
struct StratumSpec {
  int ambient_dim = 0;
  std::vector<Integer> stratum_degrees;
  Integer hypersurface_degree = 1;
  Integer transversal_mu = 0;

  int codim() const { return static_cast<int>(stratum_degrees.size()); }
  // Throws InvalidInput on a violated invariant.
  void validate() const;
};

// [P^n] cap c_n(T^dual P^n (x) O(d)).
Integer parusinski_global(int n, const Integer& d);

// [D] cap c_{n-1}(TP^n - O(d)), the smooth part of the adjunction formula.
Integer adjunction_ring_term(int n, const Integer& d);

// chi(D) = [D] cap c_{n-1}(TP^n - O(d)) - (-1)^{n-1} mu_total.
Integer adjunction_euler(int n, const Integer& d, const Integer& mu_total);

Integer milnor_stratum_ring(const StratumSpec& s);
Integer milnor_stratum_multiindex(const StratumSpec& s);
// Only for curve strata (k = n-1): mu (prod d_l * d - chi(S)).
Integer milnor_curve_case(const StratumSpec& s);

// Same multi-index sum as milnor_stratum_multiindex but with deg_L(S) taken as
// e_1(d)^{len L}. Used only to explain a known misprint in the literature.
Integer milnor_stratum_linear_deg_variant(const StratumSpec& s);

// Euler characteristic of a smooth complete intersection in P^n.
Integer euler_ci(int n, std::span<const Integer> degrees);
Integer euler_ci_multiindex(int n, std::span<const Integer> degrees);

}  // namespace residua
