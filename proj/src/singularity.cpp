#include "residua/singularity.hpp"

#include <functional>

#include "residua/chern.hpp"
#include "residua/errors.hpp"
#include "residua/ring.hpp"

namespace residua {

namespace {

void check_positive(const Integer& d, const char* what) {
  if (d < 1) throw InvalidInput(std::string(what) + " must be positive, got " + d.get_str());
}

void check_ci(int n, std::span<const Integer> degrees) {
  if (n < 1) throw InvalidInput("ambient dimension must be at least 1, got " + std::to_string(n));
  if (degrees.size() > static_cast<std::size_t>(n)) {
    throw InvalidInput("complete intersection of " + std::to_string(degrees.size()) + " hypersurfaces in P^" +
                       std::to_string(n));
  }
  for (const auto& d : degrees) check_positive(d, "hypersurface degree");
}

Integer product(std::span<const Integer> values) {
  Integer p = 1;
  for (const auto& v : values) p *= v;
  return p;
}

Integer int_pow(const Integer& base, int e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

// sum over L in {empty} u compositions(j) of (-1)^{len L} deg(L), with deg
// supplied per part.
Integer signed_composition_sum(int j, const std::function<Integer(int)>& part_weight) {
  if (j == 0) return 1;
  Integer total = 0;
  for (const auto& L : enumerate_multiindices(j)) {
    Integer term = sign_pow(L.length());
    for (int l : L.parts) {
      term *= part_weight(l);
      if (term == 0) break;
    }
    total += term;
  }
  return total;
}

Integer milnor_multiindex_sum(const StratumSpec& s, const std::function<Integer(int)>& part_weight) {
  const int n = s.ambient_dim;
  const int k = s.codim();
  const int dim = n - k;
  Integer acc = 0;
  for (int t = 0; t <= dim; ++t) {
    Integer dt = int_pow(s.hypersurface_degree, t);
    for (int j = 0; j <= dim - t; ++j) {
      Integer inner = signed_composition_sum(j, part_weight);
      if (inner == 0) continue;
      acc += sign_pow(dim - t) * binomial(n + 1, dim - t - j) * inner * dt;
    }
  }
  return s.transversal_mu * product(s.stratum_degrees) * acc;
}

}  // namespace

void StratumSpec::validate() const {
  const int k = codim();
  if (k < 1 || k > ambient_dim - 1) {
    throw InvalidInput("stratum codimension k = " + std::to_string(k) + " must satisfy 1 <= k <= n-1 = " +
                       std::to_string(ambient_dim - 1));
  }
  for (const auto& d : stratum_degrees) check_positive(d, "stratum degree");
  check_positive(hypersurface_degree, "hypersurface degree");
  if (transversal_mu < 0) throw InvalidInput("transversal Milnor number must be non-negative");
}

Integer parusinski_global(int n, const Integer& d) {
  if (n < 1) throw InvalidInput("ambient dimension must be at least 1, got " + std::to_string(n));
  check_positive(d, "hypersurface degree");
  return integrate(top_chern_dual_tensor_line(tangent_projective(n), line_bundle(n, d)));
}

Integer adjunction_ring_term(int n, const Integer& d) {
  const FormalBundle virt = virtual_difference(tangent_projective(n), line_bundle(n, d));
  return integrate(mul(degree_part(virt.total_chern(), n - 1), GradedClass::monomial(n, d, 1)));
}

Integer adjunction_euler(int n, const Integer& d, const Integer& mu_total) {
  if (n < 2) throw InvalidInput("adjunction needs n >= 2, got " + std::to_string(n));
  check_positive(d, "hypersurface degree");
  if (mu_total < 0) throw InvalidInput("total Milnor number must be non-negative, got " + mu_total.get_str());
  return adjunction_ring_term(n, d) - sign_pow(n - 1) * mu_total;
}

Integer milnor_stratum_ring(const StratumSpec& s) {
  s.validate();
  const int n = s.ambient_dim;
  const int k = s.codim();
  const int dim = n - k;
  const FormalBundle normal = direct_sum_of_lines(n, s.stratum_degrees);
  const FormalBundle tangent_s = virtual_difference(tangent_projective(n), normal);
  const GradedClass c1_line = GradedClass::monomial(n, s.hypersurface_degree, 1);
  // c_{dim}(T^dual S (x) L(D)) = sum_t (-1)^{dim-t} c_{dim-t}(TX - N) c_1(L)^t
  GradedClass integrand = GradedClass::zero(n);
  for (int t = 0; t <= dim; ++t) {
    GradedClass term = mul(degree_part(tangent_s.total_chern(), dim - t), pow(c1_line, static_cast<unsigned>(t)));
    integrand = (sign_pow(dim - t) > 0) ? add(integrand, term) : sub(integrand, term);
  }
  integrand = mul(integrand, degree_part(normal.total_chern(), k));
  return s.transversal_mu * integrate(integrand);
}

Integer milnor_stratum_multiindex(const StratumSpec& s) {
  s.validate();
  const auto& degs = s.stratum_degrees;
  return milnor_multiindex_sum(s, [&degs](int l) { return elementary_symmetric(degs, l); });
}

Integer milnor_stratum_linear_deg_variant(const StratumSpec& s) {
  s.validate();
  const Integer e1 = elementary_symmetric(s.stratum_degrees, 1);
  return milnor_multiindex_sum(s, [&e1](int) { return e1; });
}

Integer milnor_curve_case(const StratumSpec& s) {
  s.validate();
  if (s.codim() != s.ambient_dim - 1) {
    throw InvalidInput("curve-case formula needs k = n-1, got k = " + std::to_string(s.codim()) +
                       " in P^" + std::to_string(s.ambient_dim));
  }
  return s.transversal_mu *
         (product(s.stratum_degrees) * s.hypersurface_degree - euler_ci(s.ambient_dim, s.stratum_degrees));
}

Integer euler_ci(int n, std::span<const Integer> degrees) {
  check_ci(n, degrees);
  const int k = static_cast<int>(degrees.size());
  const FormalBundle normal = direct_sum_of_lines(n, degrees);
  const FormalBundle tangent_s = virtual_difference(tangent_projective(n), normal);
  return integrate(mul(degree_part(tangent_s.total_chern(), n - k), degree_part(normal.total_chern(), k)));
}

Integer euler_ci_multiindex(int n, std::span<const Integer> degrees) {
  check_ci(n, degrees);
  const int k = static_cast<int>(degrees.size());
  Integer acc = 0;
  for (int j = 0; j <= n - k; ++j) {
    acc += binomial(n + 1, n - k - j) *
           signed_composition_sum(j, [&degrees](int l) { return elementary_symmetric(degrees, l); });
  }
  return product(degrees) * acc;
}

}  // namespace residua
