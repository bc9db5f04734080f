#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "residua/chern.hpp"
#include "residua/integer.hpp"
#include "residua/ring.hpp"

namespace residua {

// Integer polynomial in the Chern variables c_1..c_k, homogeneous for the
// weighting deg c_i = i.
class SymmetricPolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  SymmetricPolynomial(int num_vars, int weighted_degree);

  // The single variable c_m (m >= 1), or the constant 1 for m == 0.
  static SymmetricPolynomial chern(int m);
  static SymmetricPolynomial c1_power(int m);

  // Parses lines of `coefficient e1 ... ek`; '#' starts a comment. All lines
  // must agree on k and on the weighted degree.
  static SymmetricPolynomial parse(std::string_view text);

  // Adds coeff * c_1^{e_1} ... c_k^{e_k}. Rejects inhomogeneous terms.
  void add_term(const Integer& coeff, Exponents exponents);

  int num_vars() const { return num_vars_; }
  int weighted_degree() const { return degree_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  // Substitutes c_i -> chern[i-1].
  GradedClass evaluate(std::span<const GradedClass> chern, int ambient_dim) const;

  std::string to_string() const;

 private:
  int num_vars_;
  int degree_;
  std::map<Exponents, Integer> terms_;
};

enum class Method { closed_form, ring_integral };

std::string_view method_name(Method m);

struct ResidueResult {
  Integer value;
  Method method;
  int ambient_dim;
  long codim;
  std::vector<Integer> degrees;  // empty for a general bundle
};

// [P^n] cap (phi(N) c_k(N)), evaluated in the ring.
ResidueResult residue_sum_general(int n, const FormalBundle& normal, const SymmetricPolynomial& phi);

using ElementarySymmetricFn = std::function<Integer(std::span<const Integer>, int)>;

// e_{n-k}(d) * prod d.
ResidueResult residue_sum_top_chern(int n, std::span<const Integer> degrees);
ResidueResult residue_sum_top_chern(int n, std::span<const Integer> degrees, const ElementarySymmetricFn& esym);

// (sum d)^{n-k} * prod d.
ResidueResult residue_sum_c1_power(int n, std::span<const Integer> degrees);

// Total Camacho-Sad residue of a foliation along an invariant degree-d
// hypersurface of P^n with Euler characteristic chi and total Milnor number mu.
Integer camacho_sad_total(int n, const Integer& d, const Integer& chi, const Integer& mu_total);

// sum_{j=0}^{n-2} C(n+1, n-1-j) (-1)^{n+j} d^{j+1}
Integer camacho_sad_binomial_part(int n, const Integer& d);

}  // namespace residua
