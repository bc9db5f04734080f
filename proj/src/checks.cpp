#include "residua/checks.hpp"

#include "residua/errors.hpp"

namespace residua {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

const Integer* CheckReport::find(std::string_view key) const {
  for (const auto& [name, value] : witness) {
    if (name == key) return &value;
  }
  return nullptr;
}

CheckReport congruence_check(int n, const Integer& k, const Integer& chi, const Integer& mu_total) {
  if (n < 2) throw InvalidInput("congruence check needs n >= 2, got " + std::to_string(n));
  if (k < 1) throw InvalidInput("hypersurface degree must be positive, got " + k.get_str());
  if (mu_total < 0) throw InvalidInput("total Milnor number must be non-negative");
  CheckReport r;
  r.check_name = "congruence";
  const Integer lhs = mu_total - sign_pow(n) * chi;
  Integer residue;
  mpz_fdiv_r(residue.get_mpz_t(), lhs.get_mpz_t(), k.get_mpz_t());
  r.witness = {{"lhs", lhs}, {"modulus", k}, {"residue", residue}};
  r.verdict = residue == 0 ? Verdict::pass : Verdict::fail;
  if (r.verdict == Verdict::fail) {
    r.notes.push_back("(chi, mu) cannot belong to an invariant hypersurface of degree " + k.get_str());
  }
  return r;
}

Integer AdjunctionPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string AdjunctionPolynomial::to_string() const {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "X";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

AdjunctionPolynomial adjunction_polynomial(int n, const Integer& chi, const Integer& mu_total) {
  if (n < 2) throw InvalidInput("adjunction polynomial needs n >= 2, got " + std::to_string(n));
  if (mu_total < 0) throw InvalidInput("total Milnor number must be non-negative");
  AdjunctionPolynomial p;
  p.coeffs.resize(static_cast<std::size_t>(n) + 1);
  p.coeffs[static_cast<std::size_t>(n)] = 1;
  for (int j = 1; j <= n - 1; ++j) {
    p.coeffs[static_cast<std::size_t>(j)] = -binomial(n + 1, n - j) * sign_pow(n - 1 + j);
  }
  p.coeffs[0] = sign_pow(n) * chi - mu_total;
  return p;
}

CheckReport polynomial_root_check(int n, const Integer& k, const Integer& chi, const Integer& mu_total) {
  if (k < 1) throw InvalidInput("hypersurface degree must be positive, got " + k.get_str());
  const auto p = adjunction_polynomial(n, chi, mu_total);
  CheckReport r;
  r.check_name = "adjunction-polynomial";
  const Integer value = p.evaluate(k);
  r.witness = {{"k", k}, {"P(k)", value}};
  for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.witness.emplace_back("b" + std::to_string(i), p.coeffs[i]);
  r.verdict = value == 0 ? Verdict::pass : Verdict::fail;
  r.notes.push_back("P(X) = " + p.to_string());
  return r;
}

CheckReport min_degree_check(bool irreducible, bool has_singularity, const Integer& curve_degree) {
  CheckReport r;
  r.check_name = "min-degree";
  r.witness = {{"curve_degree", curve_degree}, {"irreducible", irreducible ? 1 : 0},
               {"has_singularity", has_singularity ? 1 : 0}};
  if (irreducible && has_singularity && curve_degree <= 2) {
    r.verdict = Verdict::fail;
    r.notes.push_back("a singular irreducible curve of degree <= 2 cannot be an invariant algebraic solution");
  } else {
    r.verdict = Verdict::pass;
    if (!irreducible && has_singularity && curve_degree <= 2) {
      r.notes.push_back("reducible curve: the degree >= 3 bound does not apply");
    }
  }
  return r;
}

Integer schwartz_sum(const Integer& curve_degree, const Integer& foliation_degree, const Integer& mu_total) {
  const Integer& k = curve_degree;
  return 2 * k - k * k + foliation_degree * k + mu_total;
}

CheckReport sing_count_bound(const CurveFoliationData& data) {
  CheckReport r;
  r.check_name = "sing-count";
  const Integer& k = data.curve_degree;
  const Integer& d = data.foliation_degree;
  r.witness = {{"curve_degree", k}, {"foliation_degree", d}};
  if (k < 1 || d < 0) {
    throw InvalidInput("curve degree must be >= 1 and foliation degree >= 0");
  }
  if (!data.irreducible) {
    r.verdict = Verdict::inconclusive;
    r.notes.push_back("bounds assume an irreducible invariant curve");
    return r;
  }
  bool failed = false;
  bool missing = false;
  auto bound = [&](const std::string& name, const Integer& lhs, const Integer& rhs) {
    r.witness.emplace_back(name + ".lhs", lhs);
    r.witness.emplace_back(name + ".rhs", rhs);
    if (lhs > rhs) {
      failed = true;
      r.notes.push_back(name + " violated: " + lhs.get_str() + " > " + rhs.get_str());
    }
  };

  if (data.num_sing_points) {
    bound("sing_bound", *data.num_sing_points, k * (d - 1) + 2);
  } else {
    missing = true;
    r.notes.push_back("sing_bound needs num_sing_points");
  }
  if (data.num_sing_points && data.mu_total) {
    bound("schwartz_index", *data.num_sing_points, schwartz_sum(k, d, *data.mu_total));
  }
  if (data.nodal_only) bound("nodal_degree", k, d + 2);
  if (data.non_dicritical) {
    bound("non_dicritical_degree", k, d + 2);
    if (data.num_sing_points) {
      bound("non_dicritical_sing", *data.num_sing_points, d * (d + 1));
    } else {
      missing = true;
      r.notes.push_back("non_dicritical_sing needs num_sing_points");
    }
  }
  r.verdict = failed ? Verdict::fail : (missing ? Verdict::inconclusive : Verdict::pass);
  if (failed) r.notes.push_back("the curve cannot be an invariant algebraic solution of such a foliation");
  return r;
}

}  // namespace residua
