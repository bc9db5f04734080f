#include "residua/residue.hpp"

#include <sstream>

#include "residua/errors.hpp"

namespace residua {

SymmetricPolynomial::SymmetricPolynomial(int num_vars, int weighted_degree)
    : num_vars_(num_vars), degree_(weighted_degree) {
  if (num_vars < 0 || weighted_degree < 0) throw InvalidInput("polynomial shape must be non-negative");
}

SymmetricPolynomial SymmetricPolynomial::chern(int m) {
  if (m < 0) throw InvalidInput("Chern index must be non-negative");
  SymmetricPolynomial p(m, m);
  Exponents e(static_cast<std::size_t>(m), 0U);
  if (m > 0) e.back() = 1;
  p.add_term(1, std::move(e));
  return p;
}

SymmetricPolynomial SymmetricPolynomial::c1_power(int m) {
  if (m < 0) throw InvalidInput("power must be non-negative");
  SymmetricPolynomial p(m > 0 ? 1 : 0, m);
  p.add_term(1, m > 0 ? Exponents{static_cast<unsigned>(m)} : Exponents{});
  return p;
}

void SymmetricPolynomial::add_term(const Integer& coeff, Exponents exponents) {
  if (exponents.size() != static_cast<std::size_t>(num_vars_)) {
    throw InvalidInput("term has " + std::to_string(exponents.size()) + " exponents, expected " +
                       std::to_string(num_vars_));
  }
  long weight = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) weight += static_cast<long>(i + 1) * exponents[i];
  if (weight != degree_) {
    throw InvalidInput("term of weighted degree " + std::to_string(weight) + " in a polynomial of degree " +
                       std::to_string(degree_));
  }
  if (coeff == 0) return;
  auto& slot = terms_[exponents];
  slot += coeff;
  if (slot == 0) terms_.erase(exponents);
}

SymmetricPolynomial SymmetricPolynomial::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::pair<Integer, Exponents>> rows;
  int lineno = 0;
  int vars = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    std::vector<std::string> toks;
    while (fields >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    const std::string where = "phi line " + std::to_string(lineno);
    Integer coeff = parse_integer(toks[0], where + " coefficient");
    Exponents e;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      Integer x = parse_integer(toks[i], where + " exponent");
      if (x < 0) throw InvalidInput(where + ": negative exponent");
      e.push_back(static_cast<unsigned>(to_int(x, where + " exponent")));
    }
    if (vars < 0) vars = static_cast<int>(e.size());
    if (static_cast<int>(e.size()) != vars) {
      throw InvalidInput(where + ": expected " + std::to_string(vars) + " exponents, got " +
                         std::to_string(e.size()));
    }
    rows.emplace_back(std::move(coeff), std::move(e));
  }
  if (rows.empty()) throw InvalidInput("phi: no terms");
  long degree = 0;
  for (std::size_t i = 0; i < rows.front().second.size(); ++i) {
    degree += static_cast<long>(i + 1) * rows.front().second[i];
  }
  SymmetricPolynomial p(vars, static_cast<int>(degree));
  for (auto& [c, e] : rows) p.add_term(c, std::move(e));
  return p;
}

GradedClass SymmetricPolynomial::evaluate(std::span<const GradedClass> chern, int ambient_dim) const {
  if (chern.size() < static_cast<std::size_t>(num_vars_)) {
    throw InvalidInput("not enough Chern classes supplied for evaluation");
  }
  GradedClass acc = GradedClass::zero(ambient_dim);
  for (const auto& [exps, coeff] : terms_) {
    GradedClass term = GradedClass::monomial(ambient_dim, coeff, 0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term = mul(term, pow(chern[i], exps[i]));
    }
    acc = add(acc, term);
  }
  return acc;
}

std::string SymmetricPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, coeff] : terms_) {
    if (!out.empty()) out += " + ";
    out += coeff.get_str();
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      out += "*c" + std::to_string(i + 1);
      if (exps[i] > 1) out += "^" + std::to_string(exps[i]);
    }
  }
  return out;
}

std::string_view method_name(Method m) {
  return m == Method::closed_form ? "closed_form" : "ring_integral";
}

ResidueResult residue_sum_general(int n, const FormalBundle& normal, const SymmetricPolynomial& phi) {
  if (normal.ambient_dim() != n) {
    throw DimensionMismatch("normal bundle lives over P^" + std::to_string(normal.ambient_dim()) +
                            ", expected P^" + std::to_string(n));
  }
  if (normal.is_virtual() || normal.rank() < 0 || normal.rank() > n) {
    throw InvalidInput("normal bundle rank " + std::to_string(normal.rank()) + " outside 0.." + std::to_string(n));
  }
  const int k = static_cast<int>(normal.rank());
  if (phi.weighted_degree() != n - k) {
    throw InvalidInput("phi has degree " + std::to_string(phi.weighted_degree()) + ", expected n-k = " +
                       std::to_string(n - k));
  }
  std::vector<GradedClass> chern;
  for (int i = 1; i <= phi.num_vars(); ++i) {
    chern.push_back(GradedClass::monomial(n, normal.chern_coefficient(i), i));
  }
  GradedClass top = GradedClass::monomial(n, normal.chern_coefficient(k), k);
  Integer value = integrate(mul(phi.evaluate(chern, n), top));
  return ResidueResult{std::move(value), Method::ring_integral, n, k, {}};
}

namespace {

void check_degree_vector(int n, std::span<const Integer> degrees) {
  const auto k = degrees.size();
  if (k < 1 || k > static_cast<std::size_t>(n)) {
    throw InvalidInput("number of hypersurfaces k = " + std::to_string(k) + " must satisfy 1 <= k <= n = " +
                       std::to_string(n));
  }
  for (const auto& d : degrees) {
    if (d < 1) throw InvalidInput("hypersurface degree must be positive, got " + d.get_str());
  }
}

Integer product(std::span<const Integer> values) {
  Integer p = 1;
  for (const auto& v : values) p *= v;
  return p;
}

}  // namespace

ResidueResult residue_sum_top_chern(int n, std::span<const Integer> degrees, const ElementarySymmetricFn& esym) {
  check_degree_vector(n, degrees);
  const int k = static_cast<int>(degrees.size());
  Integer value = esym(degrees, n - k) * product(degrees);
  return ResidueResult{std::move(value), Method::closed_form, n, k, {degrees.begin(), degrees.end()}};
}

ResidueResult residue_sum_top_chern(int n, std::span<const Integer> degrees) {
  return residue_sum_top_chern(n, degrees, [](std::span<const Integer> v, int m) { return elementary_symmetric(v, m); });
}

ResidueResult residue_sum_c1_power(int n, std::span<const Integer> degrees) {
  check_degree_vector(n, degrees);
  const int k = static_cast<int>(degrees.size());
  Integer sum = 0;
  for (const auto& d : degrees) sum += d;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(n - k));
  Integer value = power * product(degrees);
  return ResidueResult{std::move(value), Method::closed_form, n, k, {degrees.begin(), degrees.end()}};
}

Integer camacho_sad_binomial_part(int n, const Integer& d) {
  Integer acc = 0;
  Integer dpow = d;  // d^{j+1}
  for (int j = 0; j <= n - 2; ++j) {
    acc += sign_pow(n + j) * binomial(n + 1, n - 1 - j) * dpow;
    dpow *= d;
  }
  return acc;
}

Integer camacho_sad_total(int n, const Integer& d, const Integer& chi, const Integer& mu_total) {
  if (n < 2) throw InvalidInput("Camacho-Sad total needs n >= 2, got " + std::to_string(n));
  if (d < 1) throw InvalidInput("hypersurface degree must be positive, got " + d.get_str());
  if (mu_total < 0) throw InvalidInput("total Milnor number must be non-negative, got " + mu_total.get_str());
  return camacho_sad_binomial_part(n, d) - sign_pow(n) * chi + mu_total;
}

}  // namespace residua
