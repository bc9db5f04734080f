#include "residua/ring.hpp"

#include <ostream>

#include "residua/errors.hpp"

namespace residua {

namespace {

void require_same_dim(const GradedClass& a, const GradedClass& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("classes live in P^" + std::to_string(a.ambient_dim()) + " and P^" +
                            std::to_string(b.ambient_dim()));
  }
}

}  // namespace

GradedClass GradedClass::make(int n, std::vector<Integer> coeffs) {
  if (n < 0) throw InvalidInput("ambient dimension must be non-negative, got " + std::to_string(n));
  if (coeffs.size() > static_cast<std::size_t>(n) + 1) {
    throw InvalidInput("class in P^" + std::to_string(n) + " takes at most " + std::to_string(n + 1) +
                       " coefficients, got " + std::to_string(coeffs.size()));
  }
  coeffs.resize(static_cast<std::size_t>(n) + 1);
  return GradedClass(std::move(coeffs));
}

GradedClass GradedClass::zero(int n) { return make(n, {}); }

GradedClass GradedClass::one(int n) { return make(n, {Integer(1)}); }

GradedClass GradedClass::monomial(int n, const Integer& c, int j) {
  auto out = zero(n);
  if (j >= 0 && j <= n) out.coeffs_[static_cast<std::size_t>(j)] = c;
  return out;
}

bool GradedClass::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::string GradedClass::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "h";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

GradedClass add(const GradedClass& a, const GradedClass& b) {
  require_same_dim(a, b);
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeffs()[i];
  return GradedClass::make(a.ambient_dim(), std::move(out));
}

GradedClass sub(const GradedClass& a, const GradedClass& b) {
  require_same_dim(a, b);
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeffs()[i];
  return GradedClass::make(a.ambient_dim(), std::move(out));
}

GradedClass scale(const GradedClass& a, const Integer& c) {
  std::vector<Integer> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : out) x *= c;
  return GradedClass::make(a.ambient_dim(), std::move(out));
}

GradedClass mul(const GradedClass& a, const GradedClass& b) {
  require_same_dim(a, b);
  const int n = a.ambient_dim();
  std::vector<Integer> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
  }
  return GradedClass::make(n, std::move(out));
}

GradedClass pow(const GradedClass& a, unsigned e) {
  GradedClass result = GradedClass::one(a.ambient_dim());
  GradedClass base = a;
  while (e != 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

GradedClass invert(const GradedClass& a) {
  if (a[0] != 1) {
    throw NotInvertible("class " + a.to_string() + " has constant term " + a[0].get_str() + ", expected 1");
  }
  const int n = a.ambient_dim();
  // b_0 = 1, b_m = -sum_{i=1}^{m} a_i b_{m-i}
  std::vector<Integer> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Integer acc = 0;
    for (int i = 1; i <= m; ++i) acc += a[i] * b[static_cast<std::size_t>(m - i)];
    b[static_cast<std::size_t>(m)] = -acc;
  }
  return GradedClass::make(n, std::move(b));
}

Integer integrate(const GradedClass& a) { return a[a.ambient_dim()]; }

GradedClass degree_part(const GradedClass& a, int j) {
  if (j < 0 || j > a.ambient_dim()) {
    throw InvalidInput("degree " + std::to_string(j) + " outside 0.." + std::to_string(a.ambient_dim()));
  }
  return GradedClass::monomial(a.ambient_dim(), a[j], j);
}

std::ostream& operator<<(std::ostream& os, const GradedClass& a) { return os << a.to_string(); }

}  // namespace residua
