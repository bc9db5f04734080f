#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "residua/integer.hpp"

namespace residua {

// An element of Z[h]/(h^{n+1}), the integral cohomology ring of P^n with h
// the hyperplane class. Immutable: every operation returns a new value.
class GradedClass {
 public:
  // Zero-pads `coeffs` to length n+1; longer input is rejected.
  static GradedClass make(int n, std::vector<Integer> coeffs);
  static GradedClass zero(int n);
  static GradedClass one(int n);
  // c * h^j; j > n yields zero.
  static GradedClass monomial(int n, const Integer& c, int j);

  int ambient_dim() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Integer> coeffs() const { return coeffs_; }
  const Integer& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const GradedClass& a, const GradedClass& b) { return a.coeffs_ == b.coeffs_; }

 private:
  explicit GradedClass(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<Integer> coeffs_;
};

inline GradedClass make_class(int n, std::vector<Integer> coeffs) {
  return GradedClass::make(n, std::move(coeffs));
}

GradedClass add(const GradedClass& a, const GradedClass& b);
GradedClass sub(const GradedClass& a, const GradedClass& b);
GradedClass scale(const GradedClass& a, const Integer& c);
// Truncated product; terms of degree > n are dropped.
GradedClass mul(const GradedClass& a, const GradedClass& b);
GradedClass pow(const GradedClass& a, unsigned e);
// Requires constant term 1; the inverse then has integer coefficients.
GradedClass invert(const GradedClass& a);
// Pairing with [P^n]: the coefficient of h^n.
Integer integrate(const GradedClass& a);
GradedClass degree_part(const GradedClass& a, int j);

inline GradedClass operator+(const GradedClass& a, const GradedClass& b) { return add(a, b); }
inline GradedClass operator-(const GradedClass& a, const GradedClass& b) { return sub(a, b); }
inline GradedClass operator*(const GradedClass& a, const GradedClass& b) { return mul(a, b); }

std::ostream& operator<<(std::ostream& os, const GradedClass& a);

}  // namespace residua
