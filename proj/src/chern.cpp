#include "residua/chern.hpp"

#include <numeric>
#include <string>

#include "residua/errors.hpp"

namespace residua {

FormalBundle::FormalBundle(long rank, GradedClass total_chern, bool is_virtual)
    : rank_(rank), total_(std::move(total_chern)), virtual_(is_virtual) {
  if (total_[0] != 1) {
    throw InvalidInput("total Chern class must have constant term 1, got " + total_.to_string());
  }
  if (!virtual_ && rank_ < 0) throw InvalidInput("honest bundle with negative rank");
}

int MultiIndex::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

FormalBundle tangent_projective(int n) {
  if (n < 1) throw InvalidInput("tangent bundle of P^n needs n >= 1, got " + std::to_string(n));
  // c(TP^n) = (1+h)^{n+1}
  std::vector<Integer> c;
  for (int i = 0; i <= n; ++i) c.push_back(binomial(n + 1, i));
  return FormalBundle(n, GradedClass::make(n, std::move(c)));
}

FormalBundle line_bundle(int n, const Integer& degree) {
  return FormalBundle(1, add(GradedClass::one(n), GradedClass::monomial(n, degree, 1)));
}

FormalBundle direct_sum_of_lines(int n, std::span<const Integer> degrees) {
  GradedClass total = GradedClass::one(n);
  for (const auto& d : degrees) total = mul(total, line_bundle(n, d).total_chern());
  return FormalBundle(static_cast<long>(degrees.size()), std::move(total));
}

FormalBundle direct_sum(const FormalBundle& e, const FormalBundle& f) {
  return FormalBundle(e.rank() + f.rank(), mul(e.total_chern(), f.total_chern()),
                      e.is_virtual() || f.is_virtual());
}

FormalBundle dual(const FormalBundle& e) {
  std::vector<Integer> c(e.total_chern().coeffs().begin(), e.total_chern().coeffs().end());
  for (std::size_t j = 1; j < c.size(); j += 2) c[j] = -c[j];
  return FormalBundle(e.rank(), GradedClass::make(e.ambient_dim(), std::move(c)), e.is_virtual());
}

FormalBundle virtual_difference(const FormalBundle& e, const FormalBundle& f) {
  if (e.ambient_dim() != f.ambient_dim()) {
    throw DimensionMismatch("bundles live over P^" + std::to_string(e.ambient_dim()) + " and P^" +
                            std::to_string(f.ambient_dim()));
  }
  return FormalBundle(e.rank() - f.rank(), mul(e.total_chern(), invert(f.total_chern())), true);
}

GradedClass top_chern_dual_tensor_line(const FormalBundle& e, const FormalBundle& line) {
  const int n = e.ambient_dim();
  if (line.ambient_dim() != n) throw DimensionMismatch("bundle and line bundle over different P^n");
  if (line.rank() != 1 || line.is_virtual()) throw InvalidInput("second argument must be a line bundle");
  if (e.is_virtual()) throw InvalidInput("first argument must be an honest bundle");
  if (e.rank() > n) {
    throw InvalidInput("rank " + std::to_string(e.rank()) + " exceeds ambient dimension " + std::to_string(n));
  }
  const int r = static_cast<int>(e.rank());
  const FormalBundle ed = dual(e);
  const GradedClass c1 = GradedClass::monomial(n, line.chern_coefficient(1), 1);
  GradedClass acc = GradedClass::zero(n);
  for (int j = 0; j <= r; ++j) {
    acc = add(acc, mul(degree_part(ed.total_chern(), j), pow(c1, static_cast<unsigned>(r - j))));
  }
  return acc;
}

Integer elementary_symmetric(std::span<const Integer> values, int m) {
  if (m < 0) throw InvalidInput("elementary symmetric index must be non-negative");
  if (static_cast<std::size_t>(m) > values.size()) return 0;
  // e[i] holds e_i of the prefix processed so far
  std::vector<Integer> e(static_cast<std::size_t>(m) + 1);
  e[0] = 1;
  for (const auto& v : values) {
    for (int i = m; i >= 1; --i) e[static_cast<std::size_t>(i)] += v * e[static_cast<std::size_t>(i - 1)];
  }
  return e[static_cast<std::size_t>(m)];
}

std::vector<MultiIndex> enumerate_multiindices(int j) {
  if (j < 1) throw InvalidInput("compositions need a positive weight, got " + std::to_string(j));
  std::vector<MultiIndex> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(MultiIndex{current});
      return;
    }
    for (int first = remaining; first >= 1; --first) {
      current.push_back(first);
      self(self, remaining - first);
      current.pop_back();
    }
  };
  rec(rec, j);
  return out;
}

GradedClass inverse_total_chern_multiindex(const FormalBundle& e, int j) {
  const int n = e.ambient_dim();
  if (j < 0) throw InvalidInput("degree must be non-negative");
  if (j == 0) return GradedClass::one(n);
  if (j > n) return GradedClass::zero(n);
  Integer total = 0;
  for (const auto& L : enumerate_multiindices(j)) {
    Integer term = sign_pow(L.length());
    for (int part : L.parts) {
      term *= e.chern_coefficient(part);
      if (term == 0) break;
    }
    total += term;
  }
  return GradedClass::monomial(n, total, j);
}

}  // namespace residua
