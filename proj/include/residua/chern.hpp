#pragma once

#include <span>
#include <vector>

#include "residua/integer.hpp"
#include "residua/ring.hpp"

namespace residua {

// A (possibly virtual) bundle on P^n known only through its rank and total
// Chern class. The total class always has constant term 1.
class FormalBundle {
 public:
  FormalBundle(long rank, GradedClass total_chern, bool is_virtual = false);

  int ambient_dim() const { return total_.ambient_dim(); }
  long rank() const { return rank_; }
  const GradedClass& total_chern() const { return total_; }
  bool is_virtual() const { return virtual_; }

  // c_j for j >= 0; zero beyond the ambient dimension.
  Integer chern_coefficient(int j) const { return j <= ambient_dim() ? total_[j] : Integer(0); }

  friend bool operator==(const FormalBundle& a, const FormalBundle& b) {
    return a.rank_ == b.rank_ && a.total_ == b.total_;
  }

 private:
  long rank_;
  GradedClass total_;
  bool virtual_;
};

// Ordered tuple of positive integers (a composition of its weight).
struct MultiIndex {
  std::vector<int> parts;

  int weight() const;
  int length() const { return static_cast<int>(parts.size()); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

FormalBundle tangent_projective(int n);
FormalBundle line_bundle(int n, const Integer& degree);
FormalBundle direct_sum_of_lines(int n, std::span<const Integer> degrees);
FormalBundle direct_sum(const FormalBundle& e, const FormalBundle& f);
FormalBundle dual(const FormalBundle& e);
// E - F, with c(E - F) = c(E) c(F)^{-1}.
FormalBundle virtual_difference(const FormalBundle& e, const FormalBundle& f);

// c_r(E^dual (x) L) for an honest bundle E of rank r <= n and a line bundle L:
// sum_{j=0}^{r} c_j(E^dual) c_1(L)^{r-j}.
GradedClass top_chern_dual_tensor_line(const FormalBundle& e, const FormalBundle& line);

// e_m(values); e_0 = 1 and e_m = 0 for m > |values|.
Integer elementary_symmetric(std::span<const Integer> values, int m);

// All compositions of j, longest-first-part order.
std::vector<MultiIndex> enumerate_multiindices(int j);

// Degree-j part of c(E)^{-1}, expanded as sum over compositions L of j of
// (-1)^{len L} c_{l_1}(E)...c_{l_i}(E). No series division is involved.
GradedClass inverse_total_chern_multiindex(const FormalBundle& e, int j);

}  // namespace residua
