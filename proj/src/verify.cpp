#include "residua/verify.hpp"

#include <functional>
#include <random>
#include <string>

#include "residua/chern.hpp"
#include "residua/ring.hpp"
#include "residua/singularity.hpp"

namespace residua {

namespace {

// Collects the outcome of one suite; stops recording after the first
// counterexample.
class Suite {
 public:
  explicit Suite(std::string name) { report_.check_name = std::move(name); }

  // Returns false once a counterexample has been recorded.
  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++cases_;
    if (!ok && !failed_) {
      failed_ = true;
      report_.notes.push_back("counterexample: " + describe());
    }
    return !failed_;
  }

  bool failed() const { return failed_; }

  CheckReport finish() {
    report_.verdict = failed_ ? Verdict::fail : Verdict::pass;
    report_.witness.emplace_back("cases", Integer(static_cast<unsigned long>(cases_)));
    return std::move(report_);
  }

 private:
  CheckReport report_;
  std::size_t cases_ = 0;
  bool failed_ = false;
};

std::string ints(std::span<const Integer> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + "]";
}

GradedClass random_class(std::mt19937_64& rng, int n, bool unit_constant) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<Integer> c;
  for (int i = 0; i <= n; ++i) c.emplace_back(coef(rng));
  if (unit_constant) c[0] = 1;
  return GradedClass::make(n, std::move(c));
}

// Calls f on every vector in {lo..hi}^len.
void for_each_vector(int len, int lo, int hi, const std::function<void(const std::vector<Integer>&)>& f) {
  std::vector<Integer> v(static_cast<std::size_t>(len), Integer(lo));
  while (true) {
    f(v);
    int i = 0;
    for (; i < len; ++i) {
      if (v[static_cast<std::size_t>(i)] < hi) {
        ++v[static_cast<std::size_t>(i)];
        break;
      }
      v[static_cast<std::size_t>(i)] = lo;
    }
    if (i == len) return;
  }
}

CheckReport ring_axioms() {
  Suite s("ring-axioms");
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 400 && !s.failed(); ++trial) {
    const int n = trial % 8;
    auto a = random_class(rng, n, false), b = random_class(rng, n, false), c = random_class(rng, n, false);
    auto show = [&] { return "n=" + std::to_string(n) + " a=" + a.to_string() + " b=" + b.to_string() + " c=" + c.to_string(); };
    s.expect(mul(mul(a, b), c) == mul(a, mul(b, c)), show);
    s.expect(mul(a, b) == mul(b, a), show);
    s.expect(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), show);
    s.expect(integrate(mul(a, b)) == integrate(mul(b, a)), show);
  }
  return s.finish();
}

CheckReport ring_inverse() {
  Suite s("ring-inverse");
  std::mt19937_64 rng(7);
  for (int n = 0; n <= 10; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_class(rng, n, true);
      s.expect(mul(a, invert(a)) == GradedClass::one(n), [&] { return "n=" + std::to_string(n) + " a=" + a.to_string(); });
    }
  }
  return s.finish();
}

CheckReport ring_truncation() {
  Suite s("ring-truncation");
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = trial % 9;
    auto a = random_class(rng, n, false), b = random_class(rng, n, false);
    std::vector<Integer> full(static_cast<std::size_t>(2 * n + 1));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) full[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    const auto prod = mul(a, b);
    bool ok = true;
    for (int i = 0; i <= n; ++i) ok = ok && prod[i] == full[static_cast<std::size_t>(i)];
    s.expect(ok, [&] { return "n=" + std::to_string(n) + " a=" + a.to_string() + " b=" + b.to_string(); });
  }
  return s.finish();
}

CheckReport bundle_identities() {
  Suite s("bundle-identities");
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 3; ++k) {
      for_each_vector(k, -2, 3, [&](const std::vector<Integer>& degs) {
        const auto show = [&] { return "n=" + std::to_string(n) + " degrees=" + ints(degs); };
        const auto e = direct_sum_of_lines(n, degs);
        GradedClass prod = GradedClass::one(n);
        for (const auto& d : degs) prod = mul(prod, line_bundle(n, d).total_chern());
        s.expect(e.total_chern() == prod, show);
        s.expect(dual(dual(e)) == e, show);
        const auto t = tangent_projective(n);
        s.expect(dual(direct_sum(e, t)) == direct_sum(dual(e), dual(t)), show);
        s.expect(mul(virtual_difference(t, e).total_chern(), e.total_chern()) == t.total_chern(), show);
        for (int j = std::min(k, n) + 1; j <= n; ++j) s.expect(e.total_chern()[j] == 0, show);
      });
    }
  }
  return s.finish();
}

CheckReport inverse_multiindex() {
  Suite s("inverse-multiindex");
  std::mt19937_64 rng(3);
  for (int n = 0; n <= 8; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const FormalBundle e(0, random_class(rng, n, true), true);
      const auto inv = invert(e.total_chern());
      for (int j = 0; j <= n; ++j) {
        s.expect(inverse_total_chern_multiindex(e, j) == degree_part(inv, j), [&] {
          return "n=" + std::to_string(n) + " c=" + e.total_chern().to_string() + " j=" + std::to_string(j);
        });
      }
    }
  }
  return s.finish();
}

CheckReport closed_form_vs_integral(const VerifyHooks& hooks) {
  Suite s("closed-form-vs-ring-integral");
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(1, 5);
  constexpr long kBudgetPerShape = 300;
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto check = [&](const std::vector<Integer>& degs) {
        const auto normal = direct_sum_of_lines(n, degs);
        const auto show = [&] { return "n=" + std::to_string(n) + " degrees=" + ints(degs); };
        s.expect(residue_sum_top_chern(n, degs, hooks.elementary_symmetric).value ==
                     residue_sum_general(n, normal, SymmetricPolynomial::chern(n - k)).value,
                 show);
        s.expect(residue_sum_c1_power(n, degs).value ==
                     residue_sum_general(n, normal, SymmetricPolynomial::c1_power(n - k)).value,
                 show);
      };
      long total = 1;
      for (int i = 0; i < k; ++i) total *= 5;
      if (total <= kBudgetPerShape) {
        for_each_vector(k, 1, 5, check);
      } else {
        for (long i = 0; i < kBudgetPerShape; ++i) {
          std::vector<Integer> degs;
          for (int j = 0; j < k; ++j) degs.emplace_back(deg(rng));
          check(degs);
        }
      }
    }
  }
  return s.finish();
}

CheckReport camacho_sad_totality() {
  Suite s("camacho-sad-totality");
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d)
      for (int mu = 0; mu <= 5; ++mu) {
        const Integer chi = adjunction_euler(n, d, mu);
        Integer dn;
        mpz_ui_pow_ui(dn.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(n));
        s.expect(camacho_sad_total(n, d, chi, mu) == dn, [&] {
          return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " mu=" + std::to_string(mu);
        });
      }
  return s.finish();
}

CheckReport milnor_oracles() {
  Suite s("milnor-oracle-pair");
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for_each_vector(k, 1, 4, [&](const std::vector<Integer>& degs) {
        for (int d = 1; d <= 4; ++d) {
          // mu scales both routes linearly; mu = 1 is the informative case.
          StratumSpec spec{n, degs, d, 1};
          const auto show = [&] {
            return "n=" + std::to_string(n) + " stratum=" + ints(degs) + " d=" + std::to_string(d);
          };
          const Integer ring = milnor_stratum_ring(spec);
          s.expect(ring == milnor_stratum_multiindex(spec), show);
          if (k == n - 1) s.expect(ring == milnor_curve_case(spec), show);
          spec.transversal_mu = 3;
          s.expect(milnor_stratum_ring(spec) == 3 * ring, show);
        }
      });
  return s.finish();
}

CheckReport euler_ci_paths() {
  Suite s("euler-ci-paths");
  for (int n = 1; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      for_each_vector(k, 1, 4, [&](const std::vector<Integer>& degs) {
        s.expect(euler_ci(n, degs) == euler_ci_multiindex(n, degs),
                 [&] { return "n=" + std::to_string(n) + " degrees=" + ints(degs); });
      });
      const std::vector<Integer> linear(static_cast<std::size_t>(k), Integer(1));
      s.expect(euler_ci(n, linear) == n - k + 1, [&] { return "linear n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  return s.finish();
}

CheckReport parusinski_closure() {
  Suite s("parusinski-closure");
  for (int n = 3; n <= 8; ++n) {
    const StratumSpec spec{n, {1, 1}, 2, 1};
    const Integer mu = milnor_stratum_ring(spec);
    const Integer chi = adjunction_euler(n, 2, mu);
    const Integer lhs = mu + sign_pow(n) * (n + 1) - sign_pow(n) * chi;
    s.expect(lhs == parusinski_global(n, 2), [&] { return "n=" + std::to_string(n) + " mu_S=" + mu.get_str(); });
  }
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d)
      for (int mu = 0; mu <= 5; ++mu) {
        const Integer chi = adjunction_euler(n, d, mu);
        s.expect(mu - sign_pow(n) * chi + sign_pow(n) * (n + 1) == parusinski_global(n, d), [&] {
          return "n=" + std::to_string(n) + " d=" + std::to_string(d) + " mu=" + std::to_string(mu);
        });
      }
  return s.finish();
}

CheckReport congruence_grid() {
  Suite s("congruence-grid");
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= 6; ++k)
      for (int mu = 0; mu <= 10; ++mu) {
        const Integer chi = adjunction_euler(n, k, mu);
        const auto show = [&] {
          return "n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu=" + std::to_string(mu) + " chi=" + chi.get_str();
        };
        s.expect(congruence_check(n, k, chi, mu).verdict == Verdict::pass, show);
        s.expect(adjunction_polynomial(n, chi, mu).evaluate(k) == 0, show);
      }
  return s.finish();
}

CheckReport sing_count_monotone() {
  Suite s("sing-count-monotone");
  for (int flags = 0; flags < 4; ++flags)
    for (int d = 0; d <= 5; ++d)
      for (int k = 1; k <= 8; ++k) {
        bool seen_fail = false;
        for (int sing = 0; sing <= 40; ++sing) {
          CurveFoliationData data;
          data.foliation_degree = d;
          data.curve_degree = k;
          data.num_sing_points = Integer(sing);
          data.nodal_only = (flags & 1) != 0;
          data.non_dicritical = (flags & 2) != 0;
          const bool fail = sing_count_bound(data).verdict == Verdict::fail;
          s.expect(!(seen_fail && !fail), [&] {
            return "d=" + std::to_string(d) + " k=" + std::to_string(k) + " sing=" + std::to_string(sing) +
                   " flags=" + std::to_string(flags);
          });
          seen_fail = seen_fail || fail;
        }
      }
  return s.finish();
}

}  // namespace

std::vector<CheckReport> verify_suite(const VerifyHooks& hooks) {
  return {ring_axioms(),         ring_inverse(),         ring_truncation(),    bundle_identities(),
          inverse_multiindex(),  closed_form_vs_integral(hooks), camacho_sad_totality(), milnor_oracles(),
          euler_ci_paths(),      parusinski_closure(),   congruence_grid(),    sing_count_monotone()};
}

}  // namespace residua
