// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "residua/chern.hpp"
#include "residua/checks.hpp"
#include "residua/cli.hpp"
#include "residua/residue.hpp"
#include "residua/ring.hpp"
#include "residua/singularity.hpp"

using namespace residua;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "residua");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::string ints(const std::vector<Integer>& v) { return "[" + join(v) + "]"; }

Integer ipow(long b, long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(b).get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

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

Outcome conic_example() {
  Outcome o;
  auto cs = cli({"camacho-sad", "--n", "2", "--degree", "2", "--chi", "3", "--mu", "1"});
  o.require(cs.code == 0 && cs.out == "4\n", "camacho-sad printed '" + cs.out + "'");
  auto adj = cli({"adjunction", "--n", "2", "--degree", "2", "--mu", "1"});
  o.require(adj.code == 0 && adj.out == "3\n", "adjunction printed '" + adj.out + "'");
  return o;
}

Outcome p4_milnor_example() {
  Outcome o;
  auto r = cli({"milnor", "--n", "4", "--stratum", "1,1", "--degree", "2", "--mu", "1", "--method", "both"});
  o.require(r.code == 0, "exit code " + std::to_string(r.code));
  o.require(r.out.rfind("ring: 1\nmultiindex: 1\n", 0) == 0, "output '" + r.out + "'");
  o.require(r.out.find("note:") != std::string::npos, "discrepancy note missing");
  const StratumSpec s{4, {1, 1}, 2, 1};
  const Integer ring = milnor_stratum_ring(s);
  o.require(ring == milnor_stratum_multiindex(s), "routes disagree");
  const Integer chi = adjunction_euler(4, 2, ring);
  o.require(ring - chi + 5 == parusinski_global(4, 2),
            "Parusinski closure: value=" + ring.get_str() + " chi=" + chi.get_str());
  o.require(ring == 1, "value " + ring.get_str());
  return o;
}

Outcome camacho_sad_totality() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (long d = 1; d <= 6; ++d)
      for (long mu = 0; mu <= 5; ++mu) {
        const Integer chi = adjunction_euler(n, d, mu);
        o.require(camacho_sad_total(n, d, chi, mu) == ipow(d, n),
                  "n=" + std::to_string(n) + " d=" + std::to_string(d) + " mu=" + std::to_string(mu));
      }
  return o;
}

Outcome closed_form_equivalence() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> deg(1, 5);
  // 36 (n,k) shapes; exhaustive where 5^k <= 275, sampled otherwise: < 10^4 cases.
  constexpr long kPerShape = 275;
  long cases = 0;
  for (int n = 1; n <= 8; ++n)
    for (int k = 1; k <= n; ++k) {
      auto check = [&](const std::vector<Integer>& degs) {
        ++cases;
        const auto normal = direct_sum_of_lines(n, degs);
        const std::string where = "n=" + std::to_string(n) + " degrees=" + ints(degs);
        o.require(residue_sum_top_chern(n, degs).value ==
                      residue_sum_general(n, normal, SymmetricPolynomial::chern(n - k)).value,
                  "top chern " + where);
        o.require(residue_sum_c1_power(n, degs).value ==
                      residue_sum_general(n, normal, SymmetricPolynomial::c1_power(n - k)).value,
                  "c1 power " + where);
      };
      long total = 1;
      for (int i = 0; i < k; ++i) total *= 5;
      if (total <= kPerShape) {
        for_each_vector(k, 1, 5, check);
      } else {
        for (long i = 0; i < kPerShape; ++i) {
          std::vector<Integer> degs;
          for (int j = 0; j < k; ++j) degs.emplace_back(deg(rng));
          check(degs);
        }
      }
    }
  o.require(cases <= 10000, "too many cases: " + std::to_string(cases));
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome milnor_oracle_pair() {
  Outcome o;
  long cases = 0;
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n - 1; ++k)
      for_each_vector(k, 1, 4, [&](const std::vector<Integer>& degs) {
        for (long d = 1; d <= 4; ++d)
          for (long mu = 0; mu <= 3; ++mu) {
            ++cases;
            const StratumSpec s{n, degs, d, mu};
            const std::string where = "n=" + std::to_string(n) + " stratum=" + ints(degs) + " d=" +
                                      std::to_string(d) + " mu=" + std::to_string(mu);
            const Integer ring = milnor_stratum_ring(s);
            o.require(ring == milnor_stratum_multiindex(s), where);
            if (k == n - 1) o.require(ring == milnor_curve_case(s), "curve case " + where);
          }
      });
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

Outcome classical_euler() {
  Outcome o;
  auto expect = [&](int n, std::vector<Integer> degs, long value) {
    const Integer got = euler_ci(n, degs);
    o.require(got == value, "n=" + std::to_string(n) + " degrees=" + ints(degs) + " got " + got.get_str());
  };
  expect(2, {1}, 2);
  expect(2, {3}, 0);
  expect(3, {2}, 4);
  expect(3, {3}, 9);
  expect(3, {4}, 24);
  expect(4, {2, 2}, 8);
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) expect(n, std::vector<Integer>(static_cast<std::size_t>(k), Integer(1)), n - k + 1);
  return o;
}

Outcome congruence_grid() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (long k = 1; k <= 6; ++k)
      for (long mu = 0; mu <= 10; ++mu) {
        const Integer chi = adjunction_euler(n, k, mu);
        const Integer lhs = mu - sign_pow(n) * chi;
        const std::string where = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " mu=" + std::to_string(mu);
        o.require(mpz_divisible_p(lhs.get_mpz_t(), Integer(k).get_mpz_t()) != 0, "divisibility " + where);
        o.require(congruence_check(n, k, chi, mu).verdict == Verdict::pass, "check " + where);
        o.require(adjunction_polynomial(n, chi, mu).evaluate(k) == 0, "P(k) " + where);
      }
  return o;
}

Outcome series_vs_multiindex() {
  Outcome o;
  long cases = 0;
  constexpr int n = 8;
  for (int rank = 0; rank <= 4; ++rank)
    for_each_vector(rank, 1, 4, [&](const std::vector<Integer>& degs) {
      const auto e = direct_sum_of_lines(n, degs);
      const auto inv = invert(e.total_chern());
      for (int j = 0; j <= 8; ++j) {
        ++cases;
        o.require(inverse_total_chern_multiindex(e, j) == degree_part(inv, j),
                  "degrees=" + ints(degs) + " j=" + std::to_string(j));
      }
    });
  if (o.ok) o.detail = std::to_string(cases) + " cases";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double budget_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "conic example: camacho-sad = 4, adjunction = 3", 0.1, conic_example},
      {"AC2", "P^4 Milnor example: both routes = 1, Parusinski closure", 0.1, p4_milnor_example},
      {"AC3", "Camacho-Sad totality grid equals d^n", 1.0, camacho_sad_totality},
      {"AC4", "closed forms equal ring integrals", 5.0, closed_form_equivalence},
      {"AC5", "Milnor ring = multi-index (= curve case)", 10.0, milnor_oracle_pair},
      {"AC6", "classical Euler characteristics", 0.1, classical_euler},
      {"AC7", "congruence grid and P(k) = 0", 1.0, congruence_grid},
      {"AC8", "series inversion = multi-index expansion", 1.0, series_vs_multiindex},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= c.budget_seconds) {
      o.ok = false;
      o.detail = "took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_seconds) + " s";
    }
    if (!o.ok) ++failures;
    std::cout << (o.ok ? "PASS " : "FAIL ") << c.id << "  " << c.title << "  (" << secs << " s)";
    if (!o.detail.empty()) std::cout << "  " << o.detail;
    std::cout << "\n";
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}
