#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2ca/evolution.hpp"
#include "f2ca/invariants.hpp"
#include "f2ca/jost.hpp"
#include "f2ca/lax.hpp"
#include "f2ca/poly.hpp"
#include "f2ca/random.hpp"
#include "f2ca/state.hpp"

namespace f2ca {

// Outcome of one property check. On failure the first counterexample is kept
// in state text form together with a short description.
struct CheckResult {
  std::string name;
  long long cases = 0;
  bool pass = true;
  std::string counterexample;
  std::string detail;

  void fail(const CaState& state, std::string why) {
    if (!pass) return;
    pass = false;
    counterexample = format_state(state);
    detail = std::move(why);
  }
};

// Applies one step island by island and reassembles the result; must agree
// with stepping the whole state at once.
inline CaState step_by_islands(const CaState& s, RuleForm form = RuleForm::Mod2) {
  if (s.zero()) return s;
  const auto parts = islands(s);
  const Site lo = parts.front().k1;
  const Site hi = parts.back().kN;
  std::vector<std::uint8_t> bits(std::size_t(hi - lo + 1), 0);
  for (const Island& isl : parts) {
    const CaState stepped = step(isl.state, form);
    for (Site n = stepped.lo(); n <= stepped.hi(); ++n)
      bits[std::size_t(n - lo)] = std::uint8_t(stepped.bit(n));
  }
  return make_state(lo, std::move(bits));
}

template <typename F>
inline void for_each_island_pattern(int width, F&& fn) {
  if (width < 1) return;
  if (width == 1) {
    fn(make_state(0, {1}));
    return;
  }
  const int interior = width - 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << interior); ++mask) {
    std::vector<std::uint8_t> bits(std::size_t(width), 0);
    bits.front() = bits.back() = 1;
    for (int i = 0; i < interior; ++i) bits[std::size_t(1 + i)] = (mask >> i) & 1;
    int zero_run = 0;
    bool valid = true;
    for (std::uint8_t b : bits) {
      zero_run = b ? 0 : zero_run + 1;
      if (zero_run >= 3) {
        valid = false;
        break;
      }
    }
    if (valid) fn(make_state(0, bits));
  }
}

// --- evolution properties ---------------------------------------------------

// Both rule forms agree on every state supported inside a window of the given
// width; the exact form never leaves {0,1} (it throws if it did).
inline CheckResult check_form_equivalence_window(int window) {
  CheckResult res;
  res.name = "form-equivalence-exhaustive(window=" + std::to_string(window) + ")";
  if (window < 1 || window > 24) throw std::invalid_argument("window out of range");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << window); ++mask) {
    std::vector<std::uint8_t> bits(std::size_t(window), 0);
    for (int i = 0; i < window; ++i) bits[std::size_t(i)] = (mask >> i) & 1;
    const CaState s = make_state(0, bits);
    ++res.cases;
    if (step(s, RuleForm::Mod2) != step(s, RuleForm::Exact)) {
      res.fail(s, "mod-2 and exact forms disagree");
      return res;
    }
  }
  return res;
}

inline CheckResult check_form_equivalence_random(std::uint64_t seed, int cases, int width) {
  CheckResult res;
  res.name = "form-equivalence-random(width=" + std::to_string(width) + ")";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.window_state(width);
    ++res.cases;
    if (step(s, RuleForm::Mod2) != step(s, RuleForm::Exact)) {
      res.fail(s, "mod-2 and exact forms disagree");
      return res;
    }
  }
  return res;
}

inline CheckResult check_border_conservation(std::uint64_t seed, int cases, int max_width,
                                             int steps) {
  CheckResult res;
  res.name = "border-conservation";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s0 = gen.multi_island(max_width);
    CaState s = s0;
    for (int t = 0; t < steps; ++t) {
      const auto before = islands(s);
      s = step(s);
      const auto after = islands(s);
      if (before.size() != after.size()) {
        res.fail(s0, "island count changed at step " + std::to_string(t + 1));
        return res;
      }
      for (std::size_t k = 0; k < before.size(); ++k) {
        if (before[k].k1 != after[k].k1 || before[k].kN != after[k].kN) {
          res.fail(s0, "island borders moved at step " + std::to_string(t + 1));
          return res;
        }
      }
    }
    ++res.cases;
  }
  return res;
}

inline CheckResult check_reversibility(std::uint64_t seed, int cases, int max_width, int steps) {
  CheckResult res;
  res.name = "reversibility";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s0 = gen.multi_island(max_width);
    if (step(reverse_step(s0)) != s0) {
      res.fail(s0, "step(reverse_step(s)) != s");
      return res;
    }
    CaState s = s0;
    for (int t = 0; t < steps; ++t) {
      const CaState next = step(s);
      if (reverse_step(next) != s) {
        res.fail(s0, "reverse_step(step(s)) != s at step " + std::to_string(t + 1));
        return res;
      }
      s = next;
    }
    ++res.cases;
  }
  return res;
}

inline CheckResult check_island_independence(std::uint64_t seed, int cases, int max_width,
                                             int steps, int max_islands, int min_islands = 1) {
  CheckResult res;
  res.name = "island-independence";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s0 = gen.multi_island(max_width, max_islands, min_islands);
    const std::size_t island_count = islands(s0).size();
    CaState s = s0;
    for (int t = 0; t < steps; ++t) {
      const CaState whole = step(s);
      if (whole != step_by_islands(s)) {
        res.fail(s0, "whole-state step differs from per-island step at step " +
                         std::to_string(t + 1));
        return res;
      }
      if (islands(whole).size() != island_count) {
        res.fail(s0, "islands merged or split at step " + std::to_string(t + 1));
        return res;
      }
      s = whole;
    }
    ++res.cases;
  }
  return res;
}

inline CheckResult check_period2_orbit() {
  CheckResult res;
  res.name = "period-2-orbit(1101)";
  const CaState a = parse_state("0:1101");
  const CaState b = parse_state("0:1011");
  res.cases = 2;
  if (step(a) != b || step(b) != a) res.fail(a, "{1101, 1011} is not a 2-cycle");
  return res;
}

// --- Jost solution properties -----------------------------------------------

// Sweep, closed form and measure-product form agree coefficientwise over Z
// for every site in [k1-5, kN+2].
inline CheckResult check_jost_triple_agreement(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "jost-triple-agreement";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    const JostTable table = jost_sweep(s, k1 - 5);
    for (Site m = k1 - 5; m <= kN + 2; ++m) {
      const IntPoly swept = table.value(m);
      if (jost_closed(s, m) != swept) {
        res.fail(s, "closed form != sweep at m=" + std::to_string(m));
        return res;
      }
      if (jost_product(s, m) != swept) {
        res.fail(s, "product form != sweep at m=" + std::to_string(m));
        return res;
      }
    }
    ++res.cases;
  }
  return res;
}

// Exact recursion residual, mod-2 residual and coefficient non-negativity of
// every tabulated value.
inline CheckResult check_recursion_residuals(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "recursion-and-mod2-residuals";
  StateGen gen(seed);
  const IntPoly one_plus_z{1, 1};
  const IntPoly z = IntPoly::monomial(1);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    const JostTable table = jost_sweep(s, k1 - 5);
    for (Site m = k1 - 4; m <= kN; ++m) {
      IntPoly residual = table.value(m - 1) - one_plus_z * table.value(m);
      if (!s.bit(m)) residual += z * table.value(m + 1);
      if (!residual.zero()) {
        res.fail(s, "exact recursion residual nonzero at m=" + std::to_string(m));
        return res;
      }
    }
    for (Site m = k1 - 5; m <= kN + 1; ++m)
      for (const BigInt& c : table.value(m).coeffs())
        if (c < 0) {
          res.fail(s, "negative Jost coefficient at m=" + std::to_string(m));
          return res;
        }
    if (!schrodinger_residual_mod2(s, table)) {
      res.fail(s, "mod-2 Schroedinger residual nonzero");
      return res;
    }
    ++res.cases;
  }
  return res;
}

// z^1 coefficient of x_m equals the occupied count above m; the z^1
// coefficient of x_{m-1} - x_m equals q_m.
inline CheckResult check_asymptotics(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "asymptotics";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    const SupportList supp = support(s);
    for (Site m = k1 - 5; m <= kN + 2; ++m) {
      long long tail = 0;
      for (Site k : supp.sites)
        if (k >= m + 1) ++tail;
      if (asymptotic_tail_sum(s, m) != tail) {
        res.fail(s, "z^1 coefficient != tail sum at m=" + std::to_string(m));
        return res;
      }
      const IntPoly diff = jost_closed(s, m - 1) - jost_closed(s, m);
      if (diff.coeff(1) != s.bit(m)) {
        res.fail(s, "z^1 of x_{m-1} - x_m != q_m at m=" + std::to_string(m));
        return res;
      }
    }
    ++res.cases;
  }
  return res;
}

// Sum rules, the shift law toward the next occupied site, and the boundary
// values of the measures.
inline CheckResult check_measure_laws(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "measure-laws";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    const SupportList supp = support(s);
    const Site cutoff = kN - k1 + 2;
    for (Site m = k1 - 5; m <= kN + 2; ++m) {
      if (!sum_rules_check(s, m)) {
        res.fail(s, "sum rules violated at m=" + std::to_string(m));
        return res;
      }
      const int i_max = int(cutoff + 3 + std::max<Site>(0, k1 - m));
      const MeasureVector fm = f_measures(s, m, i_max);
      if (m <= kN) {
        const Site next = *std::lower_bound(supp.sites.begin(), supp.sites.end(), m);
        const MeasureVector fs = f_measures(s, next, i_max);
        for (int j = 1; j <= i_max; ++j)
          if (fm.at(j) != fs.at(j) + (next - m == j ? 1 : 0)) {
            res.fail(s, "shift law violated at m=" + std::to_string(m));
            return res;
          }
      } else {
        for (int j = 1; j <= i_max; ++j)
          if (fm.at(j) != 0) {
            res.fail(s, "measures nonzero above kN at m=" + std::to_string(m));
            return res;
          }
      }
      for (int j = int(cutoff); j <= i_max; ++j)
        if (fm.at(j) != (k1 - m == j ? 1 : 0)) {
          res.fail(s, "tail form violated at m=" + std::to_string(m));
          return res;
        }
    }
    const MeasureVector edge = f_measures(s, kN - 1, int(cutoff));
    if (edge.at(1) != 1) {
      res.fail(s, "f_1(kN - 1) != 1");
      return res;
    }
    for (int j = 2; j <= edge.i_max(); ++j)
      if (edge.at(j) != 0) {
        res.fail(s, "f_i(kN - 1) != 0 for i >= 2");
        return res;
      }
    ++res.cases;
  }
  return res;
}

// Summation form of the defining equation: x_m = 1 + z * sum over occupied
// k >= m of geometric(k - m) x_{k+1}.
inline CheckResult check_integral_equation(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "integral-equation";
  StateGen gen(seed);
  const IntPoly z = IntPoly::monomial(1);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    const SupportList supp = support(s);
    const JostTable table = jost_sweep(s, k1 - 3);
    for (Site m = k1 - 3; m <= kN + 1; ++m) {
      IntPoly rhs = IntPoly::one();
      for (Site k : supp.sites)
        if (k >= m) rhs += z * geometric(k - m) * table.value(k + 1);
      if (table.value(m) != rhs) {
        res.fail(s, "integral equation violated at m=" + std::to_string(m));
        return res;
      }
    }
    ++res.cases;
  }
  return res;
}

// The vanishing solution satisfies the recursion at every site and its own
// homogeneous summation equation.
inline CheckResult check_trivial_solution(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "trivial-solution";
  StateGen gen(seed);
  const LaurentInt one_plus_z(0, {1, 1});
  const LaurentInt z = LaurentInt::monomial(1);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    for (Site m = k1 - 2; m <= kN + 5; ++m) {
      LaurentInt residual =
          trivial_solution(kN, m - 1) - one_plus_z * trivial_solution(kN, m);
      if (!s.bit(m)) residual = residual + z * trivial_solution(kN, m + 1);
      if (!residual.zero()) {
        res.fail(s, "trivial solution breaks the recursion at m=" + std::to_string(m));
        return res;
      }
    }
    const SupportList supp = support(s);
    for (Site l = kN - 2; l <= kN + 5; ++l) {
      LaurentInt rhs;
      for (Site k : supp.sites)
        if (k <= l) rhs = rhs + trivial_solution(0, l - k) * trivial_solution(kN, k + 1);
      if (trivial_solution(kN, l) != rhs) {
        res.fail(s, "homogeneous equation violated at l=" + std::to_string(l));
        return res;
      }
    }
    ++res.cases;
  }
  return res;
}

// Reflection relation, including palindromic coefficients of degree kN - m
// for m <= kN.
inline CheckResult check_self_reciprocity(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "self-reciprocity";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const Site k1 = s.lo(), kN = s.hi();
    for (Site m = k1 - 4; m <= kN + 3; ++m) {
      if (!reflection_relation_check(s, m)) {
        res.fail(s, "reflection relation violated at m=" + std::to_string(m));
        return res;
      }
      if (m <= kN) {
        const IntPoly x = jost_closed(s, m);
        if (x.degree() != kN - m) {
          res.fail(s, "degree != kN - m at m=" + std::to_string(m));
          return res;
        }
        for (std::int64_t j = 0; j <= x.degree(); ++j)
          if (x.coeff(j) != x.coeff(x.degree() - j)) {
            res.fail(s, "coefficients not palindromic at m=" + std::to_string(m));
            return res;
          }
      }
    }
    ++res.cases;
  }
  return res;
}

// Single-island two-factor form equals the mod-2 reduction of the closed form
// on its validity window; the binomial exponent identity is enforced inside
// jost_mod2_island.
inline CheckResult check_mod2_island_form(std::uint64_t seed, int cases, int max_width) {
  CheckResult res;
  res.name = "mod2-island-form";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.island(max_width);
    const Site k1 = s.lo(), kN = s.hi();
    for (Site m = k1 - 2; m <= kN; ++m) {
      if (jost_mod2_island(s, m) != mod2(jost_closed(s, m))) {
        res.fail(s, "two-factor form != mod-2 closed form at m=" + std::to_string(m));
        return res;
      }
    }
    ++res.cases;
  }
  return res;
}

// Measured f2 profile reproduces the island bits exactly.
inline CheckResult check_reconstruction(std::uint64_t seed, int cases, int max_width) {
  CheckResult res;
  res.name = "potential-reconstruction";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.island(max_width);
    const Site k1 = s.lo(), kN = s.hi();
    const auto profile = measured_f2_profile(s, k1 - 3, kN);
    if (reconstruct_potential(profile, k1 - 2, kN) != s) {
      res.fail(s, "reconstruction from the f2 profile differs from the island");
      return res;
    }
    ++res.cases;
  }
  return res;
}

// Monodromy record construction (with its internal consistency against the
// linear-system shape), the sum definitions of the monodromy coefficients,
// and the single-island mod-2 image of x_{k1}.
inline CheckResult check_monodromy(std::uint64_t seed, int cases) {
  CheckResult res;
  res.name = "monodromy";
  StateGen gen(seed);
  const IntPoly one_minus_z{1, -1};
  const IntPoly z = IntPoly::monomial(1);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.support_state();
    const MonodromyRecord rec = monodromy(s);
    if (rec.x_k1 != jost_closed(s, s.lo())) {
      res.fail(s, "monodromy record disagrees with the closed form at k1");
      return res;
    }
    // Sum forms of the coefficients, denominators cleared: for every l,
    // (1-z) a_l = (1-z) + z sum_{j>=l} x_{k_j+1} and the companion relation
    // sum_{j>=l} z^{k_j+1} x_{k_j+1} = z^{k_l+1} (1-z) a_l. At l = 1 the
    // first must reproduce x_{k1}.
    const SupportList supp = support(s);
    const Site k1 = supp.k1();
    for (std::size_t l = 0; l < supp.size(); ++l) {
      IntPoly plain_sum, weighted_sum;
      for (std::size_t j = l; j < supp.size(); ++j) {
        const IntPoly x = jost_closed(s, supp.sites[j] + 1);
        plain_sum += x;
        weighted_sum += IntPoly::monomial(std::size_t(supp.sites[j] + 1 - k1)) * x;
      }
      const IntPoly a_l_cleared = one_minus_z + z * plain_sum;
      if (l == 0 && a_l_cleared != rec.x_k1) {
        res.fail(s, "(1-z) a_1 from the sum definition differs from x_{k1}");
        return res;
      }
      if (weighted_sum != IntPoly::monomial(std::size_t(supp.sites[l] + 1 - k1)) * a_l_cleared) {
        res.fail(s, "a_l/b_l relation violated at l=" + std::to_string(l + 1));
        return res;
      }
    }
    if (islands(s).size() == 1) {
      const long long f2 = f_measures(s, s.lo()).at(2);
      const long long e1 = s.hi() - s.lo() - 2 * f2;
      if (mod2(rec.x_k1) != pow(F2Poly{1, 1}, e1) * pow(F2Poly{1, 1, 1}, f2)) {
        res.fail(s, "mod-2 image of x_{k1} differs from the two-factor form");
        return res;
      }
    }
    ++res.cases;
  }
  return res;
}

// --- Lax pair properties ------------------------------------------------------

inline CheckResult check_lax_identity(std::uint64_t seed, int cases, int max_width, int margin) {
  CheckResult res;
  res.name = "lax-identity-mod2";
  StateGen gen(seed);
  {
    const LaxReport zero_report = verify_lax(CaState{}, margin);
    ++res.cases;
    if (!zero_report.pass) {
      res.fail(CaState{}, "zero state fails the Lax identity");
      return res;
    }
  }
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.island(max_width);
    const LaxReport report = verify_lax(s, margin);
    if (!report.pass) {
      res.fail(s, "mod-2 Lax residual nonzero:\n" + report.to_string());
      return res;
    }
    ++res.cases;
  }
  return res;
}

inline CheckResult check_jost_transport(std::uint64_t seed, int cases, int max_width) {
  CheckResult res;
  res.name = "jost-transport-mod2";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.island(max_width);
    if (!jost_transport_check(s)) {
      res.fail(s, "transported Jost solution differs mod 2");
      return res;
    }
    ++res.cases;
  }
  return res;
}

// --- invariants properties ----------------------------------------------------

inline CheckResult check_conservation(std::uint64_t seed, int cases, int max_width, int steps) {
  CheckResult res;
  res.name = "conservation";
  StateGen gen(seed);
  long long exact_count = 0;
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.island(max_width);
    const TrajectoryReport report = check_trajectory(evolve(s, steps));
    if (!report.pass) {
      res.fail(s, report.first_violation);
      return res;
    }
    if (report.x_k1_exact_conserved) ++exact_count;
    ++res.cases;
  }
  res.detail = "x_k1 constant over Z in " + std::to_string(exact_count) + "/" +
               std::to_string(res.cases) + " trajectories (conserved mod 2 in all)";
  return res;
}

inline CheckResult check_f2_transport(std::uint64_t seed, int cases, int max_width) {
  CheckResult res;
  res.name = "f2-transport";
  StateGen gen(seed);
  for (int i = 0; i < cases; ++i) {
    const CaState s = gen.island(max_width);
    if (!f2_transport_check(s)) {
      res.fail(s, "f2 transport law violated");
      return res;
    }
    ++res.cases;
  }
  return res;
}

// Searches islands of width <= max_width for a state whose f1(k1) or f3(k1)
// changes in one step; such witnesses must exist.
inline CheckResult check_nonconservation_witness(int max_width) {
  CheckResult res;
  res.name = "f1-f3-nonconservation-witness";
  const auto f13 = [](const CaState& s) {
    const Site k1 = s.lo(), kN = s.hi();
    const MeasureVector mv = f_measures(s, k1, int(std::max<Site>(3, kN - k1 + 2)));
    return std::pair<long long, long long>(mv.at(1), mv.at(3));
  };
  bool found = false;
  CaState witness;
  for (int width = 1; width <= max_width && !found; ++width) {
    for_each_island_pattern(width, [&](const CaState& s) {
      if (found) return;
      ++res.cases;
      if (f13(s) != f13(step(s))) {
        found = true;
        witness = s;
      }
    });
  }
  if (!found) {
    res.pass = false;
    res.detail = "no island of width <= " + std::to_string(max_width) +
                 " changes f1(k1) or f3(k1) in one step";
  } else {
    res.detail = "witness " + format_state(witness);
  }
  return res;
}

// --- census -------------------------------------------------------------------

struct CensusRow {
  int width = 0;
  std::string pattern;
  long long period = 0;
  InvariantRecord record;
};

inline std::string census_row_line(const CensusRow& row) {
  return "width=" + std::to_string(row.width) + " pattern=" + row.pattern +
         " period=" + std::to_string(row.period) + " " + row.record.to_string();
}

// Steps must return to the initial state within the fixed-border state count.
inline long long orbit_period(const CaState& initial) {
  const long long bound =
      initial.width() <= 2 ? 1 : (1ll << (initial.width() - 2));
  CaState s = step(initial);
  long long t = 1;
  while (s != initial) {
    if (++t > bound) throw std::logic_error("orbit_period: orbit did not close within bound");
    s = step(s);
  }
  return t;
}

// All single islands with k1 = 0 up to the given width, with orbit period and
// invariant record, sorted by (width, pattern).
inline std::vector<CensusRow> census(int max_width) {
  if (max_width < 1 || max_width > 24)
    throw std::invalid_argument("census: width must be in [1, 24]");
  std::vector<CensusRow> rows;
  for (int width = 1; width <= max_width; ++width) {
    for_each_island_pattern(width, [&](const CaState& s) {
      CensusRow row;
      row.width = width;
      for (std::uint8_t b : s.cells) row.pattern += char('0' + b);
      row.period = orbit_period(s);
      row.record = invariant_record(s).front();
      rows.push_back(std::move(row));
    });
  }
  std::sort(rows.begin(), rows.end(), [](const CensusRow& a, const CensusRow& b) {
    return a.width != b.width ? a.width < b.width : a.pattern < b.pattern;
  });
  return rows;
}

// --- suites ---------------------------------------------------------------------

inline std::vector<CheckResult> run_suite(const std::string& suite, std::uint64_t seed,
                                          int cases, int max_width, int margin = 2) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "evolution") {
    out.push_back(check_form_equivalence_window(std::min(max_width, 16)));
    out.push_back(check_form_equivalence_random(seed + 1, cases, max_width + 8));
    out.push_back(check_border_conservation(seed + 2, cases, max_width, 20));
    out.push_back(check_reversibility(seed + 3, cases, max_width, 20));
    out.push_back(check_island_independence(seed + 4, cases, max_width, 20, 3));
    out.push_back(check_period2_orbit());
  }
  if (all || suite == "jost") {
    out.push_back(check_jost_triple_agreement(seed + 10, cases));
    out.push_back(check_recursion_residuals(seed + 11, cases));
    out.push_back(check_asymptotics(seed + 12, cases));
    out.push_back(check_measure_laws(seed + 13, cases));
    out.push_back(check_integral_equation(seed + 14, cases));
    out.push_back(check_trivial_solution(seed + 15, cases));
    out.push_back(check_self_reciprocity(seed + 16, cases));
    out.push_back(check_mod2_island_form(seed + 17, cases, max_width));
    out.push_back(check_reconstruction(seed + 18, cases, max_width));
    out.push_back(check_monodromy(seed + 19, cases));
  }
  if (all || suite == "lax") {
    out.push_back(check_lax_identity(seed + 30, cases, max_width, margin));
    out.push_back(check_jost_transport(seed + 31, cases, max_width));
  }
  if (all || suite == "invariants") {
    out.push_back(check_conservation(seed + 40, cases, max_width, 30));
    out.push_back(check_f2_transport(seed + 41, cases, max_width));
    out.push_back(check_nonconservation_witness(8));
  }
  if (out.empty()) throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
  return out;
}

}  // namespace f2ca
