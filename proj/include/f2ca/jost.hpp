#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "f2ca/poly.hpp"
#include "f2ca/state.hpp"
#include "f2ca/types.hpp"

namespace f2ca {

// Values x_m(z) of the Jost solution for m in [m_min, m_max], normalized to
// x_m = 1 for m >= kN. For the zero state every value is 1.
struct JostTable {
  SupportList supp;
  Site m_min = 0;
  Site m_max = 0;
  std::vector<IntPoly> values;

  IntPoly value(Site m) const {
    if (supp.empty()) return IntPoly::one();
    if (m > m_max) return IntPoly::one();
    if (m < m_min) throw std::invalid_argument("JostTable: site below m_min");
    return values[std::size_t(m - m_min)];
  }
};

// Descending sweep of x_{m-1} = (1+z) x_m - z (1-q_m) x_{m+1}, anchored at
// x_m = 1 for m >= kN. This is the brute-force route the closed forms are
// checked against.
inline JostTable jost_sweep(const CaState& state, Site m_min) {
  JostTable t;
  t.supp = support(state);
  t.m_min = m_min;
  if (t.supp.empty()) {
    t.m_max = m_min;
    t.values = {IntPoly::one()};
    return t;
  }
  const Site kN = t.supp.kN();
  if (m_min > kN + 1) throw std::invalid_argument("jost_sweep: m_min above kN + 1");
  t.m_max = kN + 1;
  t.values.assign(std::size_t(t.m_max - m_min + 1), IntPoly{});
  const auto at = [&](Site m) -> IntPoly& { return t.values[std::size_t(m - m_min)]; };
  at(t.m_max) = IntPoly::one();
  if (kN >= m_min) at(kN) = IntPoly::one();
  const IntPoly one_plus_z{1, 1};
  const IntPoly z = IntPoly::monomial(1);
  for (Site m = kN; m > m_min; --m) {
    IntPoly next = one_plus_z * at(m);
    if (!state.bit(m)) next -= z * at(m + 1);
    at(m - 1) = std::move(next);
  }
  // Every stored value must satisfy the recursion exactly.
  for (Site m = m_min + 1; m <= kN; ++m) {
    IntPoly residual = at(m - 1) - one_plus_z * at(m);
    if (!state.bit(m)) residual += z * at(m + 1);
    if (!residual.zero()) throw std::logic_error("jost_sweep: recursion residual nonzero");
  }
  return t;
}

// Closed form: x_m = 1 for m >= kN, and otherwise a product of geometric
// factors, one per support gap above m plus one reaching down to m. Valid
// for any finite support, single island or not.
inline IntPoly jost_closed(const CaState& state, Site m) {
  const SupportList s = support(state);
  if (s.empty() || m >= s.kN()) return IntPoly::one();
  const auto it = std::lower_bound(s.sites.begin(), s.sites.end(), m);
  IntPoly x = geometric(*it - m + 1);
  for (auto j = it; j + 1 != s.sites.end(); ++j) x *= geometric(*(j + 1) - *j + 1);
  return x;
}

// Defect measures f_i(m), i = 1..i_max. f_i(m) counts the (i-1)-defects
// (patterns 1 0..0 1 with i-1 zeros) strictly above m, plus 1 when the first
// occupied site at or above m+1 sits exactly at m+i.
struct MeasureVector {
  Site site = 0;
  std::vector<long long> f;

  long long at(int i) const {
    if (i < 1 || std::size_t(i) > f.size())
      throw std::out_of_range("MeasureVector: index outside [1, i_max]");
    return f[std::size_t(i - 1)];
  }
  int i_max() const { return int(f.size()); }
};

// i_max <= 0 selects the smallest cutoff beyond which every measure is zero:
// kN - k1 + 2 for m >= k1, extended to k1 - m below the support so the lone
// tail delta is still captured.
inline MeasureVector f_measures(const CaState& state, Site m, int i_max = 0) {
  const SupportList s = support(state);
  if (i_max <= 0) {
    if (s.empty()) {
      i_max = 1;
    } else {
      Site cutoff = std::max<Site>(s.kN() - s.k1() + 2, 1);
      if (m < s.k1()) cutoff = std::max<Site>(cutoff, s.k1() - m);
      i_max = int(cutoff);
    }
  }
  MeasureVector mv;
  mv.site = m;
  mv.f.assign(std::size_t(i_max), 0);
  if (s.empty()) return mv;
  for (std::size_t j = 0; j + 1 < s.sites.size(); ++j) {
    if (s.sites[j] < m + 1) continue;
    const Site gap = s.sites[j + 1] - s.sites[j];
    if (gap <= i_max) ++mv.f[std::size_t(gap - 1)];
  }
  const auto it = std::lower_bound(s.sites.begin(), s.sites.end(), m + 1);
  if (it != s.sites.end()) {
    const Site i = *it - m;
    if (i <= i_max) ++mv.f[std::size_t(i - 1)];
  }
  return mv;
}

inline std::string to_string(const MeasureVector& mv) {
  std::string out;
  for (int i = 1; i <= mv.i_max(); ++i) {
    if (i > 1) out += ' ';
    out += 'f';
    out += std::to_string(i);
    out += '=';
    out += std::to_string(mv.at(i));
  }
  return out;
}

// Product form x_m = prod_k ((1 - z^{k+1})/(1 - z))^{f_k(m)}; the empty
// product for m >= kN gives 1.
inline IntPoly jost_product(const CaState& state, Site m) {
  const MeasureVector mv = f_measures(state, m);
  IntPoly x = IntPoly::one();
  for (int k = 1; k <= mv.i_max(); ++k)
    if (mv.at(k) > 0) x *= pow(geometric(k + 1), mv.at(k));
  return x;
}

// The solution that vanishes on and below kN: 0 for m <= kN and
// (1 - z^{kN-m})/(1 - 1/z) above. It satisfies the recursion at every site
// and blocks a Jost normalization at -infinity.
inline LaurentInt trivial_solution(Site kN, Site m) {
  if (m <= kN) return LaurentInt{};
  return LaurentInt(-(m - kN - 1), std::vector<BigInt>(std::size_t(m - kN), 1));
}

// Checks x_m - z^{kN} x~_m = theta(m >= kN) (1 - 1/z) x_{0,m} with
// x~_m(z) = z^{-m} x_m(1/z). For m <= kN this is self-reciprocity of x_m.
inline bool reflection_relation_check(const CaState& state, Site m) {
  if (state.zero())
    throw std::invalid_argument("reflection_relation_check: zero state excluded");
  const Site kN = state.hi();
  const LaurentInt x = laurent(jost_closed(state, m));
  const LaurentInt xt = substitute_inverse(x, -m);
  const LaurentInt lhs = x - LaurentInt::monomial(kN) * xt;
  LaurentInt rhs;
  if (m >= kN)
    rhs = (LaurentInt::one() - LaurentInt::monomial(-1)) * trivial_solution(kN, m);
  return lhs == rhs;
}

// Single-island mod-2 form (1+z)^{kN-m-2 f2(m)} (1+z+z^2)^{f2(m)}, valid for
// k1 - 2 <= m <= kN only.
inline F2Poly jost_mod2_island(const CaState& state, Site m) {
  if (islands(state).size() != 1)
    throw std::invalid_argument("jost_mod2_island: state must be a single island");
  const Site k1 = state.lo();
  const Site kN = state.hi();
  if (m < k1 - 2 || m > kN)
    throw std::invalid_argument(
        "jost_mod2_island: site outside the validity window [k1-2, kN] of the "
        "single-island form");
  const MeasureVector mv = f_measures(state, m);
  for (int i = 4; i <= mv.i_max(); ++i)
    if (mv.at(i) != 0) throw std::logic_error("jost_mod2_island: f_i != 0 for i >= 4");
  const long long f1 = mv.at(1);
  const long long f2 = mv.at(2);
  const long long f3 = mv.i_max() >= 3 ? mv.at(3) : 0;
  const long long e1 = kN - m - 2 * f2;
  if (e1 < 0 || e1 != f1 + 3 * f3)
    throw std::logic_error("jost_mod2_island: exponent identity violated");
  return pow(F2Poly{1, 1}, e1) * pow(F2Poly{1, 1, 1}, f2);
}

// f2 profile of a state over [m_lo, m_hi], as consumed by
// reconstruct_potential.
inline std::map<Site, long long> measured_f2_profile(const CaState& state, Site m_lo, Site m_hi) {
  std::map<Site, long long> out;
  for (Site m = m_lo; m <= m_hi; ++m) out[m] = f_measures(state, m).at(2);
  return out;
}

// Recovers q_m = 1 - |f2(m) - f2(m-1)| for m in [m_lo, m_hi]. The profile
// must cover [m_lo - 1, m_hi] and come from a single island, so consecutive
// differences have magnitude at most 1.
inline CaState reconstruct_potential(const std::map<Site, long long>& f2_profile,
                                     Site m_lo, Site m_hi) {
  if (m_hi < m_lo) throw std::invalid_argument("reconstruct_potential: empty range");
  std::vector<std::uint8_t> bits(std::size_t(m_hi - m_lo + 1), 0);
  for (Site m = m_lo; m <= m_hi; ++m) {
    const auto cur = f2_profile.find(m);
    const auto prev = f2_profile.find(m - 1);
    if (cur == f2_profile.end() || prev == f2_profile.end())
      throw std::invalid_argument("reconstruct_potential: profile missing site " +
                                  std::to_string(cur == f2_profile.end() ? m : m - 1));
    const long long d = cur->second - prev->second;
    if (d < -1 || d > 1)
      throw std::invalid_argument("reconstruct_potential: inconsistent profile at site " +
                                  std::to_string(m));
    bits[std::size_t(m - m_lo)] = std::uint8_t(1 - (d < 0 ? -d : d));
  }
  return make_state(m_lo, std::move(bits));
}

// Coefficient of z^1 in x_m, which equals the number of occupied sites
// strictly above m.
inline long long asymptotic_tail_sum(const CaState& state, Site m) {
  return jost_closed(state, m).coeff(1).convert_to<long long>();
}

// Sum rules: sum_i f_i(m) equals the occupied count above m, and
// sum_i i f_i(m) equals kN - m for m <= kN (zero above).
inline bool sum_rules_check(const CaState& state, Site m) {
  const SupportList s = support(state);
  const MeasureVector mv = f_measures(state, m);
  long long s0 = 0, s1 = 0;
  for (int i = 1; i <= mv.i_max(); ++i) {
    s0 += mv.at(i);
    s1 += i * mv.at(i);
  }
  long long tail = 0;
  for (Site k : s.sites)
    if (k >= m + 1) ++tail;
  const long long weighted = (!s.empty() && m <= s.kN()) ? s.kN() - m : 0;
  return s0 == tail && s1 == weighted;
}

// Monodromy data: a(z) = x_{k1}(z)/(1-z) and b(z) = -z^{k1+1} a(z) are
// carried through the polynomial x_{k1} and the site k1, keeping the whole
// pipeline in polynomial rings.
struct MonodromyRecord {
  Site k1 = 0;
  IntPoly x_k1;
  bool a_den_removed = true;
};

inline MonodromyRecord monodromy(const CaState& state) {
  if (state.zero()) throw std::invalid_argument("monodromy: zero state has no k1");
  MonodromyRecord rec;
  rec.k1 = state.lo();
  rec.x_k1 = jost_closed(state, rec.k1);
  // Below k1 the Jost solution is a1 (1 - z^{k1-m+1}); check three sites.
  for (const Site m : {rec.k1, rec.k1 - 2, rec.k1 - 5}) {
    const IntPoly expected = div_exact_one_minus_z(
        rec.x_k1 * (IntPoly::one() - IntPoly::monomial(std::size_t(rec.k1 - m + 1))));
    if (jost_closed(state, m) != expected)
      throw std::logic_error("monodromy: x_m below k1 deviates from a1 (1 - z^{k1-m+1})");
  }
  return rec;
}

}  // namespace f2ca
