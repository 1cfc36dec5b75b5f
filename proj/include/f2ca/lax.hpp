#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "f2ca/evolution.hpp"
#include "f2ca/jost.hpp"
#include "f2ca/poly.hpp"
#include "f2ca/state.hpp"

namespace f2ca {

// Finite window of a banded operator. Entries live on (row, col) pairs inside
// [lo, hi]^2; absent entries are zero. L is stored over Laurent polynomials
// in w, A over constants (as degenerate Laurent polynomials).
struct OperatorWindow {
  Site lo = 0;
  Site hi = -1;
  std::map<Site, std::map<Site, LaurentInt>> rows;

  void set(Site r, Site c, LaurentInt v) {
    if (v.zero()) return;
    rows[r][c] = std::move(v);
  }
  const LaurentInt* entry(Site r, Site c) const {
    const auto row = rows.find(r);
    if (row == rows.end()) return nullptr;
    const auto cell = row->second.find(c);
    return cell == row->second.end() ? nullptr : &cell->second;
  }
  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& [r, row] : rows) n += row.size();
    return n;
  }
};

inline OperatorWindow window_mul(const OperatorWindow& a, const OperatorWindow& b) {
  if (a.lo != b.lo || a.hi != b.hi)
    throw std::invalid_argument("window_mul: mismatched windows");
  OperatorWindow out;
  out.lo = a.lo;
  out.hi = a.hi;
  for (const auto& [r, row] : a.rows) {
    for (const auto& [k, av] : row) {
      const auto brow = b.rows.find(k);
      if (brow == b.rows.end()) continue;
      for (const auto& [c, bv] : brow->second) {
        LaurentInt& cell = out.rows[r][c];
        cell = cell + av * bv;
      }
    }
  }
  for (auto& [r, row] : out.rows)
    std::erase_if(row, [](const auto& cell) { return cell.second.zero(); });
  std::erase_if(out.rows, [](const auto& row) { return row.second.empty(); });
  return out;
}

inline OperatorWindow window_sub(const OperatorWindow& a, const OperatorWindow& b) {
  if (a.lo != b.lo || a.hi != b.hi)
    throw std::invalid_argument("window_sub: mismatched windows");
  OperatorWindow out = a;
  for (const auto& [r, row] : b.rows)
    for (const auto& [c, v] : row) {
      LaurentInt& cell = out.rows[r][c];
      cell = cell - v;
    }
  for (auto& [r, row] : out.rows)
    std::erase_if(row, [](const auto& cell) { return cell.second.zero(); });
  std::erase_if(out.rows, [](const auto& row) { return row.second.empty(); });
  return out;
}

// Tridiagonal Schroedinger operator window:
// L_{m,m-1} = 1, L_{m,m} = -(w + 1/w), L_{m,m+1} = 1 + q_m.
inline OperatorWindow build_L(const CaState& state, Site lo, Site hi) {
  if (hi < lo) throw std::invalid_argument("build_L: empty window");
  if (!state.zero() && (lo > state.lo() - 2 || hi < state.hi() + 2))
    throw std::invalid_argument("build_L: window too small, need lo <= k1-2 and hi >= kN+2");
  OperatorWindow w;
  w.lo = lo;
  w.hi = hi;
  const LaurentInt diag(-1, {-1, 0, -1});  // -(w + 1/w)
  for (Site m = lo; m <= hi; ++m) {
    if (m - 1 >= lo) w.set(m, m - 1, LaurentInt::one());
    w.set(m, m, diag);
    if (m + 1 <= hi) w.set(m, m + 1, LaurentInt::monomial(0, 1 + state.bit(m)));
  }
  return w;
}

// Evolution operator window: identity plus couplings -q^_{m-1} q_{m+2} at
// (m, m+2), mixing the updated and the original state.
inline OperatorWindow build_A(const CaState& state, const CaState& evolved, Site lo, Site hi) {
  if (hi < lo) throw std::invalid_argument("build_A: empty window");
  if (!state.zero() && (lo > state.lo() - 2 || hi < state.hi() + 2))
    throw std::invalid_argument("build_A: window too small, need lo <= k1-2 and hi >= kN+2");
  if (evolved != step(state))
    throw std::invalid_argument("build_A: evolved state is not step(state)");
  OperatorWindow w;
  w.lo = lo;
  w.hi = hi;
  for (Site m = lo; m <= hi; ++m) {
    w.set(m, m, LaurentInt::one());
    if (m + 2 <= hi && evolved.bit(m - 1) && state.bit(m + 2))
      w.set(m, m + 2, LaurentInt::monomial(0, -1));
  }
  return w;
}

// Result of checking L^{t+1} A - A L^t = 0 mod 2 on the window interior.
// The exact residual is generally nonzero; only its mod-2 image vanishes.
struct LaxReport {
  bool pass = true;
  Site lo = 0;
  Site hi = 0;
  int margin = 2;
  std::vector<std::tuple<Site, Site, LaurentInt>> violations;

  // One line per violating entry; an empty report means pass.
  std::string to_string() const {
    std::string out;
    for (const auto& [r, c, v] : violations) {
      out += '(';
      out += std::to_string(r);
      out += ',';
      out += std::to_string(c);
      out += "): ";
      out += f2ca::to_string(v, "w");
      out += '\n';
    }
    return out;
  }
};

inline LaxReport verify_lax(const CaState& state, int margin = 2) {
  if (margin < 2) throw std::invalid_argument("verify_lax: margin must be >= 2");
  LaxReport report;
  report.margin = margin;
  if (state.zero()) {
    report.lo = -2 - margin;
    report.hi = 2 + margin;
  } else {
    report.lo = state.lo() - 2 - margin;
    report.hi = state.hi() + 2 + margin;
  }
  const CaState evolved = step(state);
  const OperatorWindow l0 = build_L(state, report.lo, report.hi);
  const OperatorWindow l1 = build_L(evolved, report.lo, report.hi);
  const OperatorWindow a = build_A(state, evolved, report.lo, report.hi);
  const OperatorWindow residual = window_sub(window_mul(l1, a), window_mul(a, l0));
  const auto interior = [&](Site i) {
    return i - report.lo >= margin && report.hi - i >= margin;
  };
  for (const auto& [r, row] : residual.rows) {
    if (!interior(r)) continue;
    for (const auto& [c, v] : row) {
      if (!interior(c) || mod2_zero(v)) continue;
      report.pass = false;
      report.violations.emplace_back(r, c, laurent_mod2(v));
    }
  }
  return report;
}

// Mod-2 residual of x_{m-1} + (1+z) x_m + z (1+q_m) x_{m+1} over the stored
// window of the table.
inline bool schrodinger_residual_mod2(const CaState& state, const JostTable& table) {
  const Site m_hi = state.zero() ? table.m_max : state.hi();
  const F2Poly one_plus_z{1, 1};
  const F2Poly z{0, 1};
  for (Site m = table.m_min + 1; m <= m_hi; ++m) {
    F2Poly residual = mod2(table.value(m - 1)) + one_plus_z * mod2(table.value(m));
    if (!state.bit(m)) residual = residual + z * mod2(table.value(m + 1));
    if (!residual.zero()) return false;
  }
  return true;
}

// Transport of the Jost solution under one step:
// x^_m = x_m + z q^_{m-1} q_{m+2} x_{m+2} mod 2 at every site.
inline bool jost_transport_check(const CaState& state) {
  if (state.zero()) throw std::invalid_argument("jost_transport_check: zero state excluded");
  const Site k1 = state.lo();
  const Site kN = state.hi();
  const CaState evolved = step(state);
  const Site m_lo = k1 - 4;
  const JostTable before = jost_sweep(state, m_lo);
  const JostTable after = jost_sweep(evolved, m_lo);
  const F2Poly z{0, 1};
  for (Site m = m_lo; m <= kN + 1; ++m) {
    F2Poly rhs = mod2(before.value(m));
    if (evolved.bit(m - 1) && state.bit(m + 2))
      rhs = rhs + z * mod2(before.value(m + 2));
    if (mod2(after.value(m)) != rhs) return false;
  }
  return true;
}

}  // namespace f2ca
