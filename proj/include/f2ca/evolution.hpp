#pragma once

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "f2ca/state.hpp"
#include "f2ca/types.hpp"

namespace f2ca {

// The update rule in its two algebraically different but pointwise identical
// forms. Mod2 is the residue form, Exact is the signed integer form that
// never leaves {0,1} without any modular reduction.
enum class RuleForm { Mod2, Exact };

// One time step of the filter automaton. The sweep runs left to right over
// the support window; updated values left of the window are zero, which is
// the unique seeding consistent with border conservation. Support borders of
// each island are preserved, so the output window equals the input window.
inline CaState step(const CaState& state, RuleForm form = RuleForm::Mod2) {
  if (state.zero()) return state;
  const Site k1 = state.lo();
  const Site kN = state.hi();
  std::vector<std::uint8_t> out(std::size_t(kN - k1 + 1), 0);
  const auto q = [&](Site n) { return state.bit(n); };
  const auto q_new = [&](Site n) -> int {
    return n < k1 ? 0 : out[std::size_t(n - k1)];
  };
  for (Site m = k1; m <= kN; ++m) {
    const int u = q_new(m - 1) * q(m + 2);
    const int v = q_new(m - 2) * q(m + 1);
    int value;
    if (form == RuleForm::Mod2) {
      value = (q(m) + u + v) % 2;
    } else {
      value = q(m) - std::abs(u - v) * (2 * q(m) - 1);
      if (value != 0 && value != 1)
        throw std::logic_error("step: exact rule left {0,1}");
    }
    out[std::size_t(m - k1)] = std::uint8_t(value);
  }
  return make_state(k1, std::move(out));
}

// Inverse step, via time reversal: reflect, step, reflect back.
inline CaState reverse_step(const CaState& state, RuleForm form = RuleForm::Mod2) {
  return reflect(step(reflect(state), form));
}

struct Trajectory {
  RuleForm form = RuleForm::Mod2;
  std::vector<CaState> states;  // states[0] is the initial state

  const CaState& initial() const { return states.front(); }
  Site step_count() const { return Site(states.size()) - 1; }
};

inline Trajectory evolve(const CaState& state, Site steps, RuleForm form = RuleForm::Mod2) {
  if (steps < 0) throw std::invalid_argument("evolve: negative step count");
  Trajectory traj;
  traj.form = form;
  traj.states.reserve(std::size_t(steps) + 1);
  traj.states.push_back(state);
  for (Site t = 0; t < steps; ++t) traj.states.push_back(step(traj.states.back(), form));
  return traj;
}

}  // namespace f2ca
