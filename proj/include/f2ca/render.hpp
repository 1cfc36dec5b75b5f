#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "f2ca/evolution.hpp"
#include "f2ca/state.hpp"

namespace f2ca {

// Text grid of a trajectory, one row per time step, time running downward.
// Columns cover every support in the trajectory plus a 3-cell margin;
// glyphs[0] draws zero sites, glyphs[1] occupied ones.
inline std::vector<std::string> render_trajectory(const Trajectory& traj,
                                                  std::string_view glyphs = ".#") {
  if (glyphs.size() != 2)
    throw std::invalid_argument("render_trajectory: glyphs must be exactly two characters");
  Site lo = 0, hi = 0;
  bool any = false;
  for (const CaState& s : traj.states) {
    if (s.zero()) continue;
    lo = any ? std::min(lo, s.lo()) : s.lo();
    hi = any ? std::max(hi, s.hi()) : s.hi();
    any = true;
  }
  lo -= 3;
  hi += 3;
  std::vector<std::string> rows;
  rows.reserve(traj.states.size());
  for (const CaState& s : traj.states) {
    std::string row(std::size_t(hi - lo + 1), glyphs[0]);
    for (Site n = lo; n <= hi; ++n)
      if (s.bit(n)) row[std::size_t(n - lo)] = glyphs[1];
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace f2ca
