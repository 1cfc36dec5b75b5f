#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f2ca/types.hpp"

namespace f2ca {

// Doubly infinite 0/1 sequence with finite support, stored as the bit run
// between the outermost units. Normal form: cells empty (zero state, offset
// 0), or cells.front() == cells.back() == 1. Sites outside the run are 0.
struct CaState {
  Site offset = 0;
  std::vector<std::uint8_t> cells;

  bool zero() const { return cells.empty(); }
  Site width() const { return Site(cells.size()); }

  // First/last support site. Only defined for nonzero states.
  Site lo() const {
    if (zero()) throw std::logic_error("CaState: zero state has no support");
    return offset;
  }
  Site hi() const {
    if (zero()) throw std::logic_error("CaState: zero state has no support");
    return offset + Site(cells.size()) - 1;
  }

  int bit(Site n) const {
    if (n < offset || n >= offset + Site(cells.size())) return 0;
    return cells[std::size_t(n - offset)];
  }

  bool operator==(const CaState&) const = default;
};

inline CaState make_state(Site offset, std::vector<std::uint8_t> bits) {
  for (std::uint8_t b : bits)
    if (b > 1) throw std::invalid_argument("make_state: cell values must be 0 or 1");
  auto first = std::find(bits.begin(), bits.end(), std::uint8_t{1});
  if (first == bits.end()) return CaState{};
  auto last = std::find(bits.rbegin(), bits.rend(), std::uint8_t{1}).base();
  CaState s;
  s.offset = offset + Site(first - bits.begin());
  s.cells.assign(first, last);
  return s;
}

// Text form "<offset>:<bitstring>" or bare "<bitstring>" (offset 0).
inline CaState parse_state(std::string_view line) {
  if (line.empty()) throw std::runtime_error("state parse error: empty input");
  std::size_t bits_begin = 0;
  Site offset = 0;
  const std::size_t colon = line.find(':');
  if (colon != std::string_view::npos) {
    const char* first = line.data();
    const char* last = line.data() + colon;
    auto [ptr, ec] = std::from_chars(first, last, offset);
    if (ec != std::errc() || ptr != last)
      throw std::runtime_error("state parse error: malformed offset at byte " +
                               std::to_string(ptr - line.data()));
    bits_begin = colon + 1;
  }
  std::vector<std::uint8_t> bits;
  bits.reserve(line.size() - bits_begin);
  for (std::size_t i = bits_begin; i < line.size(); ++i) {
    const char c = line[i];
    if (c != '0' && c != '1')
      throw std::runtime_error("state parse error: invalid character at byte " +
                               std::to_string(i) + " (expected '0' or '1')");
    bits.push_back(std::uint8_t(c - '0'));
  }
  return make_state(offset, std::move(bits));
}

inline std::string format_state(const CaState& s) {
  std::string out = std::to_string(s.offset);
  out += ':';
  for (std::uint8_t b : s.cells) out += char('0' + b);
  return out;
}

// Strictly increasing list of occupied sites k_1 < ... < k_N.
struct SupportList {
  std::vector<Site> sites;

  bool empty() const { return sites.empty(); }
  std::size_t size() const { return sites.size(); }
  Site k1() const { return sites.front(); }
  Site kN() const { return sites.back(); }
};

inline SupportList support(const CaState& s) {
  SupportList out;
  for (Site n = 0; n < Site(s.cells.size()); ++n)
    if (s.cells[std::size_t(n)]) out.sites.push_back(s.offset + n);
  return out;
}

// Maximal run of the support with consecutive gaps <= 3; islands are
// separated from the rest of the state by at least three zero sites.
struct Island {
  CaState state;
  Site k1 = 0;
  Site kN = 0;
};

inline std::vector<Island> islands(const CaState& s) {
  std::vector<Island> out;
  const SupportList supp = support(s);
  std::size_t begin = 0;
  for (std::size_t i = 0; i < supp.sites.size(); ++i) {
    const bool last_in_island =
        i + 1 == supp.sites.size() || supp.sites[i + 1] - supp.sites[i] > 3;
    if (!last_in_island) continue;
    Island isl;
    isl.k1 = supp.sites[begin];
    isl.kN = supp.sites[i];
    std::vector<std::uint8_t> bits(std::size_t(isl.kN - isl.k1 + 1), 0);
    for (Site n = isl.k1; n <= isl.kN; ++n) bits[std::size_t(n - isl.k1)] = std::uint8_t(s.bit(n));
    isl.state = make_state(isl.k1, std::move(bits));
    out.push_back(std::move(isl));
    begin = i + 1;
  }
  return out;
}

// Spatial reflection q'_n = q_{-n}; an involution.
inline CaState reflect(const CaState& s) {
  if (s.zero()) return s;
  std::vector<std::uint8_t> bits(s.cells.rbegin(), s.cells.rend());
  return make_state(-s.hi(), std::move(bits));
}

inline CaState translate(const CaState& s, Site shift) {
  if (s.zero()) return s;
  CaState out = s;
  out.offset += shift;
  return out;
}

}  // namespace f2ca
