#pragma once

#include <cstdint>

namespace f2ca {

// Lattice site index. Sites run over all of Z; states are finitely supported.
using Site = std::int64_t;

}  // namespace f2ca
