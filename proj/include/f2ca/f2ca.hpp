#pragma once

#include "f2ca/checks.hpp"
#include "f2ca/evolution.hpp"
#include "f2ca/invariants.hpp"
#include "f2ca/jost.hpp"
#include "f2ca/lax.hpp"
#include "f2ca/poly.hpp"
#include "f2ca/random.hpp"
#include "f2ca/render.hpp"
#include "f2ca/state.hpp"
#include "f2ca/types.hpp"
