#pragma once

#include "quadwall/arith.hpp"
#include "quadwall/lattice.hpp"
#include "quadwall/tilt.hpp"
#include "quadwall/walls.hpp"
#include "quadwall/search.hpp"
#include "quadwall/cohom.hpp"
#include "quadwall/io.hpp"
#include "quadwall/scenarios.hpp"
#include "quadwall/svg.hpp"
