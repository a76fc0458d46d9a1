#pragma once

#include "tileforge/attractor.hpp"
#include "tileforge/connectivity.hpp"
#include "tileforge/digitset.hpp"
#include "tileforge/errors.hpp"
#include "tileforge/jordan.hpp"
#include "tileforge/lattice.hpp"
#include "tileforge/points.hpp"
#include "tileforge/ratmath.hpp"
#include "tileforge/spectrum.hpp"
