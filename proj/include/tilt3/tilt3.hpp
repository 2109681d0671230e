#pragma once

// Umbrella header; users should normally include only this file.

#include "tilt3/chern.hpp"
#include "tilt3/constraints.hpp"
#include "tilt3/heart.hpp"
#include "tilt3/quad.hpp"
#include "tilt3/rational.hpp"
#include "tilt3/stability.hpp"
#include "tilt3/verify.hpp"
#include "tilt3/walls.hpp"
