#pragma once

#include "kscolour/area.hpp"
#include "kscolour/bases.hpp"
#include "kscolour/colouring.hpp"
#include "kscolour/montecarlo.hpp"
#include "kscolour/numerics.hpp"
#include "kscolour/version.hpp"
