#pragma once

#include "tzlab/fitkit/fit.hpp"
#include "tzlab/fitkit/nelder_mead.hpp"
#include "tzlab/fitkit/spectrum.hpp"
