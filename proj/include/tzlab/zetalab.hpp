#pragma once

#include "tzlab/zetalab/gue.hpp"
#include "tzlab/zetalab/pair_correlation.hpp"
#include "tzlab/zetalab/spectral.hpp"
#include "tzlab/zetalab/universality.hpp"
#include "tzlab/zetalab/zeros.hpp"
#include "tzlab/zetalab/zeta.hpp"
