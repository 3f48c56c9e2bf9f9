#pragma once

#include "tzlab/fracdyn/arc_fit.hpp"
#include "tzlab/fracdyn/cole_cole.hpp"
#include "tzlab/fracdyn/grunwald.hpp"
#include "tzlab/fracdyn/mittag_leffler.hpp"
#include "tzlab/fracdyn/phase.hpp"
