#pragma once

#include "tzlab/cli/app.hpp"
#include "tzlab/cli/output.hpp"
