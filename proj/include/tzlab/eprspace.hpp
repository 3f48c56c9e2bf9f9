#pragma once

#include "tzlab/eprspace/fiber.hpp"
#include "tzlab/eprspace/lattice.hpp"
#include "tzlab/eprspace/prime_vector.hpp"
