#pragma once

#include "tzlab/loopgas/dynamics.hpp"
#include "tzlab/loopgas/kernel.hpp"
#include "tzlab/loopgas/lattice.hpp"
#include "tzlab/loopgas/sampling.hpp"
