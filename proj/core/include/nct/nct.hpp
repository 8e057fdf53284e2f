/**
 * @file nct.hpp
 * @brief Umbrella header for the noncommutative-torus verification engine.
 */
#pragma once

#include "nct/algebra.hpp"
#include "nct/cocycle.hpp"
#include "nct/common.hpp"
#include "nct/crossed.hpp"
#include "nct/cyclic_action.hpp"
#include "nct/equivariance.hpp"
#include "nct/fixtures.hpp"
#include "nct/gaussian.hpp"
#include "nct/heisenberg.hpp"
#include "nct/metaplectic.hpp"
#include "nct/orbifold.hpp"
#include "nct/serialize.hpp"
#include "nct/symplectic.hpp"
#include "nct/toeplitz.hpp"
