#pragma once

#include "toriparam/decomposition.hpp"
#include "toriparam/error.hpp"
#include "toriparam/fan.hpp"
#include "toriparam/lattice.hpp"
#include "toriparam/multiplicative.hpp"
#include "toriparam/multipoly.hpp"
#include "toriparam/parametrization.hpp"
#include "toriparam/poly_text.hpp"
#include "toriparam/polytope.hpp"
#include "toriparam/quotient_group.hpp"
#include "toriparam/resolution.hpp"
