#pragma once

// Umbrella header: the whole library in one include.

#include "hardwall/closed_form.hpp"
#include "hardwall/config.hpp"
#include "hardwall/exact.hpp"
#include "hardwall/expectation.hpp"
#include "hardwall/potential.hpp"
#include "hardwall/quadrature.hpp"
#include "hardwall/runner.hpp"
#include "hardwall/tables.hpp"
#include "hardwall/trial.hpp"
#include "hardwall/varsolve.hpp"
