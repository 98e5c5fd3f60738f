#pragma once

// Umbrella header for the library (the CLI front end is separate in
// sinint/cli.hpp so library users do not pull in CLI11/json).

#include "sinint/bigint.hpp"
#include "sinint/closedform.hpp"
#include "sinint/oracle.hpp"
#include "sinint/specfun.hpp"
#include "sinint/summation.hpp"
#include "sinint/transforms.hpp"
#include "sinint/triangles.hpp"
