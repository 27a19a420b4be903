#pragma once

#include "dqinterp/algebra.hpp"
#include "dqinterp/cli.hpp"
#include "dqinterp/conversions.hpp"
#include "dqinterp/error.hpp"
#include "dqinterp/interpolation.hpp"
#include "dqinterp/trajectory_file.hpp"
