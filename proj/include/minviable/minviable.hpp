#pragma once

#include "minviable/business_case.hpp"
#include "minviable/analytic_bounds.hpp"
#include "minviable/roc_sim.hpp"
#include "minviable/landscape.hpp"
#include "minviable/output.hpp"
