#pragma once

// Umbrella header: the whole library.

#include "specix/biseries.hpp"
#include "specix/cycle_index.hpp"
#include "specix/enumerate.hpp"
#include "specix/fixfn.hpp"
#include "specix/inner_plethysm.hpp"
#include "specix/oracle.hpp"
#include "specix/partition.hpp"
#include "specix/phi.hpp"
#include "specix/pseries.hpp"
#include "specix/rational.hpp"
#include "specix/species.hpp"
