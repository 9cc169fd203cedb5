#pragma once

// Umbrella header for the whole toolkit.

#include "bounds.hpp"
#include "braid.hpp"
#include "diagram.hpp"
#include "foliation.hpp"
#include "free_group.hpp"
#include "homfly.hpp"
#include "invariants.hpp"
#include "json_io.hpp"
#include "laurent.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "table.hpp"
