#pragma once

#include "orspan/error.hpp"
#include "orspan/geometry.hpp"
#include "orspan/instances.hpp"
#include "orspan/oriented_graph.hpp"
#include "orspan/spanners_1d.hpp"
#include "orspan/spanners_2d.hpp"
