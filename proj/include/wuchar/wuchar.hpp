#pragma once

#include "wuchar/barycentric.hpp"
#include "wuchar/complex.hpp"
#include "wuchar/curvature.hpp"
#include "wuchar/graph.hpp"
#include "wuchar/product.hpp"
#include "wuchar/random.hpp"
#include "wuchar/topology.hpp"
#include "wuchar/types.hpp"
#include "wuchar/valuation.hpp"
