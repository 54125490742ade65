#pragma once

#include "graphpoly/bigint.hpp"
#include "graphpoly/cut.hpp"
#include "graphpoly/derived.hpp"
#include "graphpoly/edge_set.hpp"
#include "graphpoly/esp.hpp"
#include "graphpoly/graph.hpp"
#include "graphpoly/indep.hpp"
#include "graphpoly/multipoly.hpp"
#include "graphpoly/nilalgebra.hpp"
#include "graphpoly/oracle.hpp"
#include "graphpoly/poly.hpp"
#include "graphpoly/verify.hpp"
