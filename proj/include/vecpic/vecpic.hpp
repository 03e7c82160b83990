#pragma once

#include "vecpic/numeric.hpp"
#include "vecpic/nodal_graph.hpp"
#include "vecpic/balance.hpp"
#include "vecpic/invariants.hpp"
#include "vecpic/boundary.hpp"
#include "vecpic/polynomial.hpp"
#include "vecpic/taut.hpp"
#include "vecpic/lattice.hpp"
#include "vecpic/picard.hpp"
#include "vecpic/testcurves.hpp"
#include "vecpic/hstab.hpp"
