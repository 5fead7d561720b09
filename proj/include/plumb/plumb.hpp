#pragma once

#include "plumb/rational.hpp"
#include "plumb/graph.hpp"
#include "plumb/linalg.hpp"
#include "plumb/form.hpp"
#include "plumb/smith.hpp"
#include "plumb/lattice.hpp"
#include "plumb/discriminant.hpp"
#include "plumb/chi_min.hpp"
#include "plumb/invariants.hpp"
#include "plumb/series.hpp"
#include "plumb/oracle.hpp"
