#pragma once

#include "polaritylab/acceptance.hpp"
#include "polaritylab/brute.hpp"
#include "polaritylab/comparability.hpp"
#include "polaritylab/dimacs.hpp"
#include "polaritylab/errors.hpp"
#include "polaritylab/formula.hpp"
#include "polaritylab/gadget.hpp"
#include "polaritylab/generators.hpp"
#include "polaritylab/graph.hpp"
#include "polaritylab/oracles.hpp"
#include "polaritylab/partition.hpp"
#include "polaritylab/reduction.hpp"
#include "polaritylab/solver.hpp"
#include "polaritylab/vertex_set.hpp"
