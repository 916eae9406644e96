#pragma once

#include "propb/bounds.hpp"
#include "propb/build.hpp"
#include "propb/cnf.hpp"
#include "propb/constructions.hpp"
#include "propb/exact.hpp"
#include "propb/hg_io.hpp"
#include "propb/hypergraph.hpp"
#include "propb/lowerbounds.hpp"
#include "propb/prediction.hpp"
#include "propb/recipe.hpp"
#include "propb/seeds.hpp"
#include "propb/solver.hpp"
