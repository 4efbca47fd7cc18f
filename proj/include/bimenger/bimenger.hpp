#pragma once

#include "bimenger/error.hpp"
#include "bimenger/rational.hpp"
#include "bimenger/bigraph.hpp"
#include "bimenger/walks.hpp"
#include "bimenger/oracle.hpp"
#include "bimenger/reduce.hpp"
#include "bimenger/simplex.hpp"
#include "bimenger/branch_bound.hpp"
#include "bimenger/regularity.hpp"
#include "bimenger/lp_programs.hpp"
#include "bimenger/certify.hpp"
#include "bimenger/instance_io.hpp"
