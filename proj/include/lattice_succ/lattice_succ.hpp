#pragma once

#include "lattice_succ/errors.hpp"
#include "lattice_succ/core_arith.hpp"
#include "lattice_succ/cf_engine.hpp"
#include "lattice_succ/successor.hpp"
#include "lattice_succ/report.hpp"
#include "lattice_succ/sequences.hpp"
#include "lattice_succ/oracle.hpp"
#include "lattice_succ/tiling.hpp"
