// Umbrella header.

#ifndef CTOEP_CTOEP_HPP
#define CTOEP_CTOEP_HPP

#include "ctoep/asymptotics.hpp"
#include "ctoep/charpoly.hpp"
#include "ctoep/core.hpp"
#include "ctoep/eigvec.hpp"
#include "ctoep/oracle.hpp"
#include "ctoep/solver.hpp"
#include "ctoep/symbol.hpp"

#endif  // CTOEP_CTOEP_HPP
