#pragma once

#include "bnlat/latcore/enumerate.hpp"
#include "bnlat/latcore/errors.hpp"
#include "bnlat/latcore/integer.hpp"
#include "bnlat/latcore/isometry.hpp"
#include "bnlat/latcore/lattice.hpp"
#include "bnlat/latcore/linalg.hpp"
#include "bnlat/latcore/matrix.hpp"
#include "bnlat/latcore/snf.hpp"
#include "bnlat/latcore/sublattice.hpp"
