#pragma once

#include "bnlat/discform/cyclotomic.hpp"
#include "bnlat/discform/discriminant.hpp"
#include "bnlat/discform/easy_test.hpp"
#include "bnlat/discform/gauss_milgram.hpp"
#include "bnlat/discform/isotropic.hpp"
#include "bnlat/discform/overlattice.hpp"
