#pragma once

#include "bnlat/k3/polarized.hpp"
