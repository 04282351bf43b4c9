#pragma once

#include "bnlat/cubic/marked.hpp"
#include "bnlat/cubic/sigma.hpp"
