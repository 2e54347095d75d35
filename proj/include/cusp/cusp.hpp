#pragma once

#include "cusp/arthur.hpp"
#include "cusp/cuspidality.hpp"
#include "cusp/error.hpp"
#include "cusp/notation.hpp"
#include "cusp/partition.hpp"
#include "cusp/satake.hpp"
#include "cusp/scan.hpp"
#include "cusp/small_rep.hpp"
