#pragma once

#include "circwl/arith.hpp"
#include "circwl/automorphisms.hpp"
#include "circwl/canonical.hpp"
#include "circwl/coherent.hpp"
#include "circwl/cyclotomy.hpp"
#include "circwl/deza.hpp"
#include "circwl/errors.hpp"
#include "circwl/families.hpp"
#include "circwl/group.hpp"
#include "circwl/schur_ring.hpp"
#include "circwl/survey.hpp"
#include "circwl/tables.hpp"
#include "circwl/wl_dimension.hpp"
