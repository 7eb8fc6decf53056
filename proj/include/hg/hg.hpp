#pragma once

// Umbrella header for the whole library.

#include "hg/amenability.hpp"
#include "hg/axioms.hpp"
#include "hg/catalog/cache_io.hpp"
#include "hg/catalog/chebyshev.hpp"
#include "hg/catalog/conjugacy.hpp"
#include "hg/catalog/group_table.hpp"
#include "hg/catalog/product.hpp"
#include "hg/catalog/selector.hpp"
#include "hg/catalog/su2_dual.hpp"
#include "hg/catalog/su3_dual.hpp"
#include "hg/catalog/su3_fusion.hpp"
#include "hg/element.hpp"
#include "hg/errors.hpp"
#include "hg/finite_function.hpp"
#include "hg/growth.hpp"
#include "hg/hypergroup.hpp"
#include "hg/measure.hpp"
#include "hg/numeric.hpp"
#include "hg/ops.hpp"
