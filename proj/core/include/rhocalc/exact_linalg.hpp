#pragma once

#include <vector>

#include "rhocalc/cyclotomic.hpp"

namespace rhocalc {

using CyclotomicMatrix = std::vector<std::vector<Cyclotomic>>;

/// Rank over Q(zeta_n) by Gaussian elimination with exact pivots. Entries
/// may have mixed orders; they are lifted to a common field first.
int exact_rank(CyclotomicMatrix matrix);

}  // namespace rhocalc
