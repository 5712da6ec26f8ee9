#pragma once

#include <vector>

#include "sqg/field.hpp"

namespace sqg {

/// Half-widths, in grid cells, of the centered squares used by
/// maximal_function: 0 (the cell itself) then 1, 2, 4, ... up to N/4.
std::vector<int> maximal_half_widths(const Grid2D& grid);

/// Discrete centered maximal function on the torus: at every grid point, the
/// largest average of |f| over the (2m+1) x (2m+1) cell squares centered
/// there, m in maximal_half_widths(). Pointwise >= |f|.
ScalarField maximal_function(const ScalarField& f);

}  // namespace sqg
