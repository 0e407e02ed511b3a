#pragma once

#include <cstddef>
#include <vector>

#include "rscore/matrix.hpp"

namespace rscore {

// Strongly connected components of the directed graph with an edge i -> j
// wherever p(i, j) > 0. Components are listed in ascending order of their
// smallest state; states inside a component are ascending.
std::vector<std::vector<std::size_t>> strongly_connected_components(const Matrix& p);

// Stationary distribution of an irreducible row-stochastic matrix by
// Grassmann-Taksar-Heyman state reduction. The elimination only adds and
// divides nonnegative quantities, so it needs no pivoting.
//
// Throws DataError when p is empty, not square, has a negative entry or a
// row not summing to 1 within 1e-10, or is reducible (the message lists the
// strongly connected components).
std::vector<double> stationary_gth(const Matrix& p);

}  // namespace rscore
