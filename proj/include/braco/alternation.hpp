#pragma once
// The alternating-walk boundary rule.
//
// An arc walks through the stops p_0, p_1, ..., p_{n+1} (start, the sheets it
// passes under or through, end) and carries a disorientation sign s.  The
// subarc from p_i to p_{i+1} is traversed forward exactly when s * (-1)^i is
// +1; a forward subarc contributes p_{i+1} - p_i to the boundary, a backward
// one the negative.  Every stop is entered once and left once with opposite
// local signs, so the column always sums to zero.

#include <cstddef>
#include <vector>

#include "intmatrix.hpp"

namespace braco::detail {

// `stops` holds the row indices of p_0..p_{n+1}; the contribution is added to
// column `col` of `m`.
inline void add_alternating_walk(IntMatrix& m, std::size_t col,
                                 const std::vector<std::size_t>& stops, int sign) {
  for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
    const int dir = (i % 2 == 0) ? sign : -sign;
    m(stops[i + 1], col) += dir;
    m(stops[i], col) -= dir;
  }
}

}  // namespace braco::detail
