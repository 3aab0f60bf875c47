#pragma once

#include "gw/algebra.hpp"

namespace gw {

// Retained by the triangular / A3 / S3 constructors so module code can slice
// along the construction (base algebra plus block layout).
struct ProductData {
    StructAlgebra base;
    std::size_t n = 0;                                     // number of diagonal blocks
    std::vector<std::pair<std::size_t, std::size_t>> cells; // (row, col) per block, row >= col
};

} // namespace gw
