#pragma once

#include "gw/fp_matrix.hpp"
#include "gw/module.hpp"

#include <vector>

namespace gw {

// Basis of Hom((+) e_{src[a]} A, (+) e_{dst[b]} A) in the direct-sum
// coordinates used by projective_cover: block a of the source carries the
// column_space_basis of left multiplication by e_{src[a]}, likewise the
// target. Each basis map is left multiplication by a corner element
// y in e_{dst[b]} A e_{src[a]}. Avoids the generic hom_space solve, whose
// cost on large covers dominates transpose computations.
std::vector<FpMatrix> projective_hom_basis(const std::shared_ptr<const StructAlgebra>& alg,
                                           const std::vector<std::size_t>& src,
                                           const std::vector<std::size_t>& dst);

// Star module of a cover, with the structured hom basis: block j of the
// hom coordinates is A e_{idems[j]}, acting by left multiplication.
StarModule star_of_cover(const Cover& c, std::shared_ptr<const StructAlgebra> op);

// Basis of Hom(P, N) for the cover's projective, again in the cover's
// direct-sum coordinates: block j contributes one map per basis vector m
// of N e_{idems[j]}, sending z to m z.
std::vector<FpMatrix> cover_hom_basis(const Cover& c, const Module& n);

} // namespace gw

namespace gw::detail {

// Column-major vectorization of a matrix and its inverse.
inline FpMatrix vec(const FpMatrix& m) {
    FpMatrix v(m.rows() * m.cols(), 1, m.prime());
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (std::size_t r = 0; r < m.rows(); ++r) v.set(c * m.rows() + r, 0, m.at(r, c));
    return v;
}

inline FpMatrix unvec(const FpMatrix& v, std::size_t rows, std::size_t cols) {
    FpMatrix m(rows, cols, v.prime());
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) m.set(r, c, v.at(c * rows + r, 0));
    return m;
}

inline FpMatrix vec_all(const std::vector<FpMatrix>& mats, std::size_t rows, std::size_t cols,
                        std::uint32_t p) {
    FpMatrix out(rows * cols, mats.size(), p);
    for (std::size_t k = 0; k < mats.size(); ++k)
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r)
                out.set(c * rows + r, k, mats[k].at(r, c));
    return out;
}

} // namespace gw::detail
