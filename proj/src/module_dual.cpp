#include "gw/module.hpp"

#include "module_internal.hpp"

#include <stdexcept>

namespace gw {

using detail::vec;
using detail::vec_all;

Module dual_module(const Module& m, std::shared_ptr<const StructAlgebra> op) {
    std::vector<FpMatrix> act;
    act.reserve(m.action.size());
    for (const auto& a : m.action) act.push_back(a.transpose());
    return Module{std::move(op), std::move(act)};
}

StarModule star_module(const Module& m, std::shared_ptr<const StructAlgebra> op) {
    Module reg = regular_module(m.alg);
    std::vector<FpMatrix> homs = hom_space(m, reg);
    std::size_t s = homs.size();
    std::uint32_t p = m.prime();
    std::size_t da = m.alg->dim();

    FpMatrix vh = vec_all(homs, da, m.dim(), p);
    std::vector<FpMatrix> act;
    act.reserve(da);
    for (std::size_t i = 0; i < da; ++i) {
        // phi . b_i^op = (left multiplication by b_i) after phi
        FpMatrix la = m.alg->left_mult_matrix(m.alg->basis_element(i));
        FpMatrix images(da * m.dim(), s, p);
        for (std::size_t k = 0; k < s; ++k) {
            FpMatrix t = la * homs[k];
            for (std::size_t c = 0; c < m.dim(); ++c)
                for (std::size_t r = 0; r < da; ++r) images.set(c * da + r, k, t.at(r, c));
        }
        auto sol = s ? vh.solve(images) : std::optional<FpMatrix>(FpMatrix(0, 0, p));
        if (!sol) throw std::logic_error("star_module: action leaves the hom space");
        act.push_back(std::move(*sol));
    }
    return StarModule{Module{std::move(op), std::move(act)}, std::move(homs)};
}

FpMatrix star_coordinates(const StarModule& s, const FpMatrix& f) {
    std::uint32_t p = f.prime();
    if (s.hom_basis.empty()) {
        if (!f.is_zero()) throw std::invalid_argument("star_coordinates: not in span");
        return FpMatrix(0, 1, p);
    }
    FpMatrix vh = vec_all(s.hom_basis, f.rows(), f.cols(), p);
    auto sol = vh.solve(vec(f));
    if (!sol) throw std::invalid_argument("star_coordinates: not in span");
    return *sol;
}

FpMatrix star_of_map(const StarModule& sm, const StarModule& sn, const FpMatrix& f) {
    std::uint32_t p = f.prime();
    FpMatrix out(sm.hom_basis.size(), sn.hom_basis.size(), p);
    if (sn.hom_basis.empty()) return out;
    if (sm.hom_basis.empty()) {
        for (const auto& h : sn.hom_basis)
            if (!(h * f).is_zero()) throw std::invalid_argument("star_of_map: not in span");
        return out;
    }
    std::size_t rows = sm.hom_basis[0].rows(), cols = sm.hom_basis[0].cols();
    FpMatrix vh = vec_all(sm.hom_basis, rows, cols, p);
    FpMatrix targets(rows * cols, sn.hom_basis.size(), p);
    for (std::size_t j = 0; j < sn.hom_basis.size(); ++j) {
        FpMatrix t = sn.hom_basis[j] * f;
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r) targets.set(c * rows + r, j, t.at(r, c));
    }
    auto sol = vh.solve(targets);
    if (!sol) throw std::invalid_argument("star_of_map: not in span");
    return *sol;
}

StarModule star_of_cover(const Cover& c, std::shared_ptr<const StructAlgebra> op) {
    if (c.idems.empty()) return StarModule{zero_module(std::move(op)), {}};
    const auto& alg = c.proj.alg;
    const std::uint32_t p = alg->prime();
    const std::size_t da = alg->dim();
    std::vector<FpMatrix> bl, yl; // bases of e_i A and of A e_i inside A
    std::vector<std::size_t> boff(c.idems.size() + 1, 0);
    for (std::size_t j = 0; j < c.idems.size(); ++j) {
        const FpMatrix& e = alg->idempotent(c.idems[j]);
        bl.push_back(alg->left_mult_matrix(e).column_space_basis());
        yl.push_back(alg->right_mult_matrix(e).column_space_basis());
        boff[j + 1] = boff[j] + bl[j].cols();
    }
    std::vector<FpMatrix> homs; // maps P -> A, block j given by left mult from A e_{i_j}
    for (std::size_t j = 0; j < c.idems.size(); ++j)
        for (std::size_t y = 0; y < yl[j].cols(); ++y) {
            FpMatrix img = alg->left_mult_matrix(yl[j].col(y)) * bl[j];
            FpMatrix h(da, boff.back(), p);
            for (std::size_t r = 0; r < da; ++r)
                for (std::size_t cc = 0; cc < img.cols(); ++cc)
                    h.set(r, boff[j] + cc, img.at(r, cc));
            homs.push_back(std::move(h));
        }
    std::vector<FpMatrix> act;
    act.reserve(da);
    for (std::size_t i = 0; i < da; ++i) {
        FpMatrix lb = alg->left_mult_matrix(alg->basis_element(i));
        std::vector<FpMatrix> blocks;
        blocks.reserve(c.idems.size());
        for (std::size_t j = 0; j < c.idems.size(); ++j)
            blocks.push_back(coordinates_in_basis(yl[j], lb * yl[j]));
        act.push_back(FpMatrix::block_diag(blocks));
    }
    return StarModule{Module{std::move(op), std::move(act)}, std::move(homs)};
}

Module transpose_module(const Module& m, std::shared_ptr<const StructAlgebra> op) {
    Syzygy s = syzygy(m);
    Cover c1 = projective_cover(s.omega);
    // presentation d : P1 -> P0
    FpMatrix d = s.incl * c1.map;
    StarModule s0 = star_of_cover(s.cover, op);
    StarModule s1 = star_of_cover(c1, op);
    FpMatrix dstar = star_of_map(s1, s0, d); // P0* -> P1*
    return quotient_module(s1.star, dstar.column_space_basis()).mod;
}

Module tau_plus(const Module& m, std::shared_ptr<const StructAlgebra> op) {
    return dual_module(transpose_module(m, op), m.alg);
}

Module tau_minus(const Module& m, std::shared_ptr<const StructAlgebra> op) {
    Module d = dual_module(m, op);
    return transpose_module(d, m.alg);
}

FpMatrix evaluation_map(const Module& m, const StarModule& sm, const StarModule& sss) {
    std::uint32_t p = m.prime();
    std::size_t s = sm.hom_basis.size();
    std::size_t da = m.alg->dim();
    FpMatrix out(sss.hom_basis.size(), m.dim(), p);
    if (m.dim() == 0) return out;
    // column k holds ev(m_k): M* -> A, phi_i -> phi_i(m_k), as a map of
    // right op-modules in the star coordinates
    FpMatrix targets(da * s, m.dim(), p);
    for (std::size_t k = 0; k < m.dim(); ++k)
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t r = 0; r < da; ++r)
                targets.set(i * da + r, k, sm.hom_basis[i].at(r, k));
    if (sss.hom_basis.empty()) {
        if (!targets.is_zero()) throw std::invalid_argument("star_coordinates: not in span");
        return out;
    }
    FpMatrix vh = vec_all(sss.hom_basis, da, s, p);
    auto sol = vh.solve(targets);
    if (!sol) throw std::invalid_argument("star_coordinates: not in span");
    return *sol;
}

void validate_ses(const ShortExactSeq& s) {
    if (s.mid.dim() != s.left.dim() + s.right.dim())
        throw std::invalid_argument("ses: dimension mismatch");
    if (!is_module_map(s.left, s.mid, s.f) || !is_module_map(s.mid, s.right, s.g))
        throw std::invalid_argument("ses: maps are not module maps");
    if (s.f.rank() != s.left.dim()) throw std::invalid_argument("ses: f not injective");
    if (s.g.rank() != s.right.dim()) throw std::invalid_argument("ses: g not surjective");
    if (!(s.g * s.f).is_zero()) throw std::invalid_argument("ses: g f != 0");
}

Ext1 ext1(const Module& c, const Module& a) {
    Ext1 e{syzygy(c), {}, FpMatrix(0, 0, c.prime()), {}};
    e.homs = hom_space(e.syz.omega, a);
    std::uint32_t p = c.prime();
    std::size_t s = e.homs.size();
    if (s == 0) {
        e.restricted = FpMatrix(0, 0, p);
        return e;
    }
    FpMatrix vh = vec_all(e.homs, a.dim(), e.syz.omega.dim(), p);
    std::vector<FpMatrix> ph = cover_hom_basis(e.syz.cover, a);
    if (ph.empty()) {
        e.restricted = FpMatrix(s, 0, p);
    } else {
        FpMatrix targets(a.dim() * e.syz.omega.dim(), ph.size(), p);
        for (std::size_t t = 0; t < ph.size(); ++t) {
            FpMatrix r = ph[t] * e.syz.incl;
            for (std::size_t cc = 0; cc < r.cols(); ++cc)
                for (std::size_t rr = 0; rr < r.rows(); ++rr)
                    targets.set(cc * r.rows() + rr, t, r.at(rr, cc));
        }
        auto sol = vh.solve(targets);
        if (!sol) throw std::logic_error("ext1: restriction not in hom span");
        e.restricted = sol->column_space_basis();
    }
    FpMatrix comp = complement_basis(e.restricted);
    for (std::size_t j = 0; j < comp.cols(); ++j) {
        FpMatrix xi(a.dim(), e.syz.omega.dim(), p);
        for (std::size_t k = 0; k < s; ++k) {
            std::uint32_t co = comp.at(k, j);
            if (co) xi = xi + e.homs[k].scaled(co);
        }
        e.classes.push_back(std::move(xi));
    }
    return e;
}

bool ext_class_is_zero(const Ext1& e, const FpMatrix& xi) {
    if (e.homs.empty()) return true;
    std::uint32_t p = xi.prime();
    FpMatrix vh = vec_all(e.homs, xi.rows(), xi.cols(), p);
    auto sol = vh.solve(vec(xi));
    if (!sol) throw std::invalid_argument("ext_class_is_zero: xi is not a module map");
    if (e.restricted.cols() == 0) return sol->is_zero();
    return spans_contain(e.restricted, *sol);
}

ShortExactSeq realize_extension(const Module& c, const Module& a, const Ext1& e,
                                const FpMatrix& xi) {
    std::uint32_t p = c.prime();
    const Module& p0 = e.syz.cover.proj;
    const FpMatrix& incl = e.syz.incl;  // P0 x Omega
    const FpMatrix& pi = e.syz.cover.map; // C x P0

    Module sum = direct_sum(c.alg, {a, p0});
    // glue: (xi(w), 0) ~ (0, incl(w))
    FpMatrix w = FpMatrix::vstack({xi.scaled(p - 1), incl});
    Quotient q = quotient_module(sum, w);

    FpMatrix ia(sum.dim(), a.dim(), p);
    for (std::size_t i = 0; i < a.dim(); ++i) ia.set(i, i, 1);
    FpMatrix f = q.proj * ia;

    // g is induced by (0 | pi) on the quotient
    FpMatrix zp(c.dim(), sum.dim(), p);
    for (std::size_t r = 0; r < c.dim(); ++r)
        for (std::size_t j = 0; j < p0.dim(); ++j) zp.set(r, a.dim() + j, pi.at(r, j));
    auto sect = q.proj.solve(FpMatrix::identity(q.mod.dim(), p));
    FpMatrix g = zp * *sect;

    ShortExactSeq s{a, q.mod, c, std::move(f), std::move(g)};
    validate_ses(s);
    return s;
}

} // namespace gw
