#pragma once

#include "gw/algebra.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace gw {

// Right module over a StructAlgebra. Elements are coordinate columns;
// action[i] is the matrix of the right action of basis element i, so the
// anti-homomorphism property reads action(x*y) = action(y) * action(x).
struct Module {
    std::shared_ptr<const StructAlgebra> alg;
    std::vector<FpMatrix> action;

    std::size_t dim() const { return action.empty() ? 0 : action[0].rows(); }
    std::uint32_t prime() const { return alg->prime(); }

    // Matrix of the right action of an arbitrary algebra element.
    FpMatrix act(const FpMatrix& a) const;

    // Dimensions of M e_i, one entry per idempotent.
    std::vector<std::size_t> dim_vector() const;

    // Checks the unit axiom and the anti-homomorphism property on all
    // basis pairs. Throws std::invalid_argument on failure.
    void validate() const;
};

Module zero_module(std::shared_ptr<const StructAlgebra> alg);
Module regular_module(std::shared_ptr<const StructAlgebra> alg);
Module projective_module(std::shared_ptr<const StructAlgebra> alg, std::size_t idem);
Module simple_module(std::shared_ptr<const StructAlgebra> alg, std::size_t idem);
Module direct_sum(std::shared_ptr<const StructAlgebra> alg, const std::vector<Module>& parts);

// Submodule on an invariant column span; throws if the span is not
// invariant. `incl` embeds the submodule, `proj` in the quotient case is
// the projection onto the chosen complement coordinates.
struct Submodule {
    Module mod;
    FpMatrix incl;
};
struct Quotient {
    Module mod;
    FpMatrix proj;
};
Submodule submodule(const Module& m, const FpMatrix& span_cols);
Quotient quotient_module(const Module& m, const FpMatrix& span_cols);

// Smallest submodule containing the given columns.
Submodule generated_submodule(const Module& m, const FpMatrix& cols);

// M rad(A), soc M = annihilator of rad(A), top M = M / M rad(A).
Submodule radical_submodule(const Module& m);
Submodule socle_submodule(const Module& m);
Quotient top_module(const Module& m);

// Basis of Hom_A(M, N) as matrices dim N x dim M. The commuting
// constraints are imposed for the algebra's generators and idempotents
// only, which suffices because they generate the algebra.
std::vector<FpMatrix> hom_space(const Module& m, const Module& n);

bool is_module_map(const Module& m, const Module& n, const FpMatrix& f);

// Minimal projective cover P -> M with P = (+) e_{idems[j]} A.
struct Cover {
    Module proj;
    FpMatrix map; // dim M x dim P, surjective with kernel inside P rad
    std::vector<std::size_t> idems;
};
Cover projective_cover(const Module& m);

// Kernel of the projective cover, with its inclusion into the cover.
struct Syzygy {
    Module omega;
    FpMatrix incl; // dim P x dim Omega
    Cover cover;
};
Syzygy syzygy(const Module& m);

bool is_projective(const Module& m);

// k-dual as a right module over the opposite algebra (same basis index).
Module dual_module(const Module& m, std::shared_ptr<const StructAlgebra> op);
// Dual of a map f: M -> N is D(f): D(N) -> D(M), the transpose.

// M* = Hom_A(M, A) as a right module over the opposite algebra, with the
// chosen hom basis kept for evaluating and dualizing maps.
struct StarModule {
    Module star;
    std::vector<FpMatrix> hom_basis; // maps M -> A
};
StarModule star_module(const Module& m, std::shared_ptr<const StructAlgebra> op);

// Coordinates of a hom M -> A in the star basis; throws when f is not in
// the span (i.e. not a module map).
FpMatrix star_coordinates(const StarModule& s, const FpMatrix& f);

// The map f*: N* -> M* induced by f: M -> N, in star coordinates.
FpMatrix star_of_map(const StarModule& sm, const StarModule& sn, const FpMatrix& f);

// Transpose via a minimal projective presentation P1 -> P0 -> M -> 0:
// Tr M = coker(P0* -> P1*), a module over the opposite algebra with no
// projective summands.
Module transpose_module(const Module& m, std::shared_ptr<const StructAlgebra> op);

// tau = D Tr and its inverse Tr D. `op` must be opposite_algebra(*m.alg)
// wrapped in a shared_ptr; both functions return modules over m.alg.
Module tau_plus(const Module& m, std::shared_ptr<const StructAlgebra> op);
Module tau_minus(const Module& m, std::shared_ptr<const StructAlgebra> op);

// Evaluation M -> M**, natural in M. Kernel = 0 iff M is torsionless.
FpMatrix evaluation_map(const Module& m, const StarModule& sm, const StarModule& sss);

struct ShortExactSeq {
    Module left, mid, right;
    FpMatrix f; // left -> mid
    FpMatrix g; // mid -> right
};
void validate_ses(const ShortExactSeq& s);

// Ext^1(C, A) presented on ker/im data: `classes` are maps Omega C -> A
// spanning a complement of the restrictions of maps P0 -> A.
struct Ext1 {
    Syzygy syz;                     // of C
    std::vector<FpMatrix> homs;     // basis of Hom(Omega C, A)
    FpMatrix restricted;            // coords of restricted maps inside homs
    std::vector<FpMatrix> classes;  // complement representatives
    std::size_t dim() const { return classes.size(); }
};
Ext1 ext1(const Module& c, const Module& a);

// Pushout realization of a class xi: Omega C -> A as 0 -> A -> E -> C -> 0.
ShortExactSeq realize_extension(const Module& c, const Module& a, const Ext1& e,
                                const FpMatrix& xi);

// Whether xi: Omega C -> A represents the zero class (split extension).
bool ext_class_is_zero(const Ext1& e, const FpMatrix& xi);

// Isomorphism test; returns an isomorphism matrix when one exists. Exact:
// reduces to indecomposable summands, where some hom basis element must
// already be invertible.
std::optional<FpMatrix> find_isomorphism(const Module& m, const Module& n);
bool is_isomorphic(const Module& m, const Module& n);

// Direct sum decomposition into indecomposables.
struct Summand {
    Module mod;
    FpMatrix incl; // dim M x dim S
    FpMatrix proj; // dim S x dim M, proj * incl = id
};
std::vector<Summand> decompose(const Module& m);

bool is_indecomposable(const Module& m);

// Maps M -> N factoring through a projective module, as a subspace of
// Hom(M, N).
std::vector<FpMatrix> projectively_trivial_homs(const Module& m, const Module& n);

// Endomorphism algebra of (+) summands[i], with basis blocks
// Hom(G_j, G_i) and multiplication f * g = (first g, then f). When
// `stable` is set the blocks are stable hom spaces (mod maps through
// projectives) and every summand must be non-projective.
struct EndData {
    std::vector<Module> summands;
    bool stable = false;
    // basis element k is maps[k]: G_{block_src[k]} -> G_{block_dst[k]}
    std::vector<FpMatrix> maps;
    std::vector<std::size_t> block_src, block_dst;
    // per pair (i,j): indices into maps for the block Hom(G_j, G_i)
    std::vector<std::vector<std::vector<std::size_t>>> block;
    // stable case: per pair, basis of the projectively trivial subspace
    std::vector<std::vector<std::vector<FpMatrix>>> phoms;
};
StructAlgebra endomorphism_algebra(const std::vector<Module>& summands, bool stable = false);

} // namespace gw
