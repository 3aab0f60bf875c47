#pragma once

#include "gw/module.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gw {

struct ProjectiveInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InjectiveInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CertificationFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 0 -> tau C -> B -> C -> 0 with the defining factorization property.
struct AlmostSplitSeq {
    ShortExactSeq seq;
    bool certified = false;
};

// Basis of the socle of Ext^1(c, a) under the radical actions of both
// endomorphism rings, as extension-class representatives (matrices
// Omega(c) -> a). For a = tau(c) with c indecomposable non-projective the
// nonzero socle classes are exactly the almost split ones.
std::vector<FpMatrix> ext_socle_basis(const Module& c, const Module& a, const Ext1& e);

// Almost split sequence ending at an indecomposable non-projective
// module. The left term is tau(c); the extension class is a nonzero
// element of the socle of Ext^1(c, tau c) under the actions of both
// endomorphism rings, which pins the sequence up to isomorphism.
// Throws ProjectiveInputError for projective input and
// CertificationFailedError when no socle class exists (an internal bug,
// never a property of the input).
AlmostSplitSeq almost_split_ending_at(const Module& c,
                                      std::shared_ptr<const StructAlgebra> op);

// Almost split sequence starting at an indecomposable non-injective
// module, i.e. the sequence ending at tau^{-1}(a).
AlmostSplitSeq almost_split_starting_at(const Module& a,
                                        std::shared_ptr<const StructAlgebra> op);

// Whether the k-dual of m is projective over the opposite algebra.
bool is_injective(const Module& m, std::shared_ptr<const StructAlgebra> op);

// Definition check against a complete list of indecomposables: the
// sequence is exact and non-split, both end terms are indecomposable,
// every map U -> C that is not a split epimorphism lifts through the
// right-hand map, and every map A -> U that is not a split monomorphism
// extends through the left-hand map. This is the brute-force oracle the
// rest of the code is certified against.
bool certify_almost_split(const ShortExactSeq& s, const std::vector<Module>& universe);

struct ARQuiver {
    std::shared_ptr<const StructAlgebra> alg;
    std::vector<Module> indecomposables; // pairwise non-isomorphic
    std::vector<bool> projective, injective;
    // (src, dst) -> number of irreducible maps
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrows;
    // non-projective vertex -> vertex of its translate
    std::map<std::size_t, std::size_t> tau_pairs;
    // non-projective vertex -> its certified almost split sequence
    std::map<std::size_t, AlmostSplitSeq> sequences;
    bool complete = false;
    bool cutoff_hit = false;

    // Vertex carrying the isomorphism class of m, if present.
    std::optional<std::size_t> find(const Module& m) const;
    std::size_t arrow_count(std::size_t src, std::size_t dst) const;
    std::size_t arrows_into(std::size_t v) const;
    std::size_t arrows_out_of(std::size_t v) const;
};

// Worklist closure from the projectives and injectives under tau in both
// directions, middle terms of almost split sequences, radical summands of
// projectives and cosocle summands of injectives. When the closure
// finishes within the limits, every recorded sequence is certified
// against the full inventory and `complete` is set; a cutoff leaves
// `cutoff_hit` set and is evidence of infinite representation type, not
// a proof.
ARQuiver knit(std::shared_ptr<const StructAlgebra> alg,
              std::size_t max_modules = 200, std::size_t max_dim = 60);

struct TauOrbit {
    // smallest k >= 1 with tau^k(m) isomorphic to m, when the orbit is
    // periodic; empty when it runs into a projective or leaves the quiver
    std::optional<std::size_t> period;
    std::vector<std::size_t> orbit; // vertex indices starting at m
};
TauOrbit tau_orbit(const Module& m, const ARQuiver& arq);

std::string to_dot(const ARQuiver& arq);
std::string to_json(const ARQuiver& arq);

} // namespace gw
