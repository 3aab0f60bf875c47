#pragma once

#include "gw/fp_matrix.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gw {

struct InfiniteDimensionalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InadmissibleRelationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string label;
    std::size_t src = 0, dst = 0; // vertex indices, 0-based
};

struct Quiver {
    std::size_t num_vertices = 0;
    std::vector<Arrow> arrows;
};

// One F_p-linear combination of parallel paths, each path a sequence of
// arrow indices composable left to right (so {a, b} is "first a, then b").
struct Relation {
    struct Term {
        std::uint32_t coeff = 1;
        std::vector<std::size_t> arrows;
    };
    std::vector<Term> terms;
};

struct QuiverData {
    Quiver quiver;
    std::vector<Relation> relations;
    // For basis element k: the path it represents.
    std::vector<std::vector<std::size_t>> basis_paths;
    std::vector<std::size_t> basis_src, basis_dst;
    std::vector<std::size_t> arrow_basis_index; // arrow -> basis index of its class
};

struct EndData;     // defined with the module layer
struct ProductData; // block layout of the triangular / A3 / S3 constructions

// Finite-dimensional associative unital F_p-algebra given by a basis and
// structure constants, with a distinguished complete set of orthogonal
// primitive idempotents. Elements are coordinate columns (dim x 1).
class StructAlgebra {
public:
    enum class Kind {
        Raw,
        BoundQuiver,
        Opposite,
        Triangular,
        A3Relation,
        S3Matrix,
        Endomorphism,
        StableEndomorphism,
    };

    StructAlgebra() = default;

    // mult_table[i] is the matrix of left multiplication by basis element i.
    static StructAlgebra from_structure_constants(std::uint32_t p,
                                                  std::vector<FpMatrix> left_mult,
                                                  FpMatrix unit,
                                                  std::vector<FpMatrix> idempotents,
                                                  Kind kind = Kind::Raw);

    std::uint32_t prime() const { return p_; }
    std::size_t dim() const { return dim_; }
    std::size_t num_idempotents() const { return idempotents_.size(); }
    const FpMatrix& unit() const { return unit_; }
    const FpMatrix& idempotent(std::size_t i) const { return idempotents_[i]; }
    const std::vector<FpMatrix>& idempotents() const { return idempotents_; }
    const FpMatrix& left_mult_table(std::size_t i) const { return left_mult_[i]; }

    FpMatrix basis_element(std::size_t i) const;
    FpMatrix multiply(const FpMatrix& x, const FpMatrix& y) const;
    FpMatrix left_mult_matrix(const FpMatrix& x) const;  // y -> x y
    FpMatrix right_mult_matrix(const FpMatrix& x) const; // y -> y x

    // Indices of basis elements which, together with the idempotents,
    // generate the algebra. Defaults to the whole basis.
    const std::vector<std::size_t>& generators() const { return generators_; }

    // Columns span the Jacobson radical. Backend choice: the recorded arrow
    // ideal for bound quiver style constructions, the hom-component shape
    // for endomorphism algebras, and characteristic-p trace forms on the
    // regular representation otherwise. Cached after the first call.
    const FpMatrix& radical() const;

    // Forces the generic trace-form backend (used by agreement tests).
    FpMatrix radical_generic() const;

    Kind kind() const { return kind_; }
    const std::shared_ptr<const QuiverData>& quiver_data() const { return quiver_data_; }
    const std::shared_ptr<const EndData>& end_data() const { return end_data_; }
    const std::shared_ptr<const ProductData>& product_data() const { return product_data_; }
    const std::vector<std::string>& basis_labels() const { return basis_labels_; }

    void validate(bool check_primitive_idempotents = false) const;

    // Wiring used by the constructor functions below.
    void set_generators(std::vector<std::size_t> g) { generators_ = std::move(g); }
    void set_radical_hint(FpMatrix basis_cols) { radical_hint_ = std::move(basis_cols); }
    void set_quiver_data(std::shared_ptr<const QuiverData> q) { quiver_data_ = std::move(q); }
    void set_end_data(std::shared_ptr<const EndData> e) { end_data_ = std::move(e); }
    void set_product_data(std::shared_ptr<const ProductData> d) { product_data_ = std::move(d); }
    void set_basis_labels(std::vector<std::string> l) { basis_labels_ = std::move(l); }

private:
    std::uint32_t p_ = 2;
    std::size_t dim_ = 0;
    std::vector<FpMatrix> left_mult_;
    FpMatrix unit_;
    std::vector<FpMatrix> idempotents_;
    std::vector<std::size_t> generators_;
    std::vector<std::string> basis_labels_;
    Kind kind_ = Kind::Raw;
    std::shared_ptr<const QuiverData> quiver_data_;
    std::shared_ptr<const EndData> end_data_;
    std::shared_ptr<const ProductData> product_data_;
    std::optional<FpMatrix> radical_hint_;
    mutable std::optional<FpMatrix> radical_cache_;
};

// Path algebra of the quiver modulo the relation ideal. Throws
// InadmissibleRelationError when a relation has a term of length < 2 or
// non-parallel terms, and InfiniteDimensionalError when surviving paths
// still exist at the length cutoff.
StructAlgebra bound_quiver_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                   std::uint32_t p, std::size_t max_path_len = 30);

// Same basis, opposite multiplication c^op_{ijk} = c_{jik}.
StructAlgebra opposite_algebra(const StructAlgebra& a);

// Lower triangular n x n matrices over the base algebra.
StructAlgebra triangular_matrix_algebra(const StructAlgebra& base, std::size_t n);

// base tensor k[v1 -a-> v2 -b-> v3]/(ab).
StructAlgebra a3_relation_algebra(const StructAlgebra& base);

// The 5-block lower triangular shape [[L,0,0],[L,L,0],[L,0,L]].
StructAlgebra s3_matrix_algebra(const StructAlgebra& base);

// Radical of an arbitrary matrix algebra span (not necessarily unital),
// via the characteristic-p trace forms of Friedl and Ronyai. `gens` are
// matrices, all of one square size; returns coefficient columns relative
// to the given spanning set, which must be linearly independent.
FpMatrix matrix_algebra_radical(const std::vector<FpMatrix>& basis, std::uint32_t p);

} // namespace gw
