#include "gw/algebra.hpp"
#include "gw/algebra_products.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <random>
#include <sstream>

namespace gw {

StructAlgebra StructAlgebra::from_structure_constants(std::uint32_t p,
                                                      std::vector<FpMatrix> left_mult,
                                                      FpMatrix unit,
                                                      std::vector<FpMatrix> idempotents,
                                                      Kind kind) {
    StructAlgebra a;
    a.p_ = p;
    a.dim_ = left_mult.size();
    a.left_mult_ = std::move(left_mult);
    a.unit_ = std::move(unit);
    a.idempotents_ = std::move(idempotents);
    a.kind_ = kind;
    a.generators_.resize(a.dim_);
    for (std::size_t i = 0; i < a.dim_; ++i) a.generators_[i] = i;
    a.validate();
    return a;
}

FpMatrix StructAlgebra::basis_element(std::size_t i) const {
    FpMatrix e(dim_, 1, p_);
    e.set(i, 0, 1);
    return e;
}

FpMatrix StructAlgebra::multiply(const FpMatrix& x, const FpMatrix& y) const {
    return left_mult_matrix(x) * y;
}

FpMatrix StructAlgebra::left_mult_matrix(const FpMatrix& x) const {
    FpMatrix m(dim_, dim_, p_);
    for (std::size_t i = 0; i < dim_; ++i) {
        std::uint32_t c = x.at(i, 0);
        if (c) m = m + left_mult_[i].scaled(c);
    }
    return m;
}

FpMatrix StructAlgebra::right_mult_matrix(const FpMatrix& x) const {
    // Column j is b_j * x.
    FpMatrix m(dim_, dim_, p_);
    for (std::size_t j = 0; j < dim_; ++j) {
        FpMatrix v = left_mult_[j] * x;
        for (std::size_t i = 0; i < dim_; ++i) m.set(i, j, v.at(i, 0));
    }
    return m;
}

void StructAlgebra::validate(bool check_primitive_idempotents) const {
    if (left_mult_.size() != dim_) throw std::invalid_argument("algebra: table count");
    for (const auto& l : left_mult_)
        if (l.rows() != dim_ || l.cols() != dim_ || l.prime() != p_)
            throw std::invalid_argument("algebra: table shape");
    if (unit_.rows() != dim_ || unit_.cols() != 1)
        throw std::invalid_argument("algebra: unit shape");

    FpMatrix lu = left_mult_matrix(unit_);
    if (!lu.is_identity()) throw std::invalid_argument("algebra: unit is not a left unit");
    if (!right_mult_matrix(unit_).is_identity())
        throw std::invalid_argument("algebra: unit is not a right unit");

    // Associativity: random probes first, exhaustive pass on small algebras
    // or after a probe failure. (x y) z == x (y z) for basis triples is
    // equivalent to L_{b_i b_j} == L_i L_j.
    auto exact = [&] {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (left_mult_matrix(left_mult_[i].col(j)) != left_mult_[i] * left_mult_[j])
                    throw std::invalid_argument("algebra: structure constants not associative");
    };
    if (dim_ <= 48) {
        exact();
    } else {
        std::mt19937_64 rng(12345);
        for (int probe = 0; probe < 24; ++probe) {
            std::size_t i = rng() % dim_, j = rng() % dim_;
            if (left_mult_matrix(left_mult_[i].col(j)) != left_mult_[i] * left_mult_[j]) exact();
        }
    }

    FpMatrix sum(dim_, 1, p_);
    for (std::size_t i = 0; i < idempotents_.size(); ++i) {
        const FpMatrix& e = idempotents_[i];
        if (e.is_zero()) throw std::invalid_argument("algebra: zero idempotent");
        if (multiply(e, e) != e) throw std::invalid_argument("algebra: idempotent fails e*e=e");
        for (std::size_t j = 0; j < idempotents_.size(); ++j) {
            if (i == j) continue;
            if (!multiply(e, idempotents_[j]).is_zero())
                throw std::invalid_argument("algebra: idempotents not orthogonal");
        }
        sum = sum + e;
    }
    if (sum != unit_) throw std::invalid_argument("algebra: idempotents do not sum to 1");

    if (check_primitive_idempotents) {
        // e is primitive iff eAe is local iff Q = eAe / rad(eAe) is a
        // division ring. Q is finite, so division forces commutative, and
        // then Q is a single field iff the Frobenius fixed space of Q is
        // one dimensional.
        for (const auto& e : idempotents_) {
            FpMatrix corner = (left_mult_matrix(e) * right_mult_matrix(e)).column_space_basis();
            std::size_t r = corner.cols();
            std::vector<FpMatrix> mats;
            for (std::size_t c = 0; c < r; ++c)
                mats.push_back(left_mult_matrix(corner.col(c)));
            FpMatrix rad = matrix_algebra_radical(mats, p_); // corner coordinates
            FpMatrix qc = complement_basis(rad);
            std::size_t m = qc.cols();
            FpMatrix full = rad.cols() ? FpMatrix::hstack({rad, qc}) : qc;
            auto corner_mult = [&](const FpMatrix& x, const FpMatrix& y) {
                FpMatrix z = multiply(corner * x, corner * y);
                return coordinates_in_basis(corner, z);
            };
            auto reduce = [&](const FpMatrix& x) {
                FpMatrix w = *full.solve(x);
                return w.submatrix(rad.cols(), 0, m, 1);
            };
            bool commutative = true;
            for (std::size_t i = 0; i < m && commutative; ++i)
                for (std::size_t j = i + 1; j < m && commutative; ++j)
                    if (reduce(corner_mult(qc.col(i), qc.col(j))) !=
                        reduce(corner_mult(qc.col(j), qc.col(i))))
                        commutative = false;
            if (!commutative)
                throw std::invalid_argument("algebra: idempotent not primitive");
            FpMatrix frob(m, m, p_);
            for (std::size_t j = 0; j < m; ++j) {
                FpMatrix pw = qc.col(j);
                for (std::uint32_t t = 1; t < p_; ++t) pw = corner_mult(pw, qc.col(j));
                FpMatrix red = reduce(pw);
                for (std::size_t i = 0; i < m; ++i) frob.set(i, j, red.at(i, 0));
            }
            if ((frob - FpMatrix::identity(m, p_)).kernel_basis().cols() != 1)
                throw std::invalid_argument("algebra: idempotent not primitive");
        }
    }
}

const FpMatrix& StructAlgebra::radical() const {
    if (radical_cache_) return *radical_cache_;
    if (radical_hint_) {
        radical_cache_ = *radical_hint_;
        return *radical_cache_;
    }
    radical_cache_ = radical_generic();
    return *radical_cache_;
}

FpMatrix StructAlgebra::radical_generic() const {
    std::vector<FpMatrix> mats;
    mats.reserve(dim_);
    for (std::size_t i = 0; i < dim_; ++i) mats.push_back(left_mult_[i]);
    return matrix_algebra_radical(mats, p_);
}

namespace {

// Matrix arithmetic mod p^{i+1} used by the characteristic-p trace forms.
struct LiftMatrix {
    std::size_t n;
    std::uint64_t mod;
    std::vector<std::uint64_t> a;
    LiftMatrix(std::size_t n_, std::uint64_t mod_) : n(n_), mod(mod_), a(n_ * n_, 0) {}
};

LiftMatrix lift_mul(const LiftMatrix& x, const LiftMatrix& y) {
    LiftMatrix r(x.n, x.mod);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            std::uint64_t v = x.a[i * x.n + k];
            if (!v) continue;
            for (std::size_t j = 0; j < x.n; ++j)
                r.a[i * x.n + j] = (r.a[i * x.n + j] + v * y.a[k * x.n + j]) % x.mod;
        }
    return r;
}

LiftMatrix lift_pow(LiftMatrix base, std::uint64_t e) {
    LiftMatrix acc(base.n, base.mod);
    for (std::size_t i = 0; i < base.n; ++i) acc.a[i * base.n + i] = 1 % base.mod;
    while (e) {
        if (e & 1) acc = lift_mul(acc, base);
        base = lift_mul(base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace

FpMatrix matrix_algebra_radical(const std::vector<FpMatrix>& basis, std::uint32_t p) {
    if (basis.empty()) return FpMatrix(0, 0, p);
    std::size_t d = basis.size();
    std::size_t n = basis[0].rows();

    // Friedl-Ronyai chain: R_0 = A, and R_{i+1} is cut out of R_i by the
    // trace form f_i(z) = (tr(z~^{p^i}) mod p^{i+1}) / p^i, evaluated on
    // products of R_i basis elements. After all i with p^i <= n the chain
    // has reached the radical.
    FpMatrix coeffs = FpMatrix::identity(d, p); // columns: current subspace
    std::uint64_t pi = 1;
    for (std::size_t i = 0; pi <= n; ++i, pi *= p) {
        std::size_t r = coeffs.cols();
        if (r == 0) break;
        std::vector<FpMatrix> elems;
        elems.reserve(r);
        for (std::size_t c = 0; c < r; ++c) {
            FpMatrix m(n, n, p);
            for (std::size_t b = 0; b < d; ++b) {
                std::uint32_t co = coeffs.at(b, c);
                if (co) m = m + basis[b].scaled(co);
            }
            elems.push_back(std::move(m));
        }
        std::uint64_t mod = pi * p;
        FpMatrix form(r, r, p); // form[j][k] = f_i(x_k x_j)
        for (std::size_t k = 0; k < r; ++k) {
            for (std::size_t j = 0; j < r; ++j) {
                FpMatrix prod = elems[k] * elems[j];
                LiftMatrix z(n, mod);
                for (std::size_t s = 0; s < n; ++s)
                    for (std::size_t t = 0; t < n; ++t) z.a[s * n + t] = prod.at(s, t);
                LiftMatrix zp = lift_pow(z, pi);
                std::uint64_t tr = 0;
                for (std::size_t s = 0; s < n; ++s) tr = (tr + zp.a[s * n + s]) % mod;
                if (tr % pi != 0)
                    throw std::logic_error("matrix_algebra_radical: trace form not divisible");
                form.set(j, k, static_cast<std::uint32_t>((tr / pi) % p));
            }
        }
        FpMatrix ker = form.kernel_basis(); // in current-subspace coordinates
        coeffs = coeffs * ker;
    }
    return coeffs;
}

// ---------------------------------------------------------------------------
// Bound quiver algebras.

namespace {

struct Path {
    std::size_t src, dst;
    std::vector<std::size_t> arrows;
};

std::string path_label(const Path& p, const Quiver& q) {
    if (p.arrows.empty()) return "e" + std::to_string(p.src + 1);
    std::string s;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].label;
    }
    return s;
}

} // namespace

StructAlgebra bound_quiver_algebra(const Quiver& q, const std::vector<Relation>& rels,
                                   std::uint32_t p, std::size_t max_path_len) {
    for (const auto& a : q.arrows)
        if (a.src >= q.num_vertices || a.dst >= q.num_vertices)
            throw std::invalid_argument("bound_quiver_algebra: arrow endpoint out of range");

    // Validate relations: parallel, composable, length-homogeneous, length
    // >= 2 (admissible). Length homogeneity keeps the ideal graded by path
    // length, which the stratified elimination below relies on.
    for (const auto& rel : rels) {
        if (rel.terms.empty()) continue;
        std::size_t len = rel.terms[0].arrows.size();
        std::size_t src = 0, dst = 0;
        bool first = true;
        for (const auto& t : rel.terms) {
            if (t.arrows.size() < 2)
                throw InadmissibleRelationError("relation term of length < 2");
            if (t.arrows.size() != len)
                throw InadmissibleRelationError("relation terms of mixed lengths");
            for (std::size_t i = 0; i + 1 < t.arrows.size(); ++i)
                if (q.arrows[t.arrows[i]].dst != q.arrows[t.arrows[i + 1]].src)
                    throw InadmissibleRelationError("relation term is not a composable path");
            std::size_t s = q.arrows[t.arrows.front()].src;
            std::size_t d = q.arrows[t.arrows.back()].dst;
            if (first) { src = s; dst = d; first = false; }
            else if (s != src || d != dst)
                throw InadmissibleRelationError("relation terms are not parallel");
        }
    }

    // Enumerate paths stratified by length.
    std::vector<std::vector<Path>> strata;
    strata.emplace_back();
    for (std::size_t v = 0; v < q.num_vertices; ++v) strata[0].push_back({v, v, {}});
    std::map<std::vector<std::size_t>, std::size_t> index_of_word; // within stratum
    auto build_stratum = [&](std::size_t len) {
        strata.emplace_back();
        for (const auto& pth : strata[len - 1])
            for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
                if (q.arrows[ai].src == pth.dst) {
                    Path np{pth.src, q.arrows[ai].dst, pth.arrows};
                    np.arrows.push_back(ai);
                    strata[len].push_back(std::move(np));
                }
    };

    // Per-stratum elimination data: rref of the ideal intersected with the
    // stratum, pivot = path index within stratum.
    struct Stratum {
        std::vector<Path> paths;
        Echelon ideal;                     // rref of ideal rows
        std::vector<std::size_t> free_cols; // surviving paths
        std::map<std::vector<std::size_t>, std::size_t> word_index;
    };
    std::vector<Stratum> info;

    std::size_t last_len = 0;
    for (std::size_t len = 0;; ++len) {
        if (len >= strata.size()) build_stratum(len);
        Stratum st;
        st.paths = strata[len];
        for (std::size_t i = 0; i < st.paths.size(); ++i)
            st.word_index[st.paths[i].arrows.empty()
                              ? std::vector<std::size_t>{st.paths[i].src + q.arrows.size()}
                              : st.paths[i].arrows] = i;
        // Ideal generators in this stratum: u * rel * w with len(u) + len(rel)
        // + len(w) == len.
        std::vector<FpMatrix> rows;
        for (const auto& rel : rels) {
            if (rel.terms.empty()) continue;
            std::size_t rl = rel.terms[0].arrows.size();
            if (rl > len) continue;
            std::size_t rsrc = q.arrows[rel.terms[0].arrows.front()].src;
            std::size_t rdst = q.arrows[rel.terms[0].arrows.back()].dst;
            for (std::size_t ul = 0; ul + rl <= len; ++ul) {
                std::size_t wl = len - rl - ul;
                for (const auto& u : strata[ul]) {
                    if (u.dst != rsrc) continue;
                    for (const auto& w : strata[wl]) {
                        if (w.src != rdst) continue;
                        FpMatrix row(1, st.paths.size(), p);
                        for (const auto& t : rel.terms) {
                            std::vector<std::size_t> word = u.arrows;
                            word.insert(word.end(), t.arrows.begin(), t.arrows.end());
                            word.insert(word.end(), w.arrows.begin(), w.arrows.end());
                            auto it = st.word_index.find(word);
                            if (it == st.word_index.end())
                                throw std::logic_error("bound_quiver_algebra: missing sandwich");
                            row.set(0, it->second,
                                    fp_add(row.at(0, it->second), t.coeff % p, p));
                        }
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
        FpMatrix ideal =
            rows.empty() ? FpMatrix(0, st.paths.size(), p) : FpMatrix::vstack(rows);
        st.ideal = ideal.rref();
        {
            std::size_t pi = 0;
            for (std::size_t c = 0; c < st.paths.size(); ++c) {
                if (pi < st.ideal.pivot_cols.size() && st.ideal.pivot_cols[pi] == c) ++pi;
                else st.free_cols.push_back(c);
            }
        }
        bool any_survivor = !st.free_cols.empty();
        info.push_back(std::move(st));
        if (!any_survivor) { last_len = len; break; }
        if (len == max_path_len)
            throw InfiniteDimensionalError(
                "bound quiver algebra not finite dimensional within path length cutoff");
    }

    // Global basis: survivors ordered by (length, stratum position).
    struct BasisRef { std::size_t len, col; };
    std::vector<BasisRef> basis;
    std::vector<std::vector<std::size_t>> offset(info.size()); // stratum col -> basis idx
    for (std::size_t len = 0; len < info.size(); ++len) {
        offset[len].assign(info[len].paths.size(), SIZE_MAX);
        for (std::size_t c : info[len].free_cols) {
            offset[len][c] = basis.size();
            basis.push_back({len, c});
        }
    }
    std::size_t dim = basis.size();

    // Class of a path word inside its stratum, as a column over the global
    // basis: survivors map to themselves, pivot paths reduce through the
    // stratum rref, and anything at or beyond the empty stratum is zero.
    auto class_of = [&](std::size_t len, std::size_t col) {
        FpMatrix v(dim, 1, p);
        if (len >= info.size()) return v;
        if (len >= last_len && len == info.size() - 1 && info[len].free_cols.empty()) return v;
        const Stratum& st = info[len];
        if (offset[len][col] != SIZE_MAX) {
            v.set(offset[len][col], 0, 1);
            return v;
        }
        // col is a pivot column: locate its rref row, subtract free entries.
        const auto& piv = st.ideal.pivot_cols;
        std::size_t row = std::lower_bound(piv.begin(), piv.end(), col) - piv.begin();
        for (std::size_t c : st.free_cols) {
            std::uint32_t coef = st.ideal.mat.at(row, c);
            if (coef) v.set(offset[len][c], 0, fp_neg(coef, p));
        }
        return v;
    };

    // Multiplication tables.
    std::vector<FpMatrix> left(dim, FpMatrix(dim, dim, p));
    for (std::size_t i = 0; i < dim; ++i) {
        const Path& pi_ = info[basis[i].len].paths[basis[i].col];
        for (std::size_t j = 0; j < dim; ++j) {
            const Path& pj = info[basis[j].len].paths[basis[j].col];
            if (pi_.dst != pj.src) continue;
            std::size_t len = basis[i].len + basis[j].len;
            FpMatrix cls(dim, 1, p);
            if (len < info.size()) {
                std::vector<std::size_t> word = pi_.arrows;
                word.insert(word.end(), pj.arrows.begin(), pj.arrows.end());
                auto key = word.empty()
                               ? std::vector<std::size_t>{pi_.src + q.arrows.size()}
                               : word;
                auto it = info[len].word_index.find(key);
                if (it == info[len].word_index.end())
                    throw std::logic_error("bound_quiver_algebra: missing product path");
                cls = class_of(len, it->second);
            }
            for (std::size_t k = 0; k < dim; ++k) left[i].set(k, j, cls.at(k, 0));
        }
    }

    FpMatrix unit(dim, 1, p);
    std::vector<FpMatrix> idems;
    for (std::size_t v = 0; v < q.num_vertices; ++v) {
        FpMatrix e(dim, 1, p);
        auto it = info[0].word_index.find({v + q.arrows.size()});
        e.set(offset[0][it->second], 0, 1);
        idems.push_back(e);
        unit = unit + e;
    }

    StructAlgebra a = StructAlgebra::from_structure_constants(p, std::move(left), unit, idems,
                                                              StructAlgebra::Kind::BoundQuiver);

    auto qd = std::make_shared<QuiverData>();
    qd->quiver = q;
    qd->relations = rels;
    std::vector<std::string> labels;
    std::vector<std::size_t> gens;
    qd->arrow_basis_index.assign(q.arrows.size(), SIZE_MAX);
    {
        std::vector<FpMatrix> radcols;
        for (std::size_t i = 0; i < dim; ++i) {
            const Path& pth = info[basis[i].len].paths[basis[i].col];
            qd->basis_paths.push_back(pth.arrows);
            qd->basis_src.push_back(pth.src);
            qd->basis_dst.push_back(pth.dst);
            labels.push_back(path_label(pth, q));
            if (basis[i].len == 1) {
                qd->arrow_basis_index[pth.arrows[0]] = i;
                gens.push_back(i);
            }
            if (basis[i].len >= 1) {
                FpMatrix c(dim, 1, p);
                c.set(i, 0, 1);
                radcols.push_back(c);
            }
        }
        a.set_radical_hint(radcols.empty() ? FpMatrix(dim, 0, p) : FpMatrix::hstack(radcols));
    }
    a.set_quiver_data(qd);
    a.set_generators(gens);
    a.set_basis_labels(labels);
    return a;
}

StructAlgebra opposite_algebra(const StructAlgebra& a) {
    std::size_t d = a.dim();
    std::vector<FpMatrix> left(d, FpMatrix(d, d, a.prime()));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                left[i].set(k, j, a.left_mult_table(j).at(k, i));
    StructAlgebra op = StructAlgebra::from_structure_constants(
        a.prime(), std::move(left), a.unit(), a.idempotents(), StructAlgebra::Kind::Opposite);
    op.set_generators(a.generators());
    op.set_basis_labels(a.basis_labels());
    // rad(A^op) = rad(A) as a subspace.
    op.set_radical_hint(a.radical());
    return op;
}

namespace {

// Shared builder for the block constructions: basis elements are (cell,
// base element) pairs, product (b x E_ij)(b' x E_kl) = delta_jk bb' x E_il.
// The unital subalgebra generated by the idempotents and the declared
// generators must be everything; hom and submodule routines rely on it.
void check_generating(const StructAlgebra& a) {
    std::vector<FpMatrix> mults;
    for (const auto& e : a.idempotents()) mults.push_back(a.left_mult_matrix(e));
    for (std::size_t g : a.generators()) mults.push_back(a.left_mult_table(g));
    FpMatrix span = a.unit();
    for (;;) {
        std::vector<FpMatrix> parts = {span};
        for (const auto& m : mults) parts.push_back(m * span);
        FpMatrix next = FpMatrix::hstack(parts).column_space_basis();
        if (next.cols() == span.cols()) break;
        span = std::move(next);
    }
    if (span.cols() != a.dim())
        throw std::logic_error("product algebra: generators do not generate");
}

StructAlgebra block_algebra(const StructAlgebra& base,
                            const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                            std::size_t nblocks, StructAlgebra::Kind kind,
                            const std::string& tag) {
    std::size_t bd = base.dim();
    std::size_t nc = cells.size();
    std::size_t dim = bd * nc;
    std::uint32_t p = base.prime();
    auto cell_index = [&](std::size_t i, std::size_t j) -> std::size_t {
        for (std::size_t c = 0; c < nc; ++c)
            if (cells[c] == std::make_pair(i, j)) return c;
        return SIZE_MAX;
    };

    std::vector<FpMatrix> left(dim, FpMatrix(dim, dim, p));
    for (std::size_t c1 = 0; c1 < nc; ++c1) {
        auto [i, j] = cells[c1];
        for (std::size_t c2 = 0; c2 < nc; ++c2) {
            auto [k, l] = cells[c2];
            if (j != k) continue;
            std::size_t ct = cell_index(i, l);
            if (ct == SIZE_MAX)
                throw std::logic_error("block_algebra: product leaves the shape");
            for (std::size_t b1 = 0; b1 < bd; ++b1)
                for (std::size_t b2 = 0; b2 < bd; ++b2) {
                    const FpMatrix& prod = base.left_mult_table(b1);
                    for (std::size_t b3 = 0; b3 < bd; ++b3) {
                        std::uint32_t v = prod.at(b3, b2);
                        if (v)
                            left[c1 * bd + b1].set(ct * bd + b3, c2 * bd + b2, v);
                    }
                }
        }
    }

    FpMatrix unit(dim, 1, p);
    std::vector<FpMatrix> idems;
    for (std::size_t c = 0; c < nc; ++c) {
        auto [i, j] = cells[c];
        if (i != j) continue;
        for (std::size_t b = 0; b < bd; ++b) {
            std::uint32_t v = base.unit().at(b, 0);
            if (v) unit.set(c * bd + b, 0, fp_add(unit.at(c * bd + b, 0), v, p));
        }
        for (const auto& e : base.idempotents()) {
            FpMatrix em(dim, 1, p);
            for (std::size_t b = 0; b < bd; ++b) em.set(c * bd + b, 0, e.at(b, 0));
            idems.push_back(em);
        }
    }

    StructAlgebra a =
        StructAlgebra::from_structure_constants(p, std::move(left), unit, idems, kind);

    // Radical: base radical on the diagonal cells, everything off-diagonal.
    {
        const FpMatrix& br = base.radical();
        std::vector<FpMatrix> radcols;
        for (std::size_t c = 0; c < nc; ++c) {
            auto [i, j] = cells[c];
            if (i == j) {
                for (std::size_t rc = 0; rc < br.cols(); ++rc) {
                    FpMatrix col(dim, 1, p);
                    for (std::size_t b = 0; b < bd; ++b) col.set(c * bd + b, 0, br.at(b, rc));
                    radcols.push_back(col);
                }
            } else {
                for (std::size_t b = 0; b < bd; ++b) {
                    FpMatrix col(dim, 1, p);
                    col.set(c * bd + b, 0, 1);
                    radcols.push_back(col);
                }
            }
        }
        a.set_radical_hint(radcols.empty() ? FpMatrix(dim, 0, p) : FpMatrix::hstack(radcols));
    }

    // Generators: base generators on diagonal cells, plus the embedded unit
    // at each off-diagonal cell that does not factor through two other cells.
    // Reducible cells are recovered as products, and within one cell the
    // diagonal action recovers the full base: b@E_ij = (b@E_ii)(1@E_ij).
    std::vector<std::size_t> gens;
    for (std::size_t c = 0; c < nc; ++c) {
        auto [i, j] = cells[c];
        if (i == j) {
            for (std::size_t g : base.generators()) gens.push_back(c * bd + g);
            continue;
        }
        bool reducible = false;
        for (std::size_t k = 0; k < nblocks && !reducible; ++k)
            reducible = k != i && k != j && cell_index(i, k) != SIZE_MAX &&
                        cell_index(k, j) != SIZE_MAX;
        if (reducible) continue;
        for (std::size_t b = 0; b < bd; ++b)
            if (base.unit().at(b, 0)) gens.push_back(c * bd + b);
    }
    a.set_generators(gens);
    check_generating(a);

    std::vector<std::string> labels;
    const auto& bl = base.basis_labels();
    for (std::size_t c = 0; c < nc; ++c) {
        auto [i, j] = cells[c];
        for (std::size_t b = 0; b < bd; ++b) {
            std::string bb = b < bl.size() ? bl[b] : "b" + std::to_string(b);
            labels.push_back(bb + "@" + tag + std::to_string(i + 1) + std::to_string(j + 1));
        }
    }
    a.set_basis_labels(labels);

    auto pd = std::make_shared<ProductData>();
    pd->base = base;
    pd->n = nblocks;
    pd->cells = cells;
    a.set_product_data(pd);
    return a;
}

} // namespace

StructAlgebra triangular_matrix_algebra(const StructAlgebra& base, std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) cells.emplace_back(i, j);
    return block_algebra(base, cells, n, StructAlgebra::Kind::Triangular, "E");
}

StructAlgebra s3_matrix_algebra(const StructAlgebra& base) {
    std::vector<std::pair<std::size_t, std::size_t>> cells = {
        {0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 2}};
    return block_algebra(base, cells, 3, StructAlgebra::Kind::S3Matrix, "E");
}

StructAlgebra a3_relation_algebra(const StructAlgebra& base) {
    // Tensor with k[v1 -a-> v2 -b-> v3]/(ab), spelled as structure constants
    // on the 5-element basis e1, e2, e3, a, b.
    std::size_t bd = base.dim();
    std::uint32_t p = base.prime();
    std::size_t dim = 5 * bd;
    // mult[t1][t2] = resulting basis index, SIZE_MAX when zero.
    auto bmul = [](std::size_t x, std::size_t y) -> std::size_t {
        // indices: 0=e1 1=e2 2=e3 3=a 4=b
        if (x < 3 && y < 3) return x == y ? x : SIZE_MAX;
        if (x == 0 && y == 3) return 3; // e1 a = a
        if (x == 3 && y == 1) return 3; // a e2 = a
        if (x == 1 && y == 4) return 4; // e2 b = b
        if (x == 4 && y == 2) return 4; // b e3 = b
        // a b = 0 by the relation; every other pairing is non-composable.
        return SIZE_MAX;
    };
    std::vector<FpMatrix> left(dim, FpMatrix(dim, dim, p));
    for (std::size_t t1 = 0; t1 < 5; ++t1)
        for (std::size_t t2 = 0; t2 < 5; ++t2) {
            std::size_t tt = bmul(t1, t2);
            if (tt == SIZE_MAX) continue;
            for (std::size_t b1 = 0; b1 < bd; ++b1)
                for (std::size_t b2 = 0; b2 < bd; ++b2) {
                    const FpMatrix& prod = base.left_mult_table(b1);
                    for (std::size_t b3 = 0; b3 < bd; ++b3) {
                        std::uint32_t v = prod.at(b3, b2);
                        if (v) left[t1 * bd + b1].set(tt * bd + b3, t2 * bd + b2, v);
                    }
                }
        }
    FpMatrix unit(dim, 1, p);
    std::vector<FpMatrix> idems;
    for (std::size_t t = 0; t < 3; ++t) {
        for (std::size_t b = 0; b < bd; ++b)
            if (base.unit().at(b, 0))
                unit.set(t * bd + b, 0, base.unit().at(b, 0));
        for (const auto& e : base.idempotents()) {
            FpMatrix em(dim, 1, p);
            for (std::size_t b = 0; b < bd; ++b) em.set(t * bd + b, 0, e.at(b, 0));
            idems.push_back(em);
        }
    }
    StructAlgebra a = StructAlgebra::from_structure_constants(
        p, std::move(left), unit, idems, StructAlgebra::Kind::A3Relation);

    const FpMatrix& br = base.radical();
    std::vector<FpMatrix> radcols;
    for (std::size_t t = 0; t < 5; ++t) {
        if (t < 3) {
            for (std::size_t rc = 0; rc < br.cols(); ++rc) {
                FpMatrix col(dim, 1, p);
                for (std::size_t b = 0; b < bd; ++b) col.set(t * bd + b, 0, br.at(b, rc));
                radcols.push_back(col);
            }
        } else {
            for (std::size_t b = 0; b < bd; ++b) {
                FpMatrix col(dim, 1, p);
                col.set(t * bd + b, 0, 1);
                radcols.push_back(col);
            }
        }
    }
    a.set_radical_hint(radcols.empty() ? FpMatrix(dim, 0, p) : FpMatrix::hstack(radcols));

    std::vector<std::size_t> gens;
    for (std::size_t t = 0; t < 3; ++t)
        for (std::size_t g : base.generators()) gens.push_back(t * bd + g);
    for (std::size_t t = 3; t < 5; ++t)
        for (std::size_t b = 0; b < bd; ++b)
            if (base.unit().at(b, 0)) gens.push_back(t * bd + b);
    a.set_generators(gens);
    check_generating(a);

    static const char* tags[5] = {"e1", "e2", "e3", "a", "b"};
    std::vector<std::string> labels;
    const auto& bl = base.basis_labels();
    for (std::size_t t = 0; t < 5; ++t)
        for (std::size_t b = 0; b < bd; ++b) {
            std::string bb = b < bl.size() ? bl[b] : "b" + std::to_string(b);
            labels.push_back(bb + "@" + tags[t]);
        }
    a.set_basis_labels(labels);

    auto pd = std::make_shared<ProductData>();
    pd->base = base;
    pd->n = 3;
    pd->cells = {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}}; // e1,e2,e3,a,b slots
    a.set_product_data(pd);
    return a;
}

} // namespace gw
