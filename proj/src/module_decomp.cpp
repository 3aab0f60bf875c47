#include "gw/module.hpp"

#include "module_internal.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <tuple>

namespace gw {

using detail::vec;
using detail::vec_all;
using detail::unvec;

namespace {

// Dense polynomials over F_p, lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t poly_deg(const Poly& f) { return f.empty() ? 0 : f.size() - 1; }

Poly poly_mul(const Poly& f, const Poly& g, std::uint32_t p) {
    if (f.empty() || g.empty()) return {};
    Poly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            h[i + j] = fp_add(h[i + j], fp_mul(f[i], g[j], p), p);
    poly_trim(h);
    return h;
}

// f = q g + r
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, std::uint32_t p) {
    Poly q;
    if (g.empty()) throw std::logic_error("poly_divmod: zero divisor");
    std::uint32_t lead_inv = fp_inv(g.back(), p);
    while (f.size() >= g.size() && !f.empty()) {
        std::uint32_t c = fp_mul(f.back(), lead_inv, p);
        std::size_t shift = f.size() - g.size();
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = c;
        for (std::size_t i = 0; i < g.size(); ++i)
            f[shift + i] = fp_sub(f[shift + i], fp_mul(c, g[i], p), p);
        poly_trim(f);
    }
    poly_trim(q);
    return {q, f};
}

Poly poly_mod(const Poly& f, const Poly& g, std::uint32_t p) {
    return poly_divmod(f, g, p).second;
}

Poly poly_monic(Poly f, std::uint32_t p) {
    poly_trim(f);
    if (f.empty()) return f;
    std::uint32_t inv = fp_inv(f.back(), p);
    for (auto& c : f) c = fp_mul(c, inv, p);
    return f;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a, p);
}

// g, u with u*f1 = g mod f2 style Bezout: returns (g, u, v) with
// u f1 + v f2 = g = gcd.
std::tuple<Poly, Poly, Poly> poly_ext_gcd(Poly a, Poly b, std::uint32_t p) {
    Poly u0 = {1}, v0 = {}, u1 = {}, v1 = {1};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
        Poly qu = poly_mul(q, u1, p), qv = poly_mul(q, v1, p);
        Poly nu(std::max(u0.size(), qu.size()), 0), nv(std::max(v0.size(), qv.size()), 0);
        for (std::size_t i = 0; i < nu.size(); ++i)
            nu[i] = fp_sub(i < u0.size() ? u0[i] : 0, i < qu.size() ? qu[i] : 0, p);
        for (std::size_t i = 0; i < nv.size(); ++i)
            nv[i] = fp_sub(i < v0.size() ? v0[i] : 0, i < qv.size() ? qv[i] : 0, p);
        poly_trim(nu);
        poly_trim(nv);
        u0 = std::move(u1);
        v0 = std::move(v1);
        u1 = std::move(nu);
        v1 = std::move(nv);
    }
    if (a.empty()) return {a, {}, {}};
    std::uint32_t inv = fp_inv(a.back(), p);
    auto scale = [&](Poly f) {
        for (auto& c : f) c = fp_mul(c, inv, p);
        return f;
    };
    return {scale(a), scale(u0), scale(v0)};
}

Poly poly_derivative(const Poly& f, std::uint32_t p) {
    Poly d;
    for (std::size_t i = 1; i < f.size(); ++i)
        d.push_back(fp_mul(f[i], static_cast<std::uint32_t>(i % p), p));
    poly_trim(d);
    return d;
}

// Squarefree part, handling f' = 0 by taking p-th roots (coefficients are
// in F_p so the root just rescales exponents).
Poly squarefree_part(Poly f, std::uint32_t p) {
    f = poly_monic(f, p);
    if (poly_deg(f) <= 1) return f;
    Poly d = poly_derivative(f, p);
    if (d.empty()) {
        Poly root((f.size() - 1) / p + 1, 0);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i]) root[i / p] = f[i];
        return squarefree_part(root, p);
    }
    Poly g = poly_gcd(f, d, p);
    if (poly_deg(g) == 0) return f;
    Poly core = poly_divmod(f, g, p).first;
    // core is squarefree only up to factors hidden in g; recurse on the
    // product structure via gcd with g's squarefree part
    Poly rest = squarefree_part(g, p);
    Poly prod = poly_mul(core, rest, p);
    return poly_divmod(prod, poly_gcd(core, rest, p), p).first;
}

// Berlekamp splitting of a squarefree monic s: returns a proper monic
// factor, or an empty poly when s is irreducible.
Poly berlekamp_split(const Poly& s, std::uint32_t p) {
    std::size_t n = poly_deg(s);
    if (n <= 1) return {};
    // matrix of Frobenius x -> x^p on F_p[x]/(s)
    FpMatrix frob(n, n, p);
    Poly xp = {0, 1};
    // x^p mod s by square and multiply
    Poly acc = {1};
    std::uint32_t e = p;
    Poly base = xp;
    while (e) {
        if (e & 1) acc = poly_mod(poly_mul(acc, base, p), s, p);
        base = poly_mod(poly_mul(base, base, p), s, p);
        e >>= 1;
    }
    Poly cur = {1};
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < cur.size(); ++i) frob.set(i, j, cur[i]);
        cur = poly_mod(poly_mul(cur, acc, p), s, p);
    }
    FpMatrix ker = (frob - FpMatrix::identity(n, p)).kernel_basis();
    if (ker.cols() <= 1) return {}; // irreducible
    // pick a non-constant kernel element and split with gcd(s, v - c)
    for (std::size_t k = 0; k < ker.cols(); ++k) {
        Poly v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(ker.at(i, k));
        poly_trim(v);
        if (poly_deg(v) == 0) continue;
        for (std::uint32_t c = 0; c < p; ++c) {
            Poly vc = v;
            if (vc.empty()) vc.push_back(0);
            vc[0] = fp_sub(vc[0], c, p);
            poly_trim(vc);
            if (vc.empty()) continue;
            Poly g = poly_gcd(s, vc, p);
            if (poly_deg(g) > 0 && poly_deg(g) < n) return g;
        }
    }
    throw std::logic_error("berlekamp_split: no splitter found");
}

// Multiplication table view of a span of matrices, with coordinates taken
// in the span itself.
struct SpanAlgebra {
    std::vector<FpMatrix> basis;
    FpMatrix vb; // vectorized basis columns
    std::uint32_t p;

    explicit SpanAlgebra(std::vector<FpMatrix> b, std::uint32_t p_)
        : basis(std::move(b)), vb(0, 0, p_), p(p_) {
        if (!basis.empty())
            vb = vec_all(basis, basis[0].rows(), basis[0].cols(), p);
    }
    FpMatrix lift(const FpMatrix& coords) const {
        FpMatrix m(basis[0].rows(), basis[0].cols(), p);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            std::uint32_t c = coords.at(i, 0);
            if (c) m = m + basis[i].scaled(c);
        }
        return m;
    }
    FpMatrix coords(const FpMatrix& m) const {
        auto sol = vb.solve(vec(m));
        if (!sol) throw std::logic_error("span algebra: product left the span");
        return *sol;
    }
};

// Quotient-by-radical arithmetic for a span algebra.
struct QuotientAlgebra {
    const SpanAlgebra& span;
    FpMatrix rad;  // radical coordinates inside the span
    FpMatrix comp; // complement coordinates: the quotient basis
    FpMatrix full;
    std::uint32_t p;

    QuotientAlgebra(const SpanAlgebra& s, FpMatrix rad_)
        : span(s), rad(std::move(rad_)), comp(complement_basis(rad)),
          full(rad.cols() ? FpMatrix::hstack({rad, comp}) : comp), p(s.p) {}

    std::size_t dim() const { return comp.cols(); }
    FpMatrix reduce(const FpMatrix& span_coords) const {
        FpMatrix w = *full.solve(span_coords);
        return w.submatrix(rad.cols(), 0, comp.cols(), span_coords.cols());
    }
    FpMatrix to_span(const FpMatrix& qcoords) const { return comp * qcoords; }
    FpMatrix mul(const FpMatrix& x, const FpMatrix& y) const {
        FpMatrix prod = span.lift(to_span(x)) * span.lift(to_span(y));
        return reduce(span.coords(prod));
    }
    FpMatrix unit_coords() const {
        FpMatrix id = FpMatrix::identity(span.basis[0].rows(), p);
        return reduce(span.coords(id));
    }
};

// Minimal polynomial of u in the quotient algebra.
Poly min_poly(const QuotientAlgebra& q, const FpMatrix& u) {
    std::size_t d = q.dim();
    std::vector<FpMatrix> powers = {q.unit_coords()};
    for (;;) {
        FpMatrix stack = FpMatrix::hstack(powers);
        FpMatrix next = powers.size() == 1 ? u : q.mul(powers.back(), u);
        if (spans_contain(stack, next)) {
            auto sol = stack.solve(next);
            Poly f;
            for (std::size_t i = 0; i < powers.size(); ++i)
                f.push_back(fp_neg(sol->at(i, 0), q.p));
            f.push_back(1);
            return f;
        }
        powers.push_back(next);
        if (powers.size() > d + 1) throw std::logic_error("min_poly: no relation found");
    }
}

// Evaluate a polynomial at u inside the quotient algebra.
FpMatrix poly_eval(const QuotientAlgebra& q, const Poly& f, const FpMatrix& u) {
    FpMatrix acc(q.dim(), 1, q.p);
    FpMatrix pw = q.unit_coords();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i]) acc = acc + pw.scaled(f[i]);
        if (i + 1 < f.size()) pw = q.mul(pw, u);
    }
    return acc;
}

// Nontrivial idempotent of the quotient from one element, when its minimal
// polynomial has at least two distinct irreducible factors.
std::optional<FpMatrix> idempotent_from(const QuotientAlgebra& q, const FpMatrix& u) {
    Poly f = min_poly(q, u);
    if (poly_deg(f) <= 1) return std::nullopt;
    Poly s = squarefree_part(f, q.p);
    Poly g1 = berlekamp_split(s, q.p);
    if (g1.empty()) return std::nullopt; // single irreducible factor
    // primary part of f supported on g1
    Poly g1pow = {1};
    for (std::size_t i = 0; i + 1 < f.size(); ++i) g1pow = poly_mul(g1pow, g1, q.p);
    Poly big1 = poly_gcd(f, g1pow, q.p);
    Poly big2 = poly_divmod(f, big1, q.p).first;
    [[maybe_unused]] auto [g, a, b] = poly_ext_gcd(big1, big2, q.p);
    if (poly_deg(g) != 0) throw std::logic_error("idempotent_from: parts not coprime");
    // e = b * big2 (u): 1 mod big1, 0 mod big2
    Poly epoly = poly_mod(poly_mul(b, big2, q.p), f, q.p);
    FpMatrix e = poly_eval(q, epoly, u);
    if (e.is_zero() || e == q.unit_coords()) return std::nullopt;
    return e;
}

// True when the span algebra modulo its radical is a division ring.
bool quotient_is_division(const QuotientAlgebra& q) {
    std::size_t d = q.dim();
    if (d == 0) return false;
    if (d == 1) return true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            FpMatrix ei(d, 1, q.p), ej(d, 1, q.p);
            ei.set(i, 0, 1);
            ej.set(j, 0, 1);
            if (q.mul(ei, ej) != q.mul(ej, ei)) return false; // not a finite division ring
        }
    FpMatrix frob(d, d, q.p);
    for (std::size_t j = 0; j < d; ++j) {
        FpMatrix e(d, 1, q.p);
        e.set(j, 0, 1);
        FpMatrix pw = e;
        for (std::uint32_t t = 1; t < q.p; ++t) pw = q.mul(pw, e);
        for (std::size_t i = 0; i < d; ++i) frob.set(i, j, pw.at(i, 0));
    }
    return (frob - FpMatrix::identity(d, q.p)).kernel_basis().cols() == 1;
}

// Nontrivial idempotent endomorphism of a decomposable module, or nullopt
// when End(M) is local.
std::optional<FpMatrix> splitting_idempotent(const std::vector<FpMatrix>& endo,
                                             std::uint32_t p) {
    SpanAlgebra span(endo, p);
    FpMatrix rad = matrix_algebra_radical(endo, p);
    QuotientAlgebra q(span, rad);
    if (quotient_is_division(q)) return std::nullopt;

    std::size_t d = q.dim();
    FpMatrix found(0, 0, p);
    bool ok = false;
    // enumerate quotient elements exhaustively when feasible, otherwise
    // basis + products + seeded random probes
    auto try_u = [&](const FpMatrix& u) {
        if (ok || u.is_zero()) return;
        auto e = idempotent_from(q, u);
        if (e) {
            found = *e;
            ok = true;
        }
    };
    double total = 1;
    for (std::size_t i = 0; i < d && total <= 4096; ++i) total *= p;
    if (total <= 4096) {
        std::vector<std::uint32_t> digits(d, 0);
        for (;;) {
            FpMatrix u(d, 1, p);
            for (std::size_t i = 0; i < d; ++i) u.set(i, 0, digits[i]);
            try_u(u);
            if (ok) break;
            std::size_t i = 0;
            while (i < d && ++digits[i] == p) digits[i++] = 0;
            if (i == d) break;
        }
    } else {
        for (std::size_t i = 0; i < d && !ok; ++i) {
            FpMatrix u(d, 1, p);
            u.set(i, 0, 1);
            try_u(u);
        }
        for (std::size_t i = 0; i < d && !ok; ++i)
            for (std::size_t j = 0; j < d && !ok; ++j) {
                FpMatrix ei(d, 1, p), ej(d, 1, p);
                ei.set(i, 0, 1);
                ej.set(j, 0, 1);
                try_u(q.mul(ei, ej));
            }
        std::mt19937_64 rng(7);
        for (int t = 0; t < 500 && !ok; ++t) {
            FpMatrix u(d, 1, p);
            for (std::size_t i = 0; i < d; ++i)
                u.set(i, 0, static_cast<std::uint32_t>(rng() % p));
            try_u(u);
        }
    }
    if (!ok) throw std::logic_error("decompose: failed to split a non-local endomorphism ring");

    // lift to an honest idempotent endomorphism
    FpMatrix e = span.lift(q.to_span(found));
    for (int it = 0; it < 64; ++it) {
        if (e * e == e) break;
        FpMatrix e2 = e * e;
        e = e2.scaled(3 % p) - (e2 * e).scaled(2 % p);
    }
    if (e * e != e) throw std::logic_error("decompose: idempotent lifting failed");
    if (e.is_zero() || e.is_identity())
        throw std::logic_error("decompose: lifted idempotent is trivial");
    return e;
}

void decompose_rec(const Module& m, const FpMatrix& incl, const FpMatrix& proj,
                   std::vector<Summand>& out) {
    std::size_t n = m.dim();
    if (n == 0) return;
    std::vector<FpMatrix> endo = hom_space(m, m);
    if (endo.size() == 1) {
        out.push_back(Summand{m, incl, proj});
        return;
    }

    auto split_along = [&](const FpMatrix& image, const FpMatrix& kernel) {
        FpMatrix full = FpMatrix::hstack({image, kernel});
        FpMatrix inv = *full.inverse();
        Submodule s1 = submodule(m, image);
        Submodule s2 = submodule(m, kernel);
        FpMatrix p1 = inv.submatrix(0, 0, image.cols(), n);
        FpMatrix p2 = inv.submatrix(image.cols(), 0, kernel.cols(), n);
        decompose_rec(s1.mod, incl * s1.incl, p1 * proj, out);
        decompose_rec(s2.mod, incl * s2.incl, p2 * proj, out);
    };

    // Fitting fast path on endomorphism basis elements
    for (const FpMatrix& f : endo) {
        FpMatrix g = f;
        std::size_t r = g.rank();
        if (r == 0 || r == n) continue;
        for (;;) {
            FpMatrix g2 = g * g;
            std::size_t r2 = g2.rank();
            if (r2 == r) break;
            g = std::move(g2);
            r = r2;
        }
        if (r == 0 || r == n) continue;
        split_along(g.column_space_basis(), g.kernel_basis());
        return;
    }

    auto e = splitting_idempotent(endo, m.prime());
    if (!e) {
        out.push_back(Summand{m, incl, proj});
        return;
    }
    split_along(e->column_space_basis(), e->kernel_basis());
}

std::optional<FpMatrix> indec_isomorphism(const Module& a, const Module& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    for (const FpMatrix& h : hom_space(a, b))
        if (h.rank() == a.dim()) return h;
    return std::nullopt;
}

} // namespace

std::vector<Summand> decompose(const Module& m) {
    std::vector<Summand> out;
    std::uint32_t p = m.prime();
    decompose_rec(m, FpMatrix::identity(m.dim(), p), FpMatrix::identity(m.dim(), p), out);
    return out;
}

bool is_indecomposable(const Module& m) {
    if (m.dim() == 0) return false;
    std::vector<FpMatrix> endo = hom_space(m, m);
    if (endo.size() == 1) return true;
    SpanAlgebra span(endo, m.prime());
    FpMatrix rad = matrix_algebra_radical(endo, m.prime());
    QuotientAlgebra q(span, rad);
    return quotient_is_division(q);
}

std::optional<FpMatrix> find_isomorphism(const Module& m, const Module& n) {
    std::uint32_t p = m.prime();
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return FpMatrix(0, 0, p);
    if (m.dim_vector() != n.dim_vector()) return std::nullopt;
    std::vector<Summand> sm = decompose(m), sn = decompose(n);
    if (sm.size() != sn.size()) return std::nullopt;
    std::vector<bool> used(sn.size(), false);
    FpMatrix iso(n.dim(), m.dim(), p);
    for (const Summand& s : sm) {
        bool matched = false;
        for (std::size_t j = 0; j < sn.size() && !matched; ++j) {
            if (used[j] || sn[j].mod.dim() != s.mod.dim()) continue;
            auto phi = indec_isomorphism(s.mod, sn[j].mod);
            if (phi) {
                iso = iso + sn[j].incl * *phi * s.proj;
                used[j] = true;
                matched = true;
            }
        }
        if (!matched) return std::nullopt;
    }
    return iso;
}

bool is_isomorphic(const Module& m, const Module& n) {
    return find_isomorphism(m, n).has_value();
}

std::vector<FpMatrix> projectively_trivial_homs(const Module& m, const Module& n) {
    std::uint32_t p = m.prime();
    if (m.dim() == 0 || n.dim() == 0) return {};
    Cover c = projective_cover(n);
    std::vector<FpMatrix> lifted;
    for (const FpMatrix& h : hom_space(m, c.proj)) lifted.push_back(c.map * h);
    if (lifted.empty()) return {};
    FpMatrix basis = vec_all(lifted, n.dim(), m.dim(), p).column_space_basis();
    std::vector<FpMatrix> out;
    out.reserve(basis.cols());
    for (std::size_t k = 0; k < basis.cols(); ++k)
        out.push_back(unvec(basis.col(k), n.dim(), m.dim()));
    return out;
}

StructAlgebra endomorphism_algebra(const std::vector<Module>& summands, bool stable) {
    if (summands.empty())
        throw std::invalid_argument("endomorphism_algebra: no summands");
    std::uint32_t p = summands[0].prime();
    std::size_t k = summands.size();
    if (stable)
        for (const Module& g : summands)
            if (is_projective(g))
                throw std::invalid_argument(
                    "endomorphism_algebra: projective summand in a stable construction");

    auto ed = std::make_shared<EndData>();
    ed->summands = summands;
    ed->stable = stable;
    ed->block.assign(k, std::vector<std::vector<std::size_t>>(k));
    ed->phoms.assign(k, std::vector<std::vector<FpMatrix>>(k));

    // per-block hom bases; in the stable case pick representatives
    // complementing the projectively trivial maps
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<FpMatrix> homs = hom_space(summands[j], summands[i]);
            std::vector<FpMatrix> reps;
            if (!stable) {
                reps = std::move(homs);
            } else {
                std::vector<FpMatrix> ph = projectively_trivial_homs(summands[j], summands[i]);
                ed->phoms[i][j] = ph;
                if (!homs.empty()) {
                    std::size_t rows = summands[i].dim(), cols = summands[j].dim();
                    std::vector<FpMatrix> all = ph;
                    all.insert(all.end(), homs.begin(), homs.end());
                    Echelon e = vec_all(all, rows, cols, p).rref();
                    for (std::size_t c : e.pivot_cols)
                        if (c >= ph.size()) reps.push_back(homs[c - ph.size()]);
                }
            }
            for (auto& r : reps) {
                ed->block[i][j].push_back(ed->maps.size());
                ed->maps.push_back(std::move(r));
                ed->block_dst.push_back(i);
                ed->block_src.push_back(j);
            }
        }

    std::size_t dim = ed->maps.size();

    // coordinate solver per block: coordinates of a map G_j -> G_i in the
    // block basis, reducing modulo projectively trivial maps when stable
    auto block_coords = [&](std::size_t i, std::size_t j,
                            const FpMatrix& f) -> std::vector<std::pair<std::size_t, std::uint32_t>> {
        const auto& idx = ed->block[i][j];
        const auto& ph = ed->phoms[i][j];
        std::size_t rows = summands[i].dim(), cols = summands[j].dim();
        if (idx.empty() && ph.empty()) {
            if (!f.is_zero())
                throw std::logic_error("endomorphism_algebra: map outside hom space");
            return {};
        }
        std::vector<FpMatrix> all = ph;
        for (std::size_t t : idx) all.push_back(ed->maps[t]);
        auto sol = vec_all(all, rows, cols, p).solve(vec(f));
        if (!sol) throw std::logic_error("endomorphism_algebra: map outside hom space");
        std::vector<std::pair<std::size_t, std::uint32_t>> out;
        for (std::size_t t = 0; t < idx.size(); ++t) {
            std::uint32_t c = sol->at(ph.size() + t, 0);
            if (c) out.emplace_back(idx[t], c);
        }
        return out;
    };

    std::vector<FpMatrix> left(dim, FpMatrix(dim, dim, p));
    // one multi right-hand-side solve per hom block instead of one solve
    // per composable pair
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t d = 0; d < k; ++d) {
            std::vector<std::pair<std::size_t, std::size_t>> uv;
            for (std::size_t u = 0; u < dim; ++u) {
                if (ed->block_dst[u] != a) continue;
                for (std::size_t v = 0; v < dim; ++v)
                    if (ed->block_dst[v] == ed->block_src[u] && ed->block_src[v] == d)
                        uv.emplace_back(u, v); // compose G_d -> G_b -> G_a
            }
            if (uv.empty()) continue;
            const auto& idx = ed->block[a][d];
            const auto& ph = ed->phoms[a][d];
            std::size_t rows = summands[a].dim(), cols = summands[d].dim();
            FpMatrix targets(rows * cols, uv.size(), p);
            for (std::size_t t = 0; t < uv.size(); ++t) {
                FpMatrix comp = ed->maps[uv[t].first] * ed->maps[uv[t].second];
                for (std::size_t cc = 0; cc < cols; ++cc)
                    for (std::size_t rr = 0; rr < rows; ++rr)
                        targets.set(cc * rows + rr, t, comp.at(rr, cc));
            }
            if (idx.empty() && ph.empty()) {
                if (!targets.is_zero())
                    throw std::logic_error("endomorphism_algebra: map outside hom space");
                continue;
            }
            std::vector<FpMatrix> all = ph;
            for (std::size_t t : idx) all.push_back(ed->maps[t]);
            auto sol = vec_all(all, rows, cols, p).solve(targets);
            if (!sol) throw std::logic_error("endomorphism_algebra: map outside hom space");
            for (std::size_t t = 0; t < uv.size(); ++t)
                for (std::size_t w = 0; w < idx.size(); ++w) {
                    std::uint32_t c = sol->at(ph.size() + w, t);
                    if (c) left[uv[t].first].set(idx[w], uv[t].second, c);
                }
        }

    FpMatrix unit(dim, 1, p);
    std::vector<FpMatrix> idems;
    for (std::size_t i = 0; i < k; ++i) {
        FpMatrix e(dim, 1, p);
        FpMatrix id = FpMatrix::identity(summands[i].dim(), p);
        for (auto [row, c] : block_coords(i, i, id)) e.set(row, 0, c);
        if (e.is_zero())
            throw std::logic_error("endomorphism_algebra: identity reduced to zero");
        idems.push_back(e);
        unit = unit + e;
    }

    StructAlgebra gamma = StructAlgebra::from_structure_constants(
        p, std::move(left), unit, idems,
        stable ? StructAlgebra::Kind::StableEndomorphism : StructAlgebra::Kind::Endomorphism);

    // structural radical: off-diagonal blocks plus the radical of each
    // local diagonal block; valid when summands are pairwise non-isomorphic
    // indecomposables, checked here from the diagonal End spans directly
    bool hint_ok = true;
    std::vector<std::vector<FpMatrix>> diag_ends(k);
    std::vector<FpMatrix> diag_rads(k, FpMatrix(0, 0, p));
    for (std::size_t i = 0; i < k && hint_ok; ++i) {
        std::vector<FpMatrix>& ends = diag_ends[i];
        if (stable) {
            ends = hom_space(summands[i], summands[i]);
        } else {
            ends.reserve(ed->block[i][i].size());
            for (std::size_t t : ed->block[i][i]) ends.push_back(ed->maps[t]);
        }
        if (ends.empty()) {
            hint_ok = false;
            break;
        }
        diag_rads[i] = matrix_algebra_radical(ends, p);
        SpanAlgebra span(ends, p);
        QuotientAlgebra q(span, diag_rads[i]);
        if (!quotient_is_division(q)) hint_ok = false;
    }
    for (std::size_t i = 0; i < k && hint_ok; ++i)
        for (std::size_t j = i + 1; j < k && hint_ok; ++j)
            if (is_isomorphic(summands[i], summands[j])) hint_ok = false;
    if (hint_ok) {
        std::vector<FpMatrix> radcols;
        for (std::size_t u = 0; u < dim; ++u)
            if (ed->block_dst[u] != ed->block_src[u]) {
                FpMatrix c(dim, 1, p);
                c.set(u, 0, 1);
                radcols.push_back(c);
            }
        for (std::size_t i = 0; i < k; ++i) {
            const std::vector<FpMatrix>& ends = diag_ends[i];
            const FpMatrix& rad = diag_rads[i];
            for (std::size_t rc = 0; rc < rad.cols(); ++rc) {
                FpMatrix f(summands[i].dim(), summands[i].dim(), p);
                for (std::size_t t = 0; t < ends.size(); ++t) {
                    std::uint32_t c = rad.at(t, rc);
                    if (c) f = f + ends[t].scaled(c);
                }
                FpMatrix col(dim, 1, p);
                for (auto [row, c] : block_coords(i, i, f)) col.set(row, 0, c);
                if (!col.is_zero()) radcols.push_back(col);
            }
        }
        gamma.set_radical_hint(radcols.empty()
                                   ? FpMatrix(dim, 0, p)
                                   : FpMatrix::hstack(radcols).column_space_basis());
    }

    std::vector<std::string> labels;
    for (std::size_t u = 0; u < dim; ++u)
        labels.push_back("h" + std::to_string(u) + "[G" + std::to_string(ed->block_src[u] + 1) +
                         "->G" + std::to_string(ed->block_dst[u] + 1) + "]");
    gamma.set_basis_labels(labels);
    gamma.set_end_data(ed);
    return gamma;
}

} // namespace gw
