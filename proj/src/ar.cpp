#include "gw/ar.hpp"

#include "module_internal.hpp"

#include "json.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <utility>

namespace gw {

namespace {

using detail::vec;
using detail::vec_all;

std::vector<FpMatrix> rad_end_matrices(const Module& m) {
    StructAlgebra e = endomorphism_algebra({m});
    const auto& maps = e.end_data()->maps;
    FpMatrix rad = e.radical();
    std::vector<FpMatrix> out;
    out.reserve(rad.cols());
    for (std::size_t c = 0; c < rad.cols(); ++c) {
        FpMatrix f(m.dim(), m.dim(), m.prime());
        for (std::size_t k = 0; k < maps.size(); ++k)
            if (std::uint32_t t = rad.at(k, c)) f = f + maps[k].scaled(t);
        out.push_back(std::move(f));
    }
    return out;
}

// Coordinates of ext classes inside the hom coefficient space: `full` is
// [restricted image | class representatives] and is invertible there.
struct ExtCoords {
    FpMatrix hom_span;
    FpMatrix full;
    std::size_t rest_cols;
};

ExtCoords ext_coords(const Ext1& e, const Module& a) {
    const std::uint32_t p = a.prime();
    ExtCoords x{vec_all(e.homs, a.dim(), e.syz.omega.dim(), p), FpMatrix(0, 0, p),
                e.restricted.cols()};
    FpMatrix cls(e.homs.size(), e.classes.size(), p);
    for (std::size_t j = 0; j < e.classes.size(); ++j) {
        auto sol = x.hom_span.solve(vec(e.classes[j]));
        if (!sol) throw std::logic_error("ext_coords: class outside hom span");
        for (std::size_t k = 0; k < e.homs.size(); ++k) cls.set(k, j, sol->at(k, 0));
    }
    x.full = FpMatrix::hstack({e.restricted, cls});
    return x;
}

// Coordinates of the classes of fs in the complement basis e.classes, one
// column per map, batched into a single solve.
FpMatrix class_parts(const ExtCoords& x, const Ext1& e, const std::vector<FpMatrix>& fs) {
    const std::uint32_t p = x.hom_span.prime();
    FpMatrix targets(x.hom_span.rows(), fs.size(), p);
    for (std::size_t t = 0; t < fs.size(); ++t)
        for (std::size_t cc = 0; cc < fs[t].cols(); ++cc)
            for (std::size_t rr = 0; rr < fs[t].rows(); ++rr)
                targets.set(cc * fs[t].rows() + rr, t, fs[t].at(rr, cc));
    auto c = x.hom_span.solve(targets);
    if (!c) throw std::logic_error("class_parts: map outside hom span");
    auto full = x.full.solve(*c);
    if (!full) throw std::logic_error("class_parts: coefficient solve failed");
    return full->submatrix(x.rest_cols, 0, e.classes.size(), fs.size());
}

// Restriction of f in End(C) to the syzygy: lift f through the cover by
// projectivity, then restrict the lift to the kernel.
FpMatrix syzygy_restriction(const Syzygy& s, const FpMatrix& f) {
    const Module& p0 = s.cover.proj;
    auto hp = projective_hom_basis(p0.alg, s.cover.idems, s.cover.idems);
    std::vector<FpMatrix> comps;
    comps.reserve(hp.size());
    for (const auto& h : hp) comps.push_back(s.cover.map * h);
    FpMatrix span = vec_all(comps, s.cover.map.rows(), p0.dim(), p0.prime());
    auto t = span.solve(vec(f * s.cover.map));
    if (!t) throw std::logic_error("syzygy_restriction: lift through the cover failed");
    FpMatrix lift(p0.dim(), p0.dim(), p0.prime());
    for (std::size_t k = 0; k < hp.size(); ++k)
        if (std::uint32_t c = t->at(k, 0)) lift = lift + hp[k].scaled(c);
    auto of = s.incl.solve(lift * s.incl);
    if (!of) throw std::logic_error("syzygy_restriction: kernel not preserved");
    return *of;
}

// Some combination of maps C -> B splits g, i.e. the sequence splits.
bool has_section(const Module& b, const Module& c, const FpMatrix& g) {
    auto homs = hom_space(c, b);
    std::vector<FpMatrix> comps;
    comps.reserve(homs.size());
    for (const auto& h : homs) comps.push_back(g * h);
    FpMatrix span = vec_all(comps, c.dim(), c.dim(), c.prime());
    return span.solve(vec(FpMatrix::identity(c.dim(), c.prime()))).has_value();
}

} // namespace

std::vector<FpMatrix> ext_socle_basis(const Module& c, const Module& a, const Ext1& e) {
    const std::uint32_t p = c.prime();
    ExtCoords x = ext_coords(e, a);

    // socle of Ext^1(C, A) under both endomorphism ring actions
    std::vector<FpMatrix> rows;
    for (const FpMatrix& f : rad_end_matrices(c)) {
        FpMatrix of = syzygy_restriction(e.syz, f);
        std::vector<FpMatrix> moved;
        moved.reserve(e.dim());
        for (std::size_t j = 0; j < e.dim(); ++j) moved.push_back(e.classes[j] * of);
        rows.push_back(class_parts(x, e, moved));
    }
    for (const FpMatrix& g : rad_end_matrices(a)) {
        std::vector<FpMatrix> moved;
        moved.reserve(e.dim());
        for (std::size_t j = 0; j < e.dim(); ++j) moved.push_back(g * e.classes[j]);
        rows.push_back(class_parts(x, e, moved));
    }
    FpMatrix constraints =
        rows.empty() ? FpMatrix(0, e.dim(), p) : FpMatrix::vstack(rows);
    FpMatrix ker = constraints.kernel_basis();

    std::vector<FpMatrix> out;
    out.reserve(ker.cols());
    for (std::size_t col = 0; col < ker.cols(); ++col) {
        FpMatrix xi(a.dim(), e.syz.omega.dim(), p);
        for (std::size_t j = 0; j < e.dim(); ++j)
            if (std::uint32_t t = ker.at(j, col)) xi = xi + e.classes[j].scaled(t);
        out.push_back(std::move(xi));
    }
    return out;
}

AlmostSplitSeq almost_split_ending_at(const Module& c,
                                      std::shared_ptr<const StructAlgebra> op) {
    if (is_projective(c)) throw ProjectiveInputError("almost_split_ending_at: projective end term");
    if (!is_indecomposable(c))
        throw std::invalid_argument("almost_split_ending_at: end term must be indecomposable");

    Module a = tau_plus(c, op);
    Ext1 e = ext1(c, a);
    if (e.dim() == 0)
        throw CertificationFailedError("almost_split_ending_at: vanishing ext group");

    std::vector<FpMatrix> socle = ext_socle_basis(c, a, e);
    if (socle.empty())
        throw CertificationFailedError("almost_split_ending_at: empty ext socle");
    return AlmostSplitSeq{realize_extension(c, a, e, socle.front()), false};
}

bool is_injective(const Module& m, std::shared_ptr<const StructAlgebra> op) {
    return is_projective(dual_module(m, op));
}

AlmostSplitSeq almost_split_starting_at(const Module& a,
                                        std::shared_ptr<const StructAlgebra> op) {
    if (is_injective(a, op))
        throw InjectiveInputError("almost_split_starting_at: injective start term");
    if (!is_indecomposable(a))
        throw std::invalid_argument("almost_split_starting_at: start term must be indecomposable");
    return almost_split_ending_at(tau_minus(a, op), op);
}

bool certify_almost_split(const ShortExactSeq& s, const std::vector<Module>& universe) {
    try {
        validate_ses(s);
    } catch (const std::invalid_argument&) {
        return false;
    }
    if (!is_indecomposable(s.left) || !is_indecomposable(s.right)) return false;
    if (has_section(s.mid, s.right, s.g)) return false;

    const std::uint32_t p = s.mid.prime();
    for (const Module& u : universe) {
        // every non-retraction U -> C must lift through g
        {
            std::vector<FpMatrix> targets;
            if (auto iso = find_isomorphism(u, s.right)) {
                for (const FpMatrix& r : rad_end_matrices(u)) targets.push_back(*iso * r);
            } else {
                targets = hom_space(u, s.right);
            }
            if (!targets.empty()) {
                std::vector<FpMatrix> comps;
                for (const FpMatrix& h : hom_space(u, s.mid)) comps.push_back(s.g * h);
                FpMatrix span = vec_all(comps, s.right.dim(), u.dim(), p);
                for (const FpMatrix& t : targets)
                    if (!spans_contain(span, vec(t))) return false;
            }
        }
        // every non-section A -> U must extend through f
        {
            std::vector<FpMatrix> targets;
            if (auto iso = find_isomorphism(s.left, u)) {
                for (const FpMatrix& r : rad_end_matrices(s.left)) targets.push_back(*iso * r);
            } else {
                targets = hom_space(s.left, u);
            }
            if (!targets.empty()) {
                std::vector<FpMatrix> comps;
                for (const FpMatrix& h : hom_space(s.mid, u)) comps.push_back(h * s.f);
                FpMatrix span = vec_all(comps, u.dim(), s.left.dim(), p);
                for (const FpMatrix& t : targets)
                    if (!spans_contain(span, vec(t))) return false;
            }
        }
    }
    return true;
}

std::optional<std::size_t> ARQuiver::find(const Module& m) const {
    for (std::size_t i = 0; i < indecomposables.size(); ++i)
        if (indecomposables[i].dim() == m.dim() && is_isomorphic(indecomposables[i], m))
            return i;
    return std::nullopt;
}

std::size_t ARQuiver::arrow_count(std::size_t src, std::size_t dst) const {
    auto it = arrows.find({src, dst});
    return it == arrows.end() ? 0 : it->second;
}

std::size_t ARQuiver::arrows_into(std::size_t v) const {
    std::size_t n = 0;
    for (const auto& [key, mult] : arrows)
        if (key.second == v) n += mult;
    return n;
}

std::size_t ARQuiver::arrows_out_of(std::size_t v) const {
    std::size_t n = 0;
    for (const auto& [key, mult] : arrows)
        if (key.first == v) n += mult;
    return n;
}

ARQuiver knit(std::shared_ptr<const StructAlgebra> alg, std::size_t max_modules,
              std::size_t max_dim) {
    ARQuiver q;
    q.alg = alg;
    auto op = std::make_shared<const StructAlgebra>(opposite_algebra(*alg));

    std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
    std::deque<std::size_t> work;

    auto find_vertex = [&](const Module& m) -> std::optional<std::size_t> {
        auto it = buckets.find(m.dim_vector());
        if (it == buckets.end()) return std::nullopt;
        for (std::size_t i : it->second)
            if (is_isomorphic(q.indecomposables[i], m)) return i;
        return std::nullopt;
    };

    auto add = [&](Module m) -> std::optional<std::size_t> {
        if (m.dim() == 0) return std::nullopt;
        if (m.dim() > max_dim) {
            q.cutoff_hit = true;
            return std::nullopt;
        }
        if (auto i = find_vertex(m)) return i;
        if (q.indecomposables.size() >= max_modules) {
            q.cutoff_hit = true;
            return std::nullopt;
        }
        std::size_t idx = q.indecomposables.size();
        buckets[m.dim_vector()].push_back(idx);
        q.projective.push_back(is_projective(m));
        q.injective.push_back(is_injective(m, op));
        q.indecomposables.push_back(std::move(m));
        work.push_back(idx);
        return idx;
    };

    for (std::size_t i = 0; i < alg->num_idempotents(); ++i)
        add(projective_module(alg, i));
    for (std::size_t i = 0; i < alg->num_idempotents(); ++i)
        add(dual_module(projective_module(op, i), alg));

    while (!work.empty() && !q.cutoff_hit) {
        std::size_t v = work.front();
        work.pop_front();
        Module m = q.indecomposables[v];
        if (!q.projective[v]) {
            AlmostSplitSeq as = almost_split_ending_at(m, op);
            if (auto t = add(as.seq.left)) q.tau_pairs[v] = *t;
            for (const Summand& s : decompose(as.seq.mid)) add(s.mod);
            q.sequences.emplace(v, std::move(as));
        }
        if (!q.injective[v]) add(tau_minus(m, op));
        if (q.projective[v])
            for (const Summand& s : decompose(radical_submodule(m).mod)) add(s.mod);
        if (q.injective[v])
            for (const Summand& s : decompose(quotient_module(m, socle_submodule(m).incl).mod))
                add(s.mod);
    }
    q.complete = !q.cutoff_hit;
    if (!q.complete) return q;

    for (const auto& [v, as] : q.sequences)
        for (const Summand& s : decompose(as.seq.mid)) {
            auto j = find_vertex(s.mod);
            if (!j) throw CertificationFailedError("knit: middle summand escaped the inventory");
            q.arrows[{*j, v}] += 1;
        }
    for (std::size_t v = 0; v < q.indecomposables.size(); ++v) {
        if (!q.projective[v]) continue;
        Submodule rad = radical_submodule(q.indecomposables[v]);
        if (rad.mod.dim() == 0) continue;
        for (const Summand& s : decompose(rad.mod)) {
            auto j = find_vertex(s.mod);
            if (!j) throw CertificationFailedError("knit: radical summand escaped the inventory");
            q.arrows[{*j, v}] += 1;
        }
    }
    for (auto& [v, as] : q.sequences) {
        as.certified = certify_almost_split(as.seq, q.indecomposables);
        if (!as.certified)
            throw CertificationFailedError("knit: sequence failed the factorization check");
    }
    return q;
}

TauOrbit tau_orbit(const Module& m, const ARQuiver& arq) {
    auto start = arq.find(m);
    if (!start) throw std::invalid_argument("tau_orbit: module is not in the quiver");
    if (arq.projective[*start]) throw ProjectiveInputError("tau_orbit: projective module");
    TauOrbit out;
    out.orbit.push_back(*start);
    std::size_t cur = *start;
    for (std::size_t steps = 1; steps <= arq.indecomposables.size(); ++steps) {
        auto it = arq.tau_pairs.find(cur);
        if (it == arq.tau_pairs.end()) return out;
        cur = it->second;
        if (cur == *start) {
            out.period = steps;
            return out;
        }
        out.orbit.push_back(cur);
    }
    return out;
}

std::string to_dot(const ARQuiver& arq) {
    std::ostringstream os;
    os << "digraph AR {\n  rankdir=LR;\n  node [shape=box];\n";
    for (std::size_t v = 0; v < arq.indecomposables.size(); ++v) {
        os << "  v" << v << " [label=\"";
        auto dv = arq.indecomposables[v].dim_vector();
        for (std::size_t i = 0; i < dv.size(); ++i) os << (i ? "," : "") << dv[i];
        os << '"';
        if (arq.projective[v]) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& [key, mult] : arq.arrows)
        for (std::size_t k = 0; k < mult; ++k)
            os << "  v" << key.first << " -> v" << key.second << ";\n";
    for (const auto& [c, t] : arq.tau_pairs)
        os << "  v" << c << " -> v" << t << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const ARQuiver& arq) {
    nlohmann::json j;
    j["prime"] = arq.alg->prime();
    j["complete"] = arq.complete;
    j["cutoff_hit"] = arq.cutoff_hit;
    j["count"] = arq.indecomposables.size();
    auto mods = nlohmann::json::array();
    for (std::size_t v = 0; v < arq.indecomposables.size(); ++v) {
        const Module& m = arq.indecomposables[v];
        mods.push_back({{"index", v},
                        {"dim", m.dim()},
                        {"dim_vector", m.dim_vector()},
                        {"projective", static_cast<bool>(arq.projective[v])},
                        {"injective", static_cast<bool>(arq.injective[v])}});
    }
    j["indecomposables"] = std::move(mods);
    auto arr = nlohmann::json::array();
    for (const auto& [key, mult] : arq.arrows)
        arr.push_back({{"src", key.first}, {"dst", key.second}, {"multiplicity", mult}});
    j["arrows"] = std::move(arr);
    auto tp = nlohmann::json::array();
    for (const auto& [c, t] : arq.tau_pairs) tp.push_back({{"from", c}, {"to", t}});
    j["tau"] = std::move(tp);
    return j.dump(2);
}

} // namespace gw
