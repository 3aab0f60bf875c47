#pragma once

#include "gw/algebra.hpp"

#include <memory>

namespace gwt {

// k[x]/(x^n) as a one-loop bound quiver algebra.
inline gw::StructAlgebra truncated_poly(std::uint32_t p, std::size_t n) {
    gw::Quiver q{1, {{"x", 0, 0}}};
    gw::Relation r;
    r.terms.push_back({1, std::vector<std::size_t>(n, 0)});
    return gw::bound_quiver_algebra(q, {r}, p);
}

// Self-injective Nakayama algebra with two simples and radical square zero.
inline gw::StructAlgebra nakayama_2_2(std::uint32_t p) {
    gw::Quiver q{2, {{"a", 0, 1}, {"b", 1, 0}}};
    gw::Relation ab, ba;
    ab.terms.push_back({1, {0, 1}});
    ba.terms.push_back({1, {1, 0}});
    return gw::bound_quiver_algebra(q, {ab, ba}, p);
}

// Linear quiver v1 -> v2.
inline gw::StructAlgebra linear_a2(std::uint32_t p) {
    return gw::bound_quiver_algebra(gw::Quiver{2, {{"a", 0, 1}}}, {}, p);
}

// Four-vertex gentle algebra with six arrows and six zero relations; the
// running sixteen dimensional example.
inline gw::StructAlgebra gentle16(std::uint32_t p) {
    gw::Quiver q{4,
                 {{"b", 1, 0},
                  {"l", 0, 3},
                  {"m", 0, 3},
                  {"a", 3, 1},
                  {"g", 3, 2},
                  {"d", 2, 0}}};
    auto zero = [](std::size_t x, std::size_t y) {
        gw::Relation r;
        r.terms.push_back({1, {x, y}});
        return r;
    };
    std::vector<gw::Relation> rels = {zero(3, 0), zero(4, 5), zero(5, 1),
                                      zero(1, 4), zero(0, 2), zero(2, 3)};
    return gw::bound_quiver_algebra(q, rels, p);
}

inline gw::StructAlgebra base_field(std::uint32_t p) {
    return gw::bound_quiver_algebra(gw::Quiver{1, {}}, {}, p);
}

inline std::shared_ptr<const gw::StructAlgebra> share(gw::StructAlgebra a) {
    return std::make_shared<const gw::StructAlgebra>(std::move(a));
}

inline bool same_span(const gw::FpMatrix& a, const gw::FpMatrix& b) {
    return a.rank() == b.rank() && gw::spans_contain(a, b) && gw::spans_contain(b, a);
}

} // namespace gwt
