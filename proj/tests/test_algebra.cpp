#include <doctest.h>

#include "gw/algebra.hpp"
#include "gw/algebra_products.hpp"

using namespace gw;

namespace {

// k[x]/(x^n) as a one-loop bound quiver algebra.
StructAlgebra truncated_poly(std::uint32_t p, std::size_t n) {
    Quiver q{1, {{"x", 0, 0}}};
    Relation r;
    r.terms.push_back({1, std::vector<std::size_t>(n, 0)});
    return bound_quiver_algebra(q, {r}, p);
}

// Self-injective Nakayama algebra with two simples and radical square zero.
StructAlgebra nakayama_2_2(std::uint32_t p) {
    Quiver q{2, {{"a", 0, 1}, {"b", 1, 0}}};
    Relation ab, ba;
    ab.terms.push_back({1, {0, 1}});
    ba.terms.push_back({1, {1, 0}});
    return bound_quiver_algebra(q, {ab, ba}, p);
}

// Four-vertex gentle algebra with six arrows and six zero relations; the
// running sixteen dimensional example.
StructAlgebra gentle16(std::uint32_t p) {
    Quiver q{4,
             {{"b", 1, 0},   // 0: v2 -> v1
              {"l", 0, 3},   // 1: v1 -> v4
              {"m", 0, 3},   // 2: v1 -> v4
              {"a", 3, 1},   // 3: v4 -> v2
              {"g", 3, 2},   // 4: v4 -> v3
              {"d", 2, 0}}}; // 5: v3 -> v1
    auto zero = [](std::size_t x, std::size_t y) {
        Relation r;
        r.terms.push_back({1, {x, y}});
        return r;
    };
    std::vector<Relation> rels = {zero(3, 0), zero(4, 5), zero(5, 1),
                                  zero(1, 4), zero(0, 2), zero(2, 3)};
    return bound_quiver_algebra(q, rels, p);
}

StructAlgebra base_field(std::uint32_t p) {
    return bound_quiver_algebra(Quiver{1, {}}, {}, p);
}

bool same_span(const FpMatrix& a, const FpMatrix& b) {
    return a.rank() == b.rank() && spans_contain(a, b) && spans_contain(b, a);
}

} // namespace

TEST_CASE("truncated polynomial algebras") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra a2 = truncated_poly(p, 2);
        CHECK(a2.dim() == 2);
        CHECK(a2.num_idempotents() == 1);
        CHECK(a2.radical().cols() == 1);

        StructAlgebra a3 = truncated_poly(p, 3);
        REQUIRE(a3.dim() == 3);
        CHECK(a3.basis_labels() == std::vector<std::string>{"e1", "x", "x*x"});
        FpMatrix x = a3.basis_element(1);
        FpMatrix x2 = a3.multiply(x, x);
        CHECK(x2 == a3.basis_element(2));
        CHECK(a3.multiply(x2, x).is_zero());
        // radical = span{x, x^2}
        FpMatrix rad = a3.radical();
        REQUIRE(rad.cols() == 2);
        CHECK(spans_contain(rad, x));
        CHECK(spans_contain(rad, x2));
        CHECK(!spans_contain(rad, a3.unit()));
        CHECK(same_span(rad, a3.radical_generic()));
        CHECK_NOTHROW(a3.validate(true));
    }
}

TEST_CASE("path algebra of linear quiver") {
    StructAlgebra a = bound_quiver_algebra(Quiver{2, {{"a", 0, 1}}}, {}, 2);
    CHECK(a.dim() == 3);
    CHECK(a.num_idempotents() == 2);
    CHECK(a.radical().cols() == 1);
    FpMatrix arr = a.basis_element(a.quiver_data()->arrow_basis_index[0]);
    CHECK(a.multiply(a.idempotent(0), arr) == arr);
    CHECK(a.multiply(arr, a.idempotent(1)) == arr);
    CHECK(a.multiply(arr, a.idempotent(0)).is_zero());
    CHECK(a.multiply(arr, arr).is_zero());
}

TEST_CASE("self-injective Nakayama algebra with two simples") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra a = nakayama_2_2(p);
        CHECK(a.dim() == 4);
        CHECK(a.num_idempotents() == 2);
        CHECK(a.radical().cols() == 2);
        const auto& qd = *a.quiver_data();
        FpMatrix av = a.basis_element(qd.arrow_basis_index[0]);
        FpMatrix bv = a.basis_element(qd.arrow_basis_index[1]);
        CHECK(a.multiply(av, bv).is_zero());
        CHECK(a.multiply(bv, av).is_zero());
        CHECK(a.multiply(a.idempotent(0), av) == av);
        CHECK(same_span(a.radical(), a.radical_generic()));
        CHECK_NOTHROW(a.validate(true));
    }
}

TEST_CASE("sixteen dimensional gentle algebra") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra a = gentle16(p);
        REQUIRE(a.dim() == 16);
        CHECK(a.num_idempotents() == 4);
        CHECK(a.radical().cols() == 12);
        const auto& qd = *a.quiver_data();
        auto arrow = [&](std::size_t i) { return a.basis_element(qd.arrow_basis_index[i]); };
        FpMatrix b = arrow(0), l = arrow(1), m = arrow(2), al = arrow(3), g = arrow(4),
                 d = arrow(5);
        // surviving length-two paths
        CHECK(!a.multiply(b, l).is_zero());
        CHECK(!a.multiply(l, al).is_zero());
        CHECK(!a.multiply(m, g).is_zero());
        CHECK(!a.multiply(d, m).is_zero());
        // the six relations
        CHECK(a.multiply(al, b).is_zero());
        CHECK(a.multiply(g, d).is_zero());
        CHECK(a.multiply(d, l).is_zero());
        CHECK(a.multiply(l, g).is_zero());
        CHECK(a.multiply(b, m).is_zero());
        CHECK(a.multiply(m, al).is_zero());
        // the two length-three cycles, and their death at length four
        FpMatrix bla = a.multiply(a.multiply(b, l), al);
        FpMatrix dmg = a.multiply(a.multiply(d, m), g);
        CHECK(!bla.is_zero());
        CHECK(!dmg.is_zero());
        CHECK(a.multiply(bla, b).is_zero());
        CHECK(a.multiply(dmg, d).is_zero());
        CHECK(same_span(a.radical(), a.radical_generic()));
        CHECK_NOTHROW(a.validate(true));
    }
}

TEST_CASE("commutative two-loop quotient with a non-monomial relation") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        Quiver q{1, {{"x", 0, 0}, {"y", 0, 0}}};
        Relation xx, yy, comm;
        xx.terms.push_back({1, {0, 0}});
        yy.terms.push_back({1, {1, 1}});
        comm.terms.push_back({1, {0, 1}});
        comm.terms.push_back({p - 1, {1, 0}});
        StructAlgebra a = bound_quiver_algebra(q, {xx, yy, comm}, p);
        REQUIRE(a.dim() == 4);
        const auto& qd = *a.quiver_data();
        FpMatrix x = a.basis_element(qd.arrow_basis_index[0]);
        FpMatrix y = a.basis_element(qd.arrow_basis_index[1]);
        FpMatrix xy = a.multiply(x, y);
        CHECK(!xy.is_zero());
        CHECK(xy == a.multiply(y, x));
        CHECK(a.multiply(xy, x).is_zero());
        CHECK(a.radical().cols() == 3);
        CHECK(same_span(a.radical(), a.radical_generic()));
    }
}

TEST_CASE("relation validation") {
    Quiver q{2, {{"a", 0, 1}, {"b", 1, 0}}};
    Relation short_term;
    short_term.terms.push_back({1, {0}});
    CHECK_THROWS_AS(bound_quiver_algebra(q, {short_term}, 2), InadmissibleRelationError);

    Relation mixed;
    mixed.terms.push_back({1, {0, 1}});
    mixed.terms.push_back({1, {0, 1, 0}});
    CHECK_THROWS_AS(bound_quiver_algebra(q, {mixed}, 2), InadmissibleRelationError);

    Relation nonparallel;
    nonparallel.terms.push_back({1, {0, 1}});
    nonparallel.terms.push_back({1, {1, 0}});
    CHECK_THROWS_AS(bound_quiver_algebra(q, {nonparallel}, 2), InadmissibleRelationError);

    Relation noncomposable;
    noncomposable.terms.push_back({1, {0, 0}});
    CHECK_THROWS_AS(bound_quiver_algebra(q, {noncomposable}, 2), InadmissibleRelationError);
}

TEST_CASE("infinite dimensional detection") {
    Quiver loop{1, {{"x", 0, 0}}};
    CHECK_THROWS_AS(bound_quiver_algebra(loop, {}, 2), InfiniteDimensionalError);
    CHECK_THROWS_AS(bound_quiver_algebra(loop, {}, 2, 50), InfiniteDimensionalError);
}

TEST_CASE("opposite algebra") {
    StructAlgebra a = gentle16(2);
    StructAlgebra op = opposite_algebra(a);
    CHECK(op.dim() == a.dim());
    CHECK(op.kind() == StructAlgebra::Kind::Opposite);
    // multiplication is reversed
    for (std::size_t i = 0; i < a.dim(); i += 3)
        for (std::size_t j = 0; j < a.dim(); j += 3)
            CHECK(op.multiply(a.basis_element(i), a.basis_element(j)) ==
                  a.multiply(a.basis_element(j), a.basis_element(i)));
    // involution
    StructAlgebra opop = opposite_algebra(op);
    for (std::size_t i = 0; i < a.dim(); ++i)
        CHECK(opop.left_mult_table(i) == a.left_mult_table(i));
    CHECK(same_span(op.radical(), a.radical()));
    CHECK(same_span(op.radical(), op.radical_generic()));
}

TEST_CASE("triangular matrix algebra over the base field is a linear quiver") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra k = base_field(p);
        StructAlgebra t3 = triangular_matrix_algebra(k, 3);
        REQUIRE(t3.dim() == 6);
        CHECK(t3.num_idempotents() == 3);
        CHECK(t3.radical().cols() == 3);
        CHECK(same_span(t3.radical(), t3.radical_generic()));
        CHECK_NOTHROW(t3.validate(true));

        // explicit isomorphism with the path algebra of v3 -> v2 -> v1,
        // matching E_ij to the path from vertex i to vertex j
        StructAlgebra a3 =
            bound_quiver_algebra(Quiver{3, {{"a", 1, 0}, {"b", 2, 1}}}, {}, p);
        REQUIRE(a3.dim() == 6);
        // cells (1,1),(2,1),(2,2),(3,1),(3,2),(3,3) -> e1, a, e2, b*a, b, e3
        std::vector<std::size_t> perm = {0, 3, 1, 5, 4, 2};
        auto send = [&](const FpMatrix& v) {
            FpMatrix w(6, 1, p);
            for (std::size_t i = 0; i < 6; ++i) w.set(perm[i], 0, v.at(i, 0));
            return w;
        };
        for (std::size_t i = 0; i < 6; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                CHECK(send(t3.multiply(t3.basis_element(i), t3.basis_element(j))) ==
                      a3.multiply(send(t3.basis_element(i)), send(t3.basis_element(j))));
    }
}

TEST_CASE("triangular matrix algebra over a truncated polynomial base") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra base = truncated_poly(p, 3);
        StructAlgebra t3 = triangular_matrix_algebra(base, 3);
        REQUIRE(t3.dim() == 18);
        CHECK(t3.num_idempotents() == 3);
        CHECK(t3.radical().cols() == 15);
        CHECK(same_span(t3.radical(), t3.radical_generic()));
        CHECK_NOTHROW(t3.validate(true));
        REQUIRE(t3.product_data() != nullptr);
        CHECK(t3.product_data()->n == 3);
        CHECK(t3.product_data()->cells.size() == 6);

        // slice products respect the matrix shape: (b x E_21)(b' x E_11)
        // lands in cell (2,1), and (b x E_21)(b' x E_22) vanishes
        auto unit_at = [&](std::size_t cell) {
            FpMatrix v(18, 1, p);
            for (std::size_t b = 0; b < 3; ++b) v.set(cell * 3 + b, 0, base.unit().at(b, 0));
            return v;
        };
        // cells: 0=(1,1) 1=(2,1) 2=(2,2) 3=(3,1) 4=(3,2) 5=(3,3)
        FpMatrix e21 = unit_at(1);
        CHECK(t3.multiply(e21, unit_at(0)) == e21);
        CHECK(t3.multiply(e21, unit_at(2)).is_zero());
        CHECK(t3.multiply(unit_at(2), e21) == e21);
        CHECK(t3.multiply(unit_at(4), e21) == unit_at(3));
        CHECK(t3.multiply(e21, unit_at(4)).is_zero());
    }
}

TEST_CASE("tensor with the bound linear quiver on three vertices") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra base = truncated_poly(p, 2);
        StructAlgebra a = a3_relation_algebra(base);
        REQUIRE(a.dim() == 10);
        CHECK(a.num_idempotents() == 3);
        CHECK(a.radical().cols() == 7);
        CHECK(same_span(a.radical(), a.radical_generic()));
        CHECK_NOTHROW(a.validate(true));

        // slots: 0..2 diagonal e1,e2,e3 then a (slot 3), b (slot 4)
        auto unit_at = [&](std::size_t slot) {
            FpMatrix v(10, 1, p);
            for (std::size_t b = 0; b < 2; ++b) v.set(slot * 2 + b, 0, base.unit().at(b, 0));
            return v;
        };
        FpMatrix av = unit_at(3), bv = unit_at(4);
        CHECK(a.multiply(unit_at(0), av) == av);
        CHECK(a.multiply(av, unit_at(1)) == av);
        CHECK(a.multiply(unit_at(1), bv) == bv);
        CHECK(a.multiply(bv, unit_at(2)) == bv);
        CHECK(a.multiply(av, bv).is_zero()); // the relation
        CHECK(a.multiply(bv, av).is_zero()); // not composable
    }
}

TEST_CASE("five cell matrix shape") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra base = truncated_poly(p, 2);
        StructAlgebra s = s3_matrix_algebra(base);
        REQUIRE(s.dim() == 10);
        CHECK(s.num_idempotents() == 3);
        CHECK(s.radical().cols() == 7);
        CHECK(same_span(s.radical(), s.radical_generic()));
        CHECK_NOTHROW(s.validate(true));
        REQUIRE(s.product_data() != nullptr);
        const auto expect = std::vector<std::pair<std::size_t, std::size_t>>{
            {0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 2}};
        CHECK(s.product_data()->cells == expect);

        // cells: 0=(1,1) 1=(2,1) 2=(2,2) 3=(3,1) 4=(3,3)
        auto unit_at = [&](std::size_t cell) {
            FpMatrix v(10, 1, p);
            for (std::size_t b = 0; b < 2; ++b) v.set(cell * 2 + b, 0, base.unit().at(b, 0));
            return v;
        };
        CHECK(s.multiply(unit_at(1), unit_at(0)) == unit_at(1));
        CHECK(s.multiply(unit_at(2), unit_at(1)) == unit_at(1));
        CHECK(s.multiply(unit_at(3), unit_at(0)) == unit_at(3));
        CHECK(s.multiply(unit_at(4), unit_at(3)) == unit_at(3));
        CHECK(s.multiply(unit_at(3), unit_at(4)).is_zero());
        CHECK(s.multiply(unit_at(1), unit_at(3)).is_zero());
    }
}

TEST_CASE("structure constant validation") {
    std::uint32_t p = 2;
    // non-associative: x*1 = x, x*x = 0, x*y = 1, y*anything nontrivial = 0
    std::vector<FpMatrix> bad = {
        FpMatrix::identity(3, p),
        FpMatrix::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 0, 0}}, p),
        FpMatrix::from_rows({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}, p),
    };
    FpMatrix unit = FpMatrix::column({1, 0, 0}, p);
    CHECK_THROWS_AS(
        StructAlgebra::from_structure_constants(p, bad, unit, {unit}),
        std::invalid_argument);

    // wrong unit
    std::vector<FpMatrix> kx = {
        FpMatrix::identity(2, p),
        FpMatrix::from_rows({{0, 0}, {1, 0}}, p),
    };
    CHECK_THROWS_AS(StructAlgebra::from_structure_constants(
                        p, kx, FpMatrix::column({0, 1}, p),
                        {FpMatrix::column({0, 1}, p)}),
                    std::invalid_argument);

    // k x k with the unit as its only idempotent: fine unless primitivity
    // is requested
    std::vector<FpMatrix> kk = {
        FpMatrix::from_rows({{1, 0}, {0, 0}}, p),
        FpMatrix::from_rows({{0, 0}, {0, 1}}, p),
    };
    FpMatrix one = FpMatrix::column({1, 1}, p);
    StructAlgebra prod = StructAlgebra::from_structure_constants(p, kk, one, {one});
    CHECK_THROWS_AS(prod.validate(true), std::invalid_argument);
    StructAlgebra prod2 = StructAlgebra::from_structure_constants(
        p, kk, one, {FpMatrix::column({1, 0}, p), FpMatrix::column({0, 1}, p)});
    CHECK_NOTHROW(prod2.validate(true));
    CHECK(prod2.radical().cols() == 0);
}

TEST_CASE("matrix algebra radical handles the small prime trace pitfalls") {
    // semisimple at p = 2 where plain trace forms vanish identically
    std::vector<FpMatrix> ss = {FpMatrix::identity(2, 2)};
    CHECK(matrix_algebra_radical(ss, 2).cols() == 0);

    // nilpotent span
    std::vector<FpMatrix> nil = {FpMatrix::from_rows({{0, 1}, {0, 0}}, 2)};
    CHECK(matrix_algebra_radical(nil, 2).cols() == 1);

    // 2x2 upper triangular: radical is the strict part
    std::vector<FpMatrix> tri = {
        FpMatrix::from_rows({{1, 0}, {0, 0}}, 2),
        FpMatrix::from_rows({{0, 1}, {0, 0}}, 2),
        FpMatrix::from_rows({{0, 0}, {0, 1}}, 2),
    };
    FpMatrix rad = matrix_algebra_radical(tri, 2);
    REQUIRE(rad.cols() == 1);
    CHECK(rad.at(0, 0) == 0);
    CHECK(rad.at(1, 0) == 1);
    CHECK(rad.at(2, 0) == 0);

    // full 2x2 matrix algebra over F_3 is semisimple
    std::vector<FpMatrix> m2 = {
        FpMatrix::from_rows({{1, 0}, {0, 0}}, 3),
        FpMatrix::from_rows({{0, 1}, {0, 0}}, 3),
        FpMatrix::from_rows({{0, 0}, {1, 0}}, 3),
        FpMatrix::from_rows({{0, 0}, {0, 1}}, 3),
    };
    CHECK(matrix_algebra_radical(m2, 3).cols() == 0);

    // F_4 as 2x2 matrices over F_2: a field, so semisimple, and the
    // radical must be zero even though every trace of the identity is even
    std::vector<FpMatrix> f4 = {
        FpMatrix::identity(2, 2),
        FpMatrix::from_rows({{0, 1}, {1, 1}}, 2),
    };
    CHECK(matrix_algebra_radical(f4, 2).cols() == 0);
}

TEST_CASE("radical is a nilpotent ideal") {
    for (std::uint32_t p : {2u, 3u}) {
        CAPTURE(p);
        StructAlgebra a = gentle16(p);
        FpMatrix rad = a.radical();
        // closed under multiplication by the whole algebra on both sides
        for (std::size_t i = 0; i < a.dim(); ++i) {
            CHECK(spans_contain(rad, a.left_mult_matrix(a.basis_element(i)) * rad));
            CHECK(spans_contain(rad, a.right_mult_matrix(a.basis_element(i)) * rad));
        }
        // nilpotent: rad^k = 0 for some k <= dim
        FpMatrix power = rad;
        std::size_t steps = 0;
        while (!power.is_zero() && steps <= a.dim()) {
            std::vector<FpMatrix> next;
            for (std::size_t i = 0; i < power.cols(); ++i)
                next.push_back(a.left_mult_matrix(power.col(i)) * rad);
            power = FpMatrix::hstack(next).column_space_basis();
            ++steps;
        }
        CHECK(power.cols() == 0);
    }
}
