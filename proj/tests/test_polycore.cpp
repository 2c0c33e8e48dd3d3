#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpk/gcd.hpp"
#include "lpk/groebner.hpp"
#include "lpk/linalg.hpp"
#include "lpk/poly.hpp"
#include "lpk/poly_matrix.hpp"
#include "lpk/poly_parse.hpp"

using namespace lpk;

static VarSetPtr vars7() {
    return VarSet::make({"x1", "x2", "x3", "x4", "x5", "x6", "x7"});
}

TEST_CASE("parser: canonical forms and round trips") {
    auto v = vars7();
    Poly f = poly_parse("x4^2 - 2*x3*x5 + 2*x2*x6 + 2*x1*x7", v);
    CHECK(f.term_count() == 4);
    CHECK(f.degree() == 2);
    CHECK(f.is_homogeneous());
    CHECK(poly_parse(f.to_string(), v) == f);

    CHECK(poly_parse("0", v).is_zero());
    CHECK(poly_parse("(x6 - x6) + 3/3*x7", v) == Poly::variable(v, 6));
    CHECK(poly_parse("-x1 + x1", v).is_zero());
    CHECK(poly_parse("1/2*x1*x1", v) == poly_parse("x1^2 - 1/2*x1^2", v));
}

TEST_CASE("parser: errors carry position") {
    auto v = vars7();
    CHECK_THROWS_AS(poly_parse("x1 + y", v), ParseError);
    CHECK_THROWS_AS(poly_parse("x1 +", v), ParseError);
    CHECK_THROWS_AS(poly_parse("(x1", v), ParseError);
    CHECK_THROWS_AS(poly_parse("1/0", v), ParseError);
    try {
        poly_parse("x1 + zz", v);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 5);
    }
}

TEST_CASE("monomial orders") {
    auto v = VarSet::make({"x", "y", "z"});
    MonOrder drl;
    Poly f = poly_parse("x*y + z^2 + x", v);
    // degrevlex: x*y > z^2 (same degree, revlex tie-break), both beat x
    CHECK(f.leading_monomial(drl) == poly_parse("x*y", v).leading_monomial(drl));
    MonOrder lex(OrderKind::Lex);
    CHECK(f.leading_monomial(lex) == poly_parse("x*y", v).leading_monomial(lex));
    Poly g = poly_parse("x + y^5", v);
    CHECK(g.leading_monomial(lex) == Poly::variable(v, 0).leading_monomial(lex));
}

TEST_CASE("pfaffian small cases") {
    auto v = VarSet::make({"a", "b", "c", "d", "e", "f"});
    PolyMatrix m2(2, 2, v);
    m2.at(0, 1) = Poly::variable(v, 0);
    m2.at(1, 0) = -Poly::variable(v, 0);
    CHECK(pfaffian(m2) == Poly::variable(v, 0));

    // 4x4 skew with entries a..f above the diagonal
    PolyMatrix m4(4, 4, v);
    const char* ent[6] = {"a", "b", "c", "d", "e", "f"};
    int t = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            m4.at(i, j) = poly_parse(ent[t], v);
            m4.at(j, i) = -m4.at(i, j);
            ++t;
        }
    // Pf = a12*a34 - a13*a24 + a14*a23 = a*f - b*e + c*d
    CHECK(pfaffian(m4) == poly_parse("a*f - b*e + c*d", v));
    CHECK(pfaffian(m4) * pfaffian(m4) == m4.determinant());

    CHECK_THROWS(pfaffian(PolyMatrix(3, 3, v)));
    PolyMatrix bad(2, 2, v);
    bad.at(0, 1) = Poly::variable(v, 0);
    CHECK_THROWS(pfaffian(bad));
}

TEST_CASE("pfaffian of heisenberg block") {
    auto v = VarSet::make({"x", "y", "z"});
    PolyMatrix b(2, 2, v);
    b.at(0, 1) = Poly::variable(v, 2);
    b.at(1, 0) = -b.at(0, 1);
    CHECK(pfaffian(b) == Poly::variable(v, 2));
}

TEST_CASE("rank over fraction field") {
    auto v = VarSet::make({"t", "x", "y", "z"});
    PolyMatrix zero(4, 4, v);
    CHECK(rank_over_fraction_field(zero) == 0);

    // diamond algebra [t,x]=-x, [t,y]=y, [x,y]=z; B_{ij} = [x_i, x_j]
    PolyMatrix b(4, 4, v);
    auto set = [&](int i, int j, const char* s) {
        b.at(i, j) = poly_parse(s, v);
        b.at(j, i) = -b.at(i, j);
    };
    set(0, 1, "-x");
    set(0, 2, "y");
    set(1, 2, "z");
    CHECK(rank_over_fraction_field(b) == 2);
}

TEST_CASE("exact division and gcd") {
    auto v = vars7();
    Poly a = poly_parse("x7^2", v), b = poly_parse("x7*x6", v);
    CHECK(gcd_multi(a, b) == Poly::variable(v, 6));

    Poly f = poly_parse("3*x1*x2 - 6*x3^2", v);
    CHECK(gcd_multi(f, Poly::zero(v)) == poly_parse("x1*x2 - 2*x3^2", v));
    CHECK(gcd_multi(Poly::zero(v), Poly::zero(v)).is_zero());

    Poly c = poly_parse("x1 + x2", v);
    Poly g1 = poly_parse("x1^2 - x2^2", v);
    Poly g2 = poly_parse("x1^2 + 2*x1*x2 + x2^2", v);
    CHECK(gcd_multi(g1, g2) == c);
    // multiplicativity
    Poly m = poly_parse("x3*x4 - x5", v);
    CHECK(gcd_multi(g1 * m, g2 * m) == (c * m).normalized());
    // divisibility
    CHECK(poly_divides(gcd_multi(g1, g2), g1));
    CHECK(poly_divides(gcd_multi(g1, g2), g2));

    CHECK(poly_divide_exact(g1, c) == poly_parse("x1 - x2", v));
    CHECK_THROWS_AS(poly_divide_exact(g1, poly_parse("x3", v)), std::domain_error);
}

TEST_CASE("linear kernel and rref") {
    QMatrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(id.kernel().rows() == 0);

    QMatrix m(1, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = -1;
    QMatrix k = m.kernel();
    REQUIRE(k.rows() == 1);
    CHECK(k.at(0, 0) == 1);
    CHECK(k.at(0, 1) == 1);

    QMatrix r(2, 3);
    r.at(0, 0) = 2; r.at(0, 1) = 4; r.at(0, 2) = 6;
    r.at(1, 0) = 1; r.at(1, 1) = 2; r.at(1, 2) = 4;
    CHECK(r.rank() == 2);
}

TEST_CASE("groebner basics") {
    auto v = VarSet::make({"x", "y"});
    Ideal i1({Poly::variable(v, 0)});
    CHECK(i1.groebner_basis().size() == 1);
    CHECK(i1.groebner_basis()[0] == Poly::variable(v, 0));

    Ideal i2({poly_parse("x^2", v), poly_parse("x*y", v)});
    auto gb2 = i2.groebner_basis();
    REQUIRE(gb2.size() == 2);
    CHECK(ideal_dimension(i2) == std::optional<std::size_t>(1));

    Ideal unit({Poly::constant(v, Rat(3))});
    CHECK(unit.is_unit_ideal());
    CHECK(!ideal_dimension(unit).has_value());
}

TEST_CASE("groebner elimination on the twisted cubic") {
    // lex z > y > x realized by listing variables in that order
    auto v = VarSet::make({"z", "y", "x"});
    Ideal i({poly_parse("y - x^2", v), poly_parse("z - x^3", v)}, MonOrder(OrderKind::Lex));
    CHECK(i.contains(poly_parse("z*x - y^2", v)));
    CHECK(i.contains(poly_parse("y^3 - z^2", v)));
    CHECK(!i.contains(poly_parse("x*y - z + x", v)));
    // normal form is idempotent; f - NF(f) is in the ideal
    Poly f = poly_parse("z^2*y + x*z - 7*y + 2", v);
    Poly nf = i.normal_form(f);
    CHECK(i.normal_form(nf) == nf);
    CHECK(i.contains(f - nf));
}

TEST_CASE("groebner budget surfaces as an error") {
    auto v = VarSet::make({"x", "y", "z"});
    GroebnerBudget tiny;
    tiny.max_pairs = 1;
    tiny.max_degree = 2;
    Ideal i({poly_parse("x^2*y - z^2", v), poly_parse("y^2*z - x", v), poly_parse("z^3 - x*y", v)},
            MonOrder(), tiny);
    CHECK_THROWS_AS(i.groebner_basis(), BudgetExceeded);
}

TEST_CASE("subalgebra membership via elimination") {
    auto v = VarSet::make({"x", "y"});
    // k[x^2, y] contains x^2*y + y^3 but not x
    SubalgebraMembership sub({poly_parse("x^2", v), Poly::variable(v, 1)});
    CHECK(sub.contains(poly_parse("x^2*y + y^3", v)));
    CHECK(sub.contains(poly_parse("x^4 - 2*y", v)));
    CHECK(!sub.contains(Poly::variable(v, 0)));
    CHECK(!sub.contains(poly_parse("x^3", v)));
}

TEST_CASE("normalized form") {
    auto v = vars7();
    Poly f = poly_parse("2/3*x1 - 4/3*x2", v);
    CHECK(f.normalized() == poly_parse("x1 - 2*x2", v));
    Poly g = poly_parse("-x1*x2 + x3", v);
    CHECK(g.normalized() == poly_parse("x1*x2 - x3", v));
}
