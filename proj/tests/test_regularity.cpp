#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpk/poly_parse.hpp"
#include "lpk/regularity.hpp"

using namespace lpk;

static LieAlgebra diamond() {
    VarSetPtr v = VarSet::make({"t", "x", "y", "z"});
    LieAlgebra::BracketTable tb;
    tb[{0, 1}] = -Poly::variable(v, 1);
    tb[{0, 2}] = Poly::variable(v, 2);
    tb[{1, 2}] = Poly::variable(v, 3);
    return LieAlgebra(v, std::move(tb));
}

static LieAlgebra heisenberg() {
    VarSetPtr v = VarSet::make({"x", "y", "z"});
    LieAlgebra::BracketTable tb;
    tb[{0, 1}] = Poly::variable(v, 2);
    return LieAlgebra(v, std::move(tb));
}

static LieAlgebra abelian(std::size_t n) {
    return LieAlgebra(VarSet::make(default_basis_names(n)), {});
}

TEST_CASE("stabilizers") {
    LieAlgebra a = abelian(3);
    RegularSample s = stabilizer_at(a, {Rat(1), Rat(2), Rat(3)});
    CHECK(s.stabilizer.dim() == 3);
    CHECK(s.rank_at_xi == 0);

    LieAlgebra d = diamond();
    RegularSample z = stabilizer_at(d, {Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(z.rank_at_xi == 2);
    CHECK(z.stabilizer.dim() == 2);

    RegularSample o = stabilizer_at(heisenberg(), {Rat(0), Rat(0), Rat(0)});
    CHECK(o.stabilizer.dim() == 3);
}

TEST_CASE("regular sampling") {
    LieAlgebra d = diamond();
    RegularSample s = sample_regular(d, 7);
    CHECK(s.stabilizer.dim() == 2);  // = index

    RegularSample a = sample_regular(abelian(4), 1);
    CHECK(a.stabilizer.dim() == 4);

    RegularSample f = sample_regular(build_standard_filiform(7), 3);
    CHECK(f.stabilizer.dim() == 5);
}

TEST_CASE("frobenius semi-radical") {
    // Heisenberg is square integrable: F = Z = <z>
    FrobeniusReport h = frobenius_semiradical(heisenberg(), 42);
    CHECK(h.F.dim() == 1);
    CHECK(h.F == Subspace::span_of_coordinates(3, {2}));
    CHECK(h.is_commutative);
    CHECK(h.is_ideal);

    // diamond is quadratic, hence quasi-quadratic: F = g
    FrobeniusReport d = frobenius_semiradical(diamond(), 42);
    CHECK(d.F.dim() == 4);
    CHECK(!d.is_commutative);

    // seed independence of the saturated span
    CHECK(frobenius_semiradical(heisenberg(), 1).F == frobenius_semiradical(heisenberg(), 999).F);
    CHECK(frobenius_semiradical(diamond(), 5).F == d.F);

    // Z(g) <= F(g)
    CHECK(h.F.contains(center(heisenberg())));
}

TEST_CASE("square integrability") {
    CHECK(is_square_integrable(heisenberg()));
    CHECK(is_square_integrable(build_triangular_nilradical(2)));
    CHECK(!is_square_integrable(build_standard_filiform(5)));  // i = 3, dim Z = 1
    CHECK_THROWS(is_square_integrable(abelian(3)));
}

TEST_CASE("commutative polarizations") {
    LieAlgebra h = heisenberg();
    CpReport yz = verify_cp(h, Subspace::span_of_coordinates(3, {1, 2}));
    CHECK(yz.is_subalgebra);
    CHECK(yz.is_commutative);
    CHECK(yz.is_ideal);
    CHECK(yz.is_cp);
    CHECK(yz.is_cpi);

    CpReport x = verify_cp(h, Subspace::span_of_coordinates(3, {0}));
    CHECK(!x.is_cp);  // wrong dimension

    CpReport xy = verify_cp(h, Subspace::span_of_coordinates(3, {0, 1}));
    CHECK(!xy.is_commutative);
    CHECK(!xy.is_cp);

    LieAlgebra f4 = build_standard_filiform(4);
    CpReport tail = verify_cp(f4, Subspace::span_of_coordinates(4, {1, 2, 3}));
    CHECK(tail.is_cpi);

    auto found = coordinate_cp_search(h);
    REQUIRE(found.has_value());
    CHECK(verify_cp(h, *found).is_cp);
}

TEST_CASE("theorem 22 for the Borel nilradical families") {
    // n = 2 (Heisenberg): c = 2, F = <z> so c(F) = 1, deg p = 1: equality
    Theorem22Report r2 = theorem22_report(build_triangular_nilradical(2));
    CHECK(r2.c_g == 2);
    CHECK(r2.c_F == 1);
    CHECK(r2.deg_p == 1);
    CHECK(r2.inequality_holds);
    CHECK(!r2.strict);

    Theorem22Report r3 = theorem22_report(build_triangular_nilradical(3));
    CHECK(r3.inequality_holds);
}
