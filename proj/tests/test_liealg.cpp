#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpk/lie_io.hpp"
#include "lpk/liealg.hpp"
#include "lpk/poly_parse.hpp"

using namespace lpk;

// [t,x] = -x, [t,y] = y, [x,y] = z
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

TEST_CASE("construction and jacobi rejection") {
    CHECK_NOTHROW(diamond());
    VarSetPtr v = VarSet::make({"x1", "x2", "x3", "x4"});
    LieAlgebra::BracketTable tb;
    tb[{0, 1}] = Poly::variable(v, 2);
    tb[{0, 2}] = Poly::variable(v, 3);
    tb[{1, 2}] = Poly::variable(v, 1);  // corrupt: breaks Jacobi
    try {
        LieAlgebra L(v, std::move(tb));
        CHECK(false);
    } catch (const JacobiFailure& e) {
        CHECK(e.i == 0);
        CHECK(e.j == 1);
        CHECK(e.k == 2);
        CHECK(std::string(e.what()).find("x1,x2,x3") != std::string::npos);
    }
}

TEST_CASE("poisson bracket") {
    LieAlgebra d = diamond();
    auto v = d.vars();
    Poly x = Poly::variable(v, 1), y = Poly::variable(v, 2), z = Poly::variable(v, 3);
    CHECK(d.poisson_bracket(x, y) == z);
    CHECK(d.poisson_bracket(y, x) == -z);
    CHECK(d.poisson_bracket(x, Poly::constant(v, Rat(5))).is_zero());
    CHECK(d.poisson_bracket(x, x * y) == x * z);
    // table reproduction
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(d.poisson_bracket(Poly::variable(v, i), Poly::variable(v, j)) == d.bracket_basis(i, j));
}

TEST_CASE("structure matrix") {
    LieAlgebra h = heisenberg();
    PolyMatrix b = h.structure_matrix();
    CHECK(b.is_skew_symmetric());
    CHECK(b.at(0, 1) == Poly::variable(h.vars(), 2));
    CHECK(b.at(2, 0).is_zero());
    CHECK(abelian(3).structure_matrix() == PolyMatrix(3, 3, abelian(3).vars()));
}

TEST_CASE("center") {
    Subspace zh = center(heisenberg());
    REQUIRE(zh.dim() == 1);
    CHECK(zh.basis_vector(0) == std::vector<Rat>{Rat(0), Rat(0), Rat(1)});
    CHECK(center(abelian(3)).dim() == 3);
    CHECK(center(diamond()).dim() == 1);  // span{z}
}

TEST_CASE("unimodular") {
    CHECK(heisenberg().is_unimodular());
    CHECK(diamond().is_unimodular());
    // [x,y] = y, [x,z] = z: tr ad x = 2
    VarSetPtr v = VarSet::make({"x", "y", "z"});
    LieAlgebra::BracketTable tb;
    tb[{0, 1}] = Poly::variable(v, 1);
    tb[{0, 2}] = Poly::variable(v, 2);
    CHECK(!LieAlgebra(v, std::move(tb)).is_unimodular());
}

TEST_CASE("nilpotency") {
    CHECK(is_nilpotent(heisenberg()));
    CHECK(is_nilpotent(abelian(4)));
    CHECK(is_nilpotent(build_standard_filiform(7)));
    CHECK(!is_nilpotent(diamond()));
}

TEST_CASE("ideal flag") {
    LieAlgebra h = heisenberg();
    IdealFlag f = ideal_flag(h);
    REQUIRE(f.chain.size() == 4);
    CHECK(f.valid(h));
    // <z> then <y,z>
    CHECK(f.chain[1] == Subspace::span_of_coordinates(3, {2}));
    CHECK(f.chain[2] == Subspace::span_of_coordinates(3, {1, 2}));

    LieAlgebra a2 = abelian(2);
    IdealFlag fa = ideal_flag(a2);
    CHECK(fa.chain[1] == Subspace::span_of_coordinates(2, {1}));  // <x2> by preference

    CHECK_THROWS(ideal_flag(diamond()));
}

TEST_CASE("flag validity is checked post-hoc") {
    LieAlgebra fil = build_standard_filiform(5);
    IdealFlag f = ideal_flag(fil);
    CHECK(f.valid(fil));
}

TEST_CASE("builders") {
    LieAlgebra f7 = build_standard_filiform(7);
    CHECK(f7.dim() == 7);
    auto v = f7.vars();
    for (std::size_t i = 1; i + 1 < 7; ++i)
        CHECK(f7.bracket_basis(0, i) == Poly::variable(v, i + 1));
    CHECK(f7.bracket_basis(1, 2).is_zero());

    LieAlgebra t2 = build_triangular_nilradical(2);
    CHECK(t2.dim() == 3);
    CHECK(center(t2).dim() == 1);
    CHECK(is_nilpotent(t2));

    LieAlgebra t3 = build_triangular_nilradical(3);
    CHECK(t3.dim() == 6);
    CHECK(is_nilpotent(t3));

    CHECK_THROWS(build_standard_filiform(2));
    CHECK_THROWS(build_triangular_nilradical(1));
}

TEST_CASE("invariant symmetric form") {
    // abelian: identity works
    auto w = invariant_symmetric_form(abelian(3));
    REQUIRE(w.has_value());
    CHECK(w->determinant() != 0);
    CHECK(is_invariant_form(abelian(3), *w));

    // heisenberg: all invariant forms are degenerate
    CHECK(!invariant_symmetric_form(heisenberg()).has_value());

    // diamond is quadratic: b(t,z) = b(x,y) = 1 works
    auto d = invariant_symmetric_form(diamond());
    REQUIRE(d.has_value());
    CHECK(d->determinant() != 0);
    CHECK(is_invariant_form(diamond(), *d));
}

TEST_CASE("subspace algebra") {
    Subspace s = Subspace::from_vectors(3, {{Rat(1), Rat(1), Rat(0)}, {Rat(2), Rat(2), Rat(0)}});
    CHECK(s.dim() == 1);
    CHECK(s.contains({Rat(3), Rat(3), Rat(0)}));
    CHECK(!s.contains({Rat(1), Rat(0), Rat(0)}));
    Subspace t = Subspace::span_of_coordinates(3, {2});
    Subspace u = s.sum(t);
    CHECK(u.dim() == 2);
    CHECK(u.contains(s));
    CHECK(u.contains(t));
    CHECK(u.coordinate_support() == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("lie file format") {
    std::string doc = R"({
        "dim": 3,
        "basis": ["x", "y", "z"],
        "name": "heisenberg",
        "brackets": [[1, 2, "z"]]
    })";
    LieAlgebra h = lie_loads(doc);
    CHECK(h.dim() == 3);
    CHECK(h.name == std::optional<std::string>("heisenberg"));
    CHECK(h.bracket_basis(0, 1) == Poly::variable(h.vars(), 2));

    CHECK_THROWS_AS(lie_loads(R"({"dim": 2, "brackets": [[2, 1, "x1"]]})"), LieLoadError);
    CHECK_THROWS_AS(lie_loads(R"({"dim": 2, "brackets": [[1, 3, "x1"]]})"), LieLoadError);
    CHECK_THROWS_AS(lie_loads(R"({"dim": 2, "brackets": [[1, 2, "x1*x2"]]})"), LieLoadError);
    CHECK_THROWS_AS(lie_loads(R"(not json)"), LieLoadError);
    // abelian via empty bracket list
    CHECK(lie_loads(R"({"dim": 4})").dim() == 4);
}
