#ifndef LPK_INVARIANTS_HPP
#define LPK_INVARIANTS_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "lpk/gcd.hpp"
#include "lpk/groebner.hpp"
#include "lpk/liealg.hpp"
#include "lpk/poly_matrix.hpp"

namespace lpk {

struct IndexReport {
    std::size_t t;      // generic rank of the structure matrix
    std::size_t index;  // n - t
    std::size_t c;      // (n + index)/2
};

inline IndexReport index_of(const LieAlgebra& L) {
    std::size_t t = rank_over_fraction_field(L.structure_matrix());
    std::size_t n = L.dim();
    return {t, n - t, (n + (n - t)) / 2};
}

namespace detail {

inline void subsets_of_size(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) { fn(idx); return; }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

inline std::vector<Poly> principal_pfaffians(const LieAlgebra& L, std::size_t t) {
    std::vector<Poly> out;
    PolyMatrix b = L.structure_matrix();
    subsets_of_size(L.dim(), t, [&](const std::vector<std::size_t>& idx) {
        out.push_back(pfaffian(b.principal_submatrix(idx)));
    });
    return out;
}

}  // namespace detail

// p_g = gcd of the Pfaffians of the principal t x t minors, t = rank B.
// Abelian algebras give 1 by convention.
inline Poly fundamental_semiinvariant(const LieAlgebra& L) {
    std::size_t t = index_of(L).t;
    if (t == 0) return Poly::constant(L.vars(), Rat(1));
    Poly g = Poly::zero(L.vars());
    for (const Poly& pf : detail::principal_pfaffians(L, t)) {
        g = gcd_multi(g, pf);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g.normalized();
}

inline bool is_singular(const LieAlgebra& L) {
    return fundamental_semiinvariant(L).degree() > 0;
}

// codim of the locus where rank B drops below its generic value t:
// n minus the dimension of the ideal of all principal t x t Pfaffians.
inline std::size_t singular_locus_codim(const LieAlgebra& L, GroebnerBudget budget = {}) {
    std::size_t t = index_of(L).t;
    if (t == 0) throw std::invalid_argument("singular locus undefined for abelian algebras");
    std::vector<Poly> gens;
    for (Poly& pf : [&] { auto v = detail::principal_pfaffians(L, t); return v; }())
        if (!pf.is_zero()) gens.push_back(pf.normalized());
    Ideal ideal(std::move(gens), MonOrder(), budget);
    auto dim = ideal_dimension(ideal);
    if (!dim) return L.dim();  // empty locus: rank never drops (codim = n, conventionally)
    return L.dim() - *dim;
}

// Lie algebra structure restricted to a subalgebra subspace, with the linear
// embedding back into the ambient algebra.
struct RestrictedAlgebra {
    LieAlgebra algebra;
    std::vector<Poly> embedding;  // image of each restricted basis variable in S(g)
};

inline RestrictedAlgebra restrict_to_subalgebra(const LieAlgebra& L, const Subspace& s) {
    std::size_t d = s.dim(), n = L.dim();
    std::vector<std::size_t> pivots;
    {
        QMatrix tmp = s.basis();
        tmp.rref(&pivots);
    }
    // coordinates of an s-member in the RREF basis: read off pivot columns
    auto coords = [&](const std::vector<Rat>& v) {
        if (!s.contains(v)) throw std::invalid_argument("subspace is not closed under the bracket");
        std::vector<Rat> c(d);
        for (std::size_t r = 0; r < d; ++r) c[r] = v[pivots[r]];
        return c;
    };
    VarSetPtr vars = VarSet::make(default_basis_names(d));
    LieAlgebra::BracketTable table;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<Rat> br = L.bracket_vec(s.basis_vector(i), s.basis_vector(j));
            std::vector<Rat> c = coords(br);
            Poly val(vars);
            for (std::size_t k = 0; k < d; ++k)
                if (c[k] != 0) val += Poly::variable(vars, k) * c[k];
            if (!val.is_zero()) table[{i, j}] = val;
        }
    RestrictedAlgebra out{LieAlgebra(vars, std::move(table)), {}};
    for (std::size_t i = 0; i < d; ++i) {
        Poly img(L.vars());
        for (std::size_t j = 0; j < n; ++j)
            if (s.basis().at(i, j) != 0) img += Poly::variable(L.vars(), j) * s.basis().at(i, j);
        out.embedding.push_back(img);
    }
    return out;
}

namespace detail {

inline void monomials_of_degree(std::size_t nvars, int deg,
                                const std::function<void(const Monomial&)>& fn) {
    Monomial m(nvars);
    std::function<void(std::size_t, int)> rec = [&](std::size_t var, int left) {
        if (var + 1 == nvars) {
            m.e[var] = left;
            fn(m);
            m.e[var] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            m.e[var] = k;
            rec(var + 1, left - k);
        }
        m.e[var] = 0;
    };
    if (nvars == 0) return;
    rec(0, deg);
}

// Homogeneous invariants of degree exactly deg, as echelonized polynomials.
// Iterative kernel intersection across the n adjoint derivations keeps the
// linear systems small (ad x_i preserves total degree).
inline std::vector<Poly> homogeneous_invariants(const LieAlgebra& L, int deg) {
    std::vector<Monomial> basis;
    monomials_of_degree(L.dim(), deg, [&](const Monomial& m) { basis.push_back(m); });
    MonOrder drl;
    std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) { return drl.greater(a, b); });
    std::map<Monomial, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos[basis[i]] = i;
    std::size_t m = basis.size();

    // current candidate space: rows of C in the monomial basis
    QMatrix c(m, m);
    for (std::size_t i = 0; i < m; ++i) c.at(i, i) = 1;

    for (std::size_t i = 0; i < L.dim() && c.rows() > 0; ++i) {
        // image matrix of ad x_i on the current space
        QMatrix img(c.rows(), m);
        for (std::size_t r = 0; r < c.rows(); ++r) {
            Poly f(L.vars());
            for (std::size_t t = 0; t < m; ++t)
                if (c.at(r, t) != 0) f.add_term(basis[t], c.at(r, t));
            Poly a = L.ad(i, f);
            for (const auto& [mono, coef] : a.terms()) img.at(r, pos.at(mono)) = coef;
        }
        // kernel of the restriction: combinations of current rows mapping to 0
        QMatrix ker = [&] {
            // transpose trick: solve x^T img = 0 i.e. kernel of img^T acting on row-combos
            QMatrix t(img.cols(), img.rows());
            for (std::size_t a2 = 0; a2 < img.rows(); ++a2)
                for (std::size_t b2 = 0; b2 < img.cols(); ++b2) t.at(b2, a2) = img.at(a2, b2);
            return t.kernel();
        }();
        // new space: ker * c
        QMatrix next(ker.rows(), m);
        for (std::size_t r = 0; r < ker.rows(); ++r)
            for (std::size_t t = 0; t < m; ++t) {
                Rat acc(0);
                for (std::size_t s = 0; s < c.rows(); ++s) acc += ker.at(r, s) * c.at(s, t);
                next.at(r, t) = acc;
            }
        next.rref();
        c = next;
    }

    std::vector<Poly> out;
    for (std::size_t r = 0; r < c.rows(); ++r) {
        Poly f(L.vars());
        bool nz = false;
        for (std::size_t t = 0; t < m; ++t)
            if (c.at(r, t) != 0) { f.add_term(basis[t], c.at(r, t)); nz = true; }
        if (nz) out.push_back(f.normalized());
    }
    return out;
}

}  // namespace detail

// Echelonized basis of the invariants of degree <= d (constants excluded).
// With restrict_to given, the invariants of the restricted subalgebra are
// computed and mapped back into S(g) through the embedding.
inline std::vector<Poly> invariant_basis_up_to_degree(const LieAlgebra& L, int d,
                                                      const std::optional<Subspace>& restrict_to = std::nullopt) {
    if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
    if (restrict_to) {
        RestrictedAlgebra r = restrict_to_subalgebra(L, *restrict_to);
        std::vector<Poly> out;
        for (const Poly& f : invariant_basis_up_to_degree(r.algebra, d))
            out.push_back(f.substitute(r.embedding).normalized());
        return out;
    }
    std::vector<Poly> out;
    for (int k = 1; k <= d; ++k)
        for (Poly& f : detail::homogeneous_invariants(L, k)) out.push_back(std::move(f));
    return out;
}

// Weight of a semi-invariant: ad x_i(f) = w_i * f for all i, or nullopt.
inline std::optional<std::vector<Rat>> semi_invariant_weight(const LieAlgebra& L, const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial has no weight");
    std::vector<Rat> w;
    MonOrder ord;
    for (std::size_t i = 0; i < L.dim(); ++i) {
        Poly a = L.ad(i, f);
        if (a.is_zero()) {
            w.emplace_back(0);
            continue;
        }
        Rat lambda = a.coeff(f.leading_monomial(ord)) / f.leading_coeff(ord);
        if (a != f * lambda) return std::nullopt;
        w.push_back(lambda);
    }
    return w;
}

inline PolyMatrix jacobian(const std::vector<Poly>& polys) {
    if (polys.empty()) throw std::invalid_argument("jacobian of empty list");
    VarSetPtr vars = polys.front().vars();
    PolyMatrix j(polys.size(), vars->size(), vars);
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (std::size_t c = 0; c < vars->size(); ++c) j.at(r, c) = polys[r].derivative(c);
    return j;
}

struct TrdegReport {
    std::size_t value = 0;
    DualPoint witness;  // point achieving the generic rank (Monte-Carlo mode)
    bool symbolic = false;
};

// Transcendence degree = generic rank of the Jacobian. Monte-Carlo over 7
// integer points by default; symbolic mode is exact via Bareiss.
inline TrdegReport trdeg(const LieAlgebra& L, const std::vector<Poly>& polys,
                         bool symbolic = false, std::uint64_t seed = 42) {
    TrdegReport rep;
    if (polys.empty()) return rep;
    PolyMatrix j = jacobian(polys);
    if (symbolic) {
        rep.value = rank_over_fraction_field(j, seed);
        rep.symbolic = true;
        return rep;
    }
    Rng rng(seed);
    for (int trial = 0; trial < 7; ++trial) {
        DualPoint pt;
        for (std::size_t i = 0; i < L.dim(); ++i) pt.emplace_back(rng.next_int(-20, 20));
        std::size_t r = j.eval(pt).rank();
        if (r > rep.value) {
            rep.value = r;
            rep.witness = pt;
        }
    }
    return rep;
}

struct SumRuleReport {
    std::size_t lhs = 0;  // sum of generator degrees
    std::size_t rhs = 0;  // c(g) - deg p_g
    bool equal = false;
    bool unimodular = false;
    bool p_invariant = false;
    bool count_is_index = false;
    bool independent = false;
};

inline SumRuleReport check_sum_rule(const LieAlgebra& L, const std::vector<Poly>& gens) {
    for (const Poly& g : gens) {
        if (!g.is_homogeneous() || g.is_zero())
            throw std::invalid_argument("sum rule needs nonzero homogeneous generators");
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (!L.ad(i, g).is_zero()) throw std::invalid_argument("sum rule needs invariant generators");
    }
    SumRuleReport rep;
    IndexReport ir = index_of(L);
    Poly p = fundamental_semiinvariant(L);
    for (const Poly& g : gens) rep.lhs += static_cast<std::size_t>(g.degree());
    rep.rhs = ir.c - static_cast<std::size_t>(p.degree());
    rep.equal = rep.lhs == rep.rhs;
    rep.unimodular = L.is_unimodular();
    auto w = semi_invariant_weight(L, p);
    rep.p_invariant = w.has_value() && std::all_of(w->begin(), w->end(), [](const Rat& x) { return x == 0; });
    rep.count_is_index = gens.size() == ir.index;
    rep.independent = trdeg(L, gens, true).value == gens.size();
    return rep;
}

struct Theorem14Certificate {
    bool count_is_index = false;
    bool independent = false;       // trdeg (symbolic) equals the count
    bool sum_bound = false;         // sum deg <= c - deg p
    bool invariants_ok = false;     // every generator is an invariant
    bool homogeneous_ok = false;
    bool standing_hypothesis_nilpotent = false;  // trdeg Y(g) = i(g), by Remark 3
    bool granted = false;
};

inline Theorem14Certificate theorem14_certificate(const LieAlgebra& L, const std::vector<Poly>& gens) {
    Theorem14Certificate cert;
    cert.homogeneous_ok = true;
    cert.invariants_ok = true;
    for (const Poly& g : gens) {
        if (g.is_zero() || !g.is_homogeneous()) cert.homogeneous_ok = false;
        for (std::size_t i = 0; i < L.dim() && cert.invariants_ok; ++i)
            if (!L.ad(i, g).is_zero()) cert.invariants_ok = false;
    }
    IndexReport ir = index_of(L);
    Poly p = fundamental_semiinvariant(L);
    cert.count_is_index = gens.size() == ir.index;
    cert.independent = !gens.empty() && trdeg(L, gens, true).value == gens.size();
    std::size_t degsum = 0;
    for (const Poly& g : gens) degsum += static_cast<std::size_t>(std::max(g.degree(), 0));
    cert.sum_bound = degsum <= ir.c - static_cast<std::size_t>(p.degree());
    cert.standing_hypothesis_nilpotent = is_nilpotent(L);
    cert.granted = cert.count_is_index && cert.independent && cert.sum_bound &&
                   cert.invariants_ok && cert.homogeneous_ok && cert.standing_hypothesis_nilpotent;
    return cert;
}

struct Theorem13Report {
    std::size_t ineq1_lhs = 0;  // 3 i(g) + 2 deg p_g
    std::size_t ineq1_rhs = 0;  // dim g + 2 dim Z(g)
    bool ineq1_holds = false;
    bool ineq1_equality = false;
    std::size_t codim_singular = 0;
    bool ineq2_codim_le_3 = false;
    bool cp_codim_le_2 = false;  // test (3): with a CP, coregular forces codim <= 2
};

inline Theorem13Report theorem13_tests(const LieAlgebra& L, GroebnerBudget budget = {}) {
    Theorem13Report rep;
    IndexReport ir = index_of(L);
    Poly p = fundamental_semiinvariant(L);
    rep.ineq1_lhs = 3 * ir.index + 2 * static_cast<std::size_t>(p.degree());
    rep.ineq1_rhs = L.dim() + 2 * center(L).dim();
    rep.ineq1_holds = rep.ineq1_lhs <= rep.ineq1_rhs;
    rep.ineq1_equality = rep.ineq1_lhs == rep.ineq1_rhs;
    rep.codim_singular = ir.t == 0 ? L.dim() : singular_locus_codim(L, budget);
    rep.ineq2_codim_le_3 = rep.codim_singular <= 3;
    rep.cp_codim_le_2 = rep.codim_singular <= 2;
    return rep;
}

}  // namespace lpk

#endif
