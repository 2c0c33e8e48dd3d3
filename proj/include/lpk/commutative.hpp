#ifndef LPK_COMMUTATIVE_HPP
#define LPK_COMMUTATIVE_HPP

#include <map>
#include <string>
#include <vector>

#include "lpk/groebner.hpp"
#include "lpk/invariants.hpp"
#include "lpk/liealg.hpp"
#include "lpk/poly_parse.hpp"

namespace lpk {

// Coefficients of f(x + xi t) in powers of t, constant term dropped:
// f_xi^j = D_xi^j f / j! with D_xi = sum xi_i d/dx_i.
inline std::vector<Poly> xi_shifts(const Poly& f, const DualPoint& xi) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("xi-shift needs a nonconstant polynomial");
    std::vector<Poly> out;
    Poly cur = f;
    Rat factorial(1);
    for (int j = 0; j < d; ++j) {
        if (j > 0) factorial *= j;
        Poly shift = cur * (1 / factorial);
        if (!shift.is_zero()) out.push_back(shift);  // zero shifts generate nothing
        Poly next(f.vars());
        for (std::size_t i = 0; i < xi.size(); ++i)
            if (xi[i] != 0) next += cur.derivative(i) * xi[i];
        cur = next;
    }
    return out;
}

enum class Provenance { Catalog, MfShift, Vergne, Manual };

struct GeneratedSubalgebra {
    std::vector<Poly> gens;
    Provenance provenance = Provenance::Manual;
    bool pruned = true;               // false when the Groebner budget stopped pruning
    bool field_captured = true;       // Vergne: every flag step's invariant field reached
};

inline bool is_poisson_commutative(const LieAlgebra& L, const GeneratedSubalgebra& a) {
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        for (std::size_t j = i + 1; j < a.gens.size(); ++j)
            if (!L.poisson_bracket(a.gens[i], a.gens[j]).is_zero()) return false;
    return true;
}

// Mishchenko-Fomenko algebra Y_xi: xi-shifts of the given invariants.
inline GeneratedSubalgebra mf_algebra(const LieAlgebra& L, const std::vector<Poly>& y_gens,
                                      const DualPoint& xi) {
    GeneratedSubalgebra out;
    out.provenance = Provenance::MfShift;
    for (const Poly& f : y_gens) {
        for (std::size_t i = 0; i < L.dim(); ++i)
            if (!L.ad(i, f).is_zero()) throw std::invalid_argument("mf_algebra input is not an invariant");
        for (Poly& s : xi_shifts(f, xi)) {
            if (s.is_zero()) continue;  // shifts vanish e.g. at xi = 0
            Poly n = s.normalized();
            bool dup = false;
            for (const Poly& g : out.gens)
                if (g == n) { dup = true; break; }
            if (!dup) out.gens.push_back(std::move(n));
        }
    }
    if (!is_poisson_commutative(L, out))
        throw std::logic_error("MF shifts failed commutativity; invariant check was wrong");
    return out;
}

// V(g): invariants of every flag step, pruned to a generating set by
// subalgebra membership. A budget trip returns the unpruned set flagged.
inline GeneratedSubalgebra vergne_generators(const LieAlgebra& L, const IdealFlag& flag,
                                             int degree_cap, GroebnerBudget budget = {}) {
    if (!is_nilpotent(L)) throw std::invalid_argument("Vergne chain requires a nilpotent algebra");
    GeneratedSubalgebra out;
    out.provenance = Provenance::Vergne;
    // incremental pruning: a linear basis of each step's bounded-degree
    // invariants is sifted against the algebra generated so far, so only
    // genuinely new generators are kept (membership via elimination)
    std::optional<SubalgebraMembership> member;
    auto rebuild = [&] {
        if (!out.gens.empty()) member.emplace(out.gens, budget);
    };
    try {
        for (std::size_t step = 1; step < flag.chain.size(); ++step) {
            const Subspace& gi = flag.chain[step];
            std::vector<Poly> found = invariant_basis_up_to_degree(L, degree_cap, gi);
            std::size_t added = 0;
            for (Poly& f : found) {
                Poly n = f.normalized();
                if (member && member->contains(n)) continue;
                if (!member) {
                    bool dup = false;
                    for (const Poly& g : out.gens) dup = dup || g == n;
                    if (dup) continue;
                }
                out.gens.push_back(std::move(n));
                ++added;
                rebuild();
            }
            // the step's invariant field has trdeg = i(g_step); record capture
            RestrictedAlgebra ra = restrict_to_subalgebra(L, gi);
            std::size_t want = index_of(ra.algebra).index;
            std::vector<Poly> step_gens;
            auto support = gi.coordinate_support();
            for (const Poly& g : out.gens) {
                bool inside = true;
                for (const auto& [m, c] : g.terms())
                    for (std::size_t v = 0; v < L.dim() && inside; ++v)
                        if (m.e[v] > 0 &&
                            std::find(support.begin(), support.end(), v) == support.end())
                            inside = false;
                if (inside) step_gens.push_back(g);
            }
            if (trdeg(L, step_gens, true).value < want) out.field_captured = false;
            (void)added;
        }
        // final backwards pass: drop generators the others already produce
        for (std::size_t i = out.gens.size(); i-- > 0;) {
            if (out.gens.size() <= 1) break;
            std::vector<Poly> others;
            for (std::size_t j = 0; j < out.gens.size(); ++j)
                if (j != i) others.push_back(out.gens[j]);
            SubalgebraMembership sub(others, budget);
            if (sub.contains(out.gens[i])) out.gens.erase(out.gens.begin() + i);
        }
    } catch (const BudgetExceeded&) {
        out.pruned = false;
    }
    return out;
}

// {g, A} inside A, decided generator-by-generator through elimination.
inline bool g_stability(const LieAlgebra& L, const GeneratedSubalgebra& a, GroebnerBudget budget = {}) {
    if (a.gens.empty()) return true;
    SubalgebraMembership sub(a.gens, budget);
    for (std::size_t i = 0; i < L.dim(); ++i)
        for (const Poly& g : a.gens) {
            Poly br = L.ad(i, g);
            if (br.is_zero()) continue;
            if (!sub.contains(br)) return false;
        }
    return true;
}

struct CompletenessCertificate {
    std::size_t trdeg = 0;
    std::size_t c_g = 0;
    bool is_complete = false;
    std::size_t jacobian_locus_codim = 0;
    bool is_algebraically_closed = false;
    bool is_strongly_complete = false;
    bool closure_decided = false;  // false when generators are non-homogeneous
};

inline CompletenessCertificate completeness_certificate(const LieAlgebra& L,
                                                        const GeneratedSubalgebra& a,
                                                        GroebnerBudget budget = {}) {
    CompletenessCertificate cert;
    cert.c_g = index_of(L).c;
    if (a.gens.empty()) return cert;
    cert.trdeg = trdeg(L, a.gens, true).value;
    cert.is_complete = cert.trdeg == cert.c_g;
    bool homogeneous = true;
    for (const Poly& g : a.gens)
        if (!g.is_homogeneous()) homogeneous = false;
    if (!homogeneous) return cert;  // closure undecided
    // locus where the Jacobian drops below its generic rank r = trdeg
    PolyMatrix j = jacobian(a.gens);
    std::size_t r = cert.trdeg;
    std::vector<Poly> minors;
    detail::subsets_of_size(j.rows(), r, [&](const std::vector<std::size_t>& ri) {
        detail::subsets_of_size(j.cols(), r, [&](const std::vector<std::size_t>& ci) {
            Poly m = j.submatrix(ri, ci).determinant();
            if (!m.is_zero()) minors.push_back(m.normalized());
        });
    });
    Ideal locus(std::move(minors), MonOrder(), budget);
    auto dim = ideal_dimension(locus);
    cert.jacobian_locus_codim = dim ? L.dim() - *dim : L.dim();
    cert.closure_decided = true;
    cert.is_algebraically_closed = cert.jacobian_locus_codim >= 2;
    cert.is_strongly_complete = cert.is_complete && cert.is_algebraically_closed;
    return cert;
}

struct Theorem21Report {
    std::size_t trdeg = 0;
    std::size_t bound = 0;  // c(g) - deg p_g
    bool holds = false;
    bool equality = false;
};

inline Theorem21Report theorem21_bound_check(const LieAlgebra& L, const std::vector<Poly>& y_gens,
                                             const DualPoint& xi) {
    Theorem21Report rep;
    GeneratedSubalgebra mf = mf_algebra(L, y_gens, xi);
    rep.trdeg = trdeg(L, mf.gens, true).value;
    Poly p = fundamental_semiinvariant(L);
    rep.bound = index_of(L).c - static_cast<std::size_t>(std::max(p.degree(), 0));
    rep.holds = rep.trdeg <= rep.bound;
    rep.equality = rep.trdeg == rep.bound;
    return rep;
}

// Relation check: the relation is written in the polynomial grammar over the
// ambient variables plus declared names, which are substituted exactly.
inline bool verify_relation(const LieAlgebra& L, const std::map<std::string, Poly>& defs,
                            const std::string& relation) {
    std::vector<std::string> names = L.vars()->names();
    std::vector<Poly> images;
    for (std::size_t i = 0; i < L.dim(); ++i) images.push_back(Poly::variable(L.vars(), i));
    for (const auto& [nm, p] : defs) {
        if (L.vars()->index_of(nm) >= 0) throw std::invalid_argument("name shadows a basis variable: " + nm);
        names.push_back(nm);
        images.push_back(p);
    }
    VarSetPtr ext = VarSet::make(names);
    Poly rel = poly_parse(relation, ext);
    return rel.substitute(images).is_zero();
}

// Remark-2 check: each monomial involves only pairwise-commuting variables.
inline bool commuting_monomials_check(const LieAlgebra& L, const Poly& f) {
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) support.push_back(i);
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b)
                if (!L.bracket_basis(support[a], support[b]).is_zero()) return false;
    }
    return true;
}

}  // namespace lpk

#endif
