#ifndef LPK_REGULARITY_HPP
#define LPK_REGULARITY_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "lpk/invariants.hpp"
#include "lpk/liealg.hpp"

namespace lpk {

struct RegularSample {
    DualPoint xi;
    std::size_t rank_at_xi = 0;
    Subspace stabilizer;
};

// g(xi) = kernel of B(xi).
inline RegularSample stabilizer_at(const LieAlgebra& L, const DualPoint& xi) {
    RegularSample s;
    s.xi = xi;
    QMatrix b = L.structure_matrix().eval(xi);
    s.rank_at_xi = b.rank();
    s.stabilizer = Subspace::from_vectors(L.dim(), b.kernel().data());
    return s;
}

struct SamplingExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// First regular point from a seeded stream of integer duals in [-50, 50].
inline RegularSample sample_regular(const LieAlgebra& L, std::uint64_t seed) {
    std::size_t t = index_of(L).t;
    Rng rng(seed);
    for (int draw = 0; draw < 1000; ++draw) {
        DualPoint xi;
        for (std::size_t i = 0; i < L.dim(); ++i) xi.emplace_back(rng.next_int(-50, 50));
        RegularSample s = stabilizer_at(L, xi);
        if (s.rank_at_xi == t) return s;
    }
    throw SamplingExhausted("no regular point in 1000 draws; regular points are dense, so this signals a bug");
}

struct FrobeniusReport {
    Subspace F;
    bool is_commutative = false;
    bool is_ideal = false;
    std::size_t samples_used = 0;
    std::size_t saturated_for = 0;
};

// F(g) = sum of stabilizers of regular points, saturated by Monte-Carlo
// accumulation (stop after `window` consecutive non-growing regular samples).
inline FrobeniusReport frobenius_semiradical(const LieAlgebra& L, std::uint64_t seed = 42,
                                             std::size_t window = 25) {
    std::size_t t = index_of(L).t;
    FrobeniusReport rep;
    rep.F = Subspace(L.dim());
    Rng rng(seed ? seed : 1);
    std::size_t stable = 0;
    int budget = 5000;
    while (stable < window) {
        if (--budget < 0) throw SamplingExhausted("frobenius sampling budget exhausted");
        DualPoint xi;
        for (std::size_t i = 0; i < L.dim(); ++i) xi.emplace_back(rng.next_int(-50, 50));
        RegularSample s = stabilizer_at(L, xi);
        if (s.rank_at_xi != t) continue;
        ++rep.samples_used;
        Subspace next = rep.F.sum(s.stabilizer);
        if (next.dim() == rep.F.dim()) {
            ++stable;
        } else {
            stable = 0;
            rep.F = next;
        }
        if (rep.F.dim() == L.dim()) break;  // cannot grow further
    }
    rep.saturated_for = stable;
    rep.is_commutative = bracket_span(L, rep.F, rep.F).dim() == 0;
    rep.is_ideal = rep.F.contains(bracket_span(L, Subspace::full(L.dim()), rep.F));
    return rep;
}

inline bool is_square_integrable(const LieAlgebra& L) {
    if (L.table().empty()) throw std::invalid_argument("square integrability is for nonabelian algebras");
    return index_of(L).index == center(L).dim();
}

struct CpReport {
    bool is_subalgebra = false;
    bool is_commutative = false;
    bool is_ideal = false;
    std::size_t dim = 0;
    bool is_cp = false;
    bool is_cpi = false;
    bool theorem7_bound_ok = true;  // commutative subalgebras have dim <= c(g)
};

inline CpReport verify_cp(const LieAlgebra& L, const Subspace& h) {
    CpReport rep;
    rep.dim = h.dim();
    Subspace hh = bracket_span(L, h, h);
    rep.is_subalgebra = h.contains(hh);
    rep.is_commutative = hh.dim() == 0;
    rep.is_ideal = h.contains(bracket_span(L, Subspace::full(L.dim()), h));
    std::size_t c = index_of(L).c;
    if (rep.is_commutative && rep.is_subalgebra) rep.theorem7_bound_ok = rep.dim <= c;
    rep.is_cp = rep.is_subalgebra && rep.is_commutative && rep.dim == c;
    rep.is_cpi = rep.is_cp && rep.is_ideal;
    return rep;
}

// Exhaustive search for a CP spanned by a subset of basis coordinates.
inline std::optional<Subspace> coordinate_cp_search(const LieAlgebra& L) {
    std::size_t c = index_of(L).c;
    std::optional<Subspace> found;
    detail::subsets_of_size(L.dim(), c, [&](const std::vector<std::size_t>& idx) {
        if (found) return;
        Subspace h = Subspace::span_of_coordinates(L.dim(), idx);
        if (verify_cp(L, h).is_cp) found = h;
    });
    return found;
}

struct Theorem22Report {
    std::size_t c_g = 0;
    std::size_t c_F = 0;
    std::size_t deg_p = 0;
    bool inequality_holds = false;  // c(g) - c(F(g)) <= deg p_g
    bool strict = false;
    bool f_commutative = false;
    bool nonsingular = false;
    bool f_unique_cp_note = false;  // nonsingular + commutative F: F is the unique CP
};

inline Theorem22Report theorem22_report(const LieAlgebra& L, std::uint64_t seed = 42) {
    Theorem22Report rep;
    rep.c_g = index_of(L).c;
    FrobeniusReport fr = frobenius_semiradical(L, seed);
    if (fr.F.dim() == 0) {
        rep.c_F = 0;  // Frobenius case F(g) = 0
    } else {
        RestrictedAlgebra ra = restrict_to_subalgebra(L, fr.F);
        rep.c_F = index_of(ra.algebra).c;
    }
    Poly p = fundamental_semiinvariant(L);
    rep.deg_p = static_cast<std::size_t>(std::max(p.degree(), 0));
    rep.inequality_holds = rep.c_g - rep.c_F <= rep.deg_p;
    rep.strict = rep.c_g - rep.c_F < rep.deg_p;
    rep.f_commutative = fr.is_commutative;
    rep.nonsingular = rep.deg_p == 0;
    rep.f_unique_cp_note = rep.nonsingular && rep.f_commutative;
    return rep;
}

}  // namespace lpk

#endif
