#ifndef LPK_GCD_HPP
#define LPK_GCD_HPP

#include <map>
#include <vector>

#include "lpk/poly.hpp"
#include "lpk/poly_matrix.hpp"

namespace lpk {

namespace detail {

// View of a polynomial as univariate in variable `var` with Poly coefficients.
inline std::map<int, Poly> univariate_view(const Poly& p, std::size_t var) {
    std::map<int, Poly> coeffs;
    for (const auto& [m, c] : p.terms()) {
        int d = m.e[var];
        Monomial rest = m;
        rest.e[var] = 0;
        auto it = coeffs.find(d);
        if (it == coeffs.end()) it = coeffs.emplace(d, Poly::zero(p.vars())).first;
        it->second.add_term(rest, c);
    }
    for (auto it = coeffs.begin(); it != coeffs.end();)
        it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
    return coeffs;
}

inline Poly from_univariate(const std::map<int, Poly>& coeffs, std::size_t var, VarSetPtr vars) {
    Poly p = Poly::zero(vars);
    for (const auto& [d, c] : coeffs) {
        Monomial xm(vars->size());
        xm.e[var] = d;
        p += c * Poly::term(vars, xm, Rat(1));
    }
    return p;
}

inline int degree_in(const Poly& p, std::size_t var) {
    int d = -1;
    for (const auto& [m, c] : p.terms()) d = std::max(d, m.e[var]);
    return d;
}

// Pseudo-remainder of a by b with respect to `var`.
inline Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t var) {
    int da = degree_in(a, var), db = degree_in(b, var);
    auto bu = univariate_view(b, var);
    const Poly lcb = bu.rbegin()->second;
    Poly rem = a;
    Monomial xm(a.vars()->size());
    xm.e[var] = 1;
    Poly x = Poly::term(a.vars(), xm, Rat(1));
    while (!rem.is_zero()) {
        int dr = degree_in(rem, var);
        if (dr < db) break;
        auto ru = univariate_view(rem, var);
        Poly lcr = ru.rbegin()->second;
        // rem <- lcb*rem - lcr * x^(dr-db) * b
        rem = lcb * rem - lcr * x.pow(static_cast<unsigned>(dr - db)) * b;
    }
    (void)da;
    return rem;
}

}  // namespace detail

// gcd up to normalization: integer-primitive, positive leading coefficient
// under degrevlex. Recursive primitive PRS with the largest present variable
// as main variable; gcd(0, b) = normalized b.
inline Poly gcd_multi(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? b : b.normalized();
    if (b.is_zero()) return a.normalized();
    // main variable: largest index occurring in either
    int var = -1;
    for (const auto& [m, c] : a.terms())
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) var = std::max(var, static_cast<int>(i));
    for (const auto& [m, c] : b.terms())
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) var = std::max(var, static_cast<int>(i));
    if (var < 0) return Poly::constant(a.vars(), Rat(1));  // both constants

    std::size_t v = static_cast<std::size_t>(var);
    int da = detail::degree_in(a, v), db = detail::degree_in(b, v);
    if (da == 0 || db == 0) {
        // one input does not involve the main variable: gcd divides its
        // coefficient content only
        const Poly& flat = (da == 0) ? a : b;
        const Poly& other = (da == 0) ? b : a;
        Poly g = flat;
        for (const auto& [d, c] : detail::univariate_view(other, v)) g = gcd_multi(g, c);
        return g.normalized();
    }

    // contents with respect to v
    auto content_of = [&](const Poly& p) {
        Poly g = Poly::zero(p.vars());
        for (const auto& [d, c] : detail::univariate_view(p, v)) g = gcd_multi(g, c);
        return g;
    };
    Poly ca = content_of(a), cb = content_of(b);
    Poly pa = poly_divide_exact(a, ca), pb = poly_divide_exact(b, cb);
    Poly cont_gcd = gcd_multi(ca, cb);

    // primitive PRS on the primitive parts
    Poly f = (detail::degree_in(pa, v) >= detail::degree_in(pb, v)) ? pa : pb;
    Poly g = (detail::degree_in(pa, v) >= detail::degree_in(pb, v)) ? pb : pa;
    while (!g.is_zero()) {
        Poly r = detail::pseudo_remainder(f, g, v);
        if (!r.is_zero()) r = poly_divide_exact(r, content_of(r));
        f = g;
        g = r;
    }
    return (cont_gcd * f).normalized();
}

}  // namespace lpk

#endif
