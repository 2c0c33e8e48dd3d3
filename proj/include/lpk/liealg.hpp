#ifndef LPK_LIEALG_HPP
#define LPK_LIEALG_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpk/linalg.hpp"
#include "lpk/poly.hpp"
#include "lpk/poly_matrix.hpp"

namespace lpk {

using DualPoint = std::vector<Rat>;

struct JacobiFailure : std::runtime_error {
    std::size_t i, j, k;  // 0-based violating triple
    JacobiFailure(std::size_t i_, std::size_t j_, std::size_t k_, const std::string& names)
        : std::runtime_error("Jacobi identity fails on (" + names + ")"), i(i_), j(j_), k(k_) {}
};

// Lie algebra over Q given by structure constants. Brackets stored sparsely
// for i < j as linear polynomials in the basis variables; antisymmetry is
// synthesized, Jacobi is verified at construction.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Poly>;

    LieAlgebra(VarSetPtr vars, BracketTable table)
        : vars_(std::move(vars)), table_(std::move(table)) {
        for (const auto& [ij, p] : table_) {
            if (ij.first >= ij.second || ij.second >= vars_->size())
                throw std::invalid_argument("bracket index out of range");
            for (const auto& [m, c] : p.terms())
                if (m.degree() != 1)
                    throw std::invalid_argument("bracket value must be linear homogeneous");
        }
        check_jacobi();
    }

    std::size_t dim() const { return vars_->size(); }
    const VarSetPtr& vars() const { return vars_; }
    const BracketTable& table() const { return table_; }

    // [x_i, x_j] for any i, j (antisymmetry applied).
    Poly bracket_basis(std::size_t i, std::size_t j) const {
        if (i == j) return Poly::zero(vars_);
        bool flip = i > j;
        if (flip) std::swap(i, j);
        auto it = table_.find({i, j});
        if (it == table_.end()) return Poly::zero(vars_);
        return flip ? -it->second : it->second;
    }

    // Bracket of two linear homogeneous polynomials, extended bilinearly.
    Poly bracket_linear(const Poly& a, const Poly& b) const {
        Poly r(vars_);
        for (const auto& [ma, ca] : a.terms())
            for (const auto& [mb, cb] : b.terms()) {
                std::size_t i = var_index(ma), j = var_index(mb);
                r += bracket_basis(i, j) * (ca * cb);
            }
        return r;
    }

    // Bracket of coordinate vectors, as a coordinate vector.
    std::vector<Rat> bracket_vec(const std::vector<Rat>& u, const std::vector<Rat>& v) const {
        std::size_t n = dim();
        std::vector<Rat> out(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (v[j] == 0 || i == j) continue;
                const Poly br = bracket_basis(i, j);
                for (const auto& [m, c] : br.terms()) out[var_index(m)] += u[i] * v[j] * c;
            }
        }
        return out;
    }

    // {f, g} = sum_{i<j} [x_i, x_j] (df/dx_i dg/dx_j - df/dx_j dg/dx_i)
    Poly poisson_bracket(const Poly& f, const Poly& g) const {
        Poly r(vars_);
        for (const auto& [ij, br] : table_) {
            auto [i, j] = ij;
            Poly mix = f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i);
            if (!mix.is_zero()) r += br * mix;
        }
        return r;
    }

    // ad x_i acting on S(g): ad x(f) := {x, f}
    Poly ad(std::size_t i, const Poly& f) const {
        return poisson_bracket(Poly::variable(vars_, i), f);
    }

    PolyMatrix structure_matrix() const {
        std::size_t n = dim();
        PolyMatrix b(n, n, vars_);
        for (const auto& [ij, br] : table_) {
            b.at(ij.first, ij.second) = br;
            b.at(ij.second, ij.first) = -br;
        }
        return b;
    }

    // Matrix of ad x_i in the basis (columns: images of x_j).
    QMatrix ad_matrix(std::size_t i) const {
        std::size_t n = dim();
        QMatrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Poly br = bracket_basis(i, j);
            for (const auto& [mono, c] : br.terms()) m.at(var_index(mono), j) = c;
        }
        return m;
    }

    bool is_unimodular() const {
        for (std::size_t i = 0; i < dim(); ++i) {
            Rat tr(0);
            QMatrix m = ad_matrix(i);
            for (std::size_t j = 0; j < dim(); ++j) tr += m.at(j, j);
            if (tr != 0) return false;
        }
        return true;
    }

    std::optional<std::string> name;
    std::vector<std::string> aliases;

private:
    std::size_t var_index(const Monomial& m) const {
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0) return i;
        throw std::logic_error("expected a degree-1 monomial");
    }

    void check_jacobi() const {
        std::size_t n = dim();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    Poly s = bracket_linear(bracket_basis(i, j), Poly::variable(vars_, k)) +
                             bracket_linear(bracket_basis(j, k), Poly::variable(vars_, i)) +
                             bracket_linear(bracket_basis(k, i), Poly::variable(vars_, j));
                    if (!s.is_zero())
                        throw JacobiFailure(i, j, k, vars_->name(i) + "," + vars_->name(j) + "," + vars_->name(k));
                }
    }

    VarSetPtr vars_;
    BracketTable table_;
};

// Linear subspace of g in coordinates, canonical RREF basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace from_vectors(std::size_t ambient, const std::vector<std::vector<Rat>>& vecs) {
        Subspace s(ambient);
        if (vecs.empty()) return s;
        QMatrix m(vecs);
        m.rref();
        std::vector<std::vector<Rat>> rows;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            bool zero = true;
            for (std::size_t j = 0; j < ambient; ++j)
                if (m.at(i, j) != 0) { zero = false; break; }
            if (!zero) rows.push_back(m.row(i));
        }
        s.basis_ = rows.empty() ? QMatrix(0, ambient) : QMatrix(rows);
        return s;
    }

    static Subspace span_of_coordinates(std::size_t ambient, const std::vector<std::size_t>& idx) {
        std::vector<std::vector<Rat>> vecs;
        for (std::size_t i : idx) {
            std::vector<Rat> v(ambient, Rat(0));
            v[i] = 1;
            vecs.push_back(std::move(v));
        }
        return from_vectors(ambient, vecs);
    }

    static Subspace full(std::size_t ambient) {
        std::vector<std::size_t> all;
        for (std::size_t i = 0; i < ambient; ++i) all.push_back(i);
        return span_of_coordinates(ambient, all);
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    std::vector<Rat> basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const std::vector<Rat>& v) const {
        std::vector<std::vector<Rat>> rows = basis_.data();
        rows.push_back(v);
        return QMatrix(rows).rank() == dim();
    }

    bool contains(const Subspace& other) const {
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_vector(i))) return false;
        return true;
    }

    Subspace sum(const Subspace& other) const {
        std::vector<std::vector<Rat>> rows = basis_.data();
        for (const auto& r : other.basis_.data()) rows.push_back(r);
        return from_vectors(ambient_, rows);
    }

    bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Indices of basis variables appearing with nonzero coefficient.
    std::vector<std::size_t> coordinate_support() const {
        std::vector<std::size_t> idx;
        for (std::size_t j = 0; j < ambient_; ++j) {
            bool used = false;
            for (std::size_t i = 0; i < dim() && !used; ++i)
                if (basis_.at(i, j) != 0) used = true;
            if (used) idx.push_back(j);
        }
        return idx;
    }

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;
};

// [A, B] as a subspace: span of brackets of basis vectors.
inline Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
    std::vector<std::vector<Rat>> vecs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            vecs.push_back(L.bracket_vec(a.basis_vector(i), b.basis_vector(j)));
    return Subspace::from_vectors(L.dim(), vecs);
}

inline Subspace center(const LieAlgebra& L) {
    std::size_t n = L.dim();
    // unknown v = sum a_i x_i with [v, x_j] = 0 for all j
    QMatrix sys(n * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Poly br = L.bracket_basis(i, j);
            for (const auto& [m, c] : br.terms())
                for (std::size_t k = 0; k < n; ++k)
                    if (m.e[k] > 0) sys.at(j * n + k, i) = c;
        }
    QMatrix ker = sys.kernel();
    return Subspace::from_vectors(n, ker.data());
}

inline bool is_nilpotent(const LieAlgebra& L) {
    Subspace g = Subspace::full(L.dim());
    Subspace cur = g;
    for (std::size_t step = 0; step <= L.dim(); ++step) {
        if (cur.dim() == 0) return true;
        Subspace next = bracket_span(L, g, cur);
        if (next.dim() == cur.dim()) return false;  // series stalled above 0
        cur = next;
    }
    return cur.dim() == 0;
}

struct IdealFlag {
    std::vector<Subspace> chain;  // dims 0..n

    bool valid(const LieAlgebra& L) const {
        if (chain.size() != L.dim() + 1) return false;
        Subspace g = Subspace::full(L.dim());
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (chain[k].dim() != k) return false;
            if (k > 0 && !chain[k].contains(chain[k - 1])) return false;
            if (k > 0 && !chain[k - 1].contains(bracket_span(L, g, chain[k])))
                return false;
        }
        return true;
    }
};

// Complete flag of ideals with [g, g_j] <= g_{j-1}, built greedily by
// extending with a vector central modulo the current step (highest-index
// basis vector preferred, deterministic).
inline IdealFlag ideal_flag(const LieAlgebra& L) {
    if (!is_nilpotent(L)) throw std::invalid_argument("ideal_flag requires a nilpotent algebra");
    std::size_t n = L.dim();
    IdealFlag flag;
    flag.chain.push_back(Subspace(n));
    while (flag.chain.back().dim() < n) {
        const Subspace& h = flag.chain.back();
        // central-mod-h subspace: v with [x_j, v] in h for all j, expressed
        // by projecting each [x_j, v] onto quotient coordinates (non-pivot
        // columns of h's RREF basis)
        std::size_t hd = h.dim();
        QMatrix hb = h.basis();
        std::vector<std::size_t> pivots;
        {
            QMatrix tmp = hb;
            tmp.rref(&pivots);
        }
        std::vector<bool> is_pivot(n, false);
        for (std::size_t p : pivots) is_pivot[p] = true;
        // projection of w onto quotient coords: w minus h-combination fixing pivots
        auto quotient_coords = [&](std::vector<Rat> w) {
            for (std::size_t r = 0; r < hd; ++r) {
                Rat f = w[pivots[r]];
                if (f == 0) continue;
                for (std::size_t j2 = 0; j2 < n; ++j2) w[j2] -= f * hb.at(r, j2);
            }
            std::vector<Rat> out;
            for (std::size_t j2 = 0; j2 < n; ++j2)
                if (!is_pivot[j2]) out.push_back(w[j2]);
            return out;
        };
        // condition on v = sum a_i x_i: for each j, quotient_coords([x_j, v]) = 0
        std::vector<std::vector<Rat>> rows;
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Rat>> cols;  // per i: quotient coords of [x_j, x_i]
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Rat> ej(n, Rat(0)), ei(n, Rat(0));
                ej[j] = 1;
                ei[i] = 1;
                cols.push_back(quotient_coords(L.bracket_vec(ej, ei)));
            }
            std::size_t q = n - hd;
            for (std::size_t r = 0; r < q; ++r) {
                std::vector<Rat> row(n, Rat(0));
                for (std::size_t i = 0; i < n; ++i) row[i] = cols[i][r];
                rows.push_back(std::move(row));
            }
        }
        QMatrix sys2(rows);
        QMatrix ker = sys2.kernel();
        Subspace central = Subspace::from_vectors(n, ker.data());
        // prefer the highest-index basis vector lying in central \ h
        std::vector<Rat> chosen;
        for (std::size_t m = n; m-- > 0;) {
            std::vector<Rat> em(n, Rat(0));
            em[m] = 1;
            if (central.contains(em) && !h.contains(em)) { chosen = em; break; }
        }
        if (chosen.empty()) {
            for (std::size_t r = 0; r < central.dim(); ++r)
                if (!h.contains(central.basis_vector(r))) { chosen = central.basis_vector(r); break; }
        }
        if (chosen.empty()) throw std::logic_error("flag construction stalled");
        std::vector<std::vector<Rat>> ext = h.basis().data();
        ext.push_back(chosen);
        flag.chain.push_back(Subspace::from_vectors(n, ext));
    }
    return flag;
}

// Invariant symmetric bilinear form: solves b([x,y],z) + b(y,[x,z]) = 0.
// Returns a nondegenerate witness if the solution space contains one,
// decided exactly via the symbolic determinant of a generic combination.
inline std::optional<QMatrix> invariant_symmetric_form(const LieAlgebra& L) {
    std::size_t n = L.dim();
    // unknowns b_pq for p <= q
    std::size_t nu = n * (n + 1) / 2;
    auto uidx = [&](std::size_t p, std::size_t q) {
        if (p > q) std::swap(p, q);
        return p * n - p * (p - 1) / 2 + (q - p);
    };
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p; q < n; ++q) {
                std::vector<Rat> row(nu, Rat(0));
                Poly bip = L.bracket_basis(i, p), biq = L.bracket_basis(i, q);
                for (const auto& [m, c] : bip.terms())
                    for (std::size_t k = 0; k < n; ++k)
                        if (m.e[k] > 0) row[uidx(k, q)] += c;
                for (const auto& [m, c] : biq.terms())
                    for (std::size_t k = 0; k < n; ++k)
                        if (m.e[k] > 0) row[uidx(p, k)] += c;
                bool nz = false;
                for (const Rat& r : row)
                    if (r != 0) { nz = true; break; }
                if (nz) rows.push_back(std::move(row));
            }
    QMatrix ker = rows.empty() ? [&] {  // no constraints: all symmetric forms
        QMatrix id(nu, nu);
        for (std::size_t i = 0; i < nu; ++i) id.at(i, i) = 1;
        return id;
    }() : QMatrix(rows).kernel();
    std::size_t s = ker.rows();
    if (s == 0) return std::nullopt;

    auto to_matrix = [&](const std::vector<Rat>& coeffs) {
        QMatrix b(n, n);
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p; q < n; ++q) {
                b.at(p, q) = coeffs[uidx(p, q)];
                b.at(q, p) = coeffs[uidx(p, q)];
            }
        return b;
    };

    // generic combination sum_r lam_r B_r; nondegenerate solution exists iff
    // its determinant is a nonzero polynomial in lam
    std::vector<std::string> lam_names;
    for (std::size_t r = 0; r < s; ++r) lam_names.push_back("lam" + std::to_string(r + 1));
    VarSetPtr lam_vars = VarSet::make(lam_names);
    PolyMatrix generic(n, n, lam_vars);
    for (std::size_t r = 0; r < s; ++r) {
        QMatrix br = to_matrix(ker.row(r));
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                generic.at(p, q) += Poly::variable(lam_vars, r) * br.at(p, q);
    }
    if (generic.determinant().is_zero()) return std::nullopt;

    // witness: identity first (matches the abelian convention), then basis
    // sweep, then seeded random combinations
    {
        QMatrix id(n, n);
        for (std::size_t i = 0; i < n; ++i) id.at(i, i) = 1;
        std::vector<Rat> flat(nu, Rat(0));
        for (std::size_t i = 0; i < n; ++i) flat[uidx(i, i)] = 1;
        std::vector<std::vector<Rat>> test = ker.data();
        test.push_back(flat);
        if (QMatrix(test).rank() == s && id.determinant() != 0) return id;
    }
    for (std::size_t r = 0; r < s; ++r) {
        QMatrix b = to_matrix(ker.row(r));
        if (b.determinant() != 0) return b;
    }
    Rng rng(20240901);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> coeffs(nu, Rat(0));
        for (std::size_t r = 0; r < s; ++r) {
            Rat c(rng.next_int(-9, 9));
            for (std::size_t u = 0; u < nu; ++u) coeffs[u] += c * ker.at(r, u);
        }
        QMatrix b = to_matrix(coeffs);
        if (b.determinant() != 0) return b;
    }
    return std::nullopt;  // unreachable in practice: det poly is nonzero
}

// Checks b([x_i,x_p],x_q) + b(x_p,[x_i,x_q]) = 0 for all triples.
inline bool is_invariant_form(const LieAlgebra& L, const QMatrix& b) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q) {
                Rat acc(0);
                Poly bip = L.bracket_basis(i, p), biq = L.bracket_basis(i, q);
                for (const auto& [m, c] : bip.terms())
                    for (std::size_t k = 0; k < n; ++k)
                        if (m.e[k] > 0) acc += c * b.at(k, q);
                for (const auto& [m, c] : biq.terms())
                    for (std::size_t k = 0; k < n; ++k)
                        if (m.e[k] > 0) acc += c * b.at(p, k);
                if (acc != 0) return false;
            }
    return true;
}

inline std::vector<std::string> default_basis_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

// g(n): [x1, xi] = x_{i+1} for i = 2..n-1.
inline LieAlgebra build_standard_filiform(std::size_t n) {
    if (n < 3) throw std::invalid_argument("filiform needs n >= 3");
    VarSetPtr vars = VarSet::make(default_basis_names(n));
    LieAlgebra::BracketTable table;
    for (std::size_t i = 1; i + 1 < n; ++i)
        table[{0, i}] = Poly::variable(vars, i + 1);
    return LieAlgebra(vars, std::move(table));
}

// Strictly lower triangular (n+1)x(n+1) matrices; basis E_{ij}, i > j,
// ordered lexicographically by (i, j).
inline LieAlgebra build_triangular_nilradical(std::size_t n) {
    if (n < 2) throw std::invalid_argument("triangular nilradical needs n >= 2");
    std::vector<std::pair<std::size_t, std::size_t>> pos;  // (i, j), i > j, 1-based
    for (std::size_t i = 2; i <= n + 1; ++i)
        for (std::size_t j = 1; j < i; ++j) pos.push_back({i, j});
    std::size_t d = pos.size();
    auto idx_of = [&](std::size_t i, std::size_t j) -> int {
        for (std::size_t k = 0; k < d; ++k)
            if (pos[k].first == i && pos[k].second == j) return static_cast<int>(k);
        return -1;
    };
    VarSetPtr vars = VarSet::make(default_basis_names(d));
    LieAlgebra::BracketTable table;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            auto [i, j] = pos[a];
            auto [k, l] = pos[b];
            Poly val(vars);
            // [E_ij, E_kl] = d_jk E_il - d_li E_kj
            if (j == k && i != l) val += Poly::variable(vars, idx_of(i, l));
            if (l == i && k != j) val -= Poly::variable(vars, idx_of(k, j));
            if (j == k && i == l) throw std::logic_error("diagonal target impossible here");
            if (!val.is_zero()) table[{a, b}] = val;
        }
    return LieAlgebra(vars, std::move(table));
}

}  // namespace lpk

#endif
