#ifndef LPK_POLY_MATRIX_HPP
#define LPK_POLY_MATRIX_HPP

#include <optional>
#include <stdexcept>
#include <vector>

#include "lpk/linalg.hpp"
#include "lpk/poly.hpp"

namespace lpk {

// Exact division a / b; throws std::domain_error if the division is not exact.
inline Poly poly_divide_exact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    MonOrder ord;
    Poly rem = a;
    Poly quot(a.vars());
    const Monomial& ltb = b.leading_monomial(ord);
    Rat lcb = b.leading_coeff(ord);
    while (!rem.is_zero()) {
        const Monomial& lta = rem.leading_monomial(ord);
        if (!ltb.divides(lta)) throw std::domain_error("inexact polynomial division");
        Poly t = Poly::term(a.vars(), lta.quotient(ltb), rem.terms().at(lta) / lcb);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

inline bool poly_divides(const Poly& b, const Poly& a) {
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    try {
        poly_divide_exact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Dense matrix with polynomial entries.
class PolyMatrix {
public:
    PolyMatrix(std::size_t rows, std::size_t cols, VarSetPtr vars)
        : rows_(rows), cols_(cols), vars_(std::move(vars)),
          a_(rows, std::vector<Poly>(cols, Poly::zero(vars_))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const VarSetPtr& vars() const { return vars_; }
    Poly& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Poly& at(std::size_t i, std::size_t j) const { return a_[i][j]; }

    bool is_skew_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (!a_[i][i].is_zero()) return false;
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (a_[i][j] != -a_[j][i]) return false;
        }
        return true;
    }

    PolyMatrix submatrix(const std::vector<std::size_t>& row_idx,
                         const std::vector<std::size_t>& col_idx) const {
        PolyMatrix s(row_idx.size(), col_idx.size(), vars_);
        for (std::size_t i = 0; i < row_idx.size(); ++i)
            for (std::size_t j = 0; j < col_idx.size(); ++j)
                s.a_[i][j] = a_[row_idx[i]][col_idx[j]];
        return s;
    }

    PolyMatrix principal_submatrix(const std::vector<std::size_t>& idx) const {
        return submatrix(idx, idx);
    }

    QMatrix eval(const std::vector<Rat>& point) const {
        QMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(i, j) = a_[i][j].eval(point);
        return m;
    }

    Poly determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
        return det_rec(*this);
    }

    bool operator==(const PolyMatrix& o) const { return a_ == o.a_; }

private:
    static Poly det_rec(const PolyMatrix& m) {
        std::size_t n = m.rows();
        if (n == 0) return Poly::constant(m.vars(), Rat(1));
        if (n == 1) return m.at(0, 0);
        Poly acc = Poly::zero(m.vars());
        std::vector<std::size_t> rest;
        for (std::size_t i = 1; i < n; ++i) rest.push_back(i);
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(0, j).is_zero()) continue;
            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) cols.push_back(c);
            Poly minor = det_rec(m.submatrix(rest, cols));
            Poly term = m.at(0, j) * minor;
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    }

    std::size_t rows_, cols_;
    VarSetPtr vars_;
    std::vector<std::vector<Poly>> a_;
};

// Pfaffian by Laplace-type expansion along the first row.
// Requires a skew-symmetric matrix of even size.
inline Poly pfaffian(const PolyMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0)
        throw std::invalid_argument("pfaffian requires even square size");
    if (!m.is_skew_symmetric()) throw std::invalid_argument("pfaffian requires a skew-symmetric matrix");

    // recursive worker on an index subset of m
    struct Worker {
        const PolyMatrix& m;
        Poly run(const std::vector<std::size_t>& idx) {
            if (idx.empty()) return Poly::constant(m.vars(), Rat(1));
            Poly acc = Poly::zero(m.vars());
            for (std::size_t k = 1; k < idx.size(); ++k) {
                const Poly& entry = m.at(idx[0], idx[k]);
                if (entry.is_zero()) continue;
                std::vector<std::size_t> rest;
                for (std::size_t t = 1; t < idx.size(); ++t)
                    if (t != k) rest.push_back(idx[t]);
                Poly term = entry * run(rest);
                acc += (k % 2 == 1) ? term : -term;
            }
            return acc;
        }
    };
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < m.rows(); ++i) all.push_back(i);
    return Worker{m}.run(all);
}

// Rank over the field of rational functions via fraction-free (Bareiss)
// elimination with full pivoting. A randomized integer-evaluation pre-pass
// short-circuits only when it attains the trivial upper bound min(rows, cols).
inline std::size_t rank_over_fraction_field(const PolyMatrix& m, std::uint64_t seed = 7) {
    std::size_t bound = std::min(m.rows(), m.cols());
    if (bound == 0) return 0;
    {
        Rng rng(seed);
        for (int trial = 0; trial < 2; ++trial) {
            std::vector<Rat> pt;
            for (std::size_t i = 0; i < m.vars()->size(); ++i) pt.emplace_back(rng.next_int(-50, 50));
            if (m.eval(pt).rank() == bound) return bound;
        }
    }
    // deterministic Bareiss elimination
    std::vector<std::vector<Poly>> a;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Poly> row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j));
        a.push_back(std::move(row));
    }
    std::size_t nr = m.rows(), nc = m.cols();
    Poly prev = Poly::constant(m.vars(), Rat(1));
    std::size_t rank = 0;
    for (std::size_t k = 0; k < bound; ++k) {
        // full pivot search in the trailing block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = k; i < nr && pi == nr; ++i)
            for (std::size_t j = k; j < nc; ++j)
                if (!a[i][j].is_zero()) { pi = i; pj = j; break; }
        if (pi == nr) break;  // trailing block is zero
        std::swap(a[k], a[pi]);
        if (pj != k)
            for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][k], a[i][pj]);
        ++rank;
        for (std::size_t i = k + 1; i < nr; ++i) {
            for (std::size_t j = k + 1; j < nc; ++j) {
                Poly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = num.is_zero() ? num : poly_divide_exact(num, prev);
            }
            a[i][k] = Poly::zero(m.vars());
        }
        prev = a[k][k];
    }
    return rank;
}

}  // namespace lpk

#endif
