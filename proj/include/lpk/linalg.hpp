#ifndef LPK_LINALG_HPP
#define LPK_LINALG_HPP

#include <vector>

#include "lpk/rational.hpp"

namespace lpk {

// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows, std::vector<Rat>(cols, Rat(0))) {}
    explicit QMatrix(std::vector<std::vector<Rat>> rows)
        : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), a_(std::move(rows)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const std::vector<Rat>& row(std::size_t i) const { return a_[i]; }
    std::vector<std::vector<Rat>>& data() { return a_; }
    const std::vector<std::vector<Rat>>& data() const { return a_; }

    // In-place reduced row echelon form; returns the rank. If `pivot_cols`
    // is given it receives the pivot column index of each echelon row.
    std::size_t rref(std::vector<std::size_t>* pivot_cols = nullptr) {
        if (pivot_cols) pivot_cols->clear();
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && a_[piv][c] == 0) ++piv;
            if (piv == rows_) continue;
            std::swap(a_[r], a_[piv]);
            Rat inv = 1 / a_[r][c];
            for (std::size_t j = c; j < cols_; ++j) a_[r][j] *= inv;
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || a_[i][c] == 0) continue;
                Rat f = a_[i][c];
                for (std::size_t j = c; j < cols_; ++j) a_[i][j] -= f * a_[r][j];
            }
            if (pivot_cols) pivot_cols->push_back(c);
            ++r;
        }
        return r;
    }

    std::size_t rank() const {
        QMatrix m = *this;
        return m.rref();
    }

    // Canonical (RREF) basis of the right kernel, one vector per row.
    QMatrix kernel() const {
        QMatrix m = *this;
        std::vector<std::size_t> pivots;
        std::size_t rank = m.rref(&pivots);
        std::vector<int> pivot_of_col(cols_, -1);
        for (std::size_t r = 0; r < rank; ++r) pivot_of_col[pivots[r]] = static_cast<int>(r);
        QMatrix ker(cols_ - rank, cols_);
        std::size_t kr = 0;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (pivot_of_col[c] >= 0) continue;
            ker.a_[kr][c] = 1;
            for (std::size_t cc = 0; cc < cols_; ++cc) {
                if (pivot_of_col[cc] >= 0)
                    ker.a_[kr][cc] = -m.a_[pivot_of_col[cc]][c];
            }
            ++kr;
        }
        ker.rref();  // canonical representative
        return ker;
    }

    Rat determinant() const {
        QMatrix m = *this;
        Rat det(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t piv = c;
            while (piv < rows_ && m.a_[piv][c] == 0) ++piv;
            if (piv == rows_) return Rat(0);
            if (piv != c) { std::swap(m.a_[c], m.a_[piv]); det = -det; }
            det *= m.a_[c][c];
            Rat inv = 1 / m.a_[c][c];
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m.a_[i][c] == 0) continue;
                Rat f = m.a_[i][c] * inv;
                for (std::size_t j = c; j < cols_; ++j) m.a_[i][j] -= f * m.a_[c][j];
            }
        }
        return det;
    }

    bool operator==(const QMatrix& o) const { return a_ == o.a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::vector<Rat>> a_;
};

}  // namespace lpk

#endif
