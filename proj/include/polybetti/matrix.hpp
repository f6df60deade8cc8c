#pragma once

#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

namespace polybetti {

// Dense matrix over a field object F (see field.hpp).  Sized for desk-scale
// exact computations; elimination is plain Gaussian with first-nonzero
// pivoting, which is exact over QQ and GF(p).
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), a_(rows * cols, field.zero()) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const F& field() const { return field_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::size_t rank() const {
        Matrix tmp(*this);
        return tmp.echelonize();
    }

    // Basis of { x : A x = 0 }, one vector per free column.
    std::vector<std::vector<Elem>> kernel_basis() const {
        Matrix tmp(*this);
        std::vector<std::size_t> pivot_col;
        tmp.echelonize(&pivot_col);
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivot_col) is_pivot[c] = true;

        std::vector<std::vector<Elem>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<Elem> x(cols_, field_.zero());
            x[fc] = field_.one();
            // back-substitute: rows are in reduced echelon form
            for (std::size_t r = 0; r < pivot_col.size(); ++r)
                x[pivot_col[r]] = field_.neg(tmp.at(r, fc));
            basis.push_back(std::move(x));
        }
        return basis;
    }

    // In-place reduction to reduced row echelon form; returns rank and,
    // optionally, the pivot column of each nonzero row.
    std::size_t echelonize(std::vector<std::size_t>* pivot_cols = nullptr) {
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t piv = r;
            while (piv < rows_ && field_.is_zero(at(piv, c))) ++piv;
            if (piv == rows_) continue;
            if (piv != r)
                for (std::size_t j = c; j < cols_; ++j) std::swap(at(piv, j), at(r, j));
            Elem s = field_.inv(at(r, c));
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = field_.mul(at(r, j), s);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || field_.is_zero(at(i, c))) continue;
                Elem f = at(i, c);
                for (std::size_t j = c; j < cols_; ++j)
                    at(i, j) = field_.sub(at(i, j), field_.mul(f, at(r, j)));
            }
            if (pivot_cols) pivot_cols->push_back(c);
            ++r;
        }
        return r;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

// Incrementally grown row space in echelon form.  Supports early-exit rank
// computations (stop feeding rows once the target rank is reached) and span
// membership tests.
template <class F>
class SpanBasis {
public:
    using Elem = typename F::Elem;

    SpanBasis(F field, std::size_t dim) : field_(field), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t dim() const { return dim_; }

    // Reduces v against the basis; if a nonzero remainder survives, absorbs
    // it and returns true.
    bool add(std::vector<Elem> v) {
        std::size_t piv = reduce(v);
        if (piv == dim_) return false;
        Elem s = field_.inv(v[piv]);
        for (std::size_t j = piv; j < dim_; ++j) v[j] = field_.mul(v[j], s);
        // keep rows ordered by pivot
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, piv);
        return true;
    }

    bool contains(std::vector<Elem> v) const { return reduce(v) == dim_; }

private:
    // Returns index of first nonzero coordinate after reduction, dim_ if zero.
    std::size_t reduce(std::vector<Elem>& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            std::size_t p = pivots_[r];
            if (field_.is_zero(v[p])) continue;
            Elem f = v[p];
            const auto& row = rows_[r];
            for (std::size_t j = p; j < dim_; ++j)
                v[j] = field_.sub(v[j], field_.mul(f, row[j]));
        }
        for (std::size_t j = 0; j < dim_; ++j)
            if (!field_.is_zero(v[j])) return j;
        return dim_;
    }

    F field_;
    std::size_t dim_;
    std::vector<std::vector<Elem>> rows_;
    std::vector<std::size_t> pivots_;
};

} // namespace polybetti
