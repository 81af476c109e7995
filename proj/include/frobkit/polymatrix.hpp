/*
   Copyright 2026 The frobkit authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FROBKIT_POLYMATRIX_HPP
#define FROBKIT_POLYMATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "frobkit/polyring.hpp"

namespace frobkit {

// A column vector over the polynomial ring; the carrier of submodule
// generators and of elements of free modules R^n.
using PolyVec = std::vector<Polynomial>;

inline PolyVec zero_vec(const Ring& r, std::size_t n) {
    return PolyVec(n, Polynomial::zero(r));
}

inline bool is_zero_vec(const PolyVec& v) {
    for (const auto& f : v)
        if (!f.is_zero()) return false;
    return true;
}

inline PolyVec vec_add(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    PolyVec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
    return r;
}

inline PolyVec vec_sub(const PolyVec& a, const PolyVec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    PolyVec r;
    r.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
    return r;
}

inline PolyVec vec_term_mul(const PolyVec& a, const Monomial& m, Coeff c) {
    PolyVec r;
    r.reserve(a.size());
    for (const auto& f : a) r.push_back(f.term_mul(m, c));
    return r;
}

inline PolyVec vec_poly_mul(const PolyVec& a, const Polynomial& f) {
    PolyVec r;
    r.reserve(a.size());
    for (const auto& g : a) r.push_back(g * f);
    return r;
}

// Dense rows x cols grid of polynomials.
class PolyMatrix {
   public:
    PolyMatrix(Ring ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)),
          rows_(rows),
          cols_(cols),
          cells_(rows * cols, Polynomial::zero(ring_)) {}

    static PolyMatrix identity(const Ring& r, std::size_t n) {
        PolyMatrix m(r, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(r, 1);
        return m;
    }
    static PolyMatrix from_columns(const Ring& r, std::size_t rows,
                                   const std::vector<PolyVec>& cols) {
        PolyMatrix m(r, rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            if (cols[j].size() != rows) throw ShapeError("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Polynomial& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
    const Polynomial& at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

    PolyVec column(std::size_t j) const {
        PolyVec c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
        return c;
    }
    std::vector<PolyVec> columns() const {
        std::vector<PolyVec> cs;
        cs.reserve(cols_);
        for (std::size_t j = 0; j < cols_; ++j) cs.push_back(column(j));
        return cs;
    }

    PolyMatrix transpose() const {
        PolyMatrix t(ring_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    PolyMatrix operator*(const PolyMatrix& m) const {
        require_same_ring(ring_, m.ring_);
        if (cols_ != m.rows_) throw ShapeError("matrix product shape mismatch");
        PolyMatrix r(ring_, rows_, m.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) {
                Polynomial s = Polynomial::zero(ring_);
                for (std::size_t k = 0; k < cols_; ++k) s = s + at(i, k) * m.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }

    PolyVec operator*(const PolyVec& v) const {
        if (cols_ != v.size()) throw ShapeError("matrix-vector shape mismatch");
        PolyVec r = zero_vec(ring_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) r[i] = r[i] + at(i, k) * v[k];
        return r;
    }

    bool operator==(const PolyMatrix& m) const {
        return rows_ == m.rows_ && cols_ == m.cols_ && cells_ == m.cells_;
    }

    bool is_zero() const {
        for (const auto& f : cells_)
            if (!f.is_zero()) return false;
        return true;
    }

   private:
    Ring ring_;
    std::size_t rows_, cols_;
    std::vector<Polynomial> cells_;
};

// Entrywise A^[p^e]; the bracket power of Prop-2.1-style matrix notation.
inline PolyMatrix bracket_power(const PolyMatrix& a, std::uint32_t e) {
    PolyMatrix r(a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            r.at(i, j) = frobenius_power(a.at(i, j), e);
    return r;
}

inline PolyVec bracket_power(const PolyVec& v, std::uint32_t e) {
    PolyVec r;
    r.reserve(v.size());
    for (const auto& f : v) r.push_back(frobenius_power(f, e));
    return r;
}

}  // namespace frobkit

#endif
