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

#ifndef FROBKIT_LINALG_HPP
#define FROBKIT_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "frobkit/fp.hpp"

namespace frobkit {

// Dense matrix over F_p with deterministic row reduction. Small by design:
// every use in this library is a desk-scale kernel or rank computation.
class FpMatrix {
   public:
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t p() const { return p_; }

    Coeff& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Coeff at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void append_row(const std::vector<Coeff>& row) {
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t sel = rows_;
            for (std::size_t i = r; i < rows_; ++i)
                if (at(i, c) != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows_) continue;
            swap_rows(sel, r);
            Coeff inv = fp::inv(at(r, c), p_);
            scale_row(r, inv);
            for (std::size_t i = 0; i < rows_; ++i) {
                if (i == r || at(i, c) == 0) continue;
                add_scaled_row(i, r, fp::neg(at(i, c), p_));
            }
            pivots.push_back(c);
            ++r;
        }
        return pivots;
    }

    std::size_t rank() const {
        FpMatrix m = *this;
        return m.rref().size();
    }

    // Basis of { x : M x = 0 }, canonical (free variable convention on RREF).
    std::vector<std::vector<Coeff>> kernel_basis() const {
        FpMatrix m = *this;
        std::vector<std::size_t> pivots = m.rref();
        std::vector<bool> is_pivot(cols_, false);
        for (std::size_t c : pivots) is_pivot[c] = true;
        std::vector<std::vector<Coeff>> basis;
        for (std::size_t fc = 0; fc < cols_; ++fc) {
            if (is_pivot[fc]) continue;
            std::vector<Coeff> v(cols_, 0);
            v[fc] = 1;
            for (std::size_t k = 0; k < pivots.size(); ++k)
                v[pivots[k]] = fp::neg(m.at(k, fc), p_);
            basis.push_back(std::move(v));
        }
        return basis;
    }

    // True if b lies in the column space.
    bool solvable(const std::vector<Coeff>& b) const {
        FpMatrix aug(rows_, cols_ + 1, p_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i];
        }
        FpMatrix base = *this;
        return base.rref().size() == aug.rref().size();
    }

   private:
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void scale_row(std::size_t i, Coeff s) {
        for (std::size_t c = 0; c < cols_; ++c) at(i, c) = fp::mul(at(i, c), s, p_);
    }
    void add_scaled_row(std::size_t dst, std::size_t src, Coeff s) {
        for (std::size_t c = 0; c < cols_; ++c)
            at(dst, c) = fp::add(at(dst, c), fp::mul(at(src, c), s, p_), p_);
    }

    std::size_t rows_, cols_;
    std::uint32_t p_;
    std::vector<Coeff> data_;
};

// Incremental span of F_p row vectors; used by window-level closures where
// subspaces grow one vector at a time.
class FpSpan {
   public:
    FpSpan(std::size_t dim, std::uint32_t p) : dim_(dim), p_(p) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ambient() const { return dim_; }
    const std::vector<std::vector<Coeff>>& rows() const { return rows_; }

    bool contains(const std::vector<Coeff>& v) const {
        std::vector<Coeff> r = reduce(v);
        for (Coeff c : r)
            if (c != 0) return false;
        return true;
    }

    // Returns true if the span grew.
    bool insert(const std::vector<Coeff>& v) {
        std::vector<Coeff> r = reduce(v);
        std::size_t lead = dim_;
        for (std::size_t i = 0; i < dim_; ++i)
            if (r[i] != 0) {
                lead = i;
                break;
            }
        if (lead == dim_) return false;
        Coeff inv = fp::inv(r[lead], p_);
        for (auto& c : r) c = fp::mul(c, inv, p_);
        for (auto& row : rows_) {
            Coeff f = row[lead];
            if (f == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                row[i] = fp::sub(row[i], fp::mul(f, r[i], p_), p_);
        }
        rows_.push_back(std::move(r));
        leads_.push_back(lead);
        // keep rows sorted by lead for a canonical signature
        for (std::size_t i = rows_.size(); i-- > 1;) {
            if (leads_[i - 1] > leads_[i]) {
                std::swap(leads_[i - 1], leads_[i]);
                std::swap(rows_[i - 1], rows_[i]);
            }
        }
        return true;
    }

    // Canonical RREF signature; equal subspaces produce equal signatures.
    std::vector<Coeff> signature() const {
        std::vector<Coeff> sig;
        sig.push_back(static_cast<Coeff>(rows_.size()));
        for (const auto& row : rows_) sig.insert(sig.end(), row.begin(), row.end());
        return sig;
    }

   private:
    std::vector<Coeff> reduce(std::vector<Coeff> v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            Coeff f = v[leads_[k]];
            if (f == 0) continue;
            for (std::size_t i = 0; i < dim_; ++i)
                v[i] = fp::sub(v[i], fp::mul(f, rows_[k][i], p_), p_);
        }
        return v;
    }

    std::size_t dim_;
    std::uint32_t p_;
    std::vector<std::vector<Coeff>> rows_;   // reduced, unit leads, sorted by lead
    std::vector<std::size_t> leads_;
};

}  // namespace frobkit

#endif
