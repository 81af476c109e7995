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

#ifndef FROBKIT_EPSILON_HPP
#define FROBKIT_EPSILON_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobkit/linalg.hpp"
#include "frobkit/polymatrix.hpp"

namespace frobkit {

// ---------------------------------------------------------------------------
// E^n as finite-support inverse polynomials: each component is a map from
// exponent vectors alpha (every coordinate >= 1, standing for x^-alpha) to
// nonzero coefficients. All arithmetic here is exact; truncation windows only
// ever bound which elements get enumerated, never how they are computed.
// ---------------------------------------------------------------------------

using ExpVec = std::vector<std::uint32_t>;

class InversePolyVector {
   public:
    using Component = std::map<ExpVec, Coeff>;  // plain lexicographic key order

    InversePolyVector(Ring ring, std::size_t n)
        : ring_(std::move(ring)), comps_(n) {}

    static InversePolyVector zero(const Ring& r, std::size_t n) {
        return InversePolyVector(r, n);
    }
    static InversePolyVector basis_term(const Ring& r, std::size_t n, std::size_t i,
                                        ExpVec alpha, Coeff c = 1) {
        InversePolyVector w(r, n);
        w.add_term(i, std::move(alpha), c);
        return w;
    }

    const Ring& ring() const { return ring_; }
    std::size_t rank() const { return comps_.size(); }
    const Component& component(std::size_t i) const { return comps_[i]; }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.empty()) return false;
        return true;
    }

    void add_term(std::size_t i, ExpVec alpha, Coeff c) {
        if (alpha.size() != ring_->d) throw ShapeError("exponent arity mismatch");
        for (auto a : alpha)
            if (a < 1) throw ShapeError("inverse-polynomial exponents must be >= 1");
        c = c % ring_->p;
        if (c == 0) return;
        auto [it, inserted] = comps_[i].emplace(std::move(alpha), c);
        if (!inserted) {
            it->second = fp::add(it->second, c, ring_->p);
            if (it->second == 0) comps_[i].erase(it);
        }
    }

    InversePolyVector operator+(const InversePolyVector& o) const {
        require_same_ring(ring_, o.ring_);
        if (rank() != o.rank()) throw ShapeError("rank mismatch");
        InversePolyVector r = *this;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            for (const auto& [a, c] : o.comps_[i]) r.add_term(i, a, c);
        return r;
    }

    InversePolyVector scalar_mul(Coeff c) const {
        InversePolyVector r(ring_, rank());
        c = c % ring_->p;
        if (c == 0) return r;
        for (std::size_t i = 0; i < comps_.size(); ++i)
            for (const auto& [a, cf] : comps_[i])
                r.comps_[i].emplace(a, fp::mul(cf, c, ring_->p));
        return r;
    }

    bool operator==(const InversePolyVector& o) const {
        return rank() == o.rank() && comps_ == o.comps_;
    }

   private:
    Ring ring_;
    std::vector<Component> comps_;
};

// The inverse-polynomial action: x^b . x^-alpha = x^(b-alpha) when every
// coordinate of b-alpha stays <= -1, and 0 otherwise; extended bilinearly
// and componentwise over E^n.
inline InversePolyVector act_poly(const Polynomial& f, const InversePolyVector& w) {
    require_same_ring(f.ring(), w.ring());
    const Ring& R = w.ring();
    InversePolyVector out(R, w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) {
        for (const auto& [alpha, lambda] : w.component(i)) {
            for (const auto& [b, c] : f.terms()) {
                ExpVec res(R->d);
                bool alive = true;
                for (std::size_t k = 0; k < R->d; ++k) {
                    if (alpha[k] < b[k] + 1) {  // b_k - alpha_k > -1: the term dies
                        alive = false;
                        break;
                    }
                    res[k] = alpha[k] - b[k];
                }
                if (alive) out.add_term(i, std::move(res), fp::mul(lambda, c, R->p));
            }
        }
    }
    return out;
}

// The natural Frobenius T^e: lambda x^-alpha -> lambda^(p^e) x^(-p^e alpha),
// componentwise. Prime-field coefficients are fixed by T.
inline InversePolyVector natural_frobenius(const InversePolyVector& w, std::uint32_t e) {
    if (e == 0) return w;
    const Ring& R = w.ring();
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= R->p;
        if (q > kMaxExponent) throw ArithmeticError("p^e overflow in natural Frobenius");
    }
    InversePolyVector out(R, w.rank());
    for (std::size_t i = 0; i < w.rank(); ++i) {
        for (const auto& [alpha, lambda] : w.component(i)) {
            ExpVec res(R->d);
            for (std::size_t k = 0; k < R->d; ++k) {
                std::uint64_t s = static_cast<std::uint64_t>(alpha[k]) * q;
                if (s > kMaxExponent) throw ArithmeticError("exponent overflow in natural Frobenius");
                res[k] = static_cast<std::uint32_t>(s);
            }
            out.add_term(i, std::move(res), lambda);
        }
    }
    return out;
}

// Theta^e(w) for Theta = B^t T, computed exactly in E^n (support may grow).
inline InversePolyVector theta_apply(const PolyMatrix& b, const InversePolyVector& w,
                                     std::uint32_t e = 1) {
    if (b.rows() != b.cols() || b.rows() != w.rank())
        throw ShapeError("theta expects a square matrix acting on E^n");
    InversePolyVector cur = w;
    for (std::uint32_t step = 0; step < e; ++step) {
        InversePolyVector t = natural_frobenius(cur, 1);
        InversePolyVector next(w.ring(), w.rank());
        for (std::size_t i = 0; i < w.rank(); ++i) {
            // (B^t t)_i = sum_j B_ji t_j
            for (std::size_t j = 0; j < w.rank(); ++j) {
                if (b.at(j, i).is_zero()) continue;
                InversePolyVector single(w.ring(), 1);
                for (const auto& [a, c] : t.component(j)) single.add_term(0, a, c);
                InversePolyVector acted = act_poly(b.at(j, i), single);
                for (const auto& [a, c] : acted.component(0)) next.add_term(i, a, c);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Truncation window: the support box [1, s]^d in every component. Its
// F_p-dimension is n * s^d.
// ---------------------------------------------------------------------------

struct TruncationWindow {
    std::uint32_t s = 4;
};

class WindowBasis {
   public:
    WindowBasis(Ring ring, std::size_t n, TruncationWindow win)
        : ring_(std::move(ring)), n_(n), s_(win.s) {
        if (s_ < 1) throw ShapeError("window size must be >= 1");
        ExpVec cur(ring_->d, 1);
        while (true) {
            exps_.push_back(cur);
            std::size_t k = 0;
            while (k < ring_->d && ++cur[k] > s_) cur[k++] = 1;
            if (k == ring_->d) break;
        }
        std::sort(exps_.begin(), exps_.end());
    }

    std::size_t dimension() const { return n_ * exps_.size(); }
    std::size_t rank() const { return n_; }
    std::uint32_t s() const { return s_; }
    const Ring& ring() const { return ring_; }
    const std::vector<ExpVec>& exponents() const { return exps_; }

    std::size_t index_of(std::size_t comp, const ExpVec& a) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), a);
        return comp * exps_.size() + static_cast<std::size_t>(it - exps_.begin());
    }

    InversePolyVector element(std::size_t index) const {
        std::size_t comp = index / exps_.size();
        return InversePolyVector::basis_term(ring_, n_, comp, exps_[index % exps_.size()]);
    }

    // Coordinates of w over the window basis; nullopt if w's support leaves
    // the window.
    std::optional<std::vector<Coeff>> coordinates(const InversePolyVector& w) const {
        std::vector<Coeff> v(dimension(), 0);
        for (std::size_t i = 0; i < n_; ++i) {
            for (const auto& [a, c] : w.component(i)) {
                for (auto e : a)
                    if (e > s_) return std::nullopt;
                v[index_of(i, a)] = c;
            }
        }
        return v;
    }

    InversePolyVector from_coordinates(const std::vector<Coeff>& v) const {
        InversePolyVector w(ring_, n_);
        for (std::size_t idx = 0; idx < v.size(); ++idx)
            if (v[idx] != 0)
                w.add_term(idx / exps_.size(), exps_[idx % exps_.size()], v[idx]);
        return w;
    }

   private:
    Ring ring_;
    std::size_t n_;
    std::uint32_t s_;
    std::vector<ExpVec> exps_;
};

// ---------------------------------------------------------------------------
// ann_matrix: an F_p-basis of { w in the window : A^t w = 0 }, i.e. the
// windowed part of M = ker A^t subseteq E^alpha.
// ---------------------------------------------------------------------------

inline std::vector<InversePolyVector> ann_matrix(const PolyMatrix& a,
                                                 const TruncationWindow& win) {
    const Ring& R = a.ring();
    const std::size_t alpha = a.rows();
    const std::size_t beta = a.cols();
    WindowBasis wb(R, alpha, win);

    // rows indexed by output positions (k, gamma) discovered on the fly
    std::map<std::pair<std::size_t, ExpVec>, std::size_t> row_index;
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> cols;
    for (std::size_t idx = 0; idx < wb.dimension(); ++idx) {
        InversePolyVector e = wb.element(idx);
        std::vector<std::pair<std::size_t, Coeff>> col;
        for (std::size_t k = 0; k < beta; ++k) {
            // (A^t w)_k = sum_i A_ik w_i
            InversePolyVector acc(R, 1);
            for (std::size_t i = 0; i < alpha; ++i) {
                if (a.at(i, k).is_zero()) continue;
                InversePolyVector single(R, 1);
                for (const auto& [av, c] : e.component(i)) single.add_term(0, av, c);
                InversePolyVector acted = act_poly(a.at(i, k), single);
                for (const auto& [av, c] : acted.component(0)) acc.add_term(0, av, c);
            }
            for (const auto& [av, c] : acc.component(0)) {
                auto key = std::make_pair(k, av);
                auto it = row_index.find(key);
                if (it == row_index.end()) it = row_index.emplace(key, row_index.size()).first;
                col.emplace_back(it->second, c);
            }
        }
        cols.push_back(std::move(col));
    }
    FpMatrix m(row_index.size(), wb.dimension(), R->p);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j]) m.at(r, j) = c;

    std::vector<InversePolyVector> basis;
    for (const auto& v : m.kernel_basis()) basis.push_back(wb.from_coordinates(v));
    return basis;
}

// ---------------------------------------------------------------------------
// oracle_nilpotency: smallest e <= e_max with Theta^e identically zero on the
// windowed annihilator, or nullopt. Images are evaluated in full E (never
// truncated); over the prime field Theta is F_p-linear, so vanishing on a
// basis decides vanishing on the span.
// ---------------------------------------------------------------------------

inline std::optional<std::uint32_t> oracle_nilpotency(const PolyMatrix& a,
                                                      const PolyMatrix& b,
                                                      const TruncationWindow& win,
                                                      std::uint32_t e_max) {
    std::vector<InversePolyVector> images = ann_matrix(a, win);
    if (images.empty()) return 0;  // the windowed module is zero
    for (std::uint32_t e = 1; e <= e_max; ++e) {
        bool all_zero = true;
        for (auto& w : images) {
            w = theta_apply(b, w, 1);
            if (!w.is_zero()) all_zero = false;
        }
        if (all_zero) return e;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Window-level linear operators: used by the stable-submodule oracle and by
// the duality cross-checks. These require the windowed module to be closed
// under Theta; closure failures are reported, not clipped.
// ---------------------------------------------------------------------------

struct WindowedModule {
    WindowBasis window;
    std::vector<std::vector<Coeff>> basis_coords;  // windowed annihilator basis
    FpMatrix theta;                                // Theta in annihilator coordinates
    std::vector<FpMatrix> var_actions;             // x_i in annihilator coordinates

    WindowedModule(WindowBasis wb, std::size_t dim, std::uint32_t p)
        : window(std::move(wb)), theta(dim, dim, p) {}
    std::size_t dim() const { return basis_coords.size(); }
};

// Builds the windowed annihilator of A^t with its Theta and x_i actions in
// annihilator coordinates. Fails (nullopt) if a Theta-image leaves the
// windowed span, which cannot happen when the window contains all of M.
inline std::optional<WindowedModule> windowed_module(const PolyMatrix& a,
                                                     const PolyMatrix& b,
                                                     const TruncationWindow& win) {
    const Ring& R = a.ring();
    std::vector<InversePolyVector> basis = ann_matrix(a, win);
    WindowBasis wb(R, a.rows(), win);
    const std::size_t dim = basis.size();

    std::vector<std::vector<Coeff>> coords;
    for (const auto& v : basis) coords.push_back(*wb.coordinates(v));
    // express a window-coordinate vector in the annihilator basis
    auto in_basis = [&](const std::vector<Coeff>& target) -> std::optional<std::vector<Coeff>> {
        FpMatrix sys(wb.dimension(), dim, R->p);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < wb.dimension(); ++i) sys.at(i, j) = coords[j][i];
        // solve sys * x = target by RREF on the augmented matrix
        FpMatrix aug(wb.dimension(), dim + 1, R->p);
        for (std::size_t i = 0; i < wb.dimension(); ++i) {
            for (std::size_t j = 0; j < dim; ++j) aug.at(i, j) = sys.at(i, j);
            aug.at(i, dim) = target[i];
        }
        auto pivots = aug.rref();
        std::vector<Coeff> x(dim, 0);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == dim) return std::nullopt;  // inconsistent
            x[pivots[r]] = aug.at(r, dim);
        }
        return x;
    };

    WindowedModule wm(wb, dim, R->p);
    wm.basis_coords = coords;
    wm.theta = FpMatrix(dim, dim, R->p);
    for (std::size_t j = 0; j < dim; ++j) {
        InversePolyVector img = theta_apply(b, basis[j], 1);
        auto wcoords = wb.coordinates(img);
        if (!wcoords) return std::nullopt;  // image leaves the window
        auto bcoords = in_basis(*wcoords);
        if (!bcoords) return std::nullopt;  // image leaves the windowed module
        for (std::size_t i = 0; i < dim; ++i) wm.theta.at(i, j) = (*bcoords)[i];
    }
    for (std::size_t v = 0; v < R->d; ++v) {
        FpMatrix act(dim, dim, R->p);
        Polynomial xv = Polynomial::variable(R, v);
        for (std::size_t j = 0; j < dim; ++j) {
            InversePolyVector img = act_poly(xv, basis[j]);
            auto wcoords = wb.coordinates(img);  // x_i never enlarges support
            auto bcoords = in_basis(*wcoords);
            if (!bcoords) return std::nullopt;  // annihilator not R-closed in window? impossible
            for (std::size_t i = 0; i < dim; ++i) act.at(i, j) = (*bcoords)[i];
        }
        wm.var_actions.push_back(std::move(act));
    }
    return wm;
}

namespace windowed {

inline std::vector<Coeff> mat_apply(const FpMatrix& m, const std::vector<Coeff>& v) {
    std::vector<Coeff> out(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i] = fp::add(out[i], fp::mul(m.at(i, j), v[j], m.p()), m.p());
    return out;
}

// Nil dimension: dim of the union of kernels of Theta^e (stabilizes within
// dim steps on a finite space).
inline std::size_t nil_dimension(const FpMatrix& theta, std::uint32_t p) {
    const std::size_t n = theta.rows();
    FpMatrix power = theta;
    std::size_t last = 0;
    for (std::size_t e = 1; e <= n + 1; ++e) {
        std::size_t k = power.kernel_basis().size();
        if (k == last && e > 1) break;
        last = k;
        // power = theta * power
        FpMatrix next(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Coeff s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    s = fp::add(s, fp::mul(theta.at(i, t), power.at(t, j), p), p);
                next.at(i, j) = s;
            }
        power = std::move(next);
    }
    return last;
}

// Span closure under a set of linear operators.
inline FpSpan closure(FpSpan span, const std::vector<FpMatrix>& ops, std::uint32_t p) {
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<Coeff>> rows = span.rows();
        for (const auto& r : rows)
            for (const auto& op : ops)
                if (span.insert(mat_apply(op, r))) grew = true;
    }
    return span;
}

// Star dimension: dim of the stabilized R-span of Theta^e-images.
inline std::size_t star_dimension(const FpMatrix& theta, const std::vector<FpMatrix>& vars,
                                  std::uint32_t p) {
    const std::size_t n = theta.rows();
    // start with the whole module (identity images)
    FpSpan cur(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Coeff> e(n, 0);
        e[i] = 1;
        cur.insert(e);
    }
    while (true) {
        // next = R-closure of Theta(cur)
        FpSpan next(n, p);
        for (const auto& r : cur.rows()) next.insert(mat_apply(theta, r));
        next = closure(std::move(next), vars, p);
        if (next.dim() == cur.dim()) return cur.dim();
        cur = std::move(next);
    }
}

// Operators restricted to an invariant subspace (columns = subspace basis in
// ambient coordinates). Returns the operator in subspace coordinates.
inline FpMatrix restrict_to(const FpMatrix& op, const std::vector<std::vector<Coeff>>& basis,
                            std::uint32_t p) {
    const std::size_t dim = basis.size();
    const std::size_t amb = op.rows();
    FpMatrix aug(amb, dim + 1, p);
    FpMatrix out(dim, dim, p);
    for (std::size_t j = 0; j < dim; ++j) {
        std::vector<Coeff> img = mat_apply(op, basis[j]);
        for (std::size_t i = 0; i < amb; ++i) {
            for (std::size_t k = 0; k < dim; ++k) aug.at(i, k) = basis[k][i];
            aug.at(i, dim) = img[i];
        }
        FpMatrix solve = aug;
        auto pivots = solve.rref();
        std::vector<Coeff> x(dim, 0);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (pivots[r] == dim) throw ShapeError("subspace is not invariant");
            x[pivots[r]] = solve.at(r, dim);
        }
        for (std::size_t i = 0; i < dim; ++i) out.at(i, j) = x[i];
    }
    return out;
}

// Operator induced on the quotient by an invariant subspace. Quotient
// coordinates are the non-pivot ambient coordinates of the subspace's RREF.
inline std::pair<FpMatrix, std::vector<FpMatrix>> quotient_operators(
    const FpMatrix& theta, const std::vector<FpMatrix>& vars,
    const std::vector<std::vector<Coeff>>& sub_basis, std::uint32_t p, std::size_t amb) {
    FpSpan sub(amb, p);
    for (const auto& v : sub_basis) sub.insert(v);
    // pivot coordinates of the subspace
    std::vector<bool> is_pivot(amb, false);
    for (const auto& row : sub.rows()) {
        for (std::size_t i = 0; i < amb; ++i)
            if (row[i] != 0) {
                is_pivot[i] = true;
                break;
            }
    }
    std::vector<std::size_t> free_coords;
    for (std::size_t i = 0; i < amb; ++i)
        if (!is_pivot[i]) free_coords.push_back(i);
    const std::size_t qdim = free_coords.size();

    auto project = [&](std::vector<Coeff> v) {
        // reduce modulo the subspace, then read off free coordinates
        for (const auto& row : sub.rows()) {
            std::size_t lead = amb;
            for (std::size_t i = 0; i < amb; ++i)
                if (row[i] != 0) {
                    lead = i;
                    break;
                }
            if (lead == amb) continue;
            Coeff f = v[lead];
            if (f == 0) continue;
            for (std::size_t i = 0; i < amb; ++i)
                v[i] = fp::sub(v[i], fp::mul(f, row[i], p), p);
        }
        std::vector<Coeff> q(qdim, 0);
        for (std::size_t k = 0; k < qdim; ++k) q[k] = v[free_coords[k]];
        return q;
    };

    auto induce = [&](const FpMatrix& op) {
        FpMatrix out(qdim, qdim, p);
        for (std::size_t j = 0; j < qdim; ++j) {
            std::vector<Coeff> e(amb, 0);
            e[free_coords[j]] = 1;
            std::vector<Coeff> img = project(mat_apply(op, e));
            for (std::size_t i = 0; i < qdim; ++i) out.at(i, j) = img[i];
        }
        return out;
    };

    FpMatrix qtheta = induce(theta);
    std::vector<FpMatrix> qvars;
    for (const auto& v : vars) qvars.push_back(induce(v));
    return {std::move(qtheta), std::move(qvars)};
}

// Basis (in ambient coordinates) of the Nil subspace.
inline std::vector<std::vector<Coeff>> nil_basis(const FpMatrix& theta, std::uint32_t p) {
    const std::size_t n = theta.rows();
    FpMatrix power = theta;
    std::vector<std::vector<Coeff>> best;
    for (std::size_t e = 1; e <= n + 1; ++e) {
        auto k = power.kernel_basis();
        if (k.size() == best.size() && e > 1) break;
        best = k;
        FpMatrix next(n, n, p);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Coeff s = 0;
                for (std::size_t t = 0; t < n; ++t)
                    s = fp::add(s, fp::mul(theta.at(i, t), power.at(t, j), p), p);
                next.at(i, j) = s;
            }
        power = std::move(next);
    }
    return best;
}

// Basis (ambient coordinates) of the star subspace M^* = stabilized R Theta^e M.
inline std::vector<std::vector<Coeff>> star_basis(const FpMatrix& theta,
                                                  const std::vector<FpMatrix>& vars,
                                                  std::uint32_t p) {
    const std::size_t n = theta.rows();
    FpSpan cur(n, p);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Coeff> e(n, 0);
        e[i] = 1;
        cur.insert(e);
    }
    while (true) {
        FpSpan next(n, p);
        for (const auto& r : cur.rows()) next.insert(mat_apply(theta, r));
        next = closure(std::move(next), vars, p);
        if (next.dim() == cur.dim()) return cur.rows();
        cur = std::move(next);
    }
}

}  // namespace windowed

// ---------------------------------------------------------------------------
// oracle_stable_submodules: every Theta-stable R-submodule of the windowed
// annihilator. Enumeration closes cyclic generators under the variable
// actions and sums the results to a lattice fixpoint; Theta-stability is
// decided with exact images (leaving the window disqualifies). The module
// M itself is always stable and is flagged separately by callers; the list
// here contains only window-contained submodules (including 0).
// ---------------------------------------------------------------------------

inline constexpr std::size_t kDefaultWindowCap = 12;

struct StableWindowSubmodule {
    std::vector<InversePolyVector> basis;  // canonical RREF basis
    std::size_t dimension = 0;
    std::vector<Coeff> signature;          // canonical subspace signature
};

inline std::vector<StableWindowSubmodule> oracle_stable_submodules(
    const PolyMatrix& b, const PolyMatrix& a, const TruncationWindow& win,
    std::size_t dimension_cap = kDefaultWindowCap) {
    const Ring& R = b.ring();
    WindowBasis wb(R, b.rows(), win);
    std::vector<InversePolyVector> ann = ann_matrix(a, win);
    if (ann.size() > dimension_cap)
        throw ResourceCapError("window dimension " + std::to_string(ann.size()) +
                               " exceeds the enumeration cap " + std::to_string(dimension_cap));

    std::vector<std::vector<Coeff>> ann_coords;
    for (const auto& v : ann) ann_coords.push_back(*wb.coordinates(v));
    const std::size_t k = ann.size();
    const std::uint32_t p = R->p;

    // R-closure of the span of a seed vector (window coordinates).
    auto r_closure = [&](const std::vector<Coeff>& seed) {
        FpSpan span(wb.dimension(), p);
        span.insert(seed);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Coeff>> snapshot = span.rows();
            for (const auto& row : snapshot) {
                InversePolyVector w = wb.from_coordinates(row);
                for (std::size_t v = 0; v < R->d; ++v) {
                    InversePolyVector img = act_poly(Polynomial::variable(R, v), w);
                    auto c = wb.coordinates(img);
                    if (span.insert(*c)) grew = true;
                }
            }
        }
        return span;
    };

    // all cyclic submodules, seeded by projective representatives
    std::map<std::vector<Coeff>, FpSpan> lattice;  // signature -> span
    {
        FpSpan zero(wb.dimension(), p);
        lattice.emplace(zero.signature(), zero);
    }
    std::vector<Coeff> lambda(k, 0);
    if (k > 0) {
        while (true) {
            std::size_t t = 0;
            while (t < k && ++lambda[t] == p) lambda[t++] = 0;
            if (t == k) break;
            // projective normalization: first nonzero coefficient is 1
            std::size_t first = 0;
            while (first < k && lambda[first] == 0) ++first;
            if (lambda[first] != 1) continue;
            std::vector<Coeff> seed(wb.dimension(), 0);
            for (std::size_t idx = 0; idx < k; ++idx) {
                if (lambda[idx] == 0) continue;
                for (std::size_t i = 0; i < wb.dimension(); ++i)
                    seed[i] = fp::add(seed[i], fp::mul(lambda[idx], ann_coords[idx][i], p), p);
            }
            FpSpan span = r_closure(seed);
            lattice.emplace(span.signature(), span);
        }
    }

    // close under pairwise sums
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<FpSpan> current;
        for (const auto& [sig, span] : lattice) current.push_back(span);
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                FpSpan join = current[i];
                for (const auto& r : current[j].rows()) join.insert(r);
                if (lattice.emplace(join.signature(), join).second) grew = true;
            }
    }

    // filter by exact Theta-stability
    std::vector<StableWindowSubmodule> out;
    for (const auto& [sig, span] : lattice) {
        bool stable = true;
        for (const auto& row : span.rows()) {
            InversePolyVector w = wb.from_coordinates(row);
            InversePolyVector img = theta_apply(b, w, 1);
            if (img.is_zero()) continue;
            auto c = wb.coordinates(img);
            if (!c || !span.contains(*c)) {
                stable = false;
                break;
            }
        }
        if (!stable) continue;
        StableWindowSubmodule s;
        s.dimension = span.dim();
        s.signature = sig;
        for (const auto& row : span.rows()) s.basis.push_back(wb.from_coordinates(row));
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const StableWindowSubmodule& a,
                                         const StableWindowSubmodule& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.signature < b.signature;
    });
    return out;
}

// Canonical printing of inverse-polynomial vectors, for JSON output.
inline std::string to_string(const InversePolyVector& w) {
    const Ring& R = w.ring();
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < w.rank(); ++i) {
        if (i) os << ", ";
        if (w.component(i).empty()) {
            os << "0";
            continue;
        }
        bool first = true;
        for (const auto& [a, c] : w.component(i)) {
            if (!first) os << " + ";
            first = false;
            if (c != 1) os << c << "*";
            bool lead = true;
            for (std::size_t k = 0; k < R->d; ++k) {
                if (!lead) os << "*";
                lead = false;
                os << R->var_names[k] << "^-" << a[k];
            }
        }
    }
    os << ")";
    return os.str();
}

}  // namespace frobkit

#endif
