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

#ifndef FROBKIT_SPLITCOMPAT_HPP
#define FROBKIT_SPLITCOMPAT_HPP

#include <algorithm>
#include <vector>

#include "frobkit/epsilon.hpp"
#include "frobkit/thetamod.hpp"

namespace frobkit {

// ---------------------------------------------------------------------------
// NearSplitting: over the perfect prime field every near-splitting of R~^n is
// represented by a single matrix B acting through the trace map, and its dual
// Frobenius on E^n is Theta = B^t T.
// ---------------------------------------------------------------------------

struct NearSplitting {
    PolyMatrix b;

    explicit NearSplitting(PolyMatrix matrix) : b(std::move(matrix)) {
        if (b.rows() != b.cols()) throw ShapeError("a near-splitting matrix must be square");
    }
    std::size_t n() const { return b.rows(); }
    const Ring& ring() const { return b.ring(); }
};

// phi_B(v): componentwise trace of B*v. Satisfies the p-semilinear splitting
// law phi(f^p v) = f phi(v).
inline PolyVec apply_splitting(const NearSplitting& s, const PolyVec& v) {
    if (v.size() != s.n()) throw ShapeError("vector length does not match the splitting");
    PolyVec bv = s.b * v;
    PolyVec out;
    out.reserve(bv.size());
    for (const auto& f : bv) out.push_back(trace(f));
    return out;
}

// Generator matrix of V (columns generate); the zero submodule yields a
// matrix with no columns.
inline PolyMatrix generator_matrix(const Submodule& v) {
    return PolyMatrix::from_columns(v.ring, v.ambient_rank, v.generators);
}

// Compatibility of V with the splitting: Image(B A) subseteq Image(A^[p]),
// decided by Groebner membership columnwise.
inline bool is_compatible(const NearSplitting& s, const Submodule& v) {
    require_same_ring(s.ring(), v.ring);
    if (v.ambient_rank != s.n()) throw ShapeError("submodule rank does not match the splitting");
    if (v.generators.empty()) return true;
    PolyMatrix a = generator_matrix(v);
    PolyMatrix ba = s.b * a;
    auto rb = basis_of(submodule_from_columns(bracket_power(a, 1)));
    for (std::size_t j = 0; j < ba.cols(); ++j)
        if (!is_zero_vec(normal_form(ba.column(j), *rb))) return false;
    return true;
}

// The independent second route through the Frobenius-root adjunction:
// Image(B A) subseteq V^[p]  iff  root_1(Image(B A)) subseteq V.
inline bool is_compatible_direct(const NearSplitting& s, const Submodule& v) {
    require_same_ring(s.ring(), v.ring);
    if (v.ambient_rank != s.n()) throw ShapeError("submodule rank does not match the splitting");
    if (v.generators.empty()) return true;
    Submodule image = matrix_image(s.b, v);
    return is_subset(frobenius_root(image, 1), v);
}

// Theta = B^t T injective on all of E^n (read componentwise on the full
// product), decided through the no-nilpotents test on the presentation
// (A = 0, B). A nonvanishing determinant is necessary but not sufficient:
// B = [x^2] has det != 0 yet kills x^-1.
inline bool splitting_injectivity(const NearSplitting& s) {
    PolyMatrix zero_a(s.ring(), s.n(), 1);
    return has_no_nilpotents(ThetaPresentation::validate(zero_a, s.b));
}

// Smallest B-compatible submodule containing V: the ascending fixpoint of
// C_{k+1} = C_k + root_1(B C_k).
inline Submodule compatible_closure(const NearSplitting& s, const Submodule& v,
                                    std::uint32_t iteration_cap = 50) {
    require_same_ring(s.ring(), v.ring);
    if (v.ambient_rank != s.n()) throw ShapeError("submodule rank does not match the splitting");
    Submodule cur = groebner_basis(v);
    for (std::uint32_t k = 0; k < iteration_cap; ++k) {
        Submodule grown = groebner_basis(
            submodule_sum(cur, frobenius_root(matrix_image(s.b, cur), 1)));
        if (submodule_equal(cur, grown)) return cur;
        cur = std::move(grown);
    }
    throw ResourceCapError("compatible closure did not stabilize within " +
                           std::to_string(iteration_cap) + " iterations");
}

// ---------------------------------------------------------------------------
// Enumeration of compatible submodules, bounded by an explicit constraint and
// labeled complete-within-constraint only.
// ---------------------------------------------------------------------------

struct MonomialEnumeration {
    std::vector<Submodule> ideals;  // includes the zero ideal and, when compatible, (1)
    std::uint32_t k_max = 0;
};

namespace detail {

// All antichains (under divisibility) of the monomials of total degree <= k.
inline void antichains(const std::vector<Monomial>& monos, std::size_t from,
                       std::vector<Monomial>& chosen, std::vector<std::vector<Monomial>>& out) {
    out.push_back(chosen);
    for (std::size_t i = from; i < monos.size(); ++i) {
        bool ok = true;
        for (const auto& c : chosen)
            if (c.divides(monos[i]) || monos[i].divides(c)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        chosen.push_back(monos[i]);
        antichains(monos, i + 1, chosen, out);
        chosen.pop_back();
    }
}

}  // namespace detail

// Brute-force monomial route (n = 1): every monomial ideal whose minimal
// generators have total degree <= k_max, filtered by is_compatible. The empty
// antichain stands for the zero ideal.
inline MonomialEnumeration enumerate_compatible_monomial(const NearSplitting& s,
                                                         std::uint32_t k_max) {
    if (s.n() != 1)
        throw UnsupportedError("the monomial enumeration route expects n = 1");
    const Ring& R = s.ring();
    std::vector<Monomial> monos = detail::monomials_up_to(R, k_max);
    std::vector<std::vector<Monomial>> sets;
    std::vector<Monomial> chosen;
    detail::antichains(monos, 0, chosen, sets);

    MonomialEnumeration out;
    out.k_max = k_max;
    for (const auto& set : sets) {
        std::vector<Polynomial> gens;
        gens.reserve(set.size());
        for (const auto& m : set) gens.push_back(Polynomial::monomial(R, m));
        Submodule ideal = make_ideal(R, gens);
        if (is_compatible(s, ideal)) out.ideals.push_back(groebner_basis(ideal));
    }
    std::sort(out.ideals.begin(), out.ideals.end(), [](const Submodule& a, const Submodule& b) {
        return detail::cache_key(a, a.ring->default_order) <
               detail::cache_key(b, b.ring->default_order);
    });
    return out;
}

struct WindowEnumerationEntry {
    StableWindowSubmodule stable;  // windowed Theta-stable submodule
    Submodule annihilator;         // degree-bounded annihilator presentation
};

struct WindowEnumeration {
    std::vector<WindowEnumerationEntry> proper;  // window-contained submodules
    bool full_module_flagged = true;             // E^n itself, reported separately
    TruncationWindow window;
};

namespace detail {

// Degree-bounded annihilator: all columns c in R^n with c . u = 0 for every
// basis element u of the subspace, total degree <= bound. For window
// subspaces the generators have per-variable exponents <= s, so bound = d*s
// suffices at desk scale.
inline Submodule window_annihilator(const Ring& ring, std::size_t n,
                                    const std::vector<InversePolyVector>& basis,
                                    std::uint32_t bound) {
    std::vector<Monomial> monos = monomials_up_to(ring, bound);
    const std::size_t cols = n * monos.size();
    std::map<ExpVec, std::size_t> row_index;
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> col_entries(cols);
    for (std::size_t pos = 0; pos < n; ++pos) {
        for (std::size_t mi = 0; mi < monos.size(); ++mi) {
            std::size_t col = pos * monos.size() + mi;
            Polynomial f = Polynomial::monomial(ring, monos[mi]);
            for (std::size_t bi = 0; bi < basis.size(); ++bi) {
                InversePolyVector single(ring, 1);
                for (const auto& [a, c] : basis[bi].component(pos)) single.add_term(0, a, c);
                InversePolyVector img = act_poly(f, single);
                for (const auto& [a, c] : img.component(0)) {
                    ExpVec key = a;
                    key.push_back(static_cast<std::uint32_t>(bi));  // separate rows per basis elt
                    auto it = row_index.find(key);
                    if (it == row_index.end())
                        it = row_index.emplace(std::move(key), row_index.size()).first;
                    col_entries[col].emplace_back(it->second, c);
                }
            }
        }
    }
    FpMatrix m(row_index.size(), cols, ring->p);
    for (std::size_t j = 0; j < cols; ++j)
        for (const auto& [r, c] : col_entries[j]) m.at(r, j) = c;
    std::vector<PolyVec> gens;
    for (const auto& v : m.kernel_basis()) {
        PolyVec g = zero_vec(ring, n);
        for (std::size_t j = 0; j < cols; ++j)
            if (v[j] != 0) g[j / monos.size()].add_term(monos[j % monos.size()], v[j]);
        gens.push_back(std::move(g));
    }
    return groebner_basis(make_submodule(ring, n, std::move(gens)));
}

}  // namespace detail

// Dual oracle route: windowed Theta-stable submodules of E^n (A = 0), each
// with its annihilator presentation.
inline WindowEnumeration enumerate_compatible_window(const NearSplitting& s,
                                                     TruncationWindow window,
                                                     std::size_t dimension_cap = kDefaultWindowCap) {
    const Ring& R = s.ring();
    PolyMatrix zero_a(R, s.n(), 1);
    WindowEnumeration out;
    out.window = window;
    auto stables = oracle_stable_submodules(s.b, zero_a, window, dimension_cap);
    std::uint32_t bound = static_cast<std::uint32_t>(R->d) * window.s;
    for (auto& st : stables) {
        Submodule ann = detail::window_annihilator(R, s.n(), st.basis, bound);
        out.proper.push_back(WindowEnumerationEntry{std::move(st), std::move(ann)});
    }
    return out;
}

}  // namespace frobkit

#endif
