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

#ifndef FROBKIT_FROBOPS_HPP
#define FROBKIT_FROBOPS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/groebner.hpp"
#include "frobkit/linalg.hpp"

namespace frobkit {

// ---------------------------------------------------------------------------
// Frobenius root: the smallest W' with W subseteq (W')^[p^e], left adjoint to
// the bracket power. Computed generator-wise: each generator column v splits
// as v = sum_a x^a (v_a)^[p] and all the v_a are emitted; iterated e times.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<PolyVec> root_components(const Ring& ring, const PolyVec& v) {
    // Common p-basis offsets across the coordinates of the column.
    std::map<Monomial, PolyVec, MonoLess> comps{MonoLess{ring->default_order}};
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (auto& [a, g] : p_basis_decompose(v[i])) {
            auto it = comps.find(a);
            if (it == comps.end()) it = comps.emplace(a, zero_vec(ring, v.size())).first;
            it->second[i] = it->second[i] + g;
        }
    }
    std::vector<PolyVec> out;
    out.reserve(comps.size());
    for (auto& [a, w] : comps) out.push_back(std::move(w));
    return out;
}

}  // namespace detail

inline Submodule frobenius_root(const Submodule& w, std::uint32_t e) {
    Submodule cur = w;
    for (std::uint32_t step = 0; step < e; ++step) {
        std::vector<PolyVec> gens;
        for (const auto& g : cur.generators) {
            auto comps = detail::root_components(cur.ring, g);
            gens.insert(gens.end(), comps.begin(), comps.end());
        }
        cur = make_submodule(cur.ring, cur.ambient_rank, std::move(gens));
        // keep intermediate generating sets small
        if (cur.generators.size() > 64) cur = groebner_basis(cur);
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Trace: the p-basis component of f at a = (p-1, ..., p-1); the generator of
// the module of near-splittings of R, Matlis dual to the natural Frobenius T.
// Satisfies trace(g^p f) = g trace(f).
// ---------------------------------------------------------------------------

inline Polynomial trace(const Polynomial& f) {
    const Ring& R = f.ring();
    Monomial corner(std::vector<std::uint32_t>(R->d, R->p - 1));
    auto comps = p_basis_decompose(f);
    auto it = comps.find(corner);
    return it == comps.end() ? Polynomial::zero(R) : it->second;
}

// ---------------------------------------------------------------------------
// The semilinear solver for v w^p - u w in I^[p], the computational heart of
// Hom-set finiteness: the defining map w -> NF(v w^p - u w) is F_p-linear
// because the characteristic is p, so the solution set of bounded degree is
// the kernel of one dense F_p system.
// ---------------------------------------------------------------------------

struct SemilinearProblem {
    Polynomial u;  // source structure element, u in (I^[p] : I)
    Polynomial v;  // target structure element, v in (J^[p] : J)
    Submodule i;   // source ideal
    Submodule j;   // target ideal
    std::optional<std::uint32_t> degree_bound;  // nullopt = automatic

    SemilinearProblem(Polynomial u_, Polynomial v_, Submodule i_, Submodule j_,
                      std::optional<std::uint32_t> bound = std::nullopt)
        : u(std::move(u_)), v(std::move(v_)), i(std::move(i_)), j(std::move(j_)),
          degree_bound(bound) {
        require_same_ring(u.ring(), v.ring());
        require_same_ring(u.ring(), i.ring);
        require_same_ring(u.ring(), j.ring);
        if (i.ambient_rank != 1 || j.ambient_rank != 1)
            throw ShapeError("semilinear problems are over ideals");
        if (!membership(u, colon_ideal(bracket_power(i, 1), i, /*allow_zero=*/true)))
            throw InvalidStructureError("u is not in (I^[p] : I)");
        if (!membership(v, colon_ideal(bracket_power(j, 1), j, /*allow_zero=*/true)))
            throw InvalidStructureError("v is not in (J^[p] : J)");
    }
};

// F_p-vector space of solutions, described by a basis; enumeration releases
// the full (finite) solution set, which always contains 0.
struct SolutionSpace {
    Ring ring;
    std::vector<Polynomial> basis;  // canonical, from the RREF kernel
    std::uint32_t p = 2;

    std::size_t dimension() const { return basis.size(); }
    std::size_t size() const {
        std::size_t n = 1;
        for (std::size_t k = 0; k < basis.size(); ++k) n *= p;
        return n;
    }
    std::vector<Polynomial> enumerate(std::size_t cap = 1 << 16) const;
};

namespace detail {

// Monomials of total degree <= bound, in ascending default order.
inline std::vector<Monomial> monomials_up_to(const Ring& ring, std::uint32_t bound) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> cur(ring->d, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
        if (i == ring->d) {
            out.push_back(Monomial(cur));
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[i] = e;
            self(self, i + 1, left - e);
        }
        cur[i] = 0;
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ring->default_order.less(a, b); });
    return out;
}

// Assemble the kernel of several F_p-linear polynomial maps applied to the
// monomial basis of degree <= bound. Each map sends a candidate w to a
// polynomial that must vanish.
inline SolutionSpace kernel_of_linear_maps(
    const Ring& ring, std::uint32_t bound,
    const std::vector<std::function<Polynomial(const Polynomial&)>>& maps) {
    std::vector<Monomial> basis_monos = monomials_up_to(ring, bound);
    // collect images and their support
    std::map<std::pair<std::size_t, Monomial>, std::size_t,
             std::function<bool(const std::pair<std::size_t, Monomial>&,
                                const std::pair<std::size_t, Monomial>&)>>
        row_index([&](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            return ring->default_order.less(a.second, b.second);
        });
    std::vector<std::vector<std::pair<std::size_t, Coeff>>> cols;
    for (const Monomial& m : basis_monos) {
        Polynomial w = Polynomial::monomial(ring, m);
        std::vector<std::pair<std::size_t, Coeff>> col;
        for (std::size_t k = 0; k < maps.size(); ++k) {
            Polynomial img = maps[k](w);
            for (const auto& [mono, c] : img.terms()) {
                auto key = std::make_pair(k, mono);
                auto it = row_index.find(key);
                if (it == row_index.end())
                    it = row_index.emplace(key, row_index.size()).first;
                col.emplace_back(it->second, c);
            }
        }
        cols.push_back(std::move(col));
    }
    FpMatrix m(row_index.size(), basis_monos.size(), ring->p);
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& [r, c] : cols[j]) m.at(r, j) = c;
    SolutionSpace sol;
    sol.ring = ring;
    sol.p = ring->p;
    for (const auto& v : m.kernel_basis()) {
        Polynomial w = Polynomial::zero(ring);
        for (std::size_t j = 0; j < basis_monos.size(); ++j)
            if (v[j] != 0) w.add_term(basis_monos[j], v[j]);
        sol.basis.push_back(std::move(w));
    }
    return sol;
}

}  // namespace detail

inline std::vector<Polynomial> SolutionSpace::enumerate(std::size_t cap) const {
    if (size() > cap) throw ResourceCapError("solution space too large to enumerate (cap " +
                                             std::to_string(cap) + ")");
    std::vector<Polynomial> out;
    if (basis.empty()) {
        out.push_back(Polynomial::zero(ring));
        return out;
    }
    std::vector<Coeff> lambda(basis.size(), 0);
    while (true) {
        Polynomial w = Polynomial::zero(ring);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (lambda[k] != 0) w = w + basis[k].scalar_mul(lambda[k]);
        out.push_back(std::move(w));
        std::size_t k = 0;
        while (k < lambda.size() && ++lambda[k] == p) lambda[k++] = 0;
        if (k == lambda.size()) break;
    }
    return out;
}

// All w of total degree <= D with v w^p - u w in I^[p]. With I = J = 0 and
// nonzero u, v the bound is derivable by comparing top degrees in v w^p = u w:
// D = ceil(max(0, deg u - deg v) / (p-1)).
inline SolutionSpace solve_semilinear(const SemilinearProblem& prob) {
    const Ring& R = prob.u.ring();
    std::uint32_t bound;
    if (prob.degree_bound) {
        bound = *prob.degree_bound;
    } else {
        if (!is_zero_submodule(prob.i) || !is_zero_submodule(prob.j))
            throw UnsupportedError(
                "automatic degree bound requires the zero ideals; pass an explicit bound");
        if (prob.v.is_zero() && !prob.u.is_zero()) {
            // u w = 0 in a domain forces w = 0
            SolutionSpace sol;
            sol.ring = R;
            sol.p = R->p;
            return sol;
        }
        if (prob.u.is_zero() || prob.v.is_zero())
            throw UnsupportedError("automatic degree bound requires nonzero u and v");
        std::int64_t gap = prob.u.total_degree() - prob.v.total_degree();
        if (gap < 0) gap = 0;
        bound = static_cast<std::uint32_t>((gap + (R->p - 2)) / (R->p - 1));
    }
    auto ip_basis = basis_of(groebner_basis(bracket_power(prob.i, 1)));
    std::vector<std::function<Polynomial(const Polynomial&)>> maps;
    maps.emplace_back([&prob, ip_basis](const Polynomial& w) {
        Polynomial expr = prob.v * frobenius_power(w, 1) - prob.u * w;
        return normal_form(expr, *ip_basis);
    });
    return detail::kernel_of_linear_maps(R, bound, maps);
}

// ---------------------------------------------------------------------------
// hom_set: all morphisms Ann_E I -> Ann_E J of bounded degree. Matlis duality
// turns an R-linear map Ann_E I -> Ann_E J into a map R/J -> R/I, so each
// morphism is multiplication by some w in (I : J); it commutes with the two
// twisted Frobenius actions iff v w^p - u w in I^[p]. Morphisms coincide iff
// the multipliers agree modulo I, so the result is the coset list
// { NF(w, I) } ordered canonically. Completeness is only claimed up to the
// supplied total-degree bound.
// ---------------------------------------------------------------------------

struct HomSet {
    std::vector<Polynomial> cosets;        // canonical representatives mod I
    std::size_t solution_dimension = 0;    // dimension of the degree-bounded solution space
    std::uint32_t degree_bound = 0;
};

inline HomSet hom_set(const Submodule& i, const Polynomial& u, const Submodule& j,
                      const Polynomial& v, std::uint32_t degree_bound) {
    SemilinearProblem prob(u, v, i, j, degree_bound);
    const Ring& R = u.ring();

    Submodule colon = colon_ideal(i, j, /*allow_zero=*/true);
    auto colon_basis = basis_of(groebner_basis(colon));
    auto ip_basis = basis_of(groebner_basis(bracket_power(i, 1)));
    auto i_basis = basis_of(groebner_basis(i));

    std::vector<std::function<Polynomial(const Polynomial&)>> maps;
    maps.emplace_back([&, ip_basis](const Polynomial& w) {
        return normal_form(v * frobenius_power(w, 1) - u * w, *ip_basis);
    });
    maps.emplace_back([colon_basis](const Polynomial& w) {
        return normal_form(w, *colon_basis);
    });
    SolutionSpace sol = detail::kernel_of_linear_maps(R, degree_bound, maps);

    // The coset set is the image of the solution space under NF mod I, which
    // is again an F_p-space; enumerate it through its own basis.
    std::vector<Polynomial> reduced;
    for (const auto& b : sol.basis) reduced.push_back(normal_form(b, *i_basis));
    std::map<Monomial, std::size_t, MonoLess> support{MonoLess{R->default_order}};
    for (const auto& f : reduced)
        for (const auto& [m, c] : f.terms())
            if (!support.count(m)) support.emplace(m, support.size());
    FpMatrix rowmat(reduced.size(), support.size(), R->p);
    for (std::size_t r = 0; r < reduced.size(); ++r)
        for (const auto& [m, c] : reduced[r].terms()) rowmat.at(r, support.at(m)) = c;
    rowmat.rref();

    SolutionSpace image;
    image.ring = R;
    image.p = R->p;
    std::vector<const Monomial*> support_by_index(support.size());
    for (const auto& [m, idx] : support) support_by_index[idx] = &m;
    for (std::size_t r = 0; r < rowmat.rows(); ++r) {
        Polynomial f = Polynomial::zero(R);
        for (std::size_t c = 0; c < rowmat.cols(); ++c)
            if (rowmat.at(r, c) != 0) f.add_term(*support_by_index[c], rowmat.at(r, c));
        if (!f.is_zero()) image.basis.push_back(std::move(f));
    }

    HomSet out;
    out.degree_bound = degree_bound;
    out.solution_dimension = sol.dimension();
    std::vector<Polynomial> elems = image.enumerate();
    std::sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
        return detail::poly_serialize(a) < detail::poly_serialize(b);
    });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    out.cosets = std::move(elems);
    return out;
}

}  // namespace frobkit

#endif
