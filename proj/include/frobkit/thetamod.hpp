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

#ifndef FROBKIT_THETAMOD_HPP
#define FROBKIT_THETAMOD_HPP

#include <optional>
#include <string>
#include <vector>

#include "frobkit/frobops.hpp"
#include "frobkit/groebner.hpp"

namespace frobkit {

inline constexpr std::uint32_t kDefaultChainCap = 10;

// ---------------------------------------------------------------------------
// ThetaPresentation: the matrix pair (A, B) presenting an Artinian module
// M = ker A^t subseteq E^alpha with Frobenius action Theta = B^t T. Valid iff
// Image(B A) subseteq Image(A^[p]), checked columnwise at construction.
// ---------------------------------------------------------------------------

class ThetaPresentation {
   public:
    static ThetaPresentation validate(const PolyMatrix& a, const PolyMatrix& b) {
        require_same_ring(a.ring(), b.ring());
        if (b.rows() != b.cols()) throw ShapeError("B must be square");
        if (b.rows() != a.rows()) throw ShapeError("B must act on the ambient of A");
        PolyMatrix ba = b * a;
        Submodule target = submodule_from_columns(bracket_power(a, 1));
        auto rb = basis_of(target);
        for (std::size_t j = 0; j < ba.cols(); ++j) {
            if (!is_zero_vec(normal_form(ba.column(j), *rb)))
                throw InvalidStructureError(
                    "Image(B*A) is not contained in Image(A^[p]): offending column " +
                    std::to_string(j + 1) + " of B*A");
        }
        return ThetaPresentation(a, b);
    }

    const PolyMatrix& a() const { return a_; }
    const PolyMatrix& b() const { return b_; }
    const Ring& ring() const { return a_.ring(); }
    std::size_t alpha() const { return a_.rows(); }
    std::size_t beta() const { return a_.cols(); }

   private:
    ThetaPresentation(PolyMatrix a, PolyMatrix b) : a_(std::move(a)), b_(std::move(b)) {}
    PolyMatrix a_;
    PolyMatrix b_;
};

// B_e = B^[p^(e-1)] * ... * B^[p] * B, the matrix of the e-fold twisted
// composition: Theta^e = (B_e)^t T^e.
inline PolyMatrix theta_power_matrix(const ThetaPresentation& pres, std::uint32_t e) {
    if (e == 0) return PolyMatrix::identity(pres.ring(), pres.alpha());
    PolyMatrix acc = pres.b();
    for (std::uint32_t k = 1; k < e; ++k) acc = bracket_power(pres.b(), k) * acc;
    return acc;
}

// ---------------------------------------------------------------------------
// The ascending dual chain K_e = preimage(B_e, Image A^[p^e]), K_0 = Image A.
// Computed by the equivalent recursion K_{e+1} = preimage(B, K_e^[p]), which
// keeps generators small. R^alpha / K_e is the Matlis dual of R Theta^e M.
// ---------------------------------------------------------------------------

struct KChain {
    std::vector<Submodule> entries;                 // K_0 .. K_(eta+1) (or up to the cap)
    std::optional<std::uint32_t> stabilization_index;  // first eta with K_eta = K_(eta+1)
    std::uint32_t cap = kDefaultChainCap;
};

inline KChain k_chain(const ThetaPresentation& pres, std::uint32_t e_cap = kDefaultChainCap) {
    KChain chain;
    chain.cap = e_cap;
    Submodule k = groebner_basis(submodule_from_columns(pres.a()));
    chain.entries.push_back(k);
    for (std::uint32_t e = 0; e <= e_cap; ++e) {
        Submodule next = groebner_basis(preimage(pres.b(), bracket_power(k, 1)));
        if (!is_subset(k, next))
            throw InvalidStructureError("K-chain failed to ascend; presentation corrupt");
        chain.entries.push_back(next);
        if (submodule_equal(k, next)) {
            chain.stabilization_index = e;
            return chain;
        }
        k = std::move(next);
    }
    return chain;  // stabilization_index empty: explicit cap-exceeded result
}

namespace detail {

inline const Submodule& stabilized_entry(const KChain& chain) {
    if (!chain.stabilization_index)
        throw ResourceCapError("K-chain did not stabilize within the cap of " +
                               std::to_string(chain.cap) + " steps");
    return chain.entries[*chain.stabilization_index];
}

}  // namespace detail

// Smallest e with K_e = R^alpha (equivalently Theta^e M = 0); nullopt when
// the chain stabilizes strictly below R^alpha.
inline std::optional<std::uint32_t> nilpotency_order(const ThetaPresentation& pres,
                                                     std::uint32_t e_cap = kDefaultChainCap) {
    KChain chain = k_chain(pres, e_cap);
    detail::stabilized_entry(chain);  // throws on cap exceeded
    for (std::uint32_t e = 0; e < chain.entries.size(); ++e) {
        if (is_unit_submodule(chain.entries[e])) return e;
        if (chain.stabilization_index && e > *chain.stabilization_index) break;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Nilpotent part. ker(Theta^e on M) = Ann([G_e | A]^t) where G_e generates
// frobenius_root(Image B_e, e); the chain N_e = root_e(Image B_e) + Image A
// descends and stabilizes at Nil(M). root_e(Image B_e) obeys the recursion
// R_{e+1} = root_1(B * R_e), R_1 = root_1(Image B).
// ---------------------------------------------------------------------------

struct NilChainResult {
    Submodule nil_dual;             // N_eta: Nil(M) = Ann(N_eta^t)
    std::uint32_t stabilization = 0;
};

inline NilChainResult nil_chain(const ThetaPresentation& pres,
                                std::uint32_t e_cap = kDefaultChainCap) {
    Submodule image_a = submodule_from_columns(pres.a());
    Submodule root = frobenius_root(submodule_from_columns(pres.b()), 1);
    Submodule n = groebner_basis(submodule_sum(root, image_a));
    for (std::uint32_t e = 1; e <= e_cap; ++e) {
        Submodule next_root = frobenius_root(matrix_image(pres.b(), root), 1);
        Submodule next = groebner_basis(submodule_sum(next_root, image_a));
        if (!is_subset(next, n))
            throw InvalidStructureError("nil chain failed to descend; presentation corrupt");
        if (submodule_equal(n, next)) return {n, e};
        root = std::move(next_root);
        n = std::move(next);
    }
    throw ResourceCapError("nil chain did not stabilize within the cap of " +
                           std::to_string(e_cap) + " steps");
}

// Nil(M) = 0 iff ker Theta = 0 iff root_1(Image B) + Image A spans F_p^alpha
// at the origin (Nakayama at the maximal ideal).
inline bool has_no_nilpotents(const ThetaPresentation& pres) {
    Submodule n1 = submodule_sum(frobenius_root(submodule_from_columns(pres.b()), 1),
                                 submodule_from_columns(pres.a()));
    const std::size_t alpha = pres.alpha();
    FpMatrix m(alpha, n1.generators.size(), pres.ring()->p);
    for (std::size_t j = 0; j < n1.generators.size(); ++j)
        for (std::size_t i = 0; i < alpha; ++i)
            m.at(i, j) = n1.generators[j][i].constant_term();
    return m.rank() == alpha;
}

// Matrix C with Nil(M) = ker C^t subseteq E^alpha.
inline PolyMatrix nil_part(const ThetaPresentation& pres,
                           std::uint32_t e_cap = kDefaultChainCap) {
    NilChainResult r = nil_chain(pres, e_cap);
    auto gens = canonical_generators(r.nil_dual);
    if (gens.empty()) return PolyMatrix(pres.ring(), pres.alpha(), 0);
    return PolyMatrix::from_columns(pres.ring(), pres.alpha(), gens);
}

// Matrix G with M^* = ker G^t subseteq E^alpha, G generating K_eta.
inline PolyMatrix stable_part(const ThetaPresentation& pres,
                              std::uint32_t e_cap = kDefaultChainCap) {
    KChain chain = k_chain(pres, e_cap);
    const Submodule& k = detail::stabilized_entry(chain);
    auto gens = canonical_generators(k);
    if (gens.empty()) return PolyMatrix(pres.ring(), pres.alpha(), 0);
    return PolyMatrix::from_columns(pres.ring(), pres.alpha(), gens);
}

}  // namespace frobkit

#endif
