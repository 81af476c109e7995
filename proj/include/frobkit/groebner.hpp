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

#ifndef FROBKIT_GROEBNER_HPP
#define FROBKIT_GROEBNER_HPP

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/cache.hpp"
#include "frobkit/polymatrix.hpp"
#include "frobkit/polyring.hpp"

namespace frobkit {

// ---------------------------------------------------------------------------
// Module terms under position-over-term order. Lower position dominates, ties
// broken by the monomial order; this is also exactly the elimination order
// needed by the syzygy-based preimage computation (the leading block wins).
// ---------------------------------------------------------------------------

struct ModTerm {
    std::size_t pos = 0;
    Monomial mono;
    Coeff coeff = 0;
};

// +1 if (pa, a) > (pb, b) in position-over-term.
inline int modterm_compare(std::size_t pa, const Monomial& a, std::size_t pb,
                           const Monomial& b, const MonomialOrder& o) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return o.compare(a, b);
}

inline std::optional<ModTerm> vec_leading_term(const PolyVec& v, const MonomialOrder& o) {
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        if (v[pos].is_zero()) continue;
        auto [m, c] = v[pos].leading_term(o);
        return ModTerm{pos, m, c};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Submodule of R^n, given by column-vector generators. An ideal is the case
// n = 1. The zero submodule is an empty generator list with explicit rank.
// ---------------------------------------------------------------------------

struct ReducedBasis {
    MonomialOrder order;
    std::vector<PolyVec> vectors;   // monic, interreduced, sorted descending by LT
    std::vector<ModTerm> lts;       // cached leading terms, aligned with vectors
};

struct Submodule {
    Ring ring;
    std::size_t ambient_rank = 1;
    std::vector<PolyVec> generators;
    std::shared_ptr<const ReducedBasis> cached_basis;
};

inline Submodule make_submodule(Ring ring, std::size_t rank, std::vector<PolyVec> gens) {
    if (rank == 0) throw ShapeError("ambient rank must be positive");
    Submodule w;
    w.ring = std::move(ring);
    w.ambient_rank = rank;
    for (auto& g : gens) {
        if (g.size() != rank) throw ShapeError("generator length does not match ambient rank");
        for (const auto& f : g) require_same_ring(w.ring, f.ring());
        if (!is_zero_vec(g)) w.generators.push_back(std::move(g));
    }
    return w;
}

inline Submodule make_ideal(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::vector<PolyVec> vs;
    vs.reserve(gens.size());
    for (const auto& f : gens) vs.push_back(PolyVec{f});
    return make_submodule(ring, 1, std::move(vs));
}

inline Submodule zero_submodule(const Ring& ring, std::size_t rank) {
    return make_submodule(ring, rank, {});
}

inline Submodule unit_ideal(const Ring& ring) {
    return make_ideal(ring, {Polynomial::constant(ring, 1)});
}

inline Submodule submodule_from_columns(const PolyMatrix& m) {
    return make_submodule(m.ring(), m.rows(), m.columns());
}

inline Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    require_same_ring(a.ring, b.ring);
    if (a.ambient_rank != b.ambient_rank) throw ShapeError("ambient rank mismatch in sum");
    std::vector<PolyVec> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return make_submodule(a.ring, a.ambient_rank, std::move(gens));
}

// Submodule generated by the p^e-th bracket powers of the generators.
inline Submodule bracket_power(const Submodule& w, std::uint32_t e) {
    std::vector<PolyVec> gens;
    gens.reserve(w.generators.size());
    for (const auto& g : w.generators) gens.push_back(bracket_power(g, e));
    return make_submodule(w.ring, w.ambient_rank, std::move(gens));
}

// Apply a matrix to every generator.
inline Submodule matrix_image(const PolyMatrix& b, const Submodule& w) {
    if (b.cols() != w.ambient_rank) throw ShapeError("matrix-submodule shape mismatch");
    std::vector<PolyVec> gens;
    gens.reserve(w.generators.size());
    for (const auto& g : w.generators) gens.push_back(b * g);
    return make_submodule(w.ring, b.rows(), std::move(gens));
}

// ---------------------------------------------------------------------------
// Division: full normal form against a list of vectors. If quotients is given
// it receives one coefficient polynomial per divisor, so that
//   input = sum_k quotients[k] * divisors[k] + result.
// Deterministic: always cancels the largest reducible term, always with the
// first divisor whose leading term divides it.
// ---------------------------------------------------------------------------

inline PolyVec reduce_full(PolyVec v, const std::vector<PolyVec>& divisors,
                           const std::vector<ModTerm>& lts, const MonomialOrder& o,
                           std::vector<Polynomial>* quotients = nullptr) {
    if (divisors.empty()) return v;
    const Ring& R = divisors[0][0].ring();
    const std::uint32_t p = R->p;
    while (true) {
        bool found = false;
        std::size_t bpos = 0, bidx = 0;
        Monomial bmono;
        Coeff bcoeff = 0;
        for (std::size_t pos = 0; pos < v.size(); ++pos) {
            for (const auto& [m, c] : v[pos].terms()) {
                for (std::size_t k = 0; k < divisors.size(); ++k) {
                    if (lts[k].pos != pos || !lts[k].mono.divides(m)) continue;
                    if (!found || modterm_compare(pos, m, bpos, bmono, o) > 0) {
                        found = true;
                        bpos = pos;
                        bmono = m;
                        bcoeff = c;
                        bidx = k;
                    }
                    break;
                }
            }
        }
        if (!found) return v;
        Coeff factor = fp::mul(bcoeff, fp::inv(lts[bidx].coeff, p), p);
        Monomial shift = bmono / lts[bidx].mono;
        v = vec_sub(v, vec_term_mul(divisors[bidx], shift, factor));
        if (quotients) (*quotients)[bidx].add_term(shift, factor);
    }
}

// ---------------------------------------------------------------------------
// Buchberger with normal selection. Pair pruning: the product criterion (ideal
// case only; it is not valid for module vectors with mixed positions) and the
// chain criterion.
// ---------------------------------------------------------------------------

namespace detail {

struct GbState {
    std::vector<PolyVec> g;
    std::vector<ModTerm> lt;
};

inline void make_monic(PolyVec& v, const ModTerm& lt, std::uint32_t p) {
    if (lt.coeff == 1) return;
    Coeff inv = fp::inv(lt.coeff, p);
    for (auto& f : v) f = f.scalar_mul(inv);
}

}  // namespace detail

inline std::vector<PolyVec> buchberger(const Ring& ring, std::size_t rank,
                                       const std::vector<PolyVec>& gens,
                                       const MonomialOrder& o) {
    const std::uint32_t p = ring->p;
    detail::GbState st;
    for (const auto& g : gens) {
        if (is_zero_vec(g)) continue;
        PolyVec v = g;
        ModTerm lt = *vec_leading_term(v, o);
        detail::make_monic(v, lt, p);
        lt.coeff = 1;
        st.g.push_back(std::move(v));
        st.lt.push_back(std::move(lt));
    }

    using Pair = std::pair<std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (st.lt[i].pos == st.lt[j].pos) pending.insert({i, j});
    };
    for (std::size_t j = 0; j < st.g.size(); ++j) add_pairs(j);

    while (!pending.empty()) {
        // normal selection: smallest lcm first
        auto best = pending.end();
        Monomial best_lcm;
        std::size_t best_pos = 0;
        for (auto it = pending.begin(); it != pending.end(); ++it) {
            Monomial l = Monomial::lcm(st.lt[it->first].mono, st.lt[it->second].mono);
            std::size_t pos = st.lt[it->first].pos;
            if (best == pending.end() || modterm_compare(pos, l, best_pos, best_lcm, o) < 0) {
                best = it;
                best_lcm = l;
                best_pos = pos;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        // product criterion (rank-1 only)
        if (rank == 1 && best_lcm == st.lt[i].mono * st.lt[j].mono) continue;
        // chain criterion
        bool skip = false;
        for (std::size_t k = 0; k < st.g.size() && !skip; ++k) {
            if (k == i || k == j || st.lt[k].pos != best_pos) continue;
            if (!st.lt[k].mono.divides(best_lcm)) continue;
            Pair ik{std::min(i, k), std::max(i, k)};
            Pair jk{std::min(j, k), std::max(j, k)};
            if (!pending.count(ik) && !pending.count(jk)) skip = true;
        }
        if (skip) continue;

        PolyVec s = vec_sub(vec_term_mul(st.g[i], best_lcm / st.lt[i].mono, 1),
                            vec_term_mul(st.g[j], best_lcm / st.lt[j].mono, 1));
        PolyVec h = reduce_full(std::move(s), st.g, st.lt, o);
        if (is_zero_vec(h)) continue;
        ModTerm lt = *vec_leading_term(h, o);
        detail::make_monic(h, lt, p);
        lt.coeff = 1;
        st.g.push_back(std::move(h));
        st.lt.push_back(std::move(lt));
        add_pairs(st.g.size() - 1);
    }

    // minimalize: drop elements whose leading term is divisible by another's
    std::vector<bool> removed(st.g.size(), false);
    for (std::size_t i = 0; i < st.g.size(); ++i) {
        for (std::size_t j = 0; j < st.g.size() && !removed[i]; ++j) {
            if (i == j || removed[j]) continue;
            if (st.lt[j].pos != st.lt[i].pos || !st.lt[j].mono.divides(st.lt[i].mono)) continue;
            if (st.lt[j].mono == st.lt[i].mono && j > i) continue;  // keep the earlier one
            removed[i] = true;
        }
    }
    std::vector<PolyVec> kept;
    std::vector<ModTerm> kept_lt;
    for (std::size_t i = 0; i < st.g.size(); ++i)
        if (!removed[i]) {
            kept.push_back(st.g[i]);
            kept_lt.push_back(st.lt[i]);
        }

    // tail-reduce each element against the others
    std::vector<PolyVec> reduced;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<PolyVec> others;
        std::vector<ModTerm> others_lt;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) {
                others.push_back(kept[j]);
                others_lt.push_back(kept_lt[j]);
            }
        reduced.push_back(reduce_full(kept[i], others, others_lt, o));
    }

    // canonical order: descending leading terms
    std::vector<std::size_t> idx(reduced.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return modterm_compare(kept_lt[a].pos, kept_lt[a].mono, kept_lt[b].pos,
                               kept_lt[b].mono, o) > 0;
    });
    std::vector<PolyVec> out;
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(std::move(reduced[i]));
    return out;
}

// ---------------------------------------------------------------------------
// Serialization: canonical text form of generator lists and bases, used both
// as cache keys and cache payloads.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string poly_serialize(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        if (!first) os << ";";
        first = false;
        os << c << ":";
        const auto& e = m.exponents();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) os << ",";
            os << e[i];
        }
    }
    return os.str();
}

inline std::string vec_serialize(const PolyVec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << "|";
        os << poly_serialize(v[i]);
    }
    return os.str();
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t at = s.find(sep, start);
        if (at == std::string::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, at - start));
        start = at + 1;
    }
}

inline Polynomial poly_parse(const Ring& ring, const std::string& s) {
    Polynomial f = Polynomial::zero(ring);
    if (s == "0" || s.empty()) return f;
    for (const auto& term : split(s, ';')) {
        auto colon = term.find(':');
        Coeff c = static_cast<Coeff>(std::stoul(term.substr(0, colon)));
        std::vector<std::uint32_t> e;
        for (const auto& part : split(term.substr(colon + 1), ','))
            e.push_back(static_cast<std::uint32_t>(std::stoul(part)));
        f.add_term(Monomial(std::move(e)), c);
    }
    return f;
}

inline PolyVec vec_parse(const Ring& ring, const std::string& s) {
    PolyVec v;
    for (const auto& part : split(s, '|')) v.push_back(poly_parse(ring, part));
    return v;
}

inline std::string ring_signature(const Ring& r) {
    std::ostringstream os;
    os << "p=" << r->p << ";d=" << r->d << ";vars=";
    for (std::size_t i = 0; i < r->d; ++i) {
        if (i) os << ",";
        os << r->var_names[i];
    }
    os << ";defo=" << r->default_order.name();
    return os.str();
}

inline std::string cache_key(const Submodule& w, const MonomialOrder& o) {
    std::ostringstream os;
    os << ring_signature(w.ring) << "#order=" << o.name() << "#rank=" << w.ambient_rank
       << "#gens=";
    for (std::size_t i = 0; i < w.generators.size(); ++i) {
        if (i) os << "&";
        os << vec_serialize(w.generators[i]);
    }
    return os.str();
}

inline std::string basis_serialize(const std::vector<PolyVec>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << "\n";
        os << vec_serialize(vs[i]);
    }
    return os.str();
}

inline std::vector<PolyVec> basis_parse(const Ring& ring, const std::string& payload) {
    std::vector<PolyVec> vs;
    if (payload.empty()) return vs;
    for (const auto& line : split(payload, '\n')) vs.push_back(vec_parse(ring, line));
    return vs;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// The public engine entry points.
// ---------------------------------------------------------------------------

// Unique reduced Groebner basis of W for the given order, consulting the
// advisory cache. Returned as a shared immutable basis object.
inline std::shared_ptr<const ReducedBasis> basis_of(const Submodule& w,
                                                    const MonomialOrder& o) {
    if (w.cached_basis && w.cached_basis->order.tag == o.tag) return w.cached_basis;
    std::string key = detail::cache_key(w, o);
    auto& cache = GroebnerCache::instance();
    std::vector<PolyVec> vectors;
    bool have = false;
    if (auto payload = cache.lookup(key)) {
        // the cache is advisory: unparseable entries fall through to recompute
        try {
            vectors = detail::basis_parse(w.ring, *payload);
            have = true;
        } catch (...) {
            vectors.clear();
        }
    }
    if (!have) {
        vectors = buchberger(w.ring, w.ambient_rank, w.generators, o);
        cache.store(key, detail::basis_serialize(vectors));
    }
    auto rb = std::make_shared<ReducedBasis>();
    rb->order = o;
    rb->vectors = std::move(vectors);
    for (const auto& v : rb->vectors) rb->lts.push_back(*vec_leading_term(v, o));
    return rb;
}

inline std::shared_ptr<const ReducedBasis> basis_of(const Submodule& w) {
    return basis_of(w, w.ring->default_order);
}

// W with its reduced basis attached; the generators are the basis vectors.
inline Submodule groebner_basis(const Submodule& w, const MonomialOrder& o) {
    auto rb = basis_of(w, o);
    Submodule out;
    out.ring = w.ring;
    out.ambient_rank = w.ambient_rank;
    out.generators = rb->vectors;
    out.cached_basis = rb;
    return out;
}

inline Submodule groebner_basis(const Submodule& w) {
    return groebner_basis(w, w.ring->default_order);
}

inline PolyVec normal_form(const PolyVec& v, const ReducedBasis& rb) {
    return reduce_full(v, rb.vectors, rb.lts, rb.order);
}

inline Polynomial normal_form(const Polynomial& f, const ReducedBasis& rb) {
    return normal_form(PolyVec{f}, rb)[0];
}

inline bool membership(const PolyVec& v, const Submodule& w) {
    if (v.size() != w.ambient_rank) throw ShapeError("vector rank does not match submodule");
    for (const auto& f : v) require_same_ring(f.ring(), w.ring);
    return is_zero_vec(normal_form(v, *basis_of(w)));
}

inline bool membership(const Polynomial& f, const Submodule& w) {
    return membership(PolyVec{f}, w);
}

inline bool is_subset(const Submodule& v, const Submodule& w) {
    require_same_ring(v.ring, w.ring);
    if (v.ambient_rank != w.ambient_rank) throw ShapeError("ambient rank mismatch");
    auto rb = basis_of(w);
    for (const auto& g : v.generators)
        if (!is_zero_vec(normal_form(g, *rb))) return false;
    return true;
}

inline bool submodule_equal(const Submodule& v, const Submodule& w) {
    return is_subset(v, w) && is_subset(w, v);
}

inline bool is_zero_submodule(const Submodule& w) {
    for (const auto& g : w.generators)
        if (!is_zero_vec(g)) return false;
    return true;
}

// True iff W = R^n, i.e. every standard basis vector is a member.
inline bool is_unit_submodule(const Submodule& w) {
    auto rb = basis_of(w);
    for (std::size_t i = 0; i < w.ambient_rank; ++i) {
        PolyVec e = zero_vec(w.ring, w.ambient_rank);
        e[i] = Polynomial::constant(w.ring, 1);
        if (!is_zero_vec(normal_form(e, *rb))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Ideal intersection by single-auxiliary-variable elimination:
// I cap J = (t*I + (1-t)*J) cap R, with t dominating in a block order.
// ---------------------------------------------------------------------------

namespace detail {

inline Ring elimination_ring(const Ring& base) {
    std::vector<std::string> vars;
    vars.reserve(base->d + 1);
    vars.push_back("#t");  // not a legal session identifier, cannot collide
    vars.insert(vars.end(), base->var_names.begin(), base->var_names.end());
    return make_ring(base->p, std::move(vars), MonomialOrder::elim_first());
}

inline Polynomial lift_poly(const Ring& ext, const Polynomial& f, std::uint32_t t_exp) {
    Polynomial g = Polynomial::zero(ext);
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> e;
        e.reserve(m.arity() + 1);
        e.push_back(t_exp);
        e.insert(e.end(), m.exponents().begin(), m.exponents().end());
        g.add_term(Monomial(std::move(e)), c);
    }
    return g;
}

inline Polynomial drop_poly(const Ring& base, const Polynomial& f) {
    Polynomial g = Polynomial::zero(base);
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> e(m.exponents().begin() + 1, m.exponents().end());
        g.add_term(Monomial(std::move(e)), c);
    }
    return g;
}

}  // namespace detail

inline Submodule ideal_intersection(const Submodule& i, const Submodule& j) {
    require_same_ring(i.ring, j.ring);
    if (i.ambient_rank != 1 || j.ambient_rank != 1)
        throw ShapeError("ideal intersection expects rank-1 submodules");
    if (is_zero_submodule(i) || is_zero_submodule(j)) return zero_submodule(i.ring, 1);

    Ring ext = detail::elimination_ring(i.ring);
    std::vector<PolyVec> gens;
    for (const auto& g : i.generators)  // t * f
        gens.push_back(PolyVec{detail::lift_poly(ext, g[0], 1)});
    for (const auto& g : j.generators)  // (1 - t) * f
        gens.push_back(PolyVec{detail::lift_poly(ext, g[0], 0) - detail::lift_poly(ext, g[0], 1)});

    auto basis = buchberger(ext, 1, gens, MonomialOrder::elim_first());
    std::vector<PolyVec> kept;
    for (const auto& v : basis) {
        bool t_free = true;
        for (const auto& [m, c] : v[0].terms())
            if (m[0] != 0) {
                t_free = false;
                break;
            }
        if (t_free) kept.push_back(PolyVec{detail::drop_poly(i.ring, v[0])});
    }
    return make_submodule(i.ring, 1, std::move(kept));
}

// Exact division of h by a single polynomial g; requires h in (g).
inline Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
    require_same_ring(h.ring(), g.ring());
    const Ring& R = h.ring();
    if (g.is_zero()) throw ArithmeticError("division by zero polynomial");
    const MonomialOrder o = R->default_order;
    auto [gm, gc] = g.leading_term(o);
    Coeff gcinv = fp::inv(gc, R->p);
    Polynomial q = Polynomial::zero(R);
    Polynomial r = h;
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term(o);
        if (!gm.divides(rm)) throw ArithmeticError("non-exact polynomial division");
        Monomial shift = rm / gm;
        Coeff factor = fp::mul(rc, gcinv, R->p);
        q.add_term(shift, factor);
        r = r - g.term_mul(shift, factor);
    }
    return q;
}

// (I : J) = { r : r J subseteq I }, via intersection-and-divide over the
// generators of J. Colon by the zero ideal is the unit ideal but only on
// explicit request (allow_zero), which internal callers use; the public
// operation rejects it.
inline Submodule colon_ideal(const Submodule& i, const Submodule& j, bool allow_zero = false) {
    require_same_ring(i.ring, j.ring);
    if (i.ambient_rank != 1 || j.ambient_rank != 1)
        throw ShapeError("colon expects rank-1 submodules");
    if (is_zero_submodule(j)) {
        if (allow_zero) return unit_ideal(i.ring);
        throw DegenerateInputError(
            "colon by the zero ideal is the unit ideal; request it explicitly");
    }
    std::optional<Submodule> acc;
    for (const auto& g : j.generators) {
        if (g[0].is_zero()) continue;
        Submodule meet = ideal_intersection(i, make_ideal(i.ring, {g[0]}));
        std::vector<PolyVec> divided;
        for (const auto& h : meet.generators)
            divided.push_back(PolyVec{exact_divide(h[0], g[0])});
        Submodule part = make_submodule(i.ring, 1, std::move(divided));
        acc = acc ? ideal_intersection(*acc, part) : part;
    }
    return *acc;
}

// ---------------------------------------------------------------------------
// preimage(B, W) = { v : B v in W }, via syzygies of the block [B | gens W]
// computed with a two-block elimination (position-over-term does the work).
// ---------------------------------------------------------------------------

inline Submodule preimage(const PolyMatrix& b, const Submodule& w) {
    if (b.rows() != b.cols()) throw ShapeError("preimage expects a square matrix");
    if (b.rows() != w.ambient_rank) throw ShapeError("matrix does not act on the submodule's ambient module");
    require_same_ring(b.ring(), w.ring);
    const Ring& R = w.ring;
    const std::size_t alpha = b.rows();
    const std::size_t k = w.generators.size();
    const std::size_t total = alpha + alpha + k;  // ambient block + B tags + W tags

    std::vector<PolyVec> aug;
    for (std::size_t j = 0; j < alpha; ++j) {
        PolyVec v = zero_vec(R, total);
        PolyVec col = b.column(j);
        for (std::size_t i = 0; i < alpha; ++i) v[i] = col[i];
        v[alpha + j] = Polynomial::constant(R, 1);
        aug.push_back(std::move(v));
    }
    for (std::size_t l = 0; l < k; ++l) {
        PolyVec v = zero_vec(R, total);
        for (std::size_t i = 0; i < alpha; ++i) v[i] = w.generators[l][i];
        v[alpha + alpha + l] = Polynomial::constant(R, 1);
        aug.push_back(std::move(v));
    }

    auto basis = buchberger(R, total, aug, R->default_order);
    std::vector<PolyVec> gens;
    for (const auto& v : basis) {
        bool head_zero = true;
        for (std::size_t i = 0; i < alpha; ++i)
            if (!v[i].is_zero()) {
                head_zero = false;
                break;
            }
        if (!head_zero) continue;
        PolyVec c(v.begin() + alpha, v.begin() + alpha + alpha);
        if (!is_zero_vec(c)) gens.push_back(std::move(c));
    }
    return make_submodule(R, alpha, std::move(gens));
}

// Minimal canonical generators (the reduced basis vectors).
inline std::vector<PolyVec> canonical_generators(const Submodule& w) {
    return basis_of(w)->vectors;
}

}  // namespace frobkit

#endif
