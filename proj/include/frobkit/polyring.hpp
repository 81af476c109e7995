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

#ifndef FROBKIT_POLYRING_HPP
#define FROBKIT_POLYRING_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/errors.hpp"
#include "frobkit/fp.hpp"

namespace frobkit {

// Exponents are capped well below 2^31; bracket powers are the only source of
// growth and must fail loudly instead of wrapping.
inline constexpr std::uint64_t kMaxExponent = std::uint64_t{1} << 31;

// ---------------------------------------------------------------------------
// Monomial: an exponent vector of fixed length d.
// ---------------------------------------------------------------------------

class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}
    static Monomial one(std::size_t d) { return Monomial(std::vector<std::uint32_t>(d, 0)); }

    std::size_t arity() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    std::uint64_t total_degree() const {
        std::uint64_t s = 0;
        for (auto x : e_) s += x;
        return s;
    }
    bool is_one() const {
        return std::all_of(e_.begin(), e_.end(), [](std::uint32_t x) { return x == 0; });
    }
    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > m.e_[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(e_[i]) + m.e_[i];
            if (s > kMaxExponent) throw ArithmeticError("monomial exponent overflow");
            r[i] = static_cast<std::uint32_t>(s);
        }
        return Monomial(std::move(r));
    }
    // Quotient; caller must ensure m.divides(*this).
    Monomial operator/(const Monomial& m) const {
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - m.e_[i];
        return Monomial(std::move(r));
    }
    static Monomial lcm(const Monomial& a, const Monomial& b) {
        std::vector<std::uint32_t> r(a.e_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
        return Monomial(std::move(r));
    }
    Monomial scaled(std::uint64_t factor) const {
        std::vector<std::uint32_t> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) {
            std::uint64_t s = static_cast<std::uint64_t>(e_[i]) * factor;
            if (s > kMaxExponent) throw ArithmeticError("monomial exponent overflow in Frobenius power");
            r[i] = static_cast<std::uint32_t>(s);
        }
        return Monomial(std::move(r));
    }

    bool operator==(const Monomial& m) const { return e_ == m.e_; }
    bool operator!=(const Monomial& m) const { return e_ != m.e_; }

   private:
    std::vector<std::uint32_t> e_;
};

// ---------------------------------------------------------------------------
// Monomial orders. lex and grevlex are the public tags; elim_first is the
// internal block order used for single-variable elimination (the auxiliary
// variable sits at index 0 and dominates).
// ---------------------------------------------------------------------------

enum class OrderTag : std::uint8_t { lex, grevlex, elim_first };

struct MonomialOrder {
    OrderTag tag = OrderTag::grevlex;

    static MonomialOrder lex() { return {OrderTag::lex}; }
    static MonomialOrder grevlex() { return {OrderTag::grevlex}; }
    static MonomialOrder elim_first() { return {OrderTag::elim_first}; }

    // Returns +1 if a > b, 0 if equal, -1 if a < b.
    int compare(const Monomial& a, const Monomial& b) const {
        switch (tag) {
            case OrderTag::lex:
                return compare_lex(a, b, 0);
            case OrderTag::grevlex:
                return compare_grevlex(a, b, 0);
            case OrderTag::elim_first: {
                if (a[0] != b[0]) return a[0] > b[0] ? 1 : -1;
                return compare_grevlex(a, b, 1);
            }
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

    std::string name() const {
        switch (tag) {
            case OrderTag::lex: return "lex";
            case OrderTag::grevlex: return "grevlex";
            case OrderTag::elim_first: return "elim";
        }
        return "?";
    }

   private:
    static int compare_lex(const Monomial& a, const Monomial& b, std::size_t from) {
        for (std::size_t i = from; i < a.arity(); ++i)
            if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        return 0;
    }
    static int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t from) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = from; i < a.arity(); ++i) da += a[i];
        for (std::size_t i = from; i < b.arity(); ++i) db += b[i];
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = a.arity(); i-- > from;)
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        return 0;
    }
};

inline MonomialOrder order_from_name(const std::string& s) {
    if (s == "lex") return MonomialOrder::lex();
    if (s == "grevlex") return MonomialOrder::grevlex();
    throw ConfigError("unknown monomial order '" + s + "'");
}

// Strict-less functor for term maps; keyed on the ring's default order so that
// the stored term sequence (and hence printing) is deterministic.
struct MonoLess {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order.less(a, b); }
};

// ---------------------------------------------------------------------------
// RingConfig: characteristic, variables and default order. Shared immutably.
// ---------------------------------------------------------------------------

struct RingConfig {
    std::uint32_t p = 2;
    std::size_t d = 1;
    std::vector<std::string> var_names;
    MonomialOrder default_order = MonomialOrder::grevlex();

    bool operator==(const RingConfig& o) const {
        return p == o.p && d == o.d && var_names == o.var_names &&
               default_order.tag == o.default_order.tag;
    }
};

using Ring = std::shared_ptr<const RingConfig>;

inline Ring make_ring(std::uint32_t p, std::vector<std::string> vars,
                      MonomialOrder order = MonomialOrder::grevlex()) {
    if (!fp::is_supported_prime(p))
        throw ConfigError("characteristic " + std::to_string(p) +
                          " is not a prime in the supported range [2, 97]");
    if (vars.empty()) throw ConfigError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw ConfigError("empty variable name");
        if (!seen.insert(v).second) throw ConfigError("duplicate variable name '" + v + "'");
    }
    auto cfg = std::make_shared<RingConfig>();
    cfg->p = p;
    cfg->d = vars.size();
    cfg->var_names = std::move(vars);
    cfg->default_order = order;
    return cfg;
}

inline bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

inline void require_same_ring(const Ring& a, const Ring& b) {
    if (!same_ring(a, b)) throw ConfigError("operands belong to different rings");
}

// ---------------------------------------------------------------------------
// Polynomial: sparse multivariate polynomial over F_p, canonical form (no zero
// coefficients), terms kept sorted by the ring's default order.
// ---------------------------------------------------------------------------

class Polynomial {
   public:
    using TermMap = std::map<Monomial, Coeff, MonoLess>;

    explicit Polynomial(Ring ring)
        : ring_(std::move(ring)), terms_(MonoLess{ring_->default_order}) {}

    static Polynomial zero(const Ring& r) { return Polynomial(r); }
    static Polynomial constant(const Ring& r, std::int64_t c) {
        Polynomial f(r);
        Coeff v = fp::normalize(c, r->p);
        if (v != 0) f.terms_.emplace(Monomial::one(r->d), v);
        return f;
    }
    static Polynomial monomial(const Ring& r, Monomial m, std::int64_t c = 1) {
        if (m.arity() != r->d) throw ShapeError("monomial arity does not match ring");
        Polynomial f(r);
        Coeff v = fp::normalize(c, r->p);
        if (v != 0) f.terms_.emplace(std::move(m), v);
        return f;
    }
    static Polynomial variable(const Ring& r, std::size_t i, std::uint32_t exp = 1) {
        if (i >= r->d) throw ConfigError("variable index out of range");
        std::vector<std::uint32_t> e(r->d, 0);
        e[i] = exp;
        return monomial(r, Monomial(std::move(e)));
    }

    const Ring& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    // Constant term (coefficient of the monomial 1).
    Coeff constant_term() const {
        auto it = terms_.find(Monomial::one(ring_->d));
        return it == terms_.end() ? 0 : it->second;
    }
    // Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const {
        std::int64_t m = -1;
        for (const auto& [mono, c] : terms_)
            m = std::max(m, static_cast<std::int64_t>(mono.total_degree()));
        return m;
    }

    Polynomial operator+(const Polynomial& g) const {
        require_same_ring(ring_, g.ring_);
        Polynomial r = *this;
        for (const auto& [m, c] : g.terms_) r.add_term(m, c);
        return r;
    }
    Polynomial operator-(const Polynomial& g) const {
        require_same_ring(ring_, g.ring_);
        Polynomial r = *this;
        for (const auto& [m, c] : g.terms_) r.add_term(m, fp::neg(c, ring_->p));
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, fp::neg(c, ring_->p));
        return r;
    }
    Polynomial operator*(const Polynomial& g) const {
        require_same_ring(ring_, g.ring_);
        Polynomial r(ring_);
        for (const auto& [m1, c1] : terms_)
            for (const auto& [m2, c2] : g.terms_)
                r.add_term(m1 * m2, fp::mul(c1, c2, ring_->p));
        return r;
    }
    Polynomial scalar_mul(std::int64_t c) const {
        Coeff v = fp::normalize(c, ring_->p);
        Polynomial r(ring_);
        if (v == 0) return r;
        for (const auto& [m, cf] : terms_) r.terms_.emplace(m, fp::mul(cf, v, ring_->p));
        return r;
    }
    Polynomial term_mul(const Monomial& m, Coeff c) const {
        Polynomial r(ring_);
        if (c % ring_->p == 0) return r;
        for (const auto& [mono, cf] : terms_)
            r.terms_.emplace(mono * m, fp::mul(cf, c, ring_->p));
        return r;
    }
    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(ring_, 1);
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = e > 1 ? base * base : base;
            e >>= 1;
        }
        return r;
    }

    // Exact division by a monomial; partial operation.
    Polynomial divide_by_monomial(const Monomial& m) const {
        Polynomial r(ring_);
        for (const auto& [mono, c] : terms_) {
            if (!m.divides(mono))
                throw ArithmeticError("monomial division with nonzero remainder");
            r.terms_.emplace(mono / m, c);
        }
        return r;
    }

    bool operator==(const Polynomial& g) const {
        return same_ring(ring_, g.ring_) &&
               std::equal(terms_.begin(), terms_.end(), g.terms_.begin(), g.terms_.end(),
                          [](const auto& a, const auto& b) {
                              return a.first == b.first && a.second == b.second;
                          }) &&
               terms_.size() == g.terms_.size();
    }
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    // Leading term with respect to an arbitrary order (linear scan; the stored
    // order need not match).
    std::pair<Monomial, Coeff> leading_term(const MonomialOrder& o) const {
        if (terms_.empty()) throw ArithmeticError("leading term of zero polynomial");
        auto it = terms_.begin();
        auto best = it;
        for (++it; it != terms_.end(); ++it)
            if (o.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    void add_term(const Monomial& m, Coeff c) {
        if (c % ring_->p == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second = fp::add(it->second, c, ring_->p);
            if (it->second == 0) terms_.erase(it);
        }
    }

   private:
    Ring ring_;
    TermMap terms_;
};

// ---------------------------------------------------------------------------
// Frobenius power and p-basis decomposition.
// ---------------------------------------------------------------------------

// f^(p^e). Over the prime field this scales every exponent vector by p^e.
inline Polynomial frobenius_power(const Polynomial& f, std::uint32_t e) {
    if (e == 0) return f;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= f.ring()->p;
        if (q > kMaxExponent) throw ArithmeticError("p^e overflow in Frobenius power");
    }
    Polynomial r(f.ring());
    for (const auto& [m, c] : f.terms()) r.add_term(m.scaled(q), c);  // c^(p^e) = c
    return r;
}

// The unique decomposition f = sum_a (g_a)^p * x^a over a in [0,p)^d.
// Only nonzero g_a are present in the result.
inline std::map<Monomial, Polynomial, MonoLess> p_basis_decompose(const Polynomial& f) {
    const Ring& R = f.ring();
    const std::uint32_t p = R->p;
    std::map<Monomial, Polynomial, MonoLess> out{MonoLess{R->default_order}};
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> a(R->d), inner(R->d);
        for (std::size_t i = 0; i < R->d; ++i) {
            a[i] = m[i] % p;
            inner[i] = m[i] / p;
        }
        Monomial am(std::move(a));
        auto it = out.find(am);
        if (it == out.end()) it = out.emplace(am, Polynomial::zero(R)).first;
        it->second.add_term(Monomial(std::move(inner)), c);  // c^(1/p) = c in F_p
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

// ---------------------------------------------------------------------------
// Canonical printing: terms in descending default order; parses back
// identically through the session grammar.
// ---------------------------------------------------------------------------

inline std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const Ring& R = f.ring();
    std::ostringstream os;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) {
            os << c;
            continue;
        }
        bool lead = true;
        if (c != 1) {
            os << c;
            lead = false;
        }
        for (std::size_t i = 0; i < R->d; ++i) {
            if (m[i] == 0) continue;
            if (!lead) os << "*";
            lead = false;
            os << R->var_names[i];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

}  // namespace frobkit

#endif
