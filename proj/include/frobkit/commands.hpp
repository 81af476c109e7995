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

#ifndef FROBKIT_COMMANDS_HPP
#define FROBKIT_COMMANDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobkit/session.hpp"
#include "frobkit/splitcompat.hpp"

namespace frobkit {

using Json = nlohmann::ordered_json;

struct CommandArgs {
    std::map<std::string, std::string> named;

    bool has(const std::string& key) const { return named.count(key) > 0; }
    std::string get(const std::string& key) const {
        auto it = named.find(key);
        if (it == named.end()) throw ConfigError("missing required option --" + key);
        return it->second;
    }
    std::optional<std::string> opt(const std::string& key) const {
        auto it = named.find(key);
        if (it == named.end()) return std::nullopt;
        return it->second;
    }
    std::uint32_t get_uint(const std::string& key, std::uint32_t fallback) const {
        auto v = opt(key);
        if (!v) return fallback;
        try {
            unsigned long n = std::stoul(*v);
            if (n > kMaxExponent) throw ConfigError("--" + key + " exceeds the supported range");
            return static_cast<std::uint32_t>(n);
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            throw ConfigError("--" + key + " expects a non-negative integer");
        }
    }
    std::uint32_t require_uint(const std::string& key) const {
        get(key);
        return get_uint(key, 0);
    }
};

namespace cmd {

inline Json gens_json(const Submodule& w) {
    auto gens = canonical_generators(w);
    Json out = Json::array();
    for (const auto& g : gens) {
        if (w.ambient_rank == 1) {
            out.push_back(to_string(g[0]));
        } else {
            Json vec = Json::array();
            for (const auto& f : g) vec.push_back(to_string(f));
            out.push_back(vec);
        }
    }
    return out;
}

inline Json matrix_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline PolyVec parse_element(const SessionFile& s, const std::string& text, std::size_t rank) {
    std::vector<std::string> parts = detail::split(text, ',');
    if (parts.size() != rank)
        throw ShapeError("element has " + std::to_string(parts.size()) +
                         " coordinates, expected " + std::to_string(rank));
    PolyVec v;
    for (const auto& part : parts) v.push_back(parse_expression(s.ring, part));
    return v;
}

// Picks the submodule argument: --ideal or --module (a matrix whose columns
// generate), whichever is present.
inline std::pair<std::string, Submodule> submodule_arg(const SessionFile& s,
                                                       const CommandArgs& args) {
    for (const char* key : {"ideal", "module", "submodule"})
        if (args.has(key)) return {args.get(key), session_submodule(s, args.get(key))};
    throw ConfigError("expected --ideal, --module or --submodule");
}

inline ThetaPresentation presentation_arg(const SessionFile& s, const CommandArgs& args) {
    auto [a, b] = session_presentation_matrices(s, args.get("presentation"));
    return ThetaPresentation::validate(a, b);
}

// --- individual commands ---------------------------------------------------

inline Json cmd_gb(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    auto [name, w] = submodule_arg(s, args);
    MonomialOrder order = s.ring->default_order;
    if (auto o = args.opt("order")) order = order_from_name(*o);
    inputs["submodule"] = name;
    inputs["order"] = order.name();
    Submodule gb = groebner_basis(w, order);

    // certificate: every S-pair of the returned basis reduces to zero
    const auto& basis = gb.cached_basis;
    bool spairs_ok = true;
    for (std::size_t i = 0; i < basis->vectors.size() && spairs_ok; ++i)
        for (std::size_t j = i + 1; j < basis->vectors.size() && spairs_ok; ++j) {
            if (basis->lts[i].pos != basis->lts[j].pos) continue;
            Monomial l = Monomial::lcm(basis->lts[i].mono, basis->lts[j].mono);
            PolyVec sp = vec_sub(vec_term_mul(basis->vectors[i], l / basis->lts[i].mono, 1),
                                 vec_term_mul(basis->vectors[j], l / basis->lts[j].mono, 1));
            if (!is_zero_vec(normal_form(sp, *basis))) spairs_ok = false;
        }

    Json res;
    res["result"] = gens_json(gb);
    res["certificates"] = Json{{"s_pairs_reduce_to_zero", spairs_ok},
                               {"basis_size", basis->vectors.size()}};
    return res;
}

inline Json cmd_member(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    auto [name, w] = submodule_arg(s, args);
    PolyVec v = parse_element(s, args.get("element"), w.ambient_rank);
    inputs["submodule"] = name;
    inputs["element"] = args.get("element");
    auto rb = basis_of(w);
    std::vector<Polynomial> quotients(rb->vectors.size(), Polynomial::zero(s.ring));
    PolyVec nf = reduce_full(v, rb->vectors, rb->lts, rb->order, &quotients);
    bool member = is_zero_vec(nf);

    Json cert;
    if (member) {
        Json combo = Json::array();
        for (const auto& q : quotients) combo.push_back(to_string(q));
        cert["combination_over_basis"] = combo;
        Json basis = Json::array();
        for (const auto& g : rb->vectors) {
            if (w.ambient_rank == 1) {
                basis.push_back(to_string(g[0]));
            } else {
                Json vec = Json::array();
                for (const auto& f : g) vec.push_back(to_string(f));
                basis.push_back(vec);
            }
        }
        cert["basis"] = basis;
    } else {
        Json nfj = Json::array();
        for (const auto& f : nf) nfj.push_back(to_string(f));
        cert["normal_form"] = w.ambient_rank == 1 ? Json(to_string(nf[0])) : Json(nfj);
    }
    Json res;
    res["result"] = member;
    res["certificates"] = cert;
    return res;
}

inline Json cmd_colon(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    Submodule i = session_submodule(s, args.get("ideal"));
    Submodule j = session_submodule(s, args.get("by"));
    inputs["ideal"] = args.get("ideal");
    inputs["by"] = args.get("by");
    Submodule q = groebner_basis(colon_ideal(i, j));
    // adjunction spot check: r in (I : J) iff r J subseteq I, on the generators
    bool ok = true;
    for (const auto& r : q.generators)
        for (const auto& g : j.generators)
            if (!membership(r[0] * g[0], i)) ok = false;
    Json res;
    res["result"] = gens_json(q);
    res["certificates"] = Json{{"colon_adjunction_checked", ok}};
    return res;
}

inline Json cmd_intersect(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    Submodule i = session_submodule(s, args.get("ideal"));
    Submodule j = session_submodule(s, args.get("with"));
    inputs["ideal"] = args.get("ideal");
    inputs["with"] = args.get("with");
    Submodule meet = groebner_basis(ideal_intersection(i, j));
    bool ok = true;
    for (const auto& g : meet.generators)
        if (!membership(g[0], i) || !membership(g[0], j)) ok = false;
    Json res;
    res["result"] = gens_json(meet);
    res["certificates"] = Json{{"mutual_membership_checked", ok}};
    return res;
}

inline Json cmd_bracket(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    std::uint32_t e = args.get_uint("e", 1);
    inputs["e"] = e;
    Json res;
    if (args.has("matrix")) {
        PolyMatrix m = session_matrix(s, args.get("matrix"));
        inputs["matrix"] = args.get("matrix");
        res["result"] = matrix_json(bracket_power(m, e));
    } else {
        auto [name, w] = submodule_arg(s, args);
        inputs["submodule"] = name;
        res["result"] = gens_json(groebner_basis(bracket_power(w, e)));
    }
    res["certificates"] = Json::object();
    return res;
}

inline Json cmd_root(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    auto [name, w] = submodule_arg(s, args);
    std::uint32_t e = args.get_uint("e", 1);
    inputs["submodule"] = name;
    inputs["e"] = e;
    Submodule root = groebner_basis(frobenius_root(w, e));
    // adjunction certificate: W subseteq root^[p^e]
    bool ok = is_subset(w, bracket_power(root, e));
    Json res;
    res["result"] = gens_json(root);
    res["certificates"] = Json{{"bracket_contains_input", ok}};
    return res;
}

inline Json cmd_trace(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    Polynomial f = session_poly(s, args.get("poly"));
    inputs["poly"] = args.get("poly");
    Json res;
    res["result"] = to_string(trace(f));
    res["certificates"] = Json::object();
    return res;
}

inline Json cmd_solve_hom(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    Submodule i = session_submodule(s, args.get("I"));
    Submodule j = session_submodule(s, args.get("J"));
    Polynomial u = session_poly(s, args.get("u"));
    Polynomial v = session_poly(s, args.get("v"));
    inputs["I"] = args.get("I");
    inputs["J"] = args.get("J");
    inputs["u"] = args.get("u");
    inputs["v"] = args.get("v");
    std::uint32_t bound;
    if (args.has("degree-bound")) {
        bound = args.require_uint("degree-bound");
    } else {
        // derive through the solver's automatic rule (requires zero ideals)
        SemilinearProblem probe(u, v, i, j);
        SolutionSpace sol = solve_semilinear(probe);
        std::int64_t maxdeg = 0;
        for (const auto& b : sol.basis) maxdeg = std::max(maxdeg, b.total_degree());
        bound = static_cast<std::uint32_t>(std::max<std::int64_t>(maxdeg, 0));
    }
    inputs["degree_bound"] = bound;
    HomSet hs = hom_set(i, u, j, v, bound);
    Json cosets = Json::array();
    for (const auto& w : hs.cosets) cosets.push_back(to_string(w));
    Json res;
    res["result"] = Json{{"cosets", cosets}, {"count", hs.cosets.size()}};
    res["certificates"] = Json{{"solution_space_dimension", hs.solution_dimension},
                               {"degree_bound", hs.degree_bound}};
    return res;
}

inline Json cmd_validate(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    inputs["presentation"] = args.get("presentation");
    ThetaPresentation pres = presentation_arg(s, args);
    Json res;
    res["result"] = Json{{"valid", true}, {"alpha", pres.alpha()}, {"beta", pres.beta()}};
    res["certificates"] = Json{{"columns_checked", pres.a().cols()}};
    return res;
}

inline Json cmd_kchain(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    inputs["presentation"] = args.get("presentation");
    std::uint32_t cap = args.get_uint("cap", kDefaultChainCap);
    inputs["cap"] = cap;
    ThetaPresentation pres = presentation_arg(s, args);
    KChain chain = k_chain(pres, cap);
    Json entries = Json::array();
    for (const auto& k : chain.entries) entries.push_back(gens_json(k));
    Json res;
    res["result"] = Json{{"entries", entries},
                         {"stabilization_index", chain.stabilization_index
                                                     ? Json(*chain.stabilization_index)
                                                     : Json(nullptr)}};
    res["certificates"] = Json{{"ascent_checked", true}};
    if (!chain.stabilization_index)
        throw ResourceCapError("K-chain did not stabilize within the cap of " +
                               std::to_string(cap) + " steps");
    return res;
}

inline Json cmd_hsl(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    inputs["presentation"] = args.get("presentation");
    std::uint32_t cap = args.get_uint("cap", kDefaultChainCap);
    inputs["cap"] = cap;
    ThetaPresentation pres = presentation_arg(s, args);
    KChain chain = k_chain(pres, cap);
    auto order = nilpotency_order(pres, cap);
    Json res;
    res["result"] = order ? Json(*order) : Json(nullptr);
    res["certificates"] =
        Json{{"stabilization_index",
              chain.stabilization_index ? Json(*chain.stabilization_index) : Json(nullptr)}};
    return res;
}

inline Json cmd_nilpart(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    inputs["presentation"] = args.get("presentation");
    std::uint32_t cap = args.get_uint("cap", kDefaultChainCap);
    inputs["cap"] = cap;
    ThetaPresentation pres = presentation_arg(s, args);
    NilChainResult nil = nil_chain(pres, cap);
    Json res;
    res["result"] = gens_json(groebner_basis(nil.nil_dual));
    res["certificates"] = Json{{"chain_stabilization", nil.stabilization}};
    return res;
}

inline Json cmd_stablepart(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    inputs["presentation"] = args.get("presentation");
    std::uint32_t cap = args.get_uint("cap", kDefaultChainCap);
    inputs["cap"] = cap;
    ThetaPresentation pres = presentation_arg(s, args);
    KChain chain = k_chain(pres, cap);
    const Submodule& k = detail::stabilized_entry(chain);
    Json res;
    res["result"] = gens_json(groebner_basis(k));
    res["certificates"] = Json{{"stabilization_index", *chain.stabilization_index}};
    return res;
}

inline Json cmd_compatible(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    NearSplitting split(session_splitting_matrix(s, args.get("splitting")));
    auto [name, v] = submodule_arg(s, args);
    inputs["splitting"] = args.get("splitting");
    inputs["submodule"] = name;
    bool via_membership = is_compatible(split, v);
    bool via_root = is_compatible_direct(split, v);
    Json res;
    res["result"] = via_membership;
    res["certificates"] =
        Json{{"membership_route", via_membership}, {"root_route", via_root}};
    return res;
}

inline Json cmd_closure(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    NearSplitting split(session_splitting_matrix(s, args.get("splitting")));
    auto [name, v] = submodule_arg(s, args);
    inputs["splitting"] = args.get("splitting");
    inputs["submodule"] = name;
    std::uint32_t cap = args.get_uint("cap", 50);
    inputs["cap"] = cap;
    Submodule closed = compatible_closure(split, v, cap);
    Json res;
    res["result"] = gens_json(closed);
    res["certificates"] = Json{{"is_compatible", is_compatible(split, closed)},
                               {"contains_input", is_subset(v, closed)}};
    return res;
}

inline Json cmd_enumerate(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    NearSplitting split(session_splitting_matrix(s, args.get("splitting")));
    inputs["splitting"] = args.get("splitting");
    Json res;
    if (args.has("kmax")) {
        std::uint32_t kmax = args.require_uint("kmax");
        inputs["kmax"] = kmax;
        MonomialEnumeration en = enumerate_compatible_monomial(split, kmax);
        Json ideals = Json::array();
        for (const auto& ideal : en.ideals) ideals.push_back(gens_json(ideal));
        res["result"] = Json{{"ideals", ideals},
                             {"count", en.ideals.size()},
                             {"complete", "within-constraint"}};
        res["certificates"] = Json{{"constraint", Json{{"monomial_degree_max", kmax}}}};
    } else {
        std::uint32_t s_win = args.get_uint("window", 4);
        inputs["window"] = s_win;
        WindowEnumeration en = enumerate_compatible_window(split, TruncationWindow{s_win});
        Json proper = Json::array();
        for (const auto& entry : en.proper) {
            Json basis = Json::array();
            for (const auto& b : entry.stable.basis) basis.push_back(to_string(b));
            proper.push_back(Json{{"dimension", entry.stable.dimension},
                                  {"basis", basis},
                                  {"annihilator", gens_json(entry.annihilator)}});
        }
        res["result"] = Json{{"proper_submodules", proper},
                             {"full_module_flagged_separately", true},
                             {"complete", "within-constraint"}};
        res["certificates"] = Json{{"constraint", Json{{"window", s_win}}}};
    }
    return res;
}

inline Json cmd_oracle_nilpotent(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    std::uint32_t s_win = args.get_uint("window", 4);
    std::uint32_t emax = args.get_uint("emax", 10);
    inputs["window"] = s_win;
    inputs["emax"] = emax;
    PolyMatrix a(s.ring, 1, 1), b(s.ring, 1, 1);
    if (args.has("presentation")) {
        inputs["presentation"] = args.get("presentation");
        ThetaPresentation pres = presentation_arg(s, args);
        a = pres.a();
        b = pres.b();
    } else {
        inputs["splitting"] = args.get("splitting");
        b = session_splitting_matrix(s, args.get("splitting"));
        a = PolyMatrix(s.ring, b.rows(), 1);
    }
    TruncationWindow win{s_win};
    auto e = oracle_nilpotency(a, b, win, emax);
    Json res;
    res["result"] = e ? Json(*e) : Json(nullptr);
    res["certificates"] = Json{{"annihilator_dimension", ann_matrix(a, win).size()}};
    return res;
}

inline Json cmd_oracle_submodules(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    std::uint32_t s_win = args.get_uint("window", 4);
    inputs["window"] = s_win;
    PolyMatrix a(s.ring, 1, 1), b(s.ring, 1, 1);
    if (args.has("presentation")) {
        inputs["presentation"] = args.get("presentation");
        ThetaPresentation pres = presentation_arg(s, args);
        a = pres.a();
        b = pres.b();
    } else {
        inputs["splitting"] = args.get("splitting");
        b = session_splitting_matrix(s, args.get("splitting"));
        a = PolyMatrix(s.ring, b.rows(), 1);
    }
    auto stables = oracle_stable_submodules(b, a, TruncationWindow{s_win});
    Json list = Json::array();
    for (const auto& st : stables) {
        Json basis = Json::array();
        for (const auto& w : st.basis) basis.push_back(to_string(w));
        list.push_back(Json{{"dimension", st.dimension}, {"basis", basis}});
    }
    Json res;
    res["result"] = list;
    res["certificates"] = Json{{"window", s_win},
                               {"full_module_flagged_separately", true},
                               {"complete", "within-constraint"}};
    return res;
}

inline Json cmd_injectivity(const SessionFile& s, const CommandArgs& args, Json& inputs) {
    NearSplitting split(session_splitting_matrix(s, args.get("splitting")));
    inputs["splitting"] = args.get("splitting");
    Json res;
    res["result"] = splitting_injectivity(split);
    res["certificates"] = Json{{"criterion", "kernel of theta vanishes"}};
    return res;
}

}  // namespace cmd

inline Json run_command(const SessionFile& session, const std::string& command,
                        const CommandArgs& args) {
    Json inputs = Json::object();
    Json body;
    if (command == "gb") body = cmd::cmd_gb(session, args, inputs);
    else if (command == "member") body = cmd::cmd_member(session, args, inputs);
    else if (command == "colon") body = cmd::cmd_colon(session, args, inputs);
    else if (command == "intersect") body = cmd::cmd_intersect(session, args, inputs);
    else if (command == "bracket") body = cmd::cmd_bracket(session, args, inputs);
    else if (command == "root") body = cmd::cmd_root(session, args, inputs);
    else if (command == "trace") body = cmd::cmd_trace(session, args, inputs);
    else if (command == "solve-hom") body = cmd::cmd_solve_hom(session, args, inputs);
    else if (command == "validate") body = cmd::cmd_validate(session, args, inputs);
    else if (command == "kchain") body = cmd::cmd_kchain(session, args, inputs);
    else if (command == "hsl") body = cmd::cmd_hsl(session, args, inputs);
    else if (command == "nilpart") body = cmd::cmd_nilpart(session, args, inputs);
    else if (command == "stablepart") body = cmd::cmd_stablepart(session, args, inputs);
    else if (command == "compatible") body = cmd::cmd_compatible(session, args, inputs);
    else if (command == "closure") body = cmd::cmd_closure(session, args, inputs);
    else if (command == "enumerate") body = cmd::cmd_enumerate(session, args, inputs);
    else if (command == "oracle-nilpotent") body = cmd::cmd_oracle_nilpotent(session, args, inputs);
    else if (command == "oracle-submodules") body = cmd::cmd_oracle_submodules(session, args, inputs);
    else if (command == "injectivity") body = cmd::cmd_injectivity(session, args, inputs);
    else throw ConfigError("unknown command '" + command + "'");

    Json out;
    out["command"] = command;
    out["inputs"] = inputs;
    out["result"] = body["result"];
    out["certificates"] = body["certificates"];
    return out;
}

}  // namespace frobkit

#endif
