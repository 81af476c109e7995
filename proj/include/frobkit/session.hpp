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

#ifndef FROBKIT_SESSION_HPP
#define FROBKIT_SESSION_HPP

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frobkit/groebner.hpp"
#include "frobkit/polymatrix.hpp"

namespace frobkit {

// ---------------------------------------------------------------------------
// The declarative session grammar (line-oriented):
//   ring p=<prime> vars=<id>(,<id>)* [order=lex|grevlex]
//   poly <name> = <expr>
//   ideal <name> = { <expr>(, <expr>)* }
//   matrix <name> = [ [<expr>,...], ... ]
//   presentation <name> = (A=<matrix>, B=<matrix>)
//   splitting <name> = <matrix>
// <matrix> on the right-hand side of presentation/splitting is either the
// name of a bound matrix or an inline literal. Expressions admit + - * ^,
// integer literals and parentheses. Lines starting with # are comments.
// ---------------------------------------------------------------------------

struct SessionFile {
    struct Binding {
        enum class Kind { poly, ideal, matrix, presentation, splitting };
        Kind kind;
        std::string name;
        std::optional<Polynomial> poly;
        std::vector<Polynomial> ideal_gens;
        std::optional<PolyMatrix> matrix;       // matrix bindings and inline literals
        std::string a_ref, b_ref;               // presentation references (empty = inline)
        std::optional<PolyMatrix> a_inline, b_inline;
        std::string splitting_ref;              // splitting reference (empty = inline)
    };

    Ring ring;
    std::uint32_t p = 2;
    std::vector<std::string> vars;
    bool order_explicit = false;
    std::string order_name = "grevlex";
    std::vector<Binding> bindings;

    const Binding* find(const std::string& name) const {
        for (const auto& b : bindings)
            if (b.name == name) return &b;
        return nullptr;
    }
};

namespace sessiondetail {

struct Token {
    enum class Type { ident, number, symbol, end };
    Type type = Type::end;
    std::string text;
    std::size_t col = 0;
};

class LineLexer {
   public:
    LineLexer(std::string line, std::size_t line_no)
        : line_(std::move(line)), line_no_(line_no) {
        tokenize();
    }

    const Token& peek() const { return tokens_[pos_]; }
    Token next() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
    bool at_end() const { return peek().type == Token::Type::end; }
    std::size_t line_no() const { return line_no_; }

    [[noreturn]] void fail(const std::string& msg) const {
        const Token& t = peek();
        throw ParseError(msg, line_no_, t.col + 1, t.text);
    }

    Token expect_symbol(const std::string& s) {
        if (peek().type != Token::Type::symbol || peek().text != s)
            fail("expected '" + s + "'");
        return next();
    }
    Token expect_ident() {
        if (peek().type != Token::Type::ident) fail("expected an identifier");
        return next();
    }
    Token expect_number() {
        if (peek().type != Token::Type::number) fail("expected a number");
        return next();
    }

   private:
    void tokenize() {
        std::size_t i = 0;
        while (i < line_.size()) {
            char c = line_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
                continue;
            }
            Token t;
            t.col = i;
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::size_t j = i;
                while (j < line_.size() &&
                       (std::isalnum(static_cast<unsigned char>(line_[j])) || line_[j] == '_'))
                    ++j;
                t.type = Token::Type::ident;
                t.text = line_.substr(i, j - i);
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t j = i;
                while (j < line_.size() && std::isdigit(static_cast<unsigned char>(line_[j]))) ++j;
                t.type = Token::Type::number;
                t.text = line_.substr(i, j - i);
                i = j;
            } else {
                t.type = Token::Type::symbol;
                t.text = std::string(1, c);
                ++i;
            }
            tokens_.push_back(std::move(t));
        }
        Token end;
        end.type = Token::Type::end;
        end.col = line_.size();
        tokens_.push_back(end);
    }

    const std::string line_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
    std::vector<Token> tokens_;
};

inline std::uint32_t parse_uint(LineLexer& lex, const Token& t) {
    unsigned long v = 0;
    try {
        v = std::stoul(t.text);
    } catch (...) {
        lex.fail("malformed number");
    }
    if (v > kMaxExponent) lex.fail("number exceeds the 2^31 exponent guard");
    return static_cast<std::uint32_t>(v);
}

// expr := term (('+'|'-') term)*
// term := factor ('*' factor)*
// factor := atom ('^' number)?
// atom := '(' expr ')' | ident | number | '-' factor
class ExprParser {
   public:
    ExprParser(LineLexer& lex, const Ring& ring) : lex_(lex), ring_(ring) {}

    Polynomial parse() { return expr(); }

   private:
    Polynomial expr() {
        Polynomial acc = term();
        while (is_symbol("+") || is_symbol("-")) {
            std::string op = lex_.next().text;
            Polynomial rhs = term();
            acc = op == "+" ? acc + rhs : acc - rhs;
        }
        return acc;
    }
    Polynomial term() {
        Polynomial acc = factor();
        while (is_symbol("*")) {
            lex_.next();
            acc = acc * factor();
        }
        return acc;
    }
    Polynomial factor() {
        Polynomial base = atom();
        if (is_symbol("^")) {
            lex_.next();
            Token t = lex_.expect_number();
            return base.pow(parse_uint(lex_, t));
        }
        return base;
    }
    Polynomial atom() {
        if (is_symbol("(")) {
            lex_.next();
            Polynomial inner = expr();
            lex_.expect_symbol(")");
            return inner;
        }
        if (is_symbol("-")) {
            lex_.next();
            return -factor();
        }
        const Token& t = lex_.peek();
        if (t.type == Token::Type::number) {
            lex_.next();
            unsigned long v = 0;
            try {
                v = std::stoul(t.text);
            } catch (...) {
                lex_.fail("malformed integer literal");
            }
            return Polynomial::constant(ring_, static_cast<std::int64_t>(v % ring_->p));
        }
        if (t.type == Token::Type::ident) {
            for (std::size_t i = 0; i < ring_->d; ++i)
                if (ring_->var_names[i] == t.text) {
                    lex_.next();
                    return Polynomial::variable(ring_, i);
                }
            lex_.fail("unknown variable '" + t.text + "'");
        }
        lex_.fail("expected an expression");
    }
    bool is_symbol(const std::string& s) const {
        return lex_.peek().type == Token::Type::symbol && lex_.peek().text == s;
    }

    LineLexer& lex_;
    const Ring& ring_;
};

inline PolyMatrix parse_matrix_literal(LineLexer& lex, const Ring& ring) {
    lex.expect_symbol("[");
    std::vector<std::vector<Polynomial>> rows;
    while (true) {
        lex.expect_symbol("[");
        std::vector<Polynomial> row;
        if (!(lex.peek().type == Token::Type::symbol && lex.peek().text == "]")) {
            while (true) {
                row.push_back(ExprParser(lex, ring).parse());
                if (lex.peek().type == Token::Type::symbol && lex.peek().text == ",") {
                    lex.next();
                    continue;
                }
                break;
            }
        }
        lex.expect_symbol("]");
        if (!rows.empty() && rows.front().size() != row.size())
            lex.fail("ragged matrix rows");
        rows.push_back(std::move(row));
        if (lex.peek().type == Token::Type::symbol && lex.peek().text == ",") {
            lex.next();
            continue;
        }
        break;
    }
    lex.expect_symbol("]");
    PolyMatrix m(ring, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace sessiondetail

// Parse a single polynomial expression over a ring (used for CLI --element).
inline Polynomial parse_expression(const Ring& ring, const std::string& text,
                                   std::size_t line_no = 1) {
    sessiondetail::LineLexer lex(text, line_no);
    Polynomial f = sessiondetail::ExprParser(lex, ring).parse();
    if (!lex.at_end()) lex.fail("trailing input after expression");
    return f;
}

inline SessionFile parse_session(const std::string& text) {
    SessionFile session;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool ring_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        // strip trailing carriage returns from files written elsewhere
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        sessiondetail::LineLexer lex(line, line_no);
        std::string keyword = lex.expect_ident().text;

        if (keyword == "ring") {
            if (ring_seen) lex.fail("ring already declared");
            std::uint32_t p = 0;
            std::vector<std::string> vars;
            std::string order_name = "grevlex";
            bool order_explicit = false;
            while (!lex.at_end()) {
                std::string key = lex.expect_ident().text;
                lex.expect_symbol("=");
                if (key == "p") {
                    p = sessiondetail::parse_uint(lex, lex.expect_number());
                } else if (key == "vars") {
                    vars.push_back(lex.expect_ident().text);
                    while (lex.peek().type == sessiondetail::Token::Type::symbol &&
                           lex.peek().text == ",") {
                        lex.next();
                        vars.push_back(lex.expect_ident().text);
                    }
                } else if (key == "order") {
                    order_name = lex.expect_ident().text;
                    if (order_name != "lex" && order_name != "grevlex")
                        lex.fail("order must be lex or grevlex");
                    order_explicit = true;
                } else {
                    lex.fail("unknown ring attribute '" + key + "'");
                }
            }
            if (p == 0) lex.fail("ring declaration needs p=<prime>");
            if (vars.empty()) lex.fail("ring declaration needs vars=<id>,...");
            try {
                session.ring = make_ring(p, vars, order_from_name(order_name));
            } catch (const ConfigError& e) {
                lex.fail(e.what());
            }
            session.p = p;
            session.vars = vars;
            session.order_name = order_name;
            session.order_explicit = order_explicit;
            ring_seen = true;
            continue;
        }

        if (!ring_seen) lex.fail("the ring must be declared before any binding");

        SessionFile::Binding binding;
        binding.name = lex.expect_ident().text;
        if (session.find(binding.name)) lex.fail("duplicate name '" + binding.name + "'");
        lex.expect_symbol("=");

        if (keyword == "poly") {
            binding.kind = SessionFile::Binding::Kind::poly;
            binding.poly = sessiondetail::ExprParser(lex, session.ring).parse();
        } else if (keyword == "ideal") {
            binding.kind = SessionFile::Binding::Kind::ideal;
            lex.expect_symbol("{");
            while (true) {
                binding.ideal_gens.push_back(
                    sessiondetail::ExprParser(lex, session.ring).parse());
                if (lex.peek().type == sessiondetail::Token::Type::symbol &&
                    lex.peek().text == ",") {
                    lex.next();
                    continue;
                }
                break;
            }
            lex.expect_symbol("}");
        } else if (keyword == "matrix") {
            binding.kind = SessionFile::Binding::Kind::matrix;
            binding.matrix = sessiondetail::parse_matrix_literal(lex, session.ring);
        } else if (keyword == "presentation") {
            binding.kind = SessionFile::Binding::Kind::presentation;
            lex.expect_symbol("(");
            for (int part = 0; part < 2; ++part) {
                std::string which = lex.expect_ident().text;
                if (which != "A" && which != "B") lex.fail("expected A= or B=");
                lex.expect_symbol("=");
                std::string ref;
                std::optional<PolyMatrix> inline_m;
                if (lex.peek().type == sessiondetail::Token::Type::ident) {
                    ref = lex.next().text;
                    const auto* m = session.find(ref);
                    if (!m || m->kind != SessionFile::Binding::Kind::matrix)
                        lex.fail("'" + ref + "' is not a bound matrix");
                } else {
                    inline_m = sessiondetail::parse_matrix_literal(lex, session.ring);
                }
                if (which == "A") {
                    binding.a_ref = ref;
                    binding.a_inline = inline_m;
                } else {
                    binding.b_ref = ref;
                    binding.b_inline = inline_m;
                }
                if (part == 0) lex.expect_symbol(",");
            }
            lex.expect_symbol(")");
            // shape well-formedness at binding time
            const PolyMatrix& a = binding.a_ref.empty()
                                      ? *binding.a_inline
                                      : *session.find(binding.a_ref)->matrix;
            const PolyMatrix& b = binding.b_ref.empty()
                                      ? *binding.b_inline
                                      : *session.find(binding.b_ref)->matrix;
            if (b.rows() != b.cols() || b.rows() != a.rows())
                lex.fail("presentation shape mismatch: B must be square with the rows of A");
        } else if (keyword == "splitting") {
            binding.kind = SessionFile::Binding::Kind::splitting;
            if (lex.peek().type == sessiondetail::Token::Type::ident) {
                binding.splitting_ref = lex.next().text;
                const auto* m = session.find(binding.splitting_ref);
                if (!m || m->kind != SessionFile::Binding::Kind::matrix)
                    lex.fail("'" + binding.splitting_ref + "' is not a bound matrix");
                if (m->matrix->rows() != m->matrix->cols())
                    lex.fail("a splitting matrix must be square");
            } else {
                binding.matrix = sessiondetail::parse_matrix_literal(lex, session.ring);
                if (binding.matrix->rows() != binding.matrix->cols())
                    lex.fail("a splitting matrix must be square");
            }
        } else {
            lex.fail("unknown keyword '" + keyword + "'");
        }
        if (!lex.at_end()) lex.fail("trailing input after binding");
        session.bindings.push_back(std::move(binding));
    }
    if (!ring_seen) throw ParseError("session has no ring declaration", 1, 1);
    return session;
}

// ---------------------------------------------------------------------------
// Canonical printing; parse(print(parse(text))) == parse(text).
// ---------------------------------------------------------------------------

namespace sessiondetail {

inline std::string matrix_literal(const PolyMatrix& m) {
    std::ostringstream os;
    os << "[ ";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ", ";
            os << to_string(m.at(i, j));
        }
        os << "]";
    }
    os << " ]";
    return os.str();
}

}  // namespace sessiondetail

inline std::string print_session(const SessionFile& s) {
    std::ostringstream os;
    os << "ring p=" << s.p << " vars=";
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
        if (i) os << ",";
        os << s.vars[i];
    }
    if (s.order_explicit) os << " order=" << s.order_name;
    os << "\n";
    for (const auto& b : s.bindings) {
        switch (b.kind) {
            case SessionFile::Binding::Kind::poly:
                os << "poly " << b.name << " = " << to_string(*b.poly) << "\n";
                break;
            case SessionFile::Binding::Kind::ideal: {
                os << "ideal " << b.name << " = { ";
                for (std::size_t i = 0; i < b.ideal_gens.size(); ++i) {
                    if (i) os << ", ";
                    os << to_string(b.ideal_gens[i]);
                }
                os << " }\n";
                break;
            }
            case SessionFile::Binding::Kind::matrix:
                os << "matrix " << b.name << " = " << sessiondetail::matrix_literal(*b.matrix)
                   << "\n";
                break;
            case SessionFile::Binding::Kind::presentation:
                os << "presentation " << b.name << " = (A="
                   << (b.a_ref.empty() ? sessiondetail::matrix_literal(*b.a_inline) : b.a_ref)
                   << ", B="
                   << (b.b_ref.empty() ? sessiondetail::matrix_literal(*b.b_inline) : b.b_ref)
                   << ")\n";
                break;
            case SessionFile::Binding::Kind::splitting:
                os << "splitting " << b.name << " = "
                   << (b.splitting_ref.empty() ? sessiondetail::matrix_literal(*b.matrix)
                                               : b.splitting_ref)
                   << "\n";
                break;
        }
    }
    return os.str();
}

// Structural AST equality, for round-trip checks.
inline bool session_equal(const SessionFile& a, const SessionFile& b) {
    if (!(a.p == b.p && a.vars == b.vars && a.order_explicit == b.order_explicit &&
          a.order_name == b.order_name && a.bindings.size() == b.bindings.size()))
        return false;
    for (std::size_t i = 0; i < a.bindings.size(); ++i) {
        const auto& x = a.bindings[i];
        const auto& y = b.bindings[i];
        if (x.kind != y.kind || x.name != y.name) return false;
        if (x.poly.has_value() != y.poly.has_value()) return false;
        if (x.poly && !(*x.poly == *y.poly)) return false;
        if (x.ideal_gens.size() != y.ideal_gens.size()) return false;
        for (std::size_t k = 0; k < x.ideal_gens.size(); ++k)
            if (!(x.ideal_gens[k] == y.ideal_gens[k])) return false;
        if (x.matrix.has_value() != y.matrix.has_value()) return false;
        if (x.matrix && !(*x.matrix == *y.matrix)) return false;
        if (x.a_ref != y.a_ref || x.b_ref != y.b_ref || x.splitting_ref != y.splitting_ref)
            return false;
        if (x.a_inline.has_value() != y.a_inline.has_value()) return false;
        if (x.a_inline && !(*x.a_inline == *y.a_inline)) return false;
        if (x.b_inline.has_value() != y.b_inline.has_value()) return false;
        if (x.b_inline && !(*x.b_inline == *y.b_inline)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Binding lookups used by the command layer.
// ---------------------------------------------------------------------------

inline const SessionFile::Binding& require_binding(const SessionFile& s,
                                                   const std::string& name) {
    const auto* b = s.find(name);
    if (!b) throw ConfigError("unknown binding '" + name + "'");
    return *b;
}

inline Polynomial session_poly(const SessionFile& s, const std::string& name) {
    const auto& b = require_binding(s, name);
    if (b.kind != SessionFile::Binding::Kind::poly)
        throw ConfigError("'" + name + "' is not a polynomial binding");
    return *b.poly;
}

inline PolyMatrix session_matrix(const SessionFile& s, const std::string& name) {
    const auto& b = require_binding(s, name);
    if (b.kind == SessionFile::Binding::Kind::matrix) return *b.matrix;
    throw ConfigError("'" + name + "' is not a matrix binding");
}

// Ideals are rank-1 submodules; a matrix name is accepted where a general
// submodule is needed (its columns generate).
inline Submodule session_submodule(const SessionFile& s, const std::string& name) {
    const auto& b = require_binding(s, name);
    if (b.kind == SessionFile::Binding::Kind::ideal) return make_ideal(s.ring, b.ideal_gens);
    if (b.kind == SessionFile::Binding::Kind::matrix) return submodule_from_columns(*b.matrix);
    throw ConfigError("'" + name + "' is neither an ideal nor a matrix binding");
}

inline std::pair<PolyMatrix, PolyMatrix> session_presentation_matrices(
    const SessionFile& s, const std::string& name) {
    const auto& b = require_binding(s, name);
    if (b.kind != SessionFile::Binding::Kind::presentation)
        throw ConfigError("'" + name + "' is not a presentation binding");
    PolyMatrix a = b.a_ref.empty() ? *b.a_inline : *s.find(b.a_ref)->matrix;
    PolyMatrix bm = b.b_ref.empty() ? *b.b_inline : *s.find(b.b_ref)->matrix;
    return {a, bm};
}

inline PolyMatrix session_splitting_matrix(const SessionFile& s, const std::string& name) {
    const auto& b = require_binding(s, name);
    if (b.kind == SessionFile::Binding::Kind::splitting)
        return b.splitting_ref.empty() ? *b.matrix : *s.find(b.splitting_ref)->matrix;
    if (b.kind == SessionFile::Binding::Kind::matrix && b.matrix->rows() == b.matrix->cols())
        return *b.matrix;
    throw ConfigError("'" + name + "' is not a splitting binding");
}

}  // namespace frobkit

#endif
