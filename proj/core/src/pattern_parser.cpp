#include "patternforge/pattern_parser.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "patternforge/errors.hpp"

namespace patternforge {

namespace {

struct Token {
    enum class Kind { Ident, Int, Wildcard, LParen, RParen, Comma, Colon, Period, End };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws_and_comments();
        int line = line_, col = col_;
        if (pos_ >= text_.size()) return {Token::Kind::End, "", line, col};
        char c = text_[pos_];
        if (c == '(') return advance({Token::Kind::LParen, "(", line, col});
        if (c == ')') return advance({Token::Kind::RParen, ")", line, col});
        if (c == ',') return advance({Token::Kind::Comma, ",", line, col});
        if (c == ':') return advance({Token::Kind::Colon, ":", line, col});
        if (c == '.') return advance({Token::Kind::Period, ".", line, col});
        if (c == '_' && !is_ident_char(peek_at(pos_ + 1)))
            return advance({Token::Kind::Wildcard, "_", line, col});
        if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            consume();
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                consume();
            return {Token::Kind::Int, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) consume();
            return {Token::Kind::Ident, std::string(text_.substr(start, pos_ - start)), line, col};
        }
        throw Error(ErrorCode::SyntaxError, position(line, col) + "unexpected character '" +
                                                std::string(1, c) + "'");
    }

    static std::string position(int line, int col) {
        return "line " + std::to_string(line) + ", column " + std::to_string(col) + ": ";
    }

private:
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    char peek_at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }

    void consume() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    Token advance(Token t) {
        consume();
        return t;
    }

    void skip_ws_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') consume();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                consume();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

std::optional<ConstraintKind> constraint_from(std::string_view name) {
    if (name == "eq") return ConstraintKind::Eq;
    if (name == "neq") return ConstraintKind::Neq;
    if (name == "lt") return ConstraintKind::Lt;
    if (name == "leq") return ConstraintKind::Leq;
    if (name == "red") return ConstraintKind::Red;
    if (name == "green") return ConstraintKind::Green;
    return std::nullopt;
}

bool is_variable_name(const std::string& s) {
    return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

class Parser {
public:
    Parser(std::string_view text, const FactSchema& schema) : lexer_(text), schema_(schema) {
        tok_ = lexer_.next();
    }

    Pattern parse() {
        Pattern p;
        expect_keyword("root");
        p.projection = expect_variable();
        expect(Token::Kind::Period, "'.'");
        while (tok_.kind != Token::Kind::End) {
            p.subpatterns.push_back(parse_subpattern());
        }
        if (p.subpatterns.empty())
            throw err("expected at least one 'sub' block");
        derive_exports(p);
        return p;
    }

private:
    Token tok_;
    Lexer lexer_;
    const FactSchema& schema_;

    Error err(const std::string& msg) const {
        return Error(ErrorCode::SyntaxError, Lexer::position(tok_.line, tok_.col) + msg);
    }

    void bump() { tok_ = lexer_.next(); }

    void expect(Token::Kind kind, const std::string& what) {
        if (tok_.kind != kind) throw err("expected " + what + ", got '" + tok_.text + "'");
        bump();
    }

    void expect_keyword(const std::string& kw) {
        if (tok_.kind != Token::Kind::Ident || tok_.text != kw)
            throw err("expected '" + kw + "', got '" + tok_.text + "'");
        bump();
    }

    std::string expect_variable() {
        if (tok_.kind != Token::Kind::Ident || !is_variable_name(tok_.text))
            throw err("expected a variable (upper-case initial), got '" + tok_.text + "'");
        std::string name = tok_.text;
        bump();
        return name;
    }

    Subpattern parse_subpattern() {
        expect_keyword("sub");
        if (tok_.kind != Token::Kind::Ident) throw err("expected subpattern name");
        Subpattern sp;
        sp.name = tok_.text;
        bump();
        expect(Token::Kind::Colon, "':'");
        if (tok_.kind == Token::Kind::Period) throw err("empty subpattern body");
        sp.atoms.push_back(parse_atom());
        while (tok_.kind == Token::Kind::Comma) {
            bump();
            sp.atoms.push_back(parse_atom());
        }
        expect(Token::Kind::Period, "'.'");
        return sp;
    }

    struct RawTerm {
        Token tok;
    };

    std::vector<RawTerm> parse_args() {
        expect(Token::Kind::LParen, "'('");
        std::vector<RawTerm> args;
        if (tok_.kind == Token::Kind::RParen) {
            bump();
            return args;
        }
        args.push_back(take_term());
        while (tok_.kind == Token::Kind::Comma) {
            bump();
            args.push_back(take_term());
        }
        expect(Token::Kind::RParen, "')'");
        return args;
    }

    RawTerm take_term() {
        if (tok_.kind == Token::Kind::Wildcard || tok_.kind == Token::Kind::Int ||
            (tok_.kind == Token::Kind::Ident && is_variable_name(tok_.text))) {
            RawTerm t{tok_};
            bump();
            return t;
        }
        throw err("expected a term (variable, integer, or '_'), got '" + tok_.text + "'");
    }

    Term to_id_term(const RawTerm& raw) const {
        switch (raw.tok.kind) {
        case Token::Kind::Wildcard: return Term::wildcard();
        case Token::Kind::Ident: return Term::var(raw.tok.text);
        case Token::Kind::Int: {
            ObjectId v = 0;
            auto [p, ec] = std::from_chars(raw.tok.text.data(),
                                           raw.tok.text.data() + raw.tok.text.size(), v);
            if (ec != std::errc{} || p != raw.tok.text.data() + raw.tok.text.size())
                throw Error(ErrorCode::SyntaxError,
                            Lexer::position(raw.tok.line, raw.tok.col) + "invalid object id '" +
                                raw.tok.text + "'");
            return Term::const_id(v);
        }
        default: break;
        }
        throw Error(ErrorCode::Internal, "unreachable term kind");
    }

    Term to_prop_term(const RawTerm& raw) const {
        switch (raw.tok.kind) {
        case Token::Kind::Wildcard: return Term::wildcard();
        case Token::Kind::Ident: return Term::var(raw.tok.text);
        case Token::Kind::Int: {
            PropertyValue v = 0;
            auto [p, ec] = std::from_chars(raw.tok.text.data(),
                                           raw.tok.text.data() + raw.tok.text.size(), v);
            if (ec != std::errc{} || p != raw.tok.text.data() + raw.tok.text.size())
                throw Error(ErrorCode::SyntaxError,
                            Lexer::position(raw.tok.line, raw.tok.col) + "invalid property value '" +
                                raw.tok.text + "'");
            return Term::const_prop(v);
        }
        default: break;
        }
        throw Error(ErrorCode::Internal, "unreachable term kind");
    }

    Atom parse_atom() {
        if (tok_.kind != Token::Kind::Ident || is_variable_name(tok_.text))
            throw err("expected an atom name, got '" + tok_.text + "'");
        const Token name_tok = tok_;
        const std::string name = tok_.text;
        bump();
        auto args = parse_args();

        if (auto ck = constraint_from(name)) {
            ConstraintAtom c;
            c.kind = *ck;
            const bool id_args = (*ck == ConstraintKind::Red);
            for (const auto& raw : args)
                c.args.push_back(id_args ? to_id_term(raw) : to_prop_term(raw));
            return c;
        }

        const FactPredicate* pred = schema_.find(name);
        if (!pred)
            throw Error(ErrorCode::UnknownTypeName,
                        Lexer::position(name_tok.line, name_tok.col) + "unknown atom name '" +
                            name + "'");
        if (args.size() != pred->arity)
            throw Error(ErrorCode::ArityMismatch,
                        Lexer::position(name_tok.line, name_tok.col) + "'" + name + "' takes " +
                            std::to_string(pred->arity) + " arguments, got " +
                            std::to_string(args.size()));

        if (pred->is_vertex) {
            VertexAtom v;
            v.vtype = pred->vtype;
            v.id = to_id_term(args[pred->id_pos]);
            for (auto pos : pred->prop_pos) v.props.push_back(to_prop_term(args[pos]));
            return v;
        }
        EdgeAtom e;
        e.etype = pred->etype;
        e.src = to_id_term(args[pred->src_pos]);
        e.dst = to_id_term(args[pred->dst_pos]);
        for (auto pos : pred->prop_pos) e.props.push_back(to_prop_term(args[pos]));
        return e;
    }
};

std::string render_term(const Term& t) {
    switch (t.kind) {
    case Term::Kind::Variable: return t.name;
    case Term::Kind::ConstId: return std::to_string(t.id_value);
    case Term::Kind::ConstProp: return std::to_string(t.prop_value);
    case Term::Kind::Wildcard: return "_";
    }
    return "_";
}

std::string render_atom(const Atom& atom, const FactSchema& schema) {
    std::ostringstream os;
    if (const auto* c = std::get_if<ConstraintAtom>(&atom)) {
        os << to_string(c->kind) << "(";
        for (std::size_t i = 0; i < c->args.size(); ++i) {
            if (i) os << ", ";
            os << render_term(c->args[i]);
        }
        os << ")";
        return os.str();
    }
    const FactPredicate* pred = nullptr;
    std::vector<std::string> slots;
    if (const auto* v = std::get_if<VertexAtom>(&atom)) {
        pred = schema.find(v->vtype);
        if (!pred) throw Error(ErrorCode::UnknownTypeName,
                               "no predicate for " + std::string(to_string(v->vtype)));
        slots.assign(pred->arity, "_");
        slots[pred->id_pos] = render_term(v->id);
        for (std::size_t i = 0; i < v->props.size() && i < pred->prop_pos.size(); ++i)
            slots[pred->prop_pos[i]] = render_term(v->props[i]);
    } else {
        const auto& e = std::get<EdgeAtom>(atom);
        pred = schema.find(e.etype);
        if (!pred) throw Error(ErrorCode::UnknownTypeName,
                               "no predicate for edge " + std::string(to_string(e.etype)));
        slots.assign(pred->arity, "_");
        slots[pred->src_pos] = render_term(e.src);
        slots[pred->dst_pos] = render_term(e.dst);
        for (std::size_t i = 0; i < e.props.size() && i < pred->prop_pos.size(); ++i)
            slots[pred->prop_pos[i]] = render_term(e.props[i]);
    }
    os << pred->name << "(";
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) os << ", ";
        os << slots[i];
    }
    os << ")";
    return os.str();
}

} // namespace

Pattern parse_pattern(std::string_view text, const FactSchema& schema) {
    return Parser(text, schema).parse();
}

std::string unparse(const Pattern& p, const FactSchema& schema) {
    std::ostringstream os;
    os << "root " << p.projection << ".\n";
    for (const auto& sp : p.subpatterns) {
        os << "sub " << sp.name << ": ";
        for (std::size_t i = 0; i < sp.atoms.size(); ++i) {
            if (i) os << ", ";
            os << render_atom(sp.atoms[i], schema);
        }
        os << ".\n";
    }
    return os.str();
}

} // namespace patternforge
