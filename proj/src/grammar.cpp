#include "cellplus/grammar.hpp"

#include <cctype>

namespace cellplus {

namespace {

struct Token {
    enum Kind { Name, Int, Sym, Arrow, End } kind;
    std::string text;
    int line, col;
};

struct Lexer {
    explicit Lexer(const std::string& s) : src(s) { advance(); }

    const Token& peek() const { return tok; }

    Token take() {
        Token t = tok;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        fail(Error::Kind::Parse, "line " + std::to_string(tok.line) + " col " +
                                     std::to_string(tok.col) + ": " + msg);
    }

    Token expect_sym(const std::string& s) {
        if (tok.kind != Token::Sym || tok.text != s)
            error("expected '" + s + "', got '" + tok.text + "'");
        return take();
    }

    Token expect_name(const std::string& what) {
        if (tok.kind != Token::Name) error("expected " + what);
        return take();
    }

    bool at_sym(const std::string& s) const {
        return tok.kind == Token::Sym && tok.text == s;
    }
    bool at_name(const std::string& s) const {
        return tok.kind == Token::Name && tok.text == s;
    }

private:
    void advance() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) {
            if (src[pos] == '\n') { ++line; col = 1; } else ++col;
            ++pos;
        }
        tok.line = line;
        tok.col = col;
        if (pos >= src.size()) {
            tok = {Token::End, "<end>", line, col};
            return;
        }
        char c = src[pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
                take_char();
            tok.kind = Token::Name;
            tok.text = src.substr(start, pos - start);
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos])))
                take_char();
            tok.kind = Token::Int;
            tok.text = src.substr(start, pos - start);
            return;
        }
        if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
            take_char();
            take_char();
            tok = {Token::Arrow, "->", tok.line, tok.col};
            return;
        }
        take_char();
        tok.kind = Token::Sym;
        tok.text = std::string(1, c);
    }

    void take_char() {
        ++pos;
        ++col;
    }

    const std::string& src;
    size_t pos = 0;
    int line = 1, col = 1;
    Token tok;
};

long parse_exponent(Lexer& lx) {
    bool neg = false;
    if (lx.at_sym("-")) {
        lx.take();
        neg = true;
    }
    if (lx.peek().kind != Token::Int) lx.error("expected integer exponent");
    long e = std::stol(lx.take().text);
    return neg ? -e : e;
}

Word parse_word(Lexer& lx, const Presentation& p);

Word parse_factor(Lexer& lx, const Presentation& p) {
    Word base;
    if (lx.at_sym("(")) {
        lx.take();
        base = parse_word(lx, p);
        lx.expect_sym(")");
    } else if (lx.peek().kind == Token::Int && lx.peek().text == "1") {
        lx.take(); // empty word
    } else {
        Token t = lx.expect_name("generator name");
        int g = p.gen_index(t.text);
        if (g < 0)
            fail(Error::Kind::Parse, "line " + std::to_string(t.line) + " col " +
                                         std::to_string(t.col) + ": unknown generator '" +
                                         t.text + "'");
        base = Word::gen(g);
    }
    if (lx.at_sym("^")) {
        lx.take();
        base = base.pow(parse_exponent(lx));
    }
    return base;
}

Word parse_word(Lexer& lx, const Presentation& p) {
    Word w = parse_factor(lx, p);
    while (lx.at_sym("*")) {
        lx.take();
        w = w * parse_factor(lx, p);
    }
    return w;
}

bool word_starts(const Lexer& lx) {
    return lx.peek().kind == Token::Name || lx.at_sym("(") ||
           (lx.peek().kind == Token::Int && lx.peek().text == "1");
}

Presentation parse_group_body(Lexer& lx) {
    if (!lx.at_name("group")) lx.error("expected 'group'");
    lx.take();
    lx.expect_sym("{");
    Presentation p;
    while (!lx.at_sym("}")) {
        Token key = lx.expect_name("'gens' or 'rels'");
        lx.expect_sym(":");
        if (key.text == "gens") {
            while (lx.peek().kind == Token::Name) p.gens.push_back(lx.take().text);
        } else if (key.text == "rels") {
            while (word_starts(lx)) p.relators.push_back(parse_word(lx, p));
        } else {
            fail(Error::Kind::Parse,
                 "line " + std::to_string(key.line) + " col " + std::to_string(key.col) +
                     ": unknown section '" + key.text + "'");
        }
        if (lx.at_sym(";")) lx.take();
    }
    lx.expect_sym("}");
    p.validate();
    return p;
}

bool parse_bool(Lexer& lx) {
    Token t = lx.expect_name("'true' or 'false'");
    if (t.text == "true") return true;
    if (t.text == "false") return false;
    fail(Error::Kind::Parse, "line " + std::to_string(t.line) + " col " +
                                 std::to_string(t.col) + ": expected 'true' or 'false'");
}

} // namespace

Presentation parse_group(const std::string& text) {
    Lexer lx(text);
    Presentation p = parse_group_body(lx);
    if (lx.peek().kind != Token::End) lx.error("trailing input after group");
    return p;
}

GroupHom parse_hom(const std::string& text, const Presentation& source) {
    Lexer lx(text);
    if (!lx.at_name("hom")) lx.error("expected 'hom'");
    lx.take();
    lx.expect_sym("{");
    GroupHom h;
    h.source = source;
    bool have_target = false;
    std::vector<bool> assigned(source.gens.size(), false);
    h.images.resize(source.gens.size());
    while (!lx.at_sym("}")) {
        Token key = lx.expect_name("'to', 'certified' or a source generator");
        if (key.text == "to") {
            lx.expect_sym(":");
            h.target = parse_group_body(lx);
            have_target = true;
        } else if (key.text == "certified") {
            lx.expect_sym(":");
            h.certified = parse_bool(lx);
        } else {
            int g = source.gen_index(key.text);
            if (g < 0)
                fail(Error::Kind::Parse, "line " + std::to_string(key.line) + " col " +
                                             std::to_string(key.col) +
                                             ": unknown source generator '" + key.text + "'");
            if (lx.peek().kind != Token::Arrow) lx.error("expected '->'");
            lx.take();
            if (!have_target) lx.error("'to:' must precede generator images");
            h.images[static_cast<size_t>(g)] = parse_word(lx, h.target);
            assigned[static_cast<size_t>(g)] = true;
        }
        if (lx.at_sym(";")) lx.take();
    }
    lx.expect_sym("}");
    if (lx.peek().kind != Token::End) lx.error("trailing input after hom");
    if (!have_target) fail(Error::Kind::Parse, "hom: missing 'to:' target");
    for (size_t i = 0; i < assigned.size(); ++i)
        if (!assigned[i])
            fail(Error::Kind::Parse, "hom: no image for generator '" + source.gens[i] + "'");
    h.validate_shape();
    return h;
}

SpaceModel parse_space(const std::string& text) {
    Lexer lx(text);
    if (!lx.at_name("space")) lx.error("expected 'space'");
    lx.take();
    lx.expect_sym("{");
    SpaceModel s;
    bool have_group = false;
    while (!lx.at_sym("}")) {
        Token key = lx.expect_name("'group', 'cells2' or 'aspherical'");
        lx.expect_sym(":");
        if (key.text == "group") {
            s.base = parse_group_body(lx);
            have_group = true;
        } else if (key.text == "cells2") {
            if (!have_group) lx.error("'group:' must precede 'cells2:'");
            while (word_starts(lx)) s.extra_2cells.push_back(parse_word(lx, s.base));
        } else if (key.text == "aspherical") {
            s.aspherical = parse_bool(lx);
        } else {
            fail(Error::Kind::Parse,
                 "line " + std::to_string(key.line) + " col " + std::to_string(key.col) +
                     ": unknown section '" + key.text + "'");
        }
        if (lx.at_sym(";")) lx.take();
    }
    lx.expect_sym("}");
    if (lx.peek().kind != Token::End) lx.error("trailing input after space");
    if (!have_group) fail(Error::Kind::Parse, "space: missing 'group:'");
    s.validate();
    return s;
}

std::string serialize_group(const Presentation& p) {
    std::string out = "group { gens:";
    for (const auto& g : p.gens) out += " " + g;
    out += "; rels:";
    for (const Word& r : p.relators) out += " " + r.str(p.gens);
    out += " }";
    return out;
}

std::string serialize_hom(const GroupHom& h) {
    std::string out = "hom { to: " + serialize_group(h.target) + ";";
    for (size_t i = 0; i < h.source.gens.size(); ++i)
        out += " " + h.source.gens[i] + " -> " + h.images[i].str(h.target.gens) + ";";
    if (h.certified) out += " certified: true;";
    out += " }";
    return out;
}

std::string serialize_space(const SpaceModel& s) {
    std::string out = "space { group: " + serialize_group(s.base) + "; cells2:";
    for (const Word& w : s.extra_2cells) out += " " + w.str(s.base.gens);
    out += "; aspherical: ";
    out += s.aspherical ? "true" : "false";
    out += " }";
    return out;
}

} // namespace cellplus
