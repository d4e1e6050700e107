#include <cctype>

#include "ltlsync/ltlf.hpp"

namespace ltlsync::ltlf {

namespace {

enum class Tok { end, ident, quoted, lparen, rparen, bang, amp, bar, arrow, kw_true, kw_false, kw_x, kw_f, kw_g, kw_u };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::end, {}, start};
        const char c = src_[pos_];
        switch (c) {
            case '(': ++pos_; return {Tok::lparen, "(", start};
            case ')': ++pos_; return {Tok::rparen, ")", start};
            case '!': ++pos_; return {Tok::bang, "!", start};
            case '&': ++pos_; return {Tok::amp, "&", start};
            case '|': ++pos_; return {Tok::bar, "|", start};
            case '-':
                if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
                    pos_ += 2;
                    return {Tok::arrow, "->", start};
                }
                throw ParseError("expected '->'", start);
            case '\'': return quoted(start);
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_' ||
                                          src_[pos_] == '\'')) {
                ++pos_;
            }
            std::string word(src_.substr(start, pos_ - start));
            if (word == "true") return {Tok::kw_true, word, start};
            if (word == "false") return {Tok::kw_false, word, start};
            if (word == "X") return {Tok::kw_x, word, start};
            if (word == "F") return {Tok::kw_f, word, start};
            if (word == "G") return {Tok::kw_g, word, start};
            if (word == "U") return {Tok::kw_u, word, start};
            return {Tok::ident, word, start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }

private:
    Token quoted(std::size_t start) {
        ++pos_;
        std::string name;
        while (pos_ < src_.size() && src_[pos_] != '\'') {
            if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
            name += src_[pos_++];
        }
        if (pos_ >= src_.size()) throw ParseError("unterminated quoted atom", start);
        ++pos_;
        if (name.empty()) throw ParseError("empty quoted atom", start);
        return {Tok::quoted, name, start};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { advance(); }

    Formula parse_all() {
        Formula f = implication();
        if (cur_.kind != Tok::end) throw ParseError("unexpected '" + cur_.text + "'", cur_.pos);
        return f;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    Formula implication() {
        Formula lhs = disjunction();
        if (cur_.kind == Tok::arrow) {
            advance();
            return Formula::implication(lhs, implication());
        }
        return lhs;
    }

    Formula disjunction() {
        Formula acc = conjunction();
        while (cur_.kind == Tok::bar) {
            advance();
            acc = Formula::disjunction(acc, conjunction());
        }
        return acc;
    }

    Formula conjunction() {
        Formula acc = until();
        while (cur_.kind == Tok::amp) {
            advance();
            acc = Formula::conjunction(acc, until());
        }
        return acc;
    }

    Formula until() {
        Formula lhs = unary();
        if (cur_.kind == Tok::kw_u) {
            advance();
            return Formula::until(lhs, until());
        }
        return lhs;
    }

    Formula unary() {
        switch (cur_.kind) {
            case Tok::bang: advance(); return Formula::negation(unary());
            case Tok::kw_x: advance(); return Formula::next(unary());
            case Tok::kw_f: advance(); return Formula::finally(unary());
            case Tok::kw_g: advance(); return Formula::globally(unary());
            default: return primary();
        }
    }

    Formula primary() {
        const Token t = cur_;
        switch (t.kind) {
            case Tok::kw_true: advance(); return Formula::truth();
            case Tok::kw_false: advance(); return Formula::falsity();
            case Tok::ident:
            case Tok::quoted: advance(); return Formula::atom(t.text);
            case Tok::lparen: {
                advance();
                Formula inner = implication();
                if (cur_.kind != Tok::rparen) throw ParseError("expected ')'", cur_.pos);
                advance();
                return inner;
            }
            case Tok::end: throw ParseError("unexpected end of formula", t.pos);
            default: throw ParseError("unexpected '" + t.text + "'", t.pos);
        }
    }

    Lexer lexer_;
    Token cur_{Tok::end, {}, 0};
};

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace ltlsync::ltlf
