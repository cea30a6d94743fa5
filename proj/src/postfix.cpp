#include <cctype>
#include <charconv>

#include "stacktree/commands.hpp"
#include "stacktree/errors.hpp"
#include "stacktree/metrics.hpp"

namespace stacktree {

namespace {

struct Token {
    enum class Kind { Word, String, End } kind = Kind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_blank();
        Token tok;
        tok.line = line_;
        tok.column = col_;
        if (pos_ >= src_.size()) return tok;
        if (src_[pos_] == '"') {
            tok.kind = Token::Kind::String;
            tok.text = read_string(tok.line, tok.column);
            return tok;
        }
        tok.kind = Token::Kind::Word;
        while (pos_ < src_.size() && !is_space(src_[pos_]) && src_[pos_] != '"' &&
               src_[pos_] != '#') {
            tok.text.push_back(advance());
        }
        return tok;
    }

private:
    static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

    char advance() {
        const char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++col_;
        }
        return c;
    }

    void skip_blank() {
        while (pos_ < src_.size()) {
            if (is_space(src_[pos_])) {
                advance();
            } else if (src_[pos_] == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    // `\"` is a literal quote; every other backslash is kept verbatim so
    // that `\\` survives as a line break.
    std::string read_string(std::size_t line, std::size_t column) {
        advance();
        std::string out;
        while (pos_ < src_.size()) {
            const char c = advance();
            if (c == '"') return out;
            if (c == '\\' && pos_ < src_.size()) {
                const char n = src_[pos_];
                if (n == '"') {
                    advance();
                    out.push_back('"');
                    continue;
                }
                if (n == '\\') {
                    advance();
                    out += "\\\\";
                    continue;
                }
            }
            out.push_back(c);
        }
        throw SyntaxError("unterminated string", line, column);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::string expect_label(Lexer& lex, const Token& keyword) {
    Token t = lex.next();
    if (t.kind != Token::Kind::String) {
        throw SyntaxError("expected a quoted label after '" + keyword.text + "'", t.line,
                          t.column);
    }
    return std::move(t.text);
}

std::string quote_postfix(std::string_view label) {
    std::string out = "\"";
    for (char c : label) {
        if (c == '"') {
            out += "\\\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

std::string escape_tex(std::string_view text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '\\': out += "\\textbackslash{}"; break;
            case '{': out += "\\{"; break;
            case '}': out += "\\}"; break;
            case '#': out += "\\#"; break;
            case '$': out += "\\$"; break;
            case '%': out += "\\%"; break;
            case '&': out += "\\&"; break;
            case '_': out += "\\_"; break;
            case '~': out += "\\textasciitilde{}"; break;
            case '^': out += "\\textasciicircum{}"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string tex_label(std::string_view label) {
    std::string out;
    const auto lines = split_label_lines(label);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (i > 0) out += "\\\\";
        out += escape_tex(lines[i]);
    }
    return out;
}

}  // namespace

Program parse_postfix(std::string_view text) {
    Lexer lex(text);
    Program program;
    for (Token t = lex.next(); t.kind != Token::Kind::End; t = lex.next()) {
        if (t.kind == Token::Kind::String) {
            throw SyntaxError("unexpected label outside a statement", t.line, t.column);
        }
        if (t.text == "leaf") {
            program.push_back(Leaf{expect_label(lex, t)});
        } else if (t.text == "fake") {
            program.push_back(FakeWidth{expect_label(lex, t)});
        } else if (t.text == "tree") {
            program.push_back(Tree{});
        } else if (t.text == "branch") {
            Token n = lex.next();
            std::size_t arity = 0;
            const char* first = n.text.data();
            const char* last = first + n.text.size();
            auto [ptr, ec] = std::from_chars(first, last, arity);
            if (n.kind != Token::Kind::Word || n.text.empty() || ec != std::errc{} ||
                ptr != last) {
                throw SyntaxError("branch arity must be a non-negative integer", n.line,
                                  n.column);
            }
            program.push_back(Branch{arity, expect_label(lex, t)});
        } else {
            throw SyntaxError("unknown keyword '" + t.text + "'", t.line, t.column);
        }
    }
    return program;
}

std::string format_postfix(const Program& program) {
    std::string out;
    for (const Command& cmd : program) {
        if (const auto* leaf = std::get_if<Leaf>(&cmd)) {
            out += "leaf " + quote_postfix(leaf->label);
        } else if (const auto* fake = std::get_if<FakeWidth>(&cmd)) {
            out += "fake " + quote_postfix(fake->label);
        } else if (const auto* br = std::get_if<Branch>(&cmd)) {
            out += "branch " + std::to_string(br->arity) + " " + quote_postfix(br->label);
        } else {
            out += "tree";
        }
        out.push_back('\n');
    }
    return out;
}

std::string format_qobitex(const Program& program) {
    std::string out;
    for (const Command& cmd : program) {
        if (const auto* leaf = std::get_if<Leaf>(&cmd)) {
            out += "\\leaf{" + tex_label(leaf->label) + "}";
        } else if (const auto* fake = std::get_if<FakeWidth>(&cmd)) {
            out += "\\faketreewidth{" + tex_label(fake->label) + "}";
        } else if (const auto* br = std::get_if<Branch>(&cmd)) {
            out += "\\branch{" + std::to_string(br->arity) + "}{" + tex_label(br->label) + "}";
        } else {
            out += "\\tree";
        }
        out.push_back('\n');
    }
    return out;
}

}  // namespace stacktree
