#include <cctype>

#include "stacktree/commands.hpp"
#include "stacktree/errors.hpp"

namespace stacktree {

namespace {

struct Node {
    std::string label;
    bool bare = false;
    std::vector<Node> children;
};

class BracketParser {
public:
    explicit BracketParser(std::string_view src) : src_(src) {}

    std::vector<Node> parse_forest() {
        std::vector<Node> forest;
        skip_space();
        if (pos_ >= src_.size()) throw SyntaxError("empty input", line_, col_);
        while (pos_ < src_.size()) {
            if (src_[pos_] == ')') throw SyntaxError("unbalanced ')'", line_, col_);
            forest.push_back(parse_item());
            skip_space();
        }
        return forest;
    }

private:
    static bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(src_[pos_]) & 0xC0) != 0x80) {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < src_.size() && is_space(src_[pos_])) advance();
    }

    std::string read_token() {
        std::string tok;
        while (pos_ < src_.size() && !is_space(src_[pos_]) && src_[pos_] != '(' &&
               src_[pos_] != ')') {
            tok.push_back(src_[pos_]);
            advance();
        }
        return tok;
    }

    Node parse_item() {
        if (src_[pos_] != '(') {
            return Node{read_token(), true, {}};
        }
        const std::size_t open_line = line_;
        const std::size_t open_col = col_;
        advance();
        skip_space();
        Node node;
        if (pos_ < src_.size() && src_[pos_] != '(' && src_[pos_] != ')') {
            node.label = read_token();
        }
        for (;;) {
            skip_space();
            if (pos_ >= src_.size()) throw SyntaxError("unbalanced '('", open_line, open_col);
            if (src_[pos_] == ')') {
                advance();
                break;
            }
            node.children.push_back(parse_item());
        }
        if (node.label.empty() && node.children.empty()) {
            throw SyntaxError("empty node '()'", open_line, open_col);
        }
        return node;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

void emit(const Node& node, const CompileOptions& opts, Program& out) {
    if (node.bare || node.children.empty()) {
        out.push_back(Leaf{node.label});
        return;
    }
    if (opts.merge_preterminals && node.children.size() == 1 && node.children[0].bare) {
        out.push_back(Leaf{node.label + "\\\\" + node.children[0].label});
        return;
    }
    for (const Node& child : node.children) emit(child, opts, out);
    out.push_back(Branch{node.children.size(), node.label});
}

}  // namespace

Program compile_bracketed(std::string_view text, const CompileOptions& opts) {
    Program program;
    for (const Node& root : BracketParser(text).parse_forest()) {
        emit(root, opts, program);
        program.push_back(Tree{});
    }
    return program;
}

}  // namespace stacktree
