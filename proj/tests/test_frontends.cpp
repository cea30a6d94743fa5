#include <doctest.h>

#include <functional>
#include <random>

#include "stacktree/commands.hpp"
#include "stacktree/errors.hpp"
#include "stacktree/layout.hpp"
#include "test_support.hpp"

using namespace stacktree;

TEST_CASE("parse_postfix transcribes statements in order") {
    const Program p = parse_postfix("leaf \"NP\"\nleaf \"VP\"\nbranch 2 \"S\"\ntree");
    const Program expected{Leaf{"NP"}, Leaf{"VP"}, Branch{2, "S"}, Tree{}};
    CHECK(p == expected);
}

TEST_CASE("postfix labels keep double backslash as a line break") {
    const Program p = parse_postfix(R"(leaf "a\\b")");
    REQUIRE(p.size() == 1);
    const auto& leaf = std::get<Leaf>(p[0]);
    CHECK(leaf.label == "a\\\\b");
    CHECK(measure_label(leaf.label, MetricsConfig{}).lines.size() == 2);
}

TEST_CASE("postfix escaped quotes and comments") {
    const Program p = parse_postfix("# heading\nleaf \"say \\\"hi\\\"\"  # trailing\nfake \"x\" tree");
    REQUIRE(p.size() == 3);
    CHECK(std::get<Leaf>(p[0]).label == "say \"hi\"");
    CHECK(std::get<FakeWidth>(p[1]).label == "x");
    CHECK(std::holds_alternative<Tree>(p[2]));
}

TEST_CASE("postfix syntax errors carry positions") {
    auto error_at = [](std::string_view src) {
        try {
            parse_postfix(src);
        } catch (const SyntaxError& e) {
            return std::pair{e.line(), e.column()};
        }
        FAIL("expected SyntaxError");
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(error_at("branch x \"S\"") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK(error_at("leaf \"A\"\n  grow \"B\"") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(error_at("leaf \"open") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(error_at("leaf tree") == std::pair<std::size_t, std::size_t>{1, 6});
    CHECK(error_at("branch 2x \"S\"") == std::pair<std::size_t, std::size_t>{1, 8});
    CHECK(error_at("branch -1 \"S\"") == std::pair<std::size_t, std::size_t>{1, 8});
}

TEST_CASE("empty postfix program") {
    CHECK(parse_postfix("").empty());
    CHECK(parse_postfix("  # nothing\n").empty());
}

TEST_CASE("format_postfix round trips parsed programs") {
    std::mt19937 rng(99);
    const std::vector<std::string> pieces{"a", "Z", " ", "\\\\", "\"", "\\x", "\n", "#", "é"};
    std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
    std::uniform_int_distribution<int> len(0, 5);
    std::uniform_int_distribution<int> kind(0, 3);
    std::uniform_int_distribution<std::size_t> arity(0, 9);
    for (int iter = 0; iter < 300; ++iter) {
        Program p;
        const int n = len(rng) * 2;
        for (int i = 0; i < n; ++i) {
            std::string label;
            for (int k = len(rng); k > 0; --k) label += pieces[pick(rng)];
            switch (kind(rng)) {
                case 0: p.push_back(Leaf{label}); break;
                case 1: p.push_back(Branch{arity(rng), label}); break;
                case 2: p.push_back(FakeWidth{label}); break;
                default: p.push_back(Tree{}); break;
            }
        }
        CHECK(parse_postfix(format_postfix(p)) == p);
    }
}

TEST_CASE("compile_bracketed emits post-order commands") {
    const Program p = compile_bracketed("(S (NP John) (VP runs))");
    const Program expected{Leaf{"John"}, Branch{1, "NP"}, Leaf{"runs"},
                           Branch{1, "VP"}, Branch{2, "S"}, Tree{}};
    CHECK(p == expected);
}

TEST_CASE("childless node is a leaf") {
    CHECK(compile_bracketed("(X)") == Program{Leaf{"X"}, Tree{}});
}

TEST_CASE("merged preterminals") {
    const Program p = compile_bracketed("(NP John)", CompileOptions{true});
    CHECK(p == Program{Leaf{"NP\\\\John"}, Tree{}});

    const Program q = compile_bracketed("(S (NP John) (VP (V sees) (NP Mary)))", {true});
    const Program expected{Leaf{"NP\\\\John"}, Leaf{"V\\\\sees"}, Leaf{"NP\\\\Mary"},
                           Branch{2, "VP"}, Branch{2, "S"}, Tree{}};
    CHECK(q == expected);
}

TEST_CASE("forests and unlabeled roots") {
    const Program p = compile_bracketed("(A x)\n(B y z)");
    const Program expected{Leaf{"x"}, Branch{1, "A"}, Tree{}, Leaf{"y"},
                           Leaf{"z"}, Branch{2, "B"}, Tree{}};
    CHECK(p == expected);

    const Program root = compile_bracketed("( (S x) )");
    CHECK(root == Program{Leaf{"x"}, Branch{1, "S"}, Branch{1, ""}, Tree{}});
}

TEST_CASE("bracketed syntax errors") {
    CHECK_THROWS_AS(compile_bracketed(""), SyntaxError);
    CHECK_THROWS_AS(compile_bracketed("   \n"), SyntaxError);
    CHECK_THROWS_AS(compile_bracketed("(S (NP John)"), SyntaxError);
    CHECK_THROWS_AS(compile_bracketed("(S x))"), SyntaxError);
    CHECK_THROWS_AS(compile_bracketed("(S ())"), SyntaxError);
    try {
        compile_bracketed("(S\n  (NP x)\n  ()");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("compiled programs never underflow and need exactly the predicted depth") {
    // Independent recursive oracle over the bracketed string itself.
    std::mt19937 rng(5);
    std::function<std::string(int, std::size_t&)> gen = [&](int depth, std::size_t& need) {
        std::uniform_int_distribution<int> kids(0, 4);
        const int k = depth >= 5 ? 0 : kids(rng);
        if (k == 0) {
            need = 1;
            return std::string("w");
        }
        std::string s = "(N";
        need = 0;
        for (int i = 0; i < k; ++i) {
            std::size_t child = 0;
            s += " " + gen(depth + 1, child);
            need = std::max(need, static_cast<std::size_t>(i) + child);
        }
        return s + ")";
    };
    EngineConfig extended;
    extended.strict = false;
    for (int iter = 0; iter < 200; ++iter) {
        std::size_t need = 0;
        std::string text = gen(0, need);
        if (text.front() != '(') text = "(R " + text + ")";
        const Program p = compile_bracketed(text);
        const RunResult r = run_program(p, extended, MetricsConfig{});
        CHECK(r.scenes.size() == 1);
        CHECK(r.max_depth == stacktree::testing::simulated_depth(p));
        if (text.rfind("(R ", 0) != 0) CHECK(r.max_depth == need);

        std::size_t branches = 0, leaves = 0;
        for (const Command& c : p) {
            branches += std::holds_alternative<Branch>(c);
            leaves += std::holds_alternative<Leaf>(c);
        }
        CHECK(branches == static_cast<std::size_t>(std::count(text.begin(), text.end(), '(')));
        CHECK(leaves == static_cast<std::size_t>(std::count(text.begin(), text.end(), 'w')));
    }
}

TEST_CASE("qobitex formatter re-emits the macro calls") {
    const Program p{Leaf{"DET\\\\the"}, FakeWidth{"x"}, Leaf{"a_b"}, Branch{2, "NP"}, Tree{}};
    CHECK(format_qobitex(p) ==
          "\\leaf{DET\\\\the}\n\\faketreewidth{x}\n\\leaf{a\\_b}\n\\branch{2}{NP}\n\\tree\n");
}
