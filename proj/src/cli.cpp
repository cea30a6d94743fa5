#include "stacktree/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "stacktree/backends.hpp"
#include "stacktree/commands.hpp"
#include "stacktree/config.hpp"
#include "stacktree/errors.hpp"
#include "stacktree/layout.hpp"

namespace stacktree {

namespace {

struct CliOptions {
    std::string input_path;
    std::string syntax = "postfix";
    std::string format = "svg";
    std::string output_path;
    std::string config_path;
    bool strict = false;
    bool extended = false;
    std::optional<double> font_size;
    bool merge_preterminals = false;
    bool allow_partial = false;
    std::string multi_tree = "stacked";
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buf;
    if (path.empty() || path == "-") {
        buf << in.rdbuf();
        if (in.bad()) throw IoError("cannot read standard input");
        return buf.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open input " + path);
    buf << file.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        out.flush();
        if (!out) throw IoError("cannot write standard output");
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output " + path);
    file << text;
    if (!file.flush()) throw IoError("cannot write output " + path);
}

std::string render(const Scene& scene, const std::string& format, const RenderStyle& style) {
    if (format == "svg") return emit_svg(scene, style);
    if (format == "tex") return emit_latex_picture(scene, style);
    if (format == "ascii") return emit_ascii(scene, style);
    return emit_json(scene, style);
}

std::string expand_template(const std::string& tmpl, std::size_t index) {
    const auto at = tmpl.find("{}");
    return tmpl.substr(0, at) + std::to_string(index) + tmpl.substr(at + 2);
}

int run_render(const CliOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    Settings settings;
    if (!opt.config_path.empty()) {
        if (!std::filesystem::exists(opt.config_path)) {
            throw IoError("cannot open config " + opt.config_path);
        }
        settings = load_config(opt.config_path);
    }
    if (opt.strict) settings.engine.strict = true;
    if (opt.extended) settings.engine.strict = false;
    if (opt.allow_partial) settings.engine.allow_partial = true;
    if (opt.font_size) settings.metrics.font_size = *opt.font_size;
    try {
        settings.engine.validate();
        settings.metrics.validate();
        settings.style.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const std::string text = read_input(opt.input_path, in);
    const Program program =
        opt.syntax == "bracketed"
            ? compile_bracketed(text, CompileOptions{opt.merge_preterminals})
            : parse_postfix(text);

    const RunResult result = run_program(program, settings.engine, settings.metrics);
    for (const Diagnostic& d : result.diagnostics) {
        err << "stacktree: note: command " << d.command_index << ": " << d.message << "\n";
    }

    if (opt.format == "qobitex") {
        write_output(opt.output_path, format_qobitex(program), out);
        return kExitOk;
    }

    if (opt.multi_tree == "separate-files" && result.scenes.size() > 1) {
        if (opt.output_path.find("{}") == std::string::npos) {
            throw UsageError(
                "separate-files with several trees needs an output template containing {}");
        }
        std::vector<std::string> docs;
        for (const Scene& scene : result.scenes) {
            docs.push_back(render(scene, opt.format, settings.style));
        }
        for (std::size_t i = 0; i < docs.size(); ++i) {
            write_output(expand_template(opt.output_path, i + 1), docs[i], out);
        }
        return kExitOk;
    }

    const Scene scene = result.scenes.size() == 1
                            ? result.scenes.front()
                            : compose_stacked(result.scenes, settings.tree_gap);
    std::string path = opt.output_path;
    if (path.find("{}") != std::string::npos) path = expand_template(path, 1);
    write_output(path, render(scene, opt.format, settings.style), out);
    return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Typeset trees from postfix tree programs or bracketed notation"};
    app.name("stacktree");
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* render_cmd = app.add_subcommand("render", "Lay out trees and render them");
    render_cmd->add_option("input", opt.input_path, "Input file (default: standard input)");
    render_cmd->add_option("--syntax", opt.syntax, "Input notation")
        ->check(CLI::IsMember({"postfix", "bracketed"}))
        ->capture_default_str();
    render_cmd->add_option("-f,--format", opt.format, "Output format")
        ->check(CLI::IsMember({"svg", "tex", "ascii", "json", "qobitex"}))
        ->capture_default_str();
    render_cmd->add_option("-o,--output", opt.output_path,
                           "Output file; {} is replaced by the tree index (from 1)");
    render_cmd->add_option("-c,--config", opt.config_path, "Config file of key = value lines");
    auto* strict_flag =
        render_cmd->add_flag("--strict", opt.strict, "Depth limit 20 and arity limit 5 (default)");
    render_cmd->add_flag("--extended", opt.extended, "Lift the depth and arity limits")
        ->excludes(strict_flag);
    render_cmd->add_option("--font-size", opt.font_size, "Font size in pt");
    render_cmd->add_flag("--merge-preterminals", opt.merge_preterminals,
                         "Render (POS word) as a single two-line leaf");
    render_cmd->add_flag("--allow-partial", opt.allow_partial,
                         "Accept subtrees left on the stack at the end");
    render_cmd->add_option("--multi-tree", opt.multi_tree, "How to output several trees")
        ->check(CLI::IsMember({"stacked", "separate-files"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitSyntax;
    }

    try {
        return run_render(opt, in, out, err);
    } catch (const SyntaxError& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const ConfigError& e) {
        err << "stacktree: " << opt.config_path << ": " << e.what() << "\n";
        return kExitSyntax;
    } catch (const UsageError& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitSyntax;
    } catch (const LayoutError& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitLayout;
    } catch (const UnrepresentableSlope& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitLayout;
    } catch (const IoError& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::system_error& e) {
        err << "stacktree: " << e.what() << "\n";
        return kExitIo;
    }
}

}  // namespace stacktree
