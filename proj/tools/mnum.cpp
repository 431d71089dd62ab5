// mnum: evaluate natural m-number expressions, check the semiring laws and
// canonicalize interchange documents.
//
// Exit codes: 0 ok, 1 evaluation error, 2 syntax error, 3 law-check failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "mnum/error.hpp"
#include "mnum/interchange.hpp"
#include "mnum/lang/parser.hpp"
#include "mnum/lang/render.hpp"
#include "mnum/oracle.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kEvalError = 1;
constexpr int kSyntaxError = 2;
constexpr int kLawFailure = 3;

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    buf << in.rdbuf();
    return buf.str();
}

// Writes to --output when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw std::runtime_error("cannot write '" + path + "'");
            }
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

int run_eval(const std::string& path, mnum::lang::Style style, const std::string& output)
{
    const std::string text = read_input(path);
    mnum::lang::Program program;
    try {
        program = mnum::lang::parse_program(text);
    } catch (const mnum::lang::SyntaxError& e) {
        std::cerr << path << ":" << e.what() << "\n";
        return kSyntaxError;
    }
    Sink sink(output);
    mnum::lang::Environment env;
    for (const auto& statement : program) {
        try {
            if (auto value = mnum::lang::execute(statement, env)) {
                sink.out() << mnum::lang::render(*value, style) << "\n";
            }
        } catch (const mnum::lang::EvalError& e) {
            std::cerr << path << ":" << e.what() << "\n";
            return kEvalError;
        } catch (const mnum::Error& e) {
            std::cerr << path << ":" << statement.pos.line << ":" << statement.pos.column << ": " << e.what()
                      << "\n";
            return kEvalError;
        }
    }
    return kOk;
}

int bracket_depth(const std::string& text)
{
    int depth = 0;
    bool comment = false;
    for (char c : text) {
        if (comment) {
            comment = c != '\n';
            continue;
        }
        if (c == '#') {
            comment = true;
        } else if (c == '(' || c == '[' || c == '{') {
            ++depth;
        } else if (c == ')' || c == ']' || c == '}') {
            --depth;
        }
    }
    return depth;
}

int run_repl(mnum::lang::Style style)
{
    const bool interactive = isatty(STDIN_FILENO) != 0;
    mnum::lang::Environment env;
    std::string pending;
    std::string line;
    while (true) {
        if (interactive) {
            std::cout << (pending.empty() ? "mnum> " : "  ... ") << std::flush;
        }
        if (!std::getline(std::cin, line)) {
            break;
        }
        pending += line;
        pending += '\n';
        if (bracket_depth(pending) > 0) {
            continue;
        }
        std::string source;
        source.swap(pending);
        try {
            for (const auto& statement : mnum::lang::parse_program(source)) {
                if (auto value = mnum::lang::execute(statement, env)) {
                    std::cout << mnum::lang::render(*value, style) << "\n";
                }
            }
        } catch (const std::exception& e) {
            std::cout << "error: " << e.what() << "\n";
        }
    }
    if (interactive) {
        std::cout << "\n";
    }
    return kOk;
}

int run_check_laws(const mnum::oracle::UniverseSpec& spec, const mnum::oracle::LawCheckOptions& options,
                   const std::string& output)
{
    auto report = mnum::oracle::check_laws(spec, options);
    for (const auto& r : report.results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.law << " ["
                  << (r.coverage == mnum::oracle::Coverage::exhaustive ? "exhaustive" : "sampled") << ", "
                  << r.evaluations << " cases]";
        if (r.counterexample) {
            std::cout << " counterexample: " << *r.counterexample;
        }
        std::cout << "\n";
    }
    const auto failed = std::ranges::count_if(report.results, [](const auto& r) { return !r.passed; });
    std::cout << (report.results.size() - static_cast<std::size_t>(failed)) << "/" << report.results.size()
              << " laws hold on " << mnum::oracle::to_string(spec) << "\n";
    if (!output.empty()) {
        Sink sink(output);
        sink.out() << mnum::oracle::to_json(report) << "\n";
    }
    return report.all_passed() ? kOk : kLawFailure;
}

int run_fmt(const std::string& path, const std::string& output)
{
    auto doc = mnum::read_document(read_input(path));
    Sink sink(output);
    sink.out() << mnum::write_document(doc);
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Arithmetic of natural multidimensional numbers (polymultisets)"};
    app.require_subcommand(1);

    std::string style_name = "sparse";
    std::string output;
    std::string input;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate the statements of an expression file");
    eval_cmd->add_option("file", input, "Expression file, '-' for stdin")->required();
    eval_cmd->add_option("--style", style_name, "Output style")->check(CLI::IsMember({"sparse", "matrix"}));
    eval_cmd->add_option("--output", output, "Write results here instead of stdout");

    auto* repl_cmd = app.add_subcommand("repl", "Interactive session");
    repl_cmd->add_option("--style", style_name, "Output style")->check(CLI::IsMember({"sparse", "matrix"}));

    mnum::oracle::UniverseSpec spec;
    mnum::oracle::LawCheckOptions options;
    std::string fault;
    auto* laws_cmd = app.add_subcommand("check-laws", "Check the semiring and successor laws on a finite universe");
    laws_cmd->add_option("--dim", spec.dim, "Dimension")->check(CLI::PositiveNumber);
    laws_cmd->add_option("--max-index", spec.max_index, "Largest index per axis, comma separated (one value applies to every axis)")
        ->delimiter(',');
    laws_cmd->add_option("--max-mult", spec.max_mult, "Largest multiplicity");
    laws_cmd->add_option("--budget", options.budget, "Evaluations per law before switching to sampling");
    laws_cmd->add_option("--seed", options.seed, "Sampling seed");
    laws_cmd->add_option("--output", output, "Also write the JSON report here");
    laws_cmd->add_option("--inject-fault", fault, "Replace multiplication with a broken variant")
        ->check(CLI::IsMember({"pointwise-mul", "drop-carries"}));

    auto* fmt_cmd = app.add_subcommand("fmt", "Canonicalize an interchange document");
    fmt_cmd->add_option("file", input, "Document, '-' for stdin")->required();
    fmt_cmd->add_option("--output", output, "Write here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kSyntaxError;
    }

    try {
        const auto style = mnum::lang::parse_style(style_name);
        if (eval_cmd->parsed()) {
            return run_eval(input, style, output);
        }
        if (repl_cmd->parsed()) {
            return run_repl(style);
        }
        if (laws_cmd->parsed()) {
            if (laws_cmd->count("--max-index") == 0) {
                spec.max_index.assign(spec.dim, 1);
            } else if (spec.max_index.size() == 1 && spec.dim > 1) {
                spec.max_index.assign(spec.dim, spec.max_index.front());
            }
            if (fault == "pointwise-mul") {
                options.arithmetic.mul = mnum::oracle::faults::pointwise_mul;
            } else if (fault == "drop-carries") {
                options.arithmetic.mul = mnum::oracle::faults::mul_dropping_carries;
            }
            return run_check_laws(spec, options, output);
        }
        if (fmt_cmd->parsed()) {
            return run_fmt(input, output);
        }
    } catch (const mnum::Error& e) {
        std::cerr << "mnum: " << e.what() << "\n";
        return e.code() == mnum::Errc::malformed_document ? kSyntaxError : kEvalError;
    } catch (const std::exception& e) {
        std::cerr << "mnum: " << e.what() << "\n";
        return kEvalError;
    }
    return kOk;
}
