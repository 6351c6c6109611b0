#include "fol/corpus.hpp"
#include "fol/document.hpp"
#include "fol/errors.hpp"
#include "fol/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;

namespace {

int exit_code(fol::ErrorFamily f) { return static_cast<int>(f); }

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw fol::ParseError("cannot write '" + path.string() + "'");
    out << text;
}

// Prints the text summary and, with --out, writes <stem>.<tag>.json/.txt.
void emit(const fol::Report& r, const std::string& input, const std::string& tag, const std::string& out_dir) {
    std::cout << r.text;
    if (out_dir.empty()) return;
    fs::create_directories(out_dir);
    const std::string stem = fs::path(input).stem().string();
    write_file(fs::path(out_dir) / (stem + "." + tag + ".json"), fol::render_json(r));
    write_file(fs::path(out_dir) / (stem + "." + tag + ".txt"), r.text);
}

template <class F>
int guarded(const std::string& input, F&& body) {
    try {
        return body();
    } catch (const fol::Error& e) {
        std::cerr << input << ": " << e.what() << "\n";
        return exit_code(e.family());
    }
}

int strict_exit(const fol::Report& r, bool strict, const std::string& input) {
    if (!strict || r.warnings.empty()) return 0;
    std::cerr << input << ": " << fol::StrictWarning(r.warnings.front()).what() << "\n";
    return exit_code(fol::ErrorFamily::AssertionRefuted);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact foliated surface toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> inputs;
    std::string out_dir;
    std::string command;
    std::string divisor;
    std::string epsilon;
    bool strict = false;
    std::size_t random_count = 40;
    std::uint64_t seed = 20240611;

    auto* validate = app.add_subcommand("validate", "Check every combinatorial constraint of a document");
    validate->add_option("files", inputs, "Surface documents")->required();
    validate->add_option("--out", out_dir, "Directory for report files");

    auto* run = app.add_subcommand("run", "Run one analysis on a document");
    run->add_option("files", inputs, "Surface documents")->required();
    run->add_option("--command", command, "Analysis to run")->required()->check(CLI::IsMember(fol::kRunCommands));
    run->add_option("--divisor", divisor, "Named divisor used as delta");
    run->add_option("--epsilon", epsilon, "Perturbation parameter p/q");
    run->add_option("--out", out_dir, "Directory for report files");
    run->add_flag("--strict", strict, "Treat warnings as errors");

    auto* cross = app.add_subcommand("crosscheck", "Compare independent negative part computations");
    cross->add_option("files", inputs, "Surface documents")->required();
    cross->add_option("--divisor", divisor, "Named divisor used as delta");
    cross->add_option("--out", out_dir, "Directory for report files");
    cross->add_flag("--strict", strict, "Treat warnings as errors");

    auto* corpus = app.add_subcommand("corpus", "Write the standard corpus");
    corpus->add_option("--out", out_dir, "Target directory")->required();
    corpus->add_option("--random", random_count, "Number of random models");
    corpus->add_option("--seed", seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_code(fol::ErrorFamily::Parse);
    }

    const std::optional<std::string> div = divisor.empty() ? std::nullopt : std::optional<std::string>(divisor);
    int worst = 0;
    auto record = [&](int code) { worst = std::max(worst, code); };

    if (*corpus) {
        return guarded("corpus", [&] {
            fs::create_directories(out_dir);
            for (const auto& [name, doc] : fol::standard_corpus(random_count, seed))
                fol::save_document((fs::path(out_dir) / (name + ".json")).string(), doc);
            return 0;
        });
    }

    std::optional<fol::Rational> eps;
    if (!epsilon.empty()) {
        int code = guarded("--epsilon", [&] {
            eps = fol::Rational::parse(epsilon);
            return 0;
        });
        if (code != 0) return code;
    }

    for (const auto& input : inputs) {
        record(guarded(input, [&] {
            const fol::Document doc = fol::load_document(input);
            if (*validate) {
                auto r = fol::validate_report(doc);
                emit(r, input, "validate", out_dir);
                return r.ok ? 0 : exit_code(fol::ErrorFamily::Validation);
            }
            if (*run) {
                auto r = fol::run_report(doc, {command, div, eps});
                emit(r, input, command, out_dir);
                return strict_exit(r, strict, input);
            }
            auto r = fol::crosscheck_report(doc, div);
            emit(r, input, "crosscheck", out_dir);
            return strict_exit(r, strict, input);
        }));
    }
    return worst;
}
