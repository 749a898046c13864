// Command-line front end: validates presented graded algebras, extracts PBW
// generators, and certifies derivation-type Ore-extension towers.

#include <iostream>

#include <CLI11.hpp>

#include "lypbw/corpus.hpp"
#include "lypbw/pipeline.hpp"

namespace {

struct CommonFlags {
    std::string file;
    int max_degree = 0;  // 0 = use the document's value
    bool strict_coassoc = false;
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("file", flags.file, "presentation JSON file")->required();
    cmd->add_option("--max-degree", flags.max_degree, "override the document's degree bound")
        ->check(CLI::PositiveNumber);
    cmd->add_flag("--strict-coassoc", flags.strict_coassoc,
                  "additionally check coassociativity on generators");
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

int run_command(const CommonFlags& flags, lypbw::Command command) {
    lypbw::Presentation p = lypbw::load_presentation_file(flags.file, flags.max_degree);
    lypbw::RunOptions options;
    options.command = command;
    options.strict_coassoc = flags.strict_coassoc;
    const std::string name = flags.file.substr(flags.file.find_last_of('/') + 1);
    const lypbw::RunResult result = lypbw::run_pipeline(p, name, options);
    if (flags.format == "text")
        std::cout << lypbw::render_text(result.report);
    else
        std::cout << result.report.dump(2) << "\n";
    if (result.exit_code == 3)
        std::cerr << "inconclusive: no finite tower certified below the degree bound\n";
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PBW generators and Ore towers of presented graded algebras"};
    app.require_subcommand(1);

    CommonFlags check_flags, pbw_flags, tower_flags;
    auto* check = app.add_subcommand("check", "validate and run the comultiplication checks");
    add_common(check, check_flags);
    auto* pbw = app.add_subcommand("pbw", "extract PBW generators and verify the basis conditions");
    add_common(pbw, pbw_flags);
    auto* tower = app.add_subcommand("tower", "build and verify the Ore-extension tower");
    add_common(tower, tower_flags);

    auto* corpus = app.add_subcommand("corpus", "operate on the bundled example corpus");
    std::string corpus_action;
    corpus->add_option("action", corpus_action, "'list' or 'run-all'")
        ->required()
        ->check(CLI::IsMember({"list", "run-all"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_command(check_flags, lypbw::Command::check);
        if (pbw->parsed()) return run_command(pbw_flags, lypbw::Command::pbw);
        if (tower->parsed()) return run_command(tower_flags, lypbw::Command::tower);
        if (corpus->parsed()) {
            if (corpus_action == "list") {
                lypbw::list_corpus(std::cout);
                return 0;
            }
            return lypbw::run_corpus(std::cout, lypbw::default_corpus_dir());
        }
    } catch (const lypbw::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
