#include "lypbw/corpus.hpp"

#include <cstdlib>
#include <iomanip>

#include "lypbw/pipeline.hpp"

#ifndef LYPBW_DEFAULT_CORPUS_DIR
#define LYPBW_DEFAULT_CORPUS_DIR "corpus"
#endif

namespace lypbw {

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = {
        {"poly2", "commutative polynomial algebra on two degree-1 variables", 0},
        {"poly2_over_kx1", "two-variable polynomial algebra over k[x1]", 0},
        {"poly3_over_kx1x2", "three-variable polynomial algebra over k[x1,x2]", 0},
        {"heisenberg", "enveloping algebra of the Heisenberg Lie algebra", 0},
        {"heisenberg_over_kx", "Heisenberg enveloping algebra over k[x]", 0},
        {"divided_power", "commutative example with a non-primitive degree-2 generator", 0},
        {"witt_truncated", "Witt-type Lie relations truncated at degree 6; inconclusive at bound", 3},
        {"fail_inhomogeneous", "expected failure: inhomogeneous relation", 1},
        {"fail_delta", "expected failure: relation incompatible with the comultiplication", 1},
    };
    return entries;
}

std::string default_corpus_dir() {
    if (const char* env = std::getenv("LYPBW_CORPUS_DIR")) return env;
    return LYPBW_DEFAULT_CORPUS_DIR;
}

void list_corpus(std::ostream& out) {
    for (const auto& e : corpus_entries())
        out << std::left << std::setw(20) << e.name << " " << e.description << "\n";
}

int run_corpus(std::ostream& out, const std::string& dir) {
    bool all_ok = true;
    for (const auto& e : corpus_entries()) {
        int got;
        std::string note;
        try {
            const Presentation p = load_presentation_file(dir + "/" + e.name + ".json");
            RunOptions options;
            options.command = Command::tower;
            got = run_pipeline(p, e.name + ".json", options).exit_code;
        } catch (const ParseError& err) {
            got = 2;
            note = err.what();
        }
        const bool ok = got == e.expected_exit;
        if (!ok) all_ok = false;
        out << std::left << std::setw(20) << e.name << " expected " << e.expected_exit << " got "
            << got << "  " << (ok ? "ok" : "MISMATCH");
        if (!note.empty()) out << "  (" << note << ")";
        out << "\n";
    }
    out << (all_ok ? "corpus: all entries behave as expected\n"
                   : "corpus: MISMATCHES found\n");
    return all_ok ? 0 : 1;
}

}  // namespace lypbw
