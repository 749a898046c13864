#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lypbw {

struct CorpusEntry {
    std::string name;  // file stem under the corpus directory
    std::string description;
    int expected_exit;  // of the full (tower) pipeline
};

const std::vector<CorpusEntry>& corpus_entries();

/// Directory holding the bundled presentations; the LYPBW_CORPUS_DIR
/// environment variable overrides the built-in default.
std::string default_corpus_dir();

void list_corpus(std::ostream& out);

/// Runs every bundled presentation through the full pipeline and compares
/// exit codes against expectations. Returns 0 iff every entry behaves as
/// expected.
int run_corpus(std::ostream& out, const std::string& dir);

}  // namespace lypbw
