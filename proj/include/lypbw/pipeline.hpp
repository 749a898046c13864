#pragma once

#include <string>

#include "lypbw/io.hpp"
#include "lypbw/ore_tower.hpp"

namespace lypbw {

enum class Command { check, pbw, tower };

struct RunOptions {
    Command command = Command::check;
    bool strict_coassoc = false;
};

/// Exit-code contract: 0 verified, 1 mathematical violation, 2 input error,
/// 3 inconclusive at the bound.
struct RunResult {
    int exit_code = 0;
    Json report;
};

/// Runs the pipeline on a parsed presentation and assembles the report.
/// Deterministic: identical inputs produce byte-identical reports.
RunResult run_pipeline(const Presentation& p, const std::string& input_name,
                       const RunOptions& options);

/// Human-readable rendering of a report document.
std::string render_text(const Json& report);

}  // namespace lypbw
