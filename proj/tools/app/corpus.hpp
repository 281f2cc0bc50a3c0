#pragma once

// Line-delimited JSON corpus of known closures: parse, run the pipeline on
// every entry, compare against the recorded expectations, and render the
// summary table.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "app/report.hpp"

namespace cassonlin::app {

struct CorpusEntry {
    std::string name;
    std::string braid;
    int expected_signature = 0;
    std::string provenance;
    std::optional<int> expected_class_count;
};

// Throws std::invalid_argument on malformed JSON or missing fields.
CorpusEntry parse_corpus_line(const std::string& line);

struct CorpusRow {
    std::string name;
    long long casson_lin = 0;
    long long half_signature_abs = 0;
    bool match = false;
    std::string note;  // failure reason; empty for matching rows
};

struct CorpusResult {
    std::vector<CorpusRow> rows;
    int exit_code = 0;  // 0 iff every row matches and no line was malformed
};

// Runs every entry in input order; malformed lines become non-matching rows
// with the parse error as note.  Blank lines are skipped.
CorpusResult run_corpus(std::istream& in, const SolverOptions& opts = {});

std::string render_corpus_table(const CorpusResult& r);

nlohmann::ordered_json corpus_to_json(const CorpusResult& r);

}  // namespace cassonlin::app
