#pragma once

// Randomized Markov-move harness: apply a seeded sequence of conjugations
// and (de)stabilizations to a knot word and verify that the signed count,
// signature, and determinant never move.  Moves that would leave the caps
// (strand count, reduced word length) are skipped and noted.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "app/report.hpp"

namespace cassonlin::app {

struct FuzzOptions {
    int moves = 50;
    std::uint64_t seed = 0;
    int max_strands = 5;
    int max_length = 24;  // letters after free reduction
};

// One random move drawn from rng: conjugation by a word of length <= 6,
// stabilization, or destabilization.  Returns the freely reduced result, or
// nullopt when the move was impossible or capped (reason in *note).
std::optional<BraidWord> random_markov_move(const BraidWord& w, std::mt19937_64& rng,
                                            int max_strands, int max_length,
                                            std::string* note);

struct FuzzStep {
    std::string move;   // human description of the attempted move
    bool applied = false;
    std::string note;   // skip reason when not applied
    std::string braid;  // word after the step (unchanged when skipped)
    long long casson_lin = 0;
    int signature = 0;
    long long determinant = 0;
    bool drift = false;
};

struct FuzzReport {
    InvariantReport base;
    std::vector<FuzzStep> steps;
    int applied = 0;
    int skipped = 0;
    int drift_count = 0;
};

FuzzReport markov_fuzz(const BraidWord& b, const FuzzOptions& fopts,
                       const SolverOptions& sopts = {});

std::string render_fuzz(const FuzzReport& r);

nlohmann::ordered_json fuzz_to_json(const FuzzReport& r);

}  // namespace cassonlin::app
