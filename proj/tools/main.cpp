#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "app/corpus.hpp"
#include "app/fuzz.hpp"
#include "app/report.hpp"
#include "cassonlin/fixedpoints.hpp"

namespace {

using namespace cassonlin;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

struct CommonFlags {
    bool json = false;
    int seeds = 0;  // 0 = default 200 * strands
    double tol = 1e-10;
    std::uint64_t rng_seed = 0;
    std::string dihedral = "on";
};

void add_solver_flags(CLI::App* cmd, CommonFlags* flags) {
    cmd->add_flag("--json", flags->json, "emit JSON instead of text");
    cmd->add_option("--seeds", flags->seeds, "solver seed count (0 = 200 per strand)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--tol", flags->tol, "solver residual tolerance");
    cmd->add_option("--rng-seed", flags->rng_seed, "seed for the quasi-random start points");
    cmd->add_option("--dihedral-seeding", flags->dihedral,
                    "also seed the binary dihedral locus (on|off)")
        ->check(CLI::IsMember({"on", "off"}));
}

SolverOptions solver_options(const CommonFlags& flags) {
    SolverOptions opts;
    opts.seed_count = flags.seeds;
    opts.tol = flags.tol;
    opts.rng_seed = flags.rng_seed;
    opts.dihedral_seeding = flags.dihedral == "on";
    return opts;
}

int run_analyze(const std::string& braid_text, const CommonFlags& flags) {
    const app::InvariantReport report =
        app::build_report(parse_braid(braid_text), solver_options(flags));
    if (flags.json)
        std::cout << app::to_json(report).dump(2) << "\n";
    else
        std::cout << app::render_text(report);
    return report.consistency ? kExitOk : kExitMismatch;
}

int run_corpus(const std::string& path, const CommonFlags& flags) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open corpus file: " << path << "\n";
        return kExitInput;
    }
    const app::CorpusResult result = app::run_corpus(in, solver_options(flags));
    if (flags.json)
        std::cout << app::corpus_to_json(result).dump(2) << "\n";
    else
        std::cout << app::render_corpus_table(result);
    return result.exit_code;
}

int run_fuzz(const std::string& braid_text, int moves, std::uint64_t seed,
             const CommonFlags& flags) {
    const BraidWord b = parse_braid(braid_text);
    if (moves == 0) return run_analyze(braid_text, flags);  // no moves: plain report
    app::FuzzOptions fopts;
    fopts.moves = moves;
    fopts.seed = seed;
    const app::FuzzReport report = app::markov_fuzz(b, fopts, solver_options(flags));
    if (flags.json)
        std::cout << app::fuzz_to_json(report).dump(2) << "\n";
    else
        std::cout << app::render_fuzz(report);
    return report.drift_count == 0 ? kExitOk : kExitMismatch;
}

int run_floer(int q, bool json) {
    const GradedGroups groups = torus_floer(q);
    if (json) {
        nlohmann::ordered_json j;
        j["schema"] = app::kReportSchema;
        j["q"] = q;
        nlohmann::ordered_json jf = nlohmann::ordered_json::object();
        for (const auto& [degree, rank] : groups) jf[std::to_string(degree)] = rank;
        j["floer"] = std::move(jf);
        j["euler_char"] = euler_char(groups);
        std::cout << j.dump(2) << "\n";
    } else {
        if (groups.empty()) std::cout << "trivial groups\n";
        for (const auto& [degree, rank] : groups)
            std::cout << "degree " << degree << ": Z^" << rank << "\n";
        std::cout << "euler_char " << euler_char(groups) << "\n";
    }
    return kExitOk;
}

int run_fixed_points(const std::string& braid_text, const CommonFlags& flags) {
    const BraidWord b = parse_braid(braid_text);
    const std::vector<RepClass> classes = find_classes(b, solver_options(flags));
    bool degenerate = false;
    if (flags.json) {
        nlohmann::ordered_json j;
        j["schema"] = app::kReportSchema;
        j["braid"] = to_text(b);
        j["classes"] = nlohmann::ordered_json::array();
        for (const RepClass& c : classes) {
            nlohmann::ordered_json jc;
            nlohmann::ordered_json pts = nlohmann::ordered_json::array();
            for (const Vec3& p : c.config.points) pts.push_back({p.x, p.y, p.z});
            jc["points"] = std::move(pts);
            jc["fingerprint"] = c.fingerprint;
            jc["residual"] = c.residual;
            jc["min_singular"] = c.min_singular;
            jc["det_return"] = c.det_return;
            jc["sign"] = c.sign;
            j["classes"].push_back(std::move(jc));
            degenerate = degenerate || c.sign == 0;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "classes " << classes.size() << "\n";
        int idx = 0;
        for (const RepClass& c : classes) {
            std::cout << "[" << idx++ << "] sign "
                      << (c.sign > 0 ? "+1" : c.sign < 0 ? "-1" : " 0") << "  residual "
                      << c.residual << "  min_singular " << c.min_singular << "  det "
                      << c.det_return << "\n  points";
            for (const Vec3& p : c.config.points)
                std::cout << "  (" << p.x << ", " << p.y << ", " << p.z << ")";
            std::cout << "\n";
            degenerate = degenerate || c.sign == 0;
        }
    }
    return degenerate ? kExitDegenerate : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App cli{"Casson-Lin invariant of braid closures"};
    cli.require_subcommand(1);

    CommonFlags flags;
    std::string braid_text;
    std::string corpus_path;
    int moves = 50;
    std::uint64_t fuzz_seed = 0;
    int floer_q = 3;
    bool floer_json = false;

    CLI::App* analyze = cli.add_subcommand("analyze", "full invariant report for one braid");
    analyze->add_option("braid", braid_text, "braid word \"<n>: e1 e2 ...\"")->required();
    add_solver_flags(analyze, &flags);

    CLI::App* corpus = cli.add_subcommand("corpus", "run a JSON-lines corpus file");
    corpus->add_option("file", corpus_path, "corpus path")->required();
    add_solver_flags(corpus, &flags);

    CLI::App* fuzz = cli.add_subcommand("markov-fuzz", "randomized Markov-move invariance check");
    fuzz->add_option("braid", braid_text, "braid word")->required();
    fuzz->add_option("--moves", moves, "number of random moves")->check(CLI::NonNegativeNumber);
    fuzz->add_option("--seed", fuzz_seed, "move-sequence seed");
    add_solver_flags(fuzz, &flags);

    CLI::App* floer = cli.add_subcommand("floer", "graded groups of the closure of sigma_1^q");
    floer->add_option("q", floer_q, "exponent (odd; q >= 1 or q = -3)")->required();
    floer->add_flag("--json", floer_json, "emit JSON instead of text");

    CLI::App* fixed = cli.add_subcommand("fixed-points", "list the fixed classes only");
    fixed->add_option("braid", braid_text, "braid word")->required();
    add_solver_flags(fixed, &flags);

    try {
        cli.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return cli.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (analyze->parsed()) return run_analyze(braid_text, flags);
        if (corpus->parsed()) return run_corpus(corpus_path, flags);
        if (fuzz->parsed()) return run_fuzz(braid_text, moves, fuzz_seed, flags);
        if (floer->parsed()) return run_floer(floer_q, floer_json);
        if (fixed->parsed()) return run_fixed_points(braid_text, flags);
    } catch (const DegenerateClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
