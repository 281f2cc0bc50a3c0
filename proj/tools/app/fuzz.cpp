#include "app/fuzz.hpp"

#include <sstream>

#include "cassonlin/signature.hpp"

namespace cassonlin::app {

namespace {

BraidWord random_conjugator(const BraidWord& w, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len_dist(1, 6);
    std::uniform_int_distribution<int> gen_dist(1, w.strands - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    BraidWord xi;
    xi.strands = w.strands;
    const int len = len_dist(rng);
    for (int i = 0; i < len; ++i)
        xi.letters.push_back(gen_dist(rng) * (sign_dist(rng) ? 1 : -1));
    return xi;
}

}  // namespace

std::optional<BraidWord> random_markov_move(const BraidWord& w, std::mt19937_64& rng,
                                            int max_strands, int max_length,
                                            std::string* note) {
    std::uniform_int_distribution<int> kind_dist(0, 3);
    const int kind = kind_dist(rng);
    if (kind <= 1) {  // conjugation, drawn twice as often as each type-II move
        const BraidWord xi = random_conjugator(w, rng);
        BraidWord next = free_reduce(markov_conjugate(w, xi));
        if (static_cast<int>(next.letters.size()) > max_length) {
            if (note) *note = "skipped conjugation by " + to_text(xi) + ": length cap";
            return std::nullopt;
        }
        if (note) *note = "conjugated by " + to_text(xi);
        return next;
    }
    if (kind == 2) {  // stabilization
        if (w.strands >= max_strands) {
            if (note) *note = "skipped stabilization: strand cap";
            return std::nullopt;
        }
        std::uniform_int_distribution<int> sign_dist(0, 1);
        const int sign = sign_dist(rng) ? 1 : -1;
        BraidWord next = free_reduce(markov_stabilize(w, sign));
        if (static_cast<int>(next.letters.size()) > max_length) {
            if (note) *note = "skipped stabilization: length cap";
            return std::nullopt;
        }
        if (note) *note = std::string("stabilized with sign ") + (sign > 0 ? "+1" : "-1");
        return next;
    }
    // destabilization
    try {
        BraidWord next = free_reduce(markov_destabilize(free_reduce(w)));
        if (note) *note = "destabilized";
        return next;
    } catch (const std::invalid_argument& e) {
        if (note) *note = std::string("skipped destabilization: ") + e.what();
        return std::nullopt;
    }
}

FuzzReport markov_fuzz(const BraidWord& b, const FuzzOptions& fopts,
                       const SolverOptions& sopts) {
    FuzzReport report;
    report.base = build_report(b, sopts);

    std::mt19937_64 rng(fopts.seed);
    BraidWord current = free_reduce(b);
    for (int i = 0; i < fopts.moves; ++i) {
        FuzzStep step;
        std::optional<BraidWord> next =
            random_markov_move(current, rng, fopts.max_strands, fopts.max_length, &step.note);
        step.applied = next.has_value();
        if (next) {
            current = std::move(*next);
            step.move = step.note;
            step.note.clear();
            step.braid = to_text(current);
            step.casson_lin = casson_lin(current, sopts);
            step.signature = signature_of(current);
            step.determinant = determinant_of(current);
            step.drift = step.casson_lin != report.base.casson_lin ||
                         step.signature != report.base.signature ||
                         step.determinant != report.base.determinant;
            ++report.applied;
            if (step.drift) ++report.drift_count;
        } else {
            step.move = step.note;
            step.braid = to_text(current);
            ++report.skipped;
        }
        report.steps.push_back(std::move(step));
    }
    return report;
}

std::string render_fuzz(const FuzzReport& r) {
    std::ostringstream out;
    out << "base " << r.base.braid << ": casson_lin " << r.base.casson_lin << ", signature "
        << r.base.signature << ", determinant " << r.base.determinant << "\n";
    int idx = 0;
    for (const FuzzStep& s : r.steps) {
        out << "move " << ++idx << ": " << s.move;
        if (s.applied) {
            out << " -> " << s.braid;
            if (s.drift)
                out << "  DRIFT: casson_lin " << s.casson_lin << ", signature " << s.signature
                    << ", determinant " << s.determinant;
        }
        out << "\n";
    }
    out << "applied " << r.applied << ", skipped " << r.skipped << ", drift " << r.drift_count
        << "\n";
    return out.str();
}

nlohmann::ordered_json fuzz_to_json(const FuzzReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["base"] = to_json(r.base);
    j["steps"] = nlohmann::ordered_json::array();
    for (const FuzzStep& s : r.steps) {
        nlohmann::ordered_json js;
        js["move"] = s.move;
        js["applied"] = s.applied;
        if (!s.note.empty()) js["note"] = s.note;
        js["braid"] = s.braid;
        if (s.applied) {
            js["casson_lin"] = s.casson_lin;
            js["signature"] = s.signature;
            js["determinant"] = s.determinant;
            js["drift"] = s.drift;
        }
        j["steps"].push_back(std::move(js));
    }
    j["applied"] = r.applied;
    j["skipped"] = r.skipped;
    j["drift_count"] = r.drift_count;
    return j;
}

}  // namespace cassonlin::app
