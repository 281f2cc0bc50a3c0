#pragma once

// Full-pipeline report for one braid word: classical invariants, the
// enumerated representation classes, the signed count, and (for 2-strand
// words) the graded groups.  The JSON form has a fixed schema and stable
// key order so runs can be diffed byte for byte.

#include <optional>
#include <string>
#include <vector>

#include "cassonlin/braid.hpp"
#include "cassonlin/fixedpoints.hpp"
#include "cassonlin/pillowcase.hpp"

#include "json.hpp"

namespace cassonlin::app {

inline constexpr int kReportSchema = 1;

struct ClassReport {
    std::optional<PillowPoint> angles;  // present for 2-strand words only
    std::vector<double> fingerprint;
    double residual = 0.0;
    double min_singular = 0.0;
    int sign = 0;
};

struct InvariantReport {
    std::string braid;
    bool is_knot = false;
    int exponent_sum = 0;
    long long alexander_at_minus1 = 0;
    int signature = 0;
    long long determinant = 0;
    std::vector<ClassReport> classes;
    long long casson_lin = 0;
    long long half_signature_abs = 0;
    bool consistency = false;  // |casson_lin| == |signature| / 2, computed literally
    std::optional<GradedGroups> floer;      // 2-strand tabulated words only
    std::optional<int> euler_char;          // ditto
    std::string murasugi_bound_note;
};

// Runs the whole pipeline.  Underlying errors (BraidParseError,
// NotAKnotError, DegenerateClassError) propagate unchanged.
InvariantReport build_report(const BraidWord& b, const SolverOptions& opts = {});

nlohmann::ordered_json to_json(const InvariantReport& r);

std::string render_text(const InvariantReport& r);

}  // namespace cassonlin::app
