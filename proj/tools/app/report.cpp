#include "app/report.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "cassonlin/alexander.hpp"
#include "cassonlin/signature.hpp"

namespace cassonlin::app {

namespace {

// The graded tables exist for 2-strand words with exponent sum q >= -1 odd
// or q = -3; every 2-strand knot word freely reduces to sigma_1^q.
bool has_floer_table(const BraidWord& b, int q) {
    return b.strands == 2 && (q >= -1 || q == -3);
}

std::string murasugi_note(const InvariantReport& r, const BraidWord& b, int q) {
    std::ostringstream out;
    out << "|casson_lin| = " << std::llabs(r.casson_lin)
        << " is a lower bound for the unknotting number";
    if (b.strands == 2 && std::abs(q) >= 3)
        out << "; equality holds for this (2," << std::abs(q) << ") torus closure";
    return out.str();
}

}  // namespace

InvariantReport build_report(const BraidWord& b, const SolverOptions& opts) {
    InvariantReport r;
    r.braid = to_text(b);
    r.is_knot = is_knot(b);
    r.exponent_sum = exponent_sum(b);
    if (!r.is_knot)
        throw NotAKnotError("closure of " + r.braid + " is not a knot");

    const Rational det_burau = alexander_at(b, Rational(-1));
    r.alexander_at_minus1 = static_cast<long long>(det_burau.get_num().get_si());
    r.signature = signature_of(b);
    r.determinant = determinant_of(b);

    const std::vector<RepClass> classes = find_classes(b, opts);
    for (const RepClass& c : classes) {
        ClassReport cr;
        if (b.strands == 2) cr.angles = angles(c.config, c.config);
        cr.fingerprint = c.fingerprint;
        cr.residual = c.residual;
        cr.min_singular = c.min_singular;
        cr.sign = c.sign;
        r.classes.push_back(std::move(cr));
    }

    long long sum = 0;
    for (const RepClass& c : classes) {
        if (c.sign == 0)
            throw DegenerateClassError("degenerate fixed class of " + r.braid +
                                       "; signed count undefined");
        sum += c.sign;
    }
    r.casson_lin = kCalibrationSign * sum;
    r.half_signature_abs = std::abs(r.signature) / 2;
    r.consistency = std::llabs(r.casson_lin) == r.half_signature_abs;

    const int q = r.exponent_sum;
    if (has_floer_table(b, q)) {
        r.floer = torus_floer(q);
        r.euler_char = euler_char(*r.floer);
    }
    r.murasugi_bound_note = murasugi_note(r, b, q);
    return r;
}

nlohmann::ordered_json to_json(const InvariantReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["braid"] = r.braid;
    j["is_knot"] = r.is_knot;
    j["exponent_sum"] = r.exponent_sum;
    j["alexander_at_minus1"] = r.alexander_at_minus1;
    j["signature"] = r.signature;
    j["determinant"] = r.determinant;
    j["classes"] = nlohmann::ordered_json::array();
    for (const ClassReport& c : r.classes) {
        nlohmann::ordered_json jc;
        if (c.angles) jc["angles"] = {c.angles->theta1, c.angles->theta2};
        jc["fingerprint"] = c.fingerprint;
        jc["residual"] = c.residual;
        jc["min_singular"] = c.min_singular;
        jc["sign"] = c.sign;
        j["classes"].push_back(std::move(jc));
    }
    j["casson_lin"] = r.casson_lin;
    j["half_signature_abs"] = r.half_signature_abs;
    j["consistency"] = r.consistency;
    if (r.floer) {
        nlohmann::ordered_json jf = nlohmann::ordered_json::object();
        for (const auto& [degree, rank] : *r.floer) jf[std::to_string(degree)] = rank;
        j["floer"] = std::move(jf);
    }
    if (r.euler_char) j["euler_char"] = *r.euler_char;
    j["murasugi_bound_note"] = r.murasugi_bound_note;
    return j;
}

std::string render_text(const InvariantReport& r) {
    std::ostringstream out;
    out << "braid               " << r.braid << "\n";
    out << "is_knot             " << (r.is_knot ? "yes" : "no") << "\n";
    out << "exponent_sum        " << r.exponent_sum << "\n";
    out << "alexander_at(-1)    " << r.alexander_at_minus1 << "\n";
    out << "signature           " << r.signature << "\n";
    out << "determinant         " << r.determinant << "\n";
    out << "classes             " << r.classes.size() << "\n";
    int idx = 0;
    for (const ClassReport& c : r.classes) {
        out << "  [" << idx++ << "] sign " << (c.sign > 0 ? "+1" : c.sign < 0 ? "-1" : " 0")
            << "  residual " << c.residual << "  min_singular " << c.min_singular;
        if (c.angles)
            out << "  angles (" << c.angles->theta1 << ", " << c.angles->theta2 << ")";
        out << "\n";
    }
    out << "casson_lin          " << r.casson_lin << "\n";
    out << "half_signature_abs  " << r.half_signature_abs << "\n";
    out << "consistency         " << (r.consistency ? "yes" : "no") << "\n";
    if (r.floer) {
        out << "floer               ";
        if (r.floer->empty()) out << "(trivial)";
        for (const auto& [degree, rank] : *r.floer)
            out << "[" << degree << "] Z^" << rank << " ";
        out << "\n";
        out << "euler_char          " << *r.euler_char << "\n";
    }
    out << "note                " << r.murasugi_bound_note << "\n";
    return out.str();
}

}  // namespace cassonlin::app
