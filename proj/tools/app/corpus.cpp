#include "app/corpus.hpp"

#include <iomanip>
#include <istream>
#include <sstream>

namespace cassonlin::app {

CorpusEntry parse_corpus_line(const std::string& line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("corpus entry must be a JSON object");
    CorpusEntry entry;
    try {
        entry.name = j.at("name").get<std::string>();
        entry.braid = j.at("braid").get<std::string>();
        entry.expected_signature = j.at("expected_signature").get<int>();
        entry.provenance = j.at("provenance").get<std::string>();
        if (j.contains("expected_class_count"))
            entry.expected_class_count = j.at("expected_class_count").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad corpus entry: ") + e.what());
    }
    return entry;
}

CorpusResult run_corpus(std::istream& in, const SolverOptions& opts) {
    CorpusResult result;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        CorpusRow row;
        try {
            const CorpusEntry entry = parse_corpus_line(line);
            row.name = entry.name;
            const InvariantReport report = build_report(parse_braid(entry.braid), opts);
            row.casson_lin = report.casson_lin;
            row.half_signature_abs = report.half_signature_abs;
            row.match = report.consistency;
            if (report.signature != entry.expected_signature) {
                row.match = false;
                row.note = "signature " + std::to_string(report.signature) + " != expected " +
                           std::to_string(entry.expected_signature);
            } else if (entry.expected_class_count &&
                       static_cast<int>(report.classes.size()) != *entry.expected_class_count) {
                row.match = false;
                row.note = "class count " + std::to_string(report.classes.size()) +
                           " != expected " + std::to_string(*entry.expected_class_count);
            } else if (!report.consistency) {
                row.note = "|casson_lin| != |signature|/2";
            }
        } catch (const std::exception& e) {
            if (row.name.empty()) row.name = "(malformed)";
            row.match = false;
            row.note = e.what();
        }
        if (!row.match) result.exit_code = 1;
        result.rows.push_back(std::move(row));
    }
    return result;
}

std::string render_corpus_table(const CorpusResult& r) {
    std::ostringstream out;
    std::size_t name_width = 4;
    for (const CorpusRow& row : r.rows) name_width = std::max(name_width, row.name.size());
    out << std::left << std::setw(static_cast<int>(name_width)) << "name"
        << "  lambda  half|sig|  match\n";
    for (const CorpusRow& row : r.rows) {
        out << std::left << std::setw(static_cast<int>(name_width)) << row.name << "  "
            << std::right << std::setw(6) << row.casson_lin << "  " << std::setw(9)
            << row.half_signature_abs << "  " << (row.match ? "yes" : "NO");
        if (!row.note.empty()) out << "  (" << row.note << ")";
        out << "\n";
    }
    return out.str();
}

nlohmann::ordered_json corpus_to_json(const CorpusResult& r) {
    nlohmann::ordered_json j;
    j["schema"] = kReportSchema;
    j["rows"] = nlohmann::ordered_json::array();
    for (const CorpusRow& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["name"] = row.name;
        jr["casson_lin"] = row.casson_lin;
        jr["half_signature_abs"] = row.half_signature_abs;
        jr["match"] = row.match;
        if (!row.note.empty()) jr["note"] = row.note;
        j["rows"].push_back(std::move(jr));
    }
    j["exit_code"] = r.exit_code;
    return j;
}

}  // namespace cassonlin::app
