#pragma once

#include <filesystem>
#include <fstream>

#include "gring/verifier.hpp"

namespace gring {

// Report writers. Timings are console-only: identical configuration and
// seed must yield byte-identical files.

inline ordered_json reports_to_json(const RunConfig& cfg,
                                    const std::vector<LemmaReport>& reports) {
    ordered_json out;
    out["schema"] = "report-v1";
    out["seed"] = cfg.seed;
    out["config"] = {{"group", cfg.group_filter},
                     {"lemma", cfg.lemma_filter},
                     {"skip_heavy", cfg.skip_heavy}};
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) {
        ordered_json j;
        j["id"] = r.id;
        j["group"] = r.group;
        j["conductor"] = r.conductor;
        j["passed"] = r.passed();
        ordered_json checks = ordered_json::array();
        for (const auto& c : r.checks) {
            ordered_json cj;
            cj["name"] = c.name;
            cj["verdict"] = c.verdict;
            if (!c.note.empty()) cj["note"] = c.note;
            if (!c.certificate.empty()) cj["certificate"] = c.certificate;
            checks.push_back(cj);
        }
        j["checks"] = checks;
        if (!r.discrepancies.empty()) j["discrepancies"] = r.discrepancies;
        arr.push_back(j);
    }
    out["reports"] = arr;
    return out;
}

inline std::string reports_to_markdown(const RunConfig& cfg,
                                       const std::vector<LemmaReport>& reports) {
    std::ostringstream md;
    md << "# Verification report\n\n";
    md << "seed " << cfg.seed << ", group filter `" << cfg.group_filter << "`";
    if (!cfg.lemma_filter.empty()) md << ", lemma `" << cfg.lemma_filter << "`";
    if (cfg.skip_heavy) md << ", heavy checks skipped";
    md << "\n";
    for (const auto& r : reports) {
        md << "\n## " << r.id << " (" << r.group << ", conductor " << r.conductor << ") — "
           << (r.passed() ? "pass" : "FAIL") << "\n\n";
        md << "| check | verdict | note |\n|---|---|---|\n";
        for (const auto& c : r.checks) {
            std::string note = c.note;
            if (!c.certificate.empty())
                note += (note.empty() ? "" : "; ") + ("certificate " + c.certificate);
            md << "| " << c.name << " | " << c.verdict << " | " << note << " |\n";
        }
        if (!r.discrepancies.empty()) {
            md << "\nDiscrepancies:\n";
            for (const auto& d : r.discrepancies) md << "- " << d << "\n";
        }
    }
    return md.str();
}

inline std::string certificate_filename(const Certificate& c) {
    std::string name = c.claim;
    for (auto& ch : name)
        if (ch == '(' || ch == ')' || ch == ':' || ch == '=' || ch == ' ') ch = '_';
    return name + ".json";
}

inline void write_certificates(const std::string& dir, const std::vector<LemmaReport>& reports) {
    std::filesystem::create_directories(dir);
    for (const auto& r : reports)
        for (const auto& c : r.certificates) {
            std::ofstream out(std::filesystem::path(dir) / certificate_filename(c));
            out << certificate_to_json(c).dump(1) << "\n";
        }
}

// Reloads every certificate in a directory and re-substitutes its witness,
// independently of the solver. Fixture certificates carry no operands and
// are rechecked through the fixture path instead. Returns failing claims.
inline std::vector<std::string> check_certificates(Verifier& v, const std::string& dir) {
    std::vector<std::string> failures;
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    bool fixtures_checked = false;
    for (const auto& f : files) {
        std::ifstream in(f);
        ordered_json j = ordered_json::parse(in);
        const auto& G = v.bundle(j.at("group").get<std::string>()).G;
        Certificate c = certificate_from_json(G, j);
        if (c.form == "fixture") {
            if (!fixtures_checked) {
                auto rep = v.verify_paper_witnesses();
                for (const auto& chk : rep.checks)
                    if (chk.verdict != "pass") failures.push_back(chk.name);
                fixtures_checked = true;
            }
            continue;
        }
        if (!c.recheck()) failures.push_back(c.claim);
    }
    return failures;
}

}  // namespace gring
