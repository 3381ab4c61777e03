// Command-line front end: verify the lemma suites, export and recheck
// certificates, and run the finite-module laboratory.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gring/module_lab.hpp"
#include "gring/report.hpp"

using namespace gring;

namespace {

int run_verify(const RunConfig& cfg) {
    Verifier v(cfg);
    auto t0 = std::chrono::steady_clock::now();
    auto reports = v.verify_all();
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    bool all_pass = true;
    size_t skipped = 0;
    for (const auto& r : reports) {
        all_pass = all_pass && r.passed();
        skipped += r.skipped();
        std::cout << r.id << ": " << (r.passed() ? "pass" : "FAIL");
        if (r.skipped()) std::cout << " (" << r.skipped() << " skipped)";
        std::cout << "\n";
        for (const auto& c : r.checks)
            if (c.verdict == "fail") std::cout << "  FAIL " << c.name << "  " << c.note << "\n";
        for (const auto& d : r.discrepancies) std::cout << "  note: " << d << "\n";
    }
    std::cout << reports.size() << " reports, " << (all_pass ? "all pass" : "FAILURES") << ", "
              << skipped << " checks skipped, " << dt << "s\n";

    if (!cfg.json_path.empty()) {
        std::ofstream out(cfg.json_path);
        out << reports_to_json(cfg, reports).dump(1) << "\n";
    }
    if (!cfg.md_path.empty()) {
        std::ofstream out(cfg.md_path);
        out << reports_to_markdown(cfg, reports);
    }
    if (!cfg.certs_dir.empty()) write_certificates(cfg.certs_dir, reports);
    return all_pass ? 0 : 1;
}

int run_check(const RunConfig& cfg) {
    if (cfg.certs_dir.empty()) {
        std::cerr << "check requires --certs DIR\n";
        return 2;
    }
    Verifier v(cfg);
    auto failures = check_certificates(v, cfg.certs_dir);
    if (failures.empty()) {
        std::cout << "all certificates recheck\n";
        return 0;
    }
    for (const auto& f : failures) std::cout << "FAIL " << f << "\n";
    return 1;
}

int run_modlab(const RunConfig& cfg, uint32_t prime, const std::string& module_kind, bool prop45,
               const std::string& json_path) {
    Verifier v(cfg);
    ModuleLab lab(v);
    std::vector<std::string> groups;
    if (cfg.group_filter == "all")
        groups = {"psl27", "psl28", "a6"};
    else
        groups = {cfg.group_filter};

    ordered_json stream = ordered_json::array();
    bool all_pass = true;
    for (const auto& g : groups) {
        const auto& b = v.bundle(g);
        if (b.G.size() % prime == 0) {
            std::cerr << "prime " << prime << " divides |" << g << "| = " << b.G.size() << "\n";
            return 2;
        }
        IsotypicReport rep = prop45 && g == "a6" ? lab.run_prop45(prime, module_kind)
                                                 : lab.run({g, prime, module_kind, 0});
        all_pass = all_pass && rep.passed();
        stream.push_back(isotypic_report_to_json(rep));
        std::cout << g << " p=" << prime << " " << module_kind << ": dim " << rep.dim << ", dims";
        for (size_t d : rep.isotypic_dims) std::cout << " " << d;
        std::cout << ", " << (rep.passed() ? "pass" : "FAIL") << "\n";
        for (const auto& c : rep.checks)
            if (c.verdict == "fail") std::cout << "  FAIL " << c.name << "  " << c.note << "\n";
    }
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << stream.dump(1) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification workbench for the order 168/504/360 group rings"};
    app.require_subcommand(1);

    RunConfig cfg;
    uint32_t prime = 43;
    std::string module_kind = "regular";
    bool prop45 = false;
    std::string modlab_json;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", cfg.group_filter, "psl27|psl28|a6|all")
            ->check(CLI::IsMember({"psl27", "psl28", "a6", "all"}));
        cmd->add_option("--lemma", cfg.lemma_filter, "single lemma id, e.g. 2.1 or 3.4-chi8");
        cmd->add_flag("--skip-heavy", cfg.skip_heavy, "skip the heavy Q(zeta_9) ideal checks");
        cmd->add_option("--workers", cfg.workers, "parallel lemma verifications");
        cmd->add_option("--seed", cfg.seed, "seed recorded in reports");
        cmd->add_option("--json", cfg.json_path, "write the JSON report here");
        cmd->add_option("--md", cfg.md_path, "write the markdown report here");
        cmd->add_option("--certs", cfg.certs_dir, "certificate directory");
    };

    auto* verify = app.add_subcommand("verify", "run table and lemma verifications");
    add_common(verify);

    auto* certs = app.add_subcommand("certificates",
                                     "run verifications and export certificates (--certs DIR)");
    add_common(certs);

    auto* check = app.add_subcommand("check", "re-substitute previously exported certificates");
    add_common(check);

    auto* modlab = app.add_subcommand("modlab", "finite-module laboratory");
    add_common(modlab);
    modlab->add_option("--prime", prime, "prime p, coprime to the group order")->required();
    modlab->add_option("--module", module_kind, "regular | perm:<subgroup> | quotient:<seed>");
    modlab->add_flag("--prop45", prop45, "run the degree-8 proposition checks on a6");
    modlab->add_option("--modlab-json", modlab_json, "write module-lab reports here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(verify)) return run_verify(cfg);
        if (app.got_subcommand(certs)) {
            if (cfg.certs_dir.empty()) {
                std::cerr << "certificates requires --certs DIR\n";
                return 2;
            }
            return run_verify(cfg);
        }
        if (app.got_subcommand(check)) return run_check(cfg);
        if (app.got_subcommand(modlab))
            return run_modlab(cfg, prime, module_kind, prop45, modlab_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
