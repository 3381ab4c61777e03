#pragma once

#include <chrono>
#include <functional>
#include <future>

#include "gring/ideal.hpp"
#include "gring/tables.hpp"
#include "gring/witness_data.hpp"

namespace gring {

struct CheckResult {
    std::string name;
    std::string verdict;  // pass | fail | skip
    std::string note;
    std::string certificate;  // claim id of an attached certificate
    double elapsed_s = 0;     // console display only, kept out of reports
};

struct LemmaReport {
    std::string id;
    std::string group;
    int conductor = 1;
    std::vector<CheckResult> checks;
    std::vector<std::string> discrepancies;
    std::vector<Certificate> certificates;

    bool passed() const {
        for (const auto& c : checks)
            if (c.verdict == "fail") return false;
        return true;
    }
    size_t skipped() const {
        size_t n = 0;
        for (const auto& c : checks) n += c.verdict == "skip";
        return n;
    }
};

struct RunConfig {
    std::string group_filter = "all";  // psl27 | psl28 | a6 | all
    std::string lemma_filter;          // empty = all lemmas of the selected groups
    bool skip_heavy = false;
    int workers = 1;
    std::string json_path, md_path, certs_dir;
    uint64_t seed = 0;
};

inline const std::vector<std::string>& lemma_ids_for(const std::string& group) {
    static const std::vector<std::string> psl27 = {"2.1", "2.2", "2.3", "2.4"};
    static const std::vector<std::string> psl28 = {"3.1", "3.2", "3.2-chi4", "3.2-chi5",
                                                   "3.3", "3.4", "3.4-chi8", "3.4-chi9"};
    static const std::vector<std::string> a6 = {"4.1", "4.1-chi2", "4.2", "4.3", "4.4"};
    static const std::vector<std::string> none;
    if (group == "psl27") return psl27;
    if (group == "psl28") return psl28;
    if (group == "a6") return a6;
    return none;
}

inline std::string group_of_lemma(const std::string& id) {
    if (id.rfind("2.", 0) == 0) return "psl27";
    if (id.rfind("3.", 0) == 0) return "psl28";
    if (id.rfind("4.", 0) == 0) return "a6";
    throw std::invalid_argument("unknown lemma id " + id);
}

// first g in enumeration order with target = g * source * g^-1
inline std::optional<GroupElem> find_idempotent_conjugator(const FiniteGroup& G,
                                                           const AlgElem& source,
                                                           const AlgElem& target) {
    auto supp = source.support();
    for (uint16_t g = 0; g < G.size(); ++g) {
        bool ok = true;
        for (uint16_t x : supp) {
            if (!(target.c[G.conj(g, x)] == source.c[x])) {
                ok = false;
                break;
            }
        }
        if (ok && conj_by(G.elem(g), source) == target) return G.elem(g);
    }
    return std::nullopt;
}

class Verifier {
public:
    explicit Verifier(RunConfig cfg = {}) : cfg_(std::move(cfg)) {}

    const catalog::GroupBundle& bundle(const std::string& name) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = bundles_.find(name);
        if (it == bundles_.end())
            it = bundles_.emplace(name, catalog::make_group_bundle(name)).first;
        return it->second;
    }
    const CharTable& table(const std::string& name) {
        const auto& b = bundle(name);
        std::lock_guard<std::mutex> lk(mu_);
        auto it = tables_.find(name);
        if (it == tables_.end()) it = tables_.emplace(name, table_of(b)).first;
        return it->second;
    }

    // ---- table validation ------------------------------------------------

    LemmaReport verify_tables(const std::string& group) {
        const auto& b = bundle(group);
        const auto& t = table(group);
        LemmaReport rep;
        rep.id = "tables:" + group;
        rep.group = group;
        rep.conductor = 0;
        for (const auto& r : t.rows) rep.conductor = std::lcm(rep.conductor ? rep.conductor : 1, r.k);

        check(rep, "classes.count", b.G.classes().size() == t.printed[0].size(),
              std::to_string(b.G.classes().size()) + " classes");
        std::set<uint16_t> distinct(b.class_rep_class.begin(), b.class_rep_class.end());
        check(rep, "classes.representatives", distinct.size() == b.G.classes().size(),
              "printed representatives hit every class once");

        // duplicate printed rows
        bool dup = false;
        for (size_t i = 0; i < t.printed.size() && !dup; ++i)
            for (size_t j = i + 1; j < t.printed.size(); ++j) {
                bool same = true;
                for (size_t c = 0; c < t.printed[i].size(); ++c)
                    if (!(t.printed[i][c] == t.printed[j][c])) same = false;
                if (same) {
                    dup = true;
                    rep.discrepancies.push_back("printed rows chi" + std::to_string(i + 1) +
                                                " and chi" + std::to_string(j + 1) +
                                                " are identical; replaced by the Galois-conjugate "
                                                "completion");
                    break;
                }
            }
        if (group == "psl28")
            check(rep, "printed.duplicate-row", dup, "chi4/chi5 duplication detected");

        // printed orthogonality failures become discrepancy notes
        std::vector<ClassFunction> printed_rows;
        for (const auto& r : t.printed) printed_rows.push_back(detail::row_to_class_function(b, r));
        for (size_t i = 0; i < printed_rows.size(); ++i)
            for (size_t j = i; j < printed_rows.size(); ++j) {
                Cyc ip = inner_product(printed_rows[i], printed_rows[j]);
                if (!(ip == Cyc(rat(i == j ? 1 : 0))))
                    rep.discrepancies.push_back("printed <chi" + std::to_string(i + 1) + ",chi" +
                                                std::to_string(j + 1) + "> = " + ip.to_string());
            }
        for (const auto& note : t.notes) rep.discrepancies.push_back("substitution: " + note);

        bool ortho = true;
        for (size_t i = 0; i < t.rows.size() && ortho; ++i)
            for (size_t j = i; j < t.rows.size(); ++j)
                if (!(inner_product(t.rows[i], t.rows[j]) == Cyc(rat(i == j ? 1 : 0)))) {
                    ortho = false;
                    break;
                }
        check(rep, "orthogonality", ortho, "corrected rows are orthonormal");

        Rat degsum(0);
        for (const auto& r : t.rows) {
            Rat d = r.degree().rational_value();
            degsum += d * d;
        }
        check(rep, "degree-sum", degsum == Rat((unsigned long)b.G.size()),
              "sum of squared degrees = " + rat_to_string(degsum));

        // section-1 identity: the table idempotents are central, idempotent
        // and sum to 1
        std::vector<AlgElem> es;
        for (const auto& r : t.rows) es.push_back(idempotent_of(r, b.G, b.G));
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        check(rep, "idempotents.partition-of-unity", sum == AlgElem::one(b.G, 1), "");
        bool central = true;
        for (const auto& e : es) central = central && is_central(e);
        check(rep, "idempotents.central", central, "");
        return rep;
    }

    // ---- lemma dispatch ----------------------------------------------------

    LemmaReport verify_lemma(const std::string& id) {
        if (id == "2.1") return lemma_2_1();
        if (id == "2.2") return lemma_2_2();
        if (id == "2.3") return lemma_2_3();
        if (id == "2.4") return lemma_2_4();
        if (id == "3.1") return lemma_3_1();
        if (id == "3.2") return lemma_3_2("3.2", 2);
        if (id == "3.2-chi4") return lemma_3_2("3.2-chi4", 3);
        if (id == "3.2-chi5") return lemma_3_2("3.2-chi5", 4);
        if (id == "3.3") return lemma_3_3();
        if (id == "3.4") return lemma_3_4("3.4", 6);
        if (id == "3.4-chi8") return lemma_3_4("3.4-chi8", 7);
        if (id == "3.4-chi9") return lemma_3_4("3.4-chi9", 8);
        if (id == "4.1") return lemma_4_1("4.1", false);
        if (id == "4.1-chi2") return lemma_4_1("4.1-chi2", true);
        if (id == "4.2") return lemma_4_2();
        if (id == "4.3") return lemma_4_3();
        if (id == "4.4") return lemma_4_4();
        throw std::invalid_argument("unknown lemma id " + id);
    }

    std::vector<LemmaReport> verify_all() {
        std::vector<std::string> groups;
        if (cfg_.group_filter == "all")
            groups = {"psl27", "psl28", "a6"};
        else
            groups = {cfg_.group_filter};
        std::vector<std::function<LemmaReport()>> jobs;
        for (const auto& g : groups) {
            if (cfg_.lemma_filter.empty())
                jobs.push_back([this, g] { return verify_tables(g); });
            for (const auto& id : lemma_ids_for(g)) {
                if (!cfg_.lemma_filter.empty() && id != cfg_.lemma_filter) continue;
                jobs.push_back([this, id] { return verify_lemma(id); });
            }
        }
        if (cfg_.lemma_filter.empty() &&
            (cfg_.group_filter == "all" || cfg_.group_filter == "psl27"))
            jobs.push_back([this] { return verify_paper_witnesses(); });

        std::vector<LemmaReport> out(jobs.size());
        int workers = std::max(1, cfg_.workers);
        if (workers == 1) {
            for (size_t i = 0; i < jobs.size(); ++i) out[i] = jobs[i]();
        } else {
            // bounded window of async jobs; results land by index
            std::vector<std::future<LemmaReport>> fut(jobs.size());
            size_t next = 0, running = 0, done = 0;
            std::vector<size_t> active;
            while (done < jobs.size()) {
                while (next < jobs.size() && running < (size_t)workers) {
                    fut[next] = std::async(std::launch::async, jobs[next]);
                    active.push_back(next);
                    ++next;
                    ++running;
                }
                size_t idx = active.front();
                active.erase(active.begin());
                out[idx] = fut[idx].get();
                --running;
                ++done;
            }
        }
        return out;
    }

    // ---- transcribed witnesses --------------------------------------------

    LemmaReport verify_paper_witnesses() {
        const auto& b = bundle("psl27");
        const auto& G = b.G;
        const auto& t = table("psl27");
        LemmaReport rep;
        rep.id = "paper-witnesses";
        rep.group = "psl27";
        rep.conductor = 7;

        ordered_json doc = ordered_json::parse(fixtures::paper_witnesses_json());
        if (doc.at("schema").get<std::string>() != "paper-witnesses-v1")
            throw std::invalid_argument("fixture schema mismatch");

        // named elements the fixture equations refer to
        auto& C7 = b.subgroups.at("C7");
        auto& D4 = b.subgroups.at("D4");
        auto& H = b.subgroups.at("H");
        ClassFunction chi1 =
            degree_one_char({&C7, {{parse_perm("(1,8,2,4,3,7,5)"), Cyc::zeta(7, 1)}}});
        ClassFunction eta = degree_one_char({&D4,
                                             {{parse_perm("(1,7,3,8)(2,6,4,5)"), Cyc(rat(-1))},
                                              {parse_perm("(1,2)(3,4)(5,7)(6,8)"), Cyc(rat(-1))}}});
        AlgElem e2G = idempotent_of(t.rows[1], G, G);
        AlgElem e4G = idempotent_of(t.rows[3], G, G);
        AlgElem eC7_1 = idempotent_of(chi1, C7, G);
        AlgElem eD4 = idempotent_of(eta, D4, G);
        AlgElem eH = idempotent_of(trivial_character(H), H, G);
        std::vector<AlgElem> eA4;
        for (int i = 1; i <= 6; ++i) {
            auto& A = b.subgroups.at("A4_" + std::to_string(i));
            eA4.push_back(idempotent_of(trivial_character(A), A, G));
        }
        AlgElem one7 = AlgElem::one(G, 7);

        std::map<std::string, AlgElem> r_elems;  // r_j needed by the rr_j equations

        for (const auto& fx : doc.at("fixtures")) {
            std::string eq = fx.at("eq_id").get<std::string>();
            std::string claim = fx.at("claim").get<std::string>();
            AlgElem w = algelem_from_json(G, fx.at("witness"));
            bool ok = false;
            std::string note;
            if (eq == "L21_q1") {
                ok = (one7 - e2G) * eC7_1 * w == eC7_1 * eD4;
            } else if (eq == "L21_q4") {
                ok = eC7_1 * eD4 == w * eD4;
            } else if (eq.rfind("L22_r", 0) == 0 && eq.find("rr") == std::string::npos) {
                int j = eq.back() - '0';
                ok = eA4[j - 1] * w == w && !w.is_zero();
                for (int i = 1; i <= 6 && ok; ++i)
                    if (i != j) ok = (w * eA4[i - 1]).is_zero();
                r_elems.emplace("r" + std::to_string(j), w);
            } else if (eq.rfind("L22_rr", 0) == 0) {
                int j = eq.back() - '0';
                const AlgElem& r = r_elems.at("r" + std::to_string(j));
                AlgElem target = e4G * eA4[j - 1];
                ok = w * (r * target) == target;
            } else if (eq == "L22_q3") {
                ok = w * (eA4[0] * eH) == eH;
            } else if (eq == "L22_q4") {
                ok = eA4[0] * eH == w * eH;
            } else {
                throw std::invalid_argument("unknown fixture eq_id " + eq);
            }
            // denominator primes must match the transcription
            if (fx.contains("expected_denominator_primes")) {
                std::set<mpz_class> want;
                for (const auto& p : fx.at("expected_denominator_primes"))
                    want.insert(mpz_class(p.get<std::string>()));
                auto got = w.denominator_primes();
                if (got != want) {
                    ok = false;
                    note = "denominator primes differ from the transcription";
                }
            }
            check(rep, claim, ok, note);

            Certificate c;
            c.claim = claim;
            c.group = "psl27";
            c.provenance = fx.at("provenance").get<std::string>();
            c.form = "fixture";
            c.conductor = 7;
            c.lhs = AlgElem::zero(G, 1);
            c.rhs = AlgElem::zero(G, 1);
            c.witness = w;
            c.denominator_primes = w.denominator_primes();
            c.gf8_polynomial = "n/a";
            rep.certificates.push_back(std::move(c));
        }
        return rep;
    }

private:
    // ---- helpers -----------------------------------------------------------

    void check(LemmaReport& rep, const std::string& name, bool ok, const std::string& note = "",
               const std::string& cert = "") {
        rep.checks.push_back({name, ok ? "pass" : "fail", note, cert});
    }
    void skip(LemmaReport& rep, const std::string& name, const std::string& note) {
        rep.checks.push_back({name, "skip", note, ""});
    }

    std::string primes_string(const std::set<mpz_class>& s) {
        std::string out = "{";
        for (const auto& p : s) out += (out.size() > 1 ? "," : "") + p.get_str();
        return out + "}";
    }

    Certificate make_cert(const std::string& claim, const std::string& group,
                          const std::string& form, int conductor, const AlgElem& lhs,
                          const AlgElem& rhs, const AlgElem& w) {
        Certificate c;
        c.claim = claim;
        c.group = group;
        c.provenance = "solver";
        c.form = form;
        c.conductor = conductor;
        c.lhs = lhs;
        c.rhs = rhs;
        c.witness = w;
        c.denominator_primes = w.denominator_primes();
        const auto& b = bundle(group);
        c.gf8_polynomial = b.gf ? b.gf->name() : "n/a";
        return c;
    }

    // ideal equality with two witness certificates attached to the report
    void certified_equality(LemmaReport& rep, const std::string& check_name,
                            const std::string& claim_prefix, const AlgElem& lhs,
                            const AlgElem& rhs, Side side, int conductor) {
        auto cert = certify_ideal_equality(lhs, rhs, side);
        std::string dims = "dim " + std::to_string(cert.dim_lhs) + " = " +
                           std::to_string(cert.dim_rhs);
        check(rep, check_name + ".subspace", cert.equal, dims);
        bool fwd_ok = false, bwd_ok = false;
        if (cert.w_fwd) {
            fwd_ok = side == Side::kRight ? rhs * *cert.w_fwd == lhs : *cert.w_fwd * rhs == lhs;
            rep.certificates.push_back(make_cert(claim_prefix + ":fwd", rep.group,
                                                 side == Side::kRight ? "right_unknown"
                                                                      : "left_unknown",
                                                 conductor, rhs, lhs, *cert.w_fwd));
        }
        if (cert.w_bwd) {
            bwd_ok = side == Side::kRight ? lhs * *cert.w_bwd == rhs : *cert.w_bwd * lhs == rhs;
            rep.certificates.push_back(make_cert(claim_prefix + ":bwd", rep.group,
                                                 side == Side::kRight ? "right_unknown"
                                                                      : "left_unknown",
                                                 conductor, lhs, rhs, *cert.w_bwd));
        }
        check(rep, check_name + ".witness-fwd", fwd_ok,
              cert.w_fwd ? "denominator primes " + primes_string(cert.primes_fwd) : "no solution",
              claim_prefix + ":fwd");
        check(rep, check_name + ".witness-bwd", bwd_ok,
              cert.w_bwd ? "denominator primes " + primes_string(cert.primes_bwd) : "no solution",
              claim_prefix + ":bwd");
    }

    // the lemmas' part-(3) pattern: first basis vector r of
    // {x in e_j R : x e_i = 0 for i != j} admitting w with w (r e e_j) = e e_j
    void annihilator_family(LemmaReport& rep, const std::string& name_prefix,
                            const std::string& claim_prefix, const std::vector<AlgElem>& family,
                            const AlgElem& echi, int conductor) {
        const FiniteGroup& G = *echi.group;
        for (size_t j = 0; j < family.size(); ++j) {
            std::vector<AlgElem> others;
            for (size_t i = 0; i < family.size(); ++i)
                if (i != j) others.push_back(family[i]);
            SubspaceBasis space = annihilator_in_right_ideal(others, family[j]);
            AlgElem target = echi * family[j];
            bool found = false;
            std::string note;
            for (const auto& row : space.rows) {
                AlgElem r = from_vector(G, conductor, row);
                if (r.is_zero()) continue;
                bool ann = family[j] * r == r;
                for (const auto& o : others) ann = ann && (r * o).is_zero();
                if (!ann) continue;
                AlgElem gen = r * target;
                if (gen.is_zero()) continue;  // zero generator cannot certify membership
                auto w = solve_in_algebra(gen, target, Side::kLeft);
                if (w.has_value() && *w * gen == target) {
                    found = true;
                    note = "basis vector admits a membership witness; target nonzero: " +
                           std::string(target.is_zero() ? "no" : "yes");
                    rep.certificates.push_back(make_cert(
                        claim_prefix + ":rr" + std::to_string(j + 1), rep.group, "left_unknown",
                        conductor, gen, target, *w));
                    break;
                }
            }
            check(rep, name_prefix + ".r" + std::to_string(j + 1), found, note,
                  found ? claim_prefix + ":rr" + std::to_string(j + 1) : "");
        }
    }

    void conjugator_family(LemmaReport& rep, const std::string& name_prefix,
                           const std::vector<AlgElem>& es, size_t base) {
        const FiniteGroup& G = *es[base].group;
        for (size_t i = 0; i < es.size(); ++i) {
            if (i == base) continue;
            auto g = find_idempotent_conjugator(G, es[i], es[base]);
            bool ok = g.has_value() && conj_by(*g, es[i]) == es[base];
            check(rep, name_prefix + ".g" + std::to_string(i + 1), ok,
                  ok ? "witness " + to_string(*g, G.gf8()) : "no conjugator found");
        }
    }

    // ---- PSL(2,7) lemmas ----------------------------------------------------

    LemmaReport lemma_2_1() {
        const auto& b = bundle("psl27");
        const auto& G = b.G;
        const auto& t = table("psl27");
        LemmaReport rep;
        rep.id = "2.1";
        rep.group = "psl27";
        rep.conductor = 7;

        auto& C7 = b.subgroups.at("C7");
        auto& D4 = b.subgroups.at("D4");
        GroupElem a = parse_perm("(1,8,2,4,3,7,5)");
        ClassFunction eta = degree_one_char({&D4,
                                             {{parse_perm("(1,7,3,8)(2,6,4,5)"), Cyc(rat(-1))},
                                              {parse_perm("(1,2)(3,4)(5,7)(6,8)"), Cyc(rat(-1))}}});
        std::map<long, ClassFunction> chi;
        for (long i : {1L, 2L, 4L})
            chi.emplace(i, degree_one_char({&C7, {{a, Cyc::zeta(7, i)}}}));

        for (long i : {1L, 2L, 4L})
            check(rep, "(1).i=" + std::to_string(i),
                  induce(chi.at(i), C7, G) - induce(eta, D4, G) == t.rows[1]);

        AlgElem e2G = idempotent_of(t.rows[1], G, G);
        AlgElem e1 = idempotent_of(chi.at(1), C7, G);
        AlgElem e2 = idempotent_of(chi.at(2), C7, G);
        AlgElem e4 = idempotent_of(chi.at(4), C7, G);
        AlgElem eD4 = idempotent_of(eta, D4, G);
        check(rep, "(2)", (e1 + e2 + e4) * e2G == e2G);

        GroupElem h = parse_perm("(1,7,8)(3,5,4)");
        check(rep, "(3).e4", conj_by(inverse(h), e2) == e4);
        check(rep, "(3).e1", conj_by(h, e2) == e1);

        AlgElem one7 = AlgElem::one(G, 7);
        AlgElem lhs = (one7 - e2G) * e1;
        AlgElem rhs = e1 * eD4;
        certified_equality(rep, "(4)", "2.1(4)", lhs, rhs, Side::kRight, 7);
        certified_equality(rep, "(5)", "2.1(5)", rhs, eD4, Side::kLeft, 7);
        return rep;
    }

    LemmaReport lemma_2_2() {
        const auto& b = bundle("psl27");
        const auto& G = b.G;
        const auto& t = table("psl27");
        LemmaReport rep;
        rep.id = "2.2";
        rep.group = "psl27";
        rep.conductor = 1;

        auto& A47 = b.subgroups.at("A4_7");
        auto orbit = all_conjugates(G, A47);
        check(rep, "(0).orbit", orbit.size() == 7, "seven conjugate subgroups");
        // the six printed subgroups are pairwise distinct members of the orbit
        std::set<std::vector<uint16_t>> listed;
        bool members = true;
        for (int i = 1; i <= 6; ++i) {
            auto idx = G.subgroup_indices(b.subgroups.at("A4_" + std::to_string(i)));
            listed.insert(idx);
            bool inorbit = false;
            for (const auto& K : orbit) inorbit = inorbit || G.subgroup_indices(K) == idx;
            members = members && inorbit;
        }
        check(rep, "(0).printed-members", members && listed.size() == 6, "");

        auto& A41 = b.subgroups.at("A4_1");
        auto& H = b.subgroups.at("H");
        check(rep, "(1)",
              induce(trivial_character(A41), A41, G) - induce(trivial_character(H), H, G) ==
                  t.rows[3]);

        AlgElem e4G = idempotent_of(t.rows[3], G, G);
        std::vector<AlgElem> eA4;
        for (int i = 1; i <= 6; ++i) {
            auto& A = b.subgroups.at("A4_" + std::to_string(i));
            eA4.push_back(idempotent_of(trivial_character(A), A, G));
        }
        AlgElem eH = idempotent_of(trivial_character(H), H, G);

        AlgElem sum = eA4[0];
        for (size_t i = 1; i < eA4.size(); ++i) sum = sum + eA4[i];
        auto r0 = solve_in_algebra(sum, e4G, Side::kRight);
        bool r0ok = r0.has_value() && sum * *r0 == e4G;
        if (r0ok)
            rep.certificates.push_back(make_cert("2.2(2):r0", "psl27", "right_unknown", 1, sum,
                                                 e4G, *r0));
        check(rep, "(2).r0", r0ok,
              r0ok ? "denominator primes " + primes_string(r0->denominator_primes()) : "",
              "2.2(2):r0");

        annihilator_family(rep, "(3)", "2.2(3)", eA4, e4G, 1);

        conjugator_family(rep, "(4)", eA4, 0);

        AlgElem one = AlgElem::one(G, 1);
        certified_equality(rep, "(5)", "2.2(5)", (one - e4G) * eA4[0], eA4[0] * eH, Side::kRight,
                           1);
        certified_equality(rep, "(6)", "2.2(6)", eA4[0] * eH, eH, Side::kLeft, 1);
        return rep;
    }

    LemmaReport lemma_2_3() {
        const auto& b = bundle("psl27");
        const auto& G = b.G;
        const auto& t = table("psl27");
        LemmaReport rep;
        rep.id = "2.3";
        rep.group = "psl27";
        rep.conductor = 1;

        auto& S41 = b.subgroups.at("S4_1");
        auto orbit = all_conjugates(G, S41);
        check(rep, "(0).orbit", orbit.size() == 7, "seven conjugate subgroups");

        ClassFunction eta1 = sign_character(orbit[0]);
        check(rep, "(1)", induce(eta1, orbit[0], G) == t.rows[4]);

        std::vector<AlgElem> es;
        for (const auto& K : orbit) es.push_back(idempotent_of(sign_character(K), K, G));
        AlgElem e5G = idempotent_of(t.rows[4], G, G);
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        check(rep, "(2)", sum == e5G);

        bool ortho = true;
        for (size_t i = 0; i < es.size() && ortho; ++i)
            for (size_t j = 0; j < es.size(); ++j) {
                AlgElem p = es[i] * es[j];
                if (i == j ? !(p == es[i]) : !p.is_zero()) {
                    ortho = false;
                    break;
                }
            }
        check(rep, "(3).kronecker", ortho);

        conjugator_family(rep, "(4)", es, 0);
        return rep;
    }

    LemmaReport lemma_2_4() {
        const auto& b = bundle("psl27");
        const auto& G = b.G;
        const auto& t = table("psl27");
        LemmaReport rep;
        rep.id = "2.4";
        rep.group = "psl27";
        rep.conductor = 3;

        check(rep, "(0).H1-equals-H",
              G.subgroup_indices(b.subgroups.at("H1")) == G.subgroup_indices(b.subgroups.at("H")),
              "generator sets differ, element sets agree");

        std::vector<AlgElem> es;
        std::vector<const FiniteGroup*> Hs;
        bool all_conj = true;
        for (int i = 1; i <= 8; ++i) {
            auto& Hi = b.subgroups.at("H" + std::to_string(i));
            Hs.push_back(&Hi);
            // eta_i(t_i) = zeta_3^2 on the printed order-3 generator,
            // eta_i(s_i) = 1 on the 7-cycle
            ClassFunction eta = degree_one_char(
                {&Hi, {{Hi.generators()[0], Cyc::zeta(3, 2)}, {Hi.generators()[1], Cyc(rat(1))}}});
            es.push_back(idempotent_of(eta, Hi, G));
            if (i > 1)
                all_conj =
                    all_conj && find_conjugator(G, *Hs[0], Hi).has_value();
        }
        check(rep, "(0).conjugate-family", all_conj, "all H_i conjugate to H_1");

        bool ind_ok = true;
        for (int i = 0; i < 8; ++i) {
            ClassFunction eta = degree_one_char({Hs[i],
                                                 {{Hs[i]->generators()[0], Cyc::zeta(3, 2)},
                                                  {Hs[i]->generators()[1], Cyc(rat(1))}}});
            ind_ok = ind_ok && induce(eta, *Hs[i], G) == t.rows[5];
        }
        check(rep, "(1)", ind_ok, "chi_6 = Ind(eta_i) for every i");

        AlgElem e6G = idempotent_of(t.rows[5], G, G);
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        check(rep, "(2)", sum == e6G);

        bool ortho = true;
        for (size_t i = 0; i < es.size() && ortho; ++i)
            for (size_t j = 0; j < es.size(); ++j) {
                AlgElem p = es[i] * es[j];
                if (i == j ? !(p == es[i]) : !p.is_zero()) {
                    ortho = false;
                    break;
                }
            }
        check(rep, "(3).kronecker", ortho);

        conjugator_family(rep, "(4)", es, 0);
        return rep;
    }

    // ---- PSL(2,8) lemmas ----------------------------------------------------

    LemmaReport lemma_3_1() {
        const auto& b = bundle("psl28");
        const auto& G = b.G;
        const auto& t = table("psl28");
        LemmaReport rep;
        rep.id = "3.1";
        rep.group = "psl28";
        rep.conductor = 3;

        auto& C23 = b.subgroups.at("C23");
        auto& C9 = b.subgroups.at("C9");
        GroupElem s = parse_mat("[[0,a5],[a2,0]]", *b.gf);
        GroupElem t3 = parse_mat("[[a5,a2],[a6,a5]]", *b.gf);
        GroupElem u = parse_mat("[[a,a],[a5,a]]", *b.gf);
        GroupElem h = parse_mat("[[a4,1],[1,0]]", *b.gf);

        ClassFunction chi2_c23 =
            degree_one_char({&C23, {{s, Cyc(rat(-1))}, {t3, Cyc(rat(1))}, {u, Cyc(rat(1))}}});
        ClassFunction chi2_c9 = degree_one_char({&C9, {{h, Cyc::zeta(3, 2)}}});

        check(rep, "(1)", induce(chi2_c23, C23, G) - induce(chi2_c9, C9, G) == t.rows[1]);

        AlgElem e2G = idempotent_of(t.rows[1], G, G);
        std::vector<AlgElem> eC23;  // the seven nontrivial idempotents
        AlgElem echi2 = AlgElem::zero(G, 1);
        for (int mask = 1; mask < 8; ++mask) {
            auto v = [&](int bit) { return Cyc(rat(mask >> bit & 1 ? -1 : 1)); };
            ClassFunction chi =
                degree_one_char({&C23, {{s, v(2)}, {t3, v(1)}, {u, v(0)}}});
            AlgElem e = idempotent_of(chi, C23, G);
            if (mask == 4) echi2 = e;  // s -> -1, t,u -> +1
            eC23.push_back(std::move(e));
        }
        AlgElem sum = eC23[0];
        for (size_t i = 1; i < eC23.size(); ++i) sum = sum + eC23[i];
        check(rep, "(2)", sum * e2G == e2G);

        bool conj_ok = true;
        for (const auto& e : eC23) {
            if (e == echi2) continue;
            auto g = find_idempotent_conjugator(G, echi2, e);
            conj_ok = conj_ok && g.has_value();
        }
        check(rep, "(3)", conj_ok, "every nontrivial character idempotent is conjugate to chi_2");

        AlgElem eC9_2 = idempotent_of(chi2_c9, C9, G);
        AlgElem one = AlgElem::one(G, 3);
        certified_equality(rep, "(4)", "3.1(4)", (one - e2G.embedded(3)) * echi2.embedded(3),
                           echi2.embedded(3) * eC9_2, Side::kRight, 3);
        certified_equality(rep, "(5)", "3.1(5)", echi2.embedded(3) * eC9_2, eC9_2, Side::kLeft, 3);
        return rep;
    }

    // chi_3 (row index 2) with chi^{C9}(h) = zeta_9, and its Galois variants
    LemmaReport lemma_3_2(const std::string& id, size_t row) {
        const auto& b = bundle("psl28");
        const auto& G = b.G;
        const auto& t = table("psl28");
        LemmaReport rep;
        rep.id = id;
        rep.group = "psl28";
        rep.conductor = 9;

        auto& C23 = b.subgroups.at("C23");
        auto& C9 = b.subgroups.at("C9");
        GroupElem s = parse_mat("[[0,a5],[a2,0]]", *b.gf);
        GroupElem t3 = parse_mat("[[a5,a2],[a6,a5]]", *b.gf);
        GroupElem u = parse_mat("[[a,a],[a5,a]]", *b.gf);
        GroupElem h = parse_mat("[[a4,1],[1,0]]", *b.gf);
        ClassFunction chi2_c23 =
            degree_one_char({&C23, {{s, Cyc(rat(-1))}, {t3, Cyc(rat(1))}, {u, Cyc(rat(1))}}});

        // the C9 exponent pairing with this row; zeta_9 for chi_3 itself,
        // the matching Galois twist for the inferred chi_4/chi_5 variants
        long expo = 0;
        for (long e : {1L, 2L, 4L, 5L, 7L, 8L}) {
            ClassFunction cand = degree_one_char({&C9, {{h, Cyc::zeta(9, e)}}});
            if (induce(chi2_c23, C23, G) - induce(cand, C9, G) == t.rows[row]) {
                expo = e;
                break;
            }
        }
        check(rep, "(1)", expo != 0,
              expo ? "chi^{C9}(h) = zeta_9^" + std::to_string(expo) : "no exponent matches");
        if (expo == 0) return rep;
        if (id != "3.2")
            rep.discrepancies.push_back(
                "inferred Galois-conjugate variant; the source states the chi_3 case and notes "
                "the analogues hold");
        ClassFunction chi_c9 = degree_one_char({&C9, {{h, Cyc::zeta(9, expo)}}});

        AlgElem erG = idempotent_of(t.rows[row], G, G);
        AlgElem sum = AlgElem::zero(G, 1);
        AlgElem echi2 = AlgElem::zero(G, 1);
        for (int mask = 1; mask < 8; ++mask) {
            auto v = [&](int bit) { return Cyc(rat(mask >> bit & 1 ? -1 : 1)); };
            ClassFunction chi = degree_one_char({&C23, {{s, v(2)}, {t3, v(1)}, {u, v(0)}}});
            AlgElem e = idempotent_of(chi, C23, G);
            if (mask == 4) echi2 = e;
            sum = sum + e;
        }
        check(rep, "(2)", sum * erG == erG);

        if (cfg_.skip_heavy) {
            skip(rep, "(3).ideal", "heavy Q(zeta_9) ideal equality skipped by configuration");
            skip(rep, "(4).ideal", "heavy Q(zeta_9) ideal equality skipped by configuration");
            return rep;
        }
        AlgElem eC9 = idempotent_of(chi_c9, C9, G);
        AlgElem one = AlgElem::one(G, 9);
        certified_equality(rep, "(3)", id + "(3)", (one - erG.embedded(9)) * echi2.embedded(9),
                           echi2.embedded(9) * eC9, Side::kRight, 9);
        certified_equality(rep, "(4)", id + "(4)", echi2.embedded(9) * eC9, eC9, Side::kLeft, 9);
        return rep;
    }

    LemmaReport lemma_3_3() {
        const auto& b = bundle("psl28");
        const auto& G = b.G;
        const auto& t = table("psl28");
        LemmaReport rep;
        rep.id = "3.3";
        rep.group = "psl28";
        rep.conductor = 1;

        std::vector<const FiniteGroup*> D7;
        for (int i = 1; i <= 8; ++i) D7.push_back(&b.subgroups.at("D7_" + std::to_string(i)));
        auto& D9 = b.subgroups.at("D9");

        bool conj_ok = true, inter_ok = true;
        for (int i = 0; i < 8; ++i) {
            if (i > 0) conj_ok = conj_ok && find_conjugator(G, *D7[0], *D7[i]).has_value();
            for (int j = i + 1; j < 8; ++j)
                inter_ok = inter_ok && intersect(*D7[i], *D7[j]).size() == 1;
        }
        check(rep, "(0).conjugate-family", conj_ok);
        check(rep, "(0).trivial-intersections", inter_ok);

        check(rep, "(1)",
              induce(trivial_character(*D7[0]), *D7[0], G) -
                      induce(trivial_character(D9), D9, G) ==
                  t.rows[5]);

        AlgElem e6G = idempotent_of(t.rows[5], G, G);
        std::vector<AlgElem> eD7;
        for (auto* Hp : D7) eD7.push_back(idempotent_of(trivial_character(*Hp), *Hp, G));
        AlgElem eD9 = idempotent_of(trivial_character(D9), D9, G);

        AlgElem sum = eD7[0];
        for (size_t i = 1; i < eD7.size(); ++i) sum = sum + eD7[i];
        auto r0 = solve_in_algebra(sum, e6G, Side::kRight);
        bool r0ok = r0.has_value() && sum * *r0 == e6G;
        if (r0ok)
            rep.certificates.push_back(
                make_cert("3.3(2):r0", "psl28", "right_unknown", 1, sum, e6G, *r0));
        check(rep, "(2).r0", r0ok,
              r0ok ? "denominator primes " + primes_string(r0->denominator_primes()) : "",
              "3.3(2):r0");

        annihilator_family(rep, "(3)", "3.3(3)", eD7, e6G, 1);
        conjugator_family(rep, "(4)", eD7, 0);

        AlgElem one = AlgElem::one(G, 1);
        certified_equality(rep, "(5)", "3.3(5)", (one - e6G) * eD7[0], eD7[0] * eD9, Side::kRight,
                           1);
        certified_equality(rep, "(6)", "3.3(6)", eD7[0] * eD9, eD9, Side::kLeft, 1);
        return rep;
    }

    LemmaReport lemma_3_4(const std::string& id, size_t row) {
        const auto& b = bundle("psl28");
        const auto& G = b.G;
        const auto& t = table("psl28");
        LemmaReport rep;
        rep.id = id;
        rep.group = "psl28";
        rep.conductor = 7;

        auto& F8 = b.subgroups.at("F8_1");
        auto orbit = all_conjugates(G, F8);
        check(rep, "(0).orbit", orbit.size() == 9, "nine conjugate subgroups");

        GroupElem g4 = parse_mat("[[a6,a6],[a2,a4]]", *b.gf);
        GroupElem m1 = parse_mat("[[a,a],[a5,a]]", *b.gf);
        GroupElem m2 = parse_mat("[[0,a5],[a2,0]]", *b.gf);
        GroupElem m3 = parse_mat("[[a5,a2],[a6,a5]]", *b.gf);

        // chi(g) = zeta_7^2 for the chi_7 case; the chi_8/chi_9 analogues use
        // the exponent whose induction hits their row
        long expo = 0;
        for (long e : {2L, 1L, 3L, 4L, 5L, 6L}) {
            ClassFunction cand = degree_one_char(
                {&F8,
                 {{m1, Cyc(rat(1))}, {m2, Cyc(rat(1))}, {m3, Cyc(rat(1))}, {g4, Cyc::zeta(7, e)}}});
            if (induce(cand, F8, G) == t.rows[row]) {
                expo = e;
                break;
            }
        }
        check(rep, "(1)", expo != 0,
              expo ? "chi(g) = zeta_7^" + std::to_string(expo) : "no exponent matches");
        if (expo == 0) return rep;
        if (id != "3.4")
            rep.discrepancies.push_back(
                "inferred Galois-conjugate variant; the source states the chi_7 case and notes "
                "the analogues hold");
        ClassFunction chi1 = degree_one_char(
            {&F8,
             {{m1, Cyc(rat(1))}, {m2, Cyc(rat(1))}, {m3, Cyc(rat(1))}, {g4, Cyc::zeta(7, expo)}}});

        // transport the character along conjugators; inner automorphisms fix
        // degree-1 characters, so the transported idempotents are well defined
        AlgElem e1 = idempotent_of(chi1, F8, G);
        std::vector<AlgElem> es = {e1};
        for (size_t i = 1; i < orbit.size(); ++i) {
            auto g = find_conjugator(G, F8, orbit[i]);
            if (!g) {
                check(rep, "(0).transport", false, "missing subgroup conjugator");
                return rep;
            }
            es.push_back(conj_by(*g, e1));
        }

        AlgElem e7G = idempotent_of(t.rows[row], G, G);
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        check(rep, "(2)", sum == e7G);

        bool ortho = true;
        for (size_t i = 0; i < es.size() && ortho; ++i)
            for (size_t j = 0; j < es.size(); ++j) {
                AlgElem p = es[i] * es[j];
                if (i == j ? !(p == es[i]) : !p.is_zero()) {
                    ortho = false;
                    break;
                }
            }
        check(rep, "(3).kronecker", ortho);

        conjugator_family(rep, "(4)", es, 0);
        return rep;
    }

    // ---- A6 lemmas -----------------------------------------------------------

    LemmaReport lemma_4_1(const std::string& id, bool chi2_variant) {
        const auto& b = bundle("a6");
        const auto& G = b.G;
        const auto& t = table("a6");
        LemmaReport rep;
        rep.id = id;
        rep.group = "a6";
        rep.conductor = 3;

        size_t row = chi2_variant ? 1 : 2;
        auto& H41 = b.subgroups.at("H41");
        std::vector<const FiniteGroup*> D4s;
        for (int i = 1; i <= 5; ++i) D4s.push_back(&b.subgroups.at("D4_" + std::to_string(i)));

        bool inter_ok = true;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                inter_ok = inter_ok && intersect(*D4s[i], *D4s[j]).size() == 1;
        check(rep, "(0).trivial-intersections", inter_ok);

        // eta on each D4_(i): values on the conjugated generators (s_i, t_i)
        Cyc s_val = chi2_variant ? Cyc(rat(-1)) : Cyc(rat(1));
        std::vector<ClassFunction> etas;
        std::vector<AlgElem> es;
        for (auto* Dp : D4s) {
            etas.push_back(degree_one_char(
                {Dp, {{Dp->generators()[0], s_val}, {Dp->generators()[1], Cyc(rat(-1))}}}));
            es.push_back(idempotent_of(etas.back(), *Dp, G));
        }

        // the H-character: (1,6,3),(2,4,5) -> zeta_3 in the base case; the
        // chi_2 variant uses whichever nontrivial character closes the
        // induction identity
        GroupElem hg1 = parse_perm("(1,6,3)"), hg2 = parse_perm("(2,4,5)");
        std::optional<ClassFunction> chiH;
        std::string chiH_note;
        if (!chi2_variant) {
            chiH = degree_one_char({&H41, {{hg1, Cyc::zeta(3)}, {hg2, Cyc::zeta(3)}}});
            chiH_note = "chi^H = (zeta_3, zeta_3)";
        } else {
            for (int m = 0; m < 3 && !chiH; ++m)
                for (int n = 0; n < 3 && !chiH; ++n) {
                    if (m == 0 && n == 0) continue;
                    ClassFunction cand = degree_one_char(
                        {&H41, {{hg1, Cyc::zeta(3, m)}, {hg2, Cyc::zeta(3, n)}}});
                    if (induce(etas[0], *D4s[0], G) - induce(cand, H41, G) == t.rows[row]) {
                        chiH = cand;
                        chiH_note = "chi^H = (zeta_3^" + std::to_string(m) + ", zeta_3^" +
                                    std::to_string(n) + ")";
                    }
                }
        }
        bool ind_ok = chiH.has_value() &&
                      induce(etas[0], *D4s[0], G) - induce(*chiH, H41, G) == t.rows[row];
        check(rep, "(1)", ind_ok, chiH_note);
        if (!chiH) return rep;

        AlgElem eG = idempotent_of(t.rows[row], G, G);
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        auto r0 = solve_in_algebra(sum, eG, Side::kRight);
        bool r0ok = r0.has_value() && sum * *r0 == eG;
        if (r0ok)
            rep.certificates.push_back(
                make_cert(id + "(2):r0", "a6", "right_unknown", 1, sum, eG, *r0));
        check(rep, "(2).r0", r0ok,
              r0ok ? "denominator primes " + primes_string(r0->denominator_primes()) : "",
              id + "(2):r0");

        annihilator_family(rep, "(3)", id + "(3)", es, eG, 1);

        // (4): the specific conjugators h_i work
        bool hconj = true;
        const auto& hs = catalog::a6_d4_conjugators();
        for (int i = 1; i < 5; ++i) {
            GroupElem h = parse_perm(hs[i]);
            hconj = hconj && conj_by(h, es[0]) == es[i];
        }
        check(rep, "(4).h-witnesses", hconj, "printed conjugators transport the idempotents");

        // (5)/(6): the source uses index 1 for chi_3 and index 2 for chi_2
        size_t j = chi2_variant ? 1 : 0;
        AlgElem echiH = idempotent_of(*chiH, H41, G);
        AlgElem one = AlgElem::one(G, 3);
        certified_equality(rep, "(5)", id + "(5)", (one - eG.embedded(3)) * es[j].embedded(3),
                           es[j].embedded(3) * echiH, Side::kRight, 3);
        certified_equality(rep, "(6)", id + "(6)", es[j].embedded(3) * echiH, echiH, Side::kLeft,
                           3);
        return rep;
    }

    LemmaReport lemma_4_2() {
        const auto& b = bundle("a6");
        const auto& G = b.G;
        const auto& t = table("a6");
        LemmaReport rep;
        rep.id = "4.2";
        rep.group = "a6";
        rep.conductor = 1;

        std::vector<const FiniteGroup*> S4s;
        for (int i = 1; i <= 9; ++i) S4s.push_back(&b.subgroups.at("S4_" + std::to_string(i)));
        auto& A5a = b.subgroups.at("A5a");

        check(rep, "(1)",
              induce(trivial_character(*S4s[0]), *S4s[0], G) -
                      induce(trivial_character(A5a), A5a, G) ==
                  t.rows[5]);

        AlgElem e6G = idempotent_of(t.rows[5], G, G);
        std::vector<AlgElem> eS4;
        for (auto* Sp : S4s) eS4.push_back(idempotent_of(trivial_character(*Sp), *Sp, G));
        AlgElem eA5 = idempotent_of(trivial_character(A5a), A5a, G);

        AlgElem sum = eS4[0];
        for (size_t i = 1; i < eS4.size(); ++i) sum = sum + eS4[i];
        auto r0 = solve_in_algebra(sum, e6G, Side::kRight);
        bool r0ok = r0.has_value() && sum * *r0 == e6G;
        if (r0ok)
            rep.certificates.push_back(
                make_cert("4.2(2):r0", "a6", "right_unknown", 1, sum, e6G, *r0));
        check(rep, "(2).r0", r0ok,
              r0ok ? "denominator primes " + primes_string(r0->denominator_primes()) : "",
              "4.2(2):r0");

        annihilator_family(rep, "(3)", "4.2(3)", eS4, e6G, 1);
        conjugator_family(rep, "(4)", eS4, 0);

        AlgElem one = AlgElem::one(G, 1);
        certified_equality(rep, "(5)", "4.2(5)", (one - e6G) * eS4[0], eS4[0] * eA5, Side::kRight,
                           1);
        certified_equality(rep, "(6)", "4.2(6)", eS4[0] * eA5, eA5, Side::kLeft, 1);
        return rep;
    }

    LemmaReport lemma_4_3() {
        const auto& b = bundle("a6");
        const auto& G = b.G;
        const auto& t = table("a6");
        LemmaReport rep;
        rep.id = "4.3";
        rep.group = "a6";
        rep.conductor = 4;

        auto& H1 = b.subgroups.at("H43");
        auto orbit = all_conjugates(G, H1);
        check(rep, "(0).orbit", orbit.size() == 10, "ten conjugate subgroups");

        ClassFunction eta1 = degree_one_char({&H1,
                                              {{parse_perm("(3,5)(4,6)"), Cyc(rat(-1))},
                                               {parse_perm("(1,2)(3,4,5,6)"), Cyc::zeta(4)},
                                               {parse_perm("(1,4,6)"), Cyc(rat(1))}}});
        check(rep, "(1)", induce(eta1, H1, G) == t.rows[6]);

        // eta^{H_i}(a_i x a_i^-1) = eta^{H_1}(x) with the first conjugator
        // found; the normalizer is H_1 itself, so the transport is canonical
        AlgElem e1 = idempotent_of(eta1, H1, G);
        std::vector<AlgElem> es = {e1};
        for (size_t i = 1; i < orbit.size(); ++i) {
            auto a_i = find_conjugator(G, H1, orbit[i]);
            if (!a_i) {
                check(rep, "(0).transport", false, "missing subgroup conjugator");
                return rep;
            }
            es.push_back(conj_by(*a_i, e1));
        }

        AlgElem e7G = idempotent_of(t.rows[6], G, G);
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        check(rep, "(2)", sum == e7G);

        bool ortho = true;
        for (size_t i = 0; i < es.size() && ortho; ++i)
            for (size_t j = 0; j < es.size(); ++j) {
                AlgElem p = es[i] * es[j];
                if (i == j ? !(p == es[i]) : !p.is_zero()) {
                    ortho = false;
                    break;
                }
            }
        check(rep, "(3).kronecker", ortho);

        conjugator_family(rep, "(4)", es, 0);
        return rep;
    }

    LemmaReport lemma_4_4() {
        const auto& b = bundle("a6");
        const auto& G = b.G;
        const auto& t = table("a6");
        LemmaReport rep;
        rep.id = "4.4";
        rep.group = "a6";
        rep.conductor = 15;

        auto& H = b.subgroups.at("H44");
        auto& C5 = b.subgroups.at("C5");
        GroupElem g1 = parse_perm("(1,2,3)"), g2 = parse_perm("(4,5,6)");

        // psi_{(mn)_3 + 1}: (1,2,3) -> zeta_3^m, (4,5,6) -> zeta_3^n
        std::map<int, ClassFunction> psi;
        std::map<int, AlgElem> epsi;
        for (int m = 0; m < 3; ++m)
            for (int n = 0; n < 3; ++n) {
                int idx = 3 * m + n + 1;
                psi.emplace(idx, degree_one_char(
                                     {&H, {{g1, Cyc::zeta(3, m)}, {g2, Cyc::zeta(3, n)}}}));
                epsi.emplace(idx, idempotent_of(psi.at(idx), H, G));
            }
        ClassFunction sigma = degree_one_char({&C5, {{parse_perm("(1,2,3,4,5)"), Cyc::zeta(5)}}});

        check(rep, "(1)",
              induce(psi.at(2), H, G) + induce(psi.at(5), H, G) - induce(sigma, C5, G) ==
                  t.rows[3]);

        AlgElem e4G = idempotent_of(t.rows[3], G, G);
        AlgElem e5G = idempotent_of(t.rows[4], G, G);
        AlgElem sum = AlgElem::zero(G, 3);
        for (int i = 2; i <= 9; ++i) sum = sum + epsi.at(i);
        check(rep, "(2).e4", sum * e4G == e4G);
        check(rep, "(2).e5", sum * e5G == e5G);

        bool pos_ok = true;
        for (int i : {3, 4, 7}) {
            auto g = find_idempotent_conjugator(G, epsi.at(i), epsi.at(2));
            pos_ok = pos_ok && g.has_value() && conj_by(*g, epsi.at(i)) == epsi.at(2);
        }
        for (int j : {6, 8, 9}) {
            auto g = find_idempotent_conjugator(G, epsi.at(j), epsi.at(5));
            pos_ok = pos_ok && g.has_value() && conj_by(*g, epsi.at(j)) == epsi.at(5);
        }
        check(rep, "(3).conjugate-pairs", pos_ok);

        // negative part: e_psi5 is not conjugate to e_psi2 by any g
        auto none = find_idempotent_conjugator(G, epsi.at(2), epsi.at(5));
        check(rep, "(3).non-conjugacy", !none.has_value(),
              "exhaustive scan of all 360 elements finds no witness");

        AlgElem eSigma = idempotent_of(sigma, C5, G);
        for (int i : {2, 5}) {
            AlgElem e = epsi.at(i).embedded(15);
            certified_equality(rep, "(4).i=" + std::to_string(i),
                               "4.4(4):i=" + std::to_string(i), e, e * eSigma.embedded(15),
                               Side::kRight, 15);
        }
        return rep;
    }

    RunConfig cfg_;
    std::mutex mu_;
    std::map<std::string, catalog::GroupBundle> bundles_;
    std::map<std::string, CharTable> tables_;
};

}  // namespace gring
