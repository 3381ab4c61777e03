#pragma once

#include <string>

#include "gring/group.hpp"

#include <nlohmann/json.hpp>

namespace gring::catalog {

using ordered_json = nlohmann::ordered_json;

// Generator words for every subgroup used by the verifications, keyed by
// (group, lemma, label), with the generator tuples kept exactly as printed.
struct SubgroupDef {
    const char* label;
    const char* lemma;
    std::vector<const char*> gens;
    int expected_order;
};

struct GroupDef {
    const char* name;
    bool matrix_group;
    std::vector<const char*> gens;
    std::vector<const char*> class_reps;  // paper column representatives, identity first
    int expected_order;
    std::vector<SubgroupDef> subgroups;
};

inline const std::vector<GroupDef>& group_defs() {
    static const std::vector<GroupDef> defs = {
        {"psl27",
         false,
         {"(3,6,7)(4,5,8)", "(1,8,2)(4,5,6)"},
         {"id", "(1,8)(2,4)(3,5)(6,7)", "(1,4,8,2)(3,6,5,7)", "(1,8,2)(4,5,6)",
          "(1,5,3,7,6,8,2)", "(1,7,2,3,8,5,6)"},
         168,
         {
             {"C7", "2.1", {"(1,8,2,4,3,7,5)"}, 7},
             {"D4", "2.1", {"(1,7,3,8)(2,6,4,5)", "(1,2)(3,4)(5,7)(6,8)"}, 8},
             {"A4_1", "2.2", {"(2,6,4)(3,5,8)", "(1,2)(3,5)(4,6)(7,8)"}, 12},
             {"A4_2", "2.2", {"(1,2,8)(4,6,5)", "(1,8)(2,3)(4,6)(5,7)"}, 12},
             {"A4_3", "2.2", {"(1,3,4)(5,6,8)", "(1,7)(2,8)(3,4)(5,6)"}, 12},
             {"A4_4", "2.2", {"(1,4,5)(2,3,6)", "(1,8)(2,7)(3,6)(4,5)"}, 12},
             {"A4_5", "2.2", {"(1,2,5)(3,4,8)", "(1,5)(2,7)(3,8)(4,6)"}, 12},
             {"A4_6", "2.2", {"(1,6,5)(4,8,7)", "(1,5)(2,8)(3,6)(4,7)"}, 12},
             {"A4_7", "2.2", {"(1,7,6)(2,5,4)", "(1,8)(2,4)(3,5)(6,7)"}, 12},
             {"H", "2.2", {"(1,4,2)(5,8,7)", "(1,8,2,4,3,7,5)"}, 21},
             {"S4_1", "2.3", {"(2,6,4)(3,5,8)", "(1,5)(2,8)(3,6)(4,7)"}, 24},
             // H_i of the degree-8 case, generators printed as (t_i, s_i)
             {"H1", "2.4", {"(1,4,2)(5,8,7)", "(1,8,2,4,3,7,5)"}, 21},
             {"H2", "2.4", {"(1,4,7)(2,8,6)", "(1,7,5,6,2,4,8)"}, 21},
             {"H3", "2.4", {"(1,5,2)(3,8,4)", "(1,4,2,5,6,3,8)"}, 21},
             {"H4", "2.4", {"(1,7,4)(2,6,8)", "(1,8,6,3,7,4,2)"}, 21},
             {"H5", "2.4", {"(1,8,5)(2,7,6)", "(1,5,3,7,6,8,2)"}, 21},
             {"H6", "2.4", {"(1,5,4)(2,6,3)", "(1,4,7,6,3,5,2)"}, 21},
             {"H7", "2.4", {"(1,7,5)(3,6,8)", "(1,8,5,7,4,3,6)"}, 21},
             {"H8", "2.4", {"(2,3,4)(6,8,7)", "(2,6,7,5,3,4,8)"}, 21},
         }},
        {"psl28",
         true,
         {"[[0,1],[1,1]]", "[[a3,a],[a4,a]]"},
         {"id", "[[1,1],[0,1]]", "[[0,1],[1,1]]", "[[a2,0],[0,a5]]", "[[a,0],[0,a6]]",
          "[[a3,0],[0,a4]]", "[[0,1],[1,a2]]", "[[0,1],[1,a]]", "[[0,1],[1,a4]]"},
         504,
         {
             {"C23", "3.1", {"[[0,a5],[a2,0]]", "[[a5,a2],[a6,a5]]", "[[a,a],[a5,a]]"}, 8},
             {"C9", "3.1", {"[[a4,1],[1,0]]"}, 9},
             {"D7_1", "3.3", {"[[0,a6],[a,0]]", "[[a2,a],[a3,a3]]"}, 14},
             {"D7_2", "3.3", {"[[0,a2],[a5,0]]", "[[a2,a4],[1,a3]]"}, 14},
             {"D7_3", "3.3", {"[[1,a4],[0,1]]", "[[a6,0],[a,a]]"}, 14},
             {"D7_4", "3.3", {"[[a4,a6],[a4,a4]]", "[[a4,a6],[a6,1]]"}, 14},
             {"D7_5", "3.3", {"[[a,a4],[a2,a]]", "[[a5,a3],[a4,0]]"}, 14},
             {"D7_6", "3.3", {"[[a4,1],[a3,a4]]", "[[1,1],[a5,a4]]"}, 14},
             {"D7_7", "3.3", {"[[1,0],[1,1]]", "[[0,a5],[a2,a5]]"}, 14},
             {"D7_8", "3.3", {"[[a6,a2],[a2,a6]]", "[[a,a2],[0,a6]]"}, 14},
             {"D9", "3.3", {"[[a5,a3],[a5,a5]]", "[[a4,1],[1,0]]"}, 18},
             {"F8_1",
              "3.4",
              {"[[a,a],[a5,a]]", "[[0,a5],[a2,0]]", "[[a5,a2],[a6,a5]]", "[[a6,a6],[a2,a4]]"},
              56},
         }},
        {"a6",
         false,
         {"(1,2,3)", "(2,3,4,5,6)"},
         {"id", "(1,2,3)", "(1,2)(3,4)", "(1,2,3,4,5)", "(1,3,4,5,2)", "(1,2,3)(4,5,6)",
          "(1,2,3,4)(5,6)"},
         360,
         {
             {"D4_1", "4.1", {"(1,2)(3,6)", "(1,4,2,5)(3,6)"}, 8},
             {"H41", "4.1", {"(1,6,3)", "(2,4,5)"}, 9},
             {"S4_1", "4.2", {"(3,4)(5,6)", "(1,6,4)(2,3,5)"}, 24},
             {"S4_2", "4.2", {"(1,2)(3,4)", "(1,3,6)(2,5,4)"}, 24},
             {"S4_3", "4.2", {"(1,2)(4,5)", "(1,6,5)(2,4,3)"}, 24},
             {"S4_4", "4.2", {"(1,2)(3,6)", "(1,4,3)(2,6,5)"}, 24},
             {"S4_5", "4.2", {"(1,2)(5,6)", "(1,5,4)(2,3,6)"}, 24},
             {"S4_6", "4.2", {"(2,5)(3,6)", "(1,5,6)(2,4,3)"}, 24},
             {"S4_7", "4.2", {"(2,6)(3,4)", "(1,2,3)(4,6,5)"}, 24},
             {"S4_8", "4.2", {"(1,3)(4,5)", "(1,4,2)(3,6,5)"}, 24},
             {"S4_9", "4.2", {"(2,4)(5,6)", "(1,2,5)(3,6,4)"}, 24},
             {"A5a", "4.2", {"(1,5)(4,6)", "(1,3,2)(4,5,6)"}, 60},
             {"H43", "4.3", {"(3,5)(4,6)", "(1,2)(3,4,5,6)", "(1,4,6)"}, 36},
             {"H44", "4.4", {"(1,2,3)", "(4,5,6)"}, 9},
             {"C5", "4.4", {"(1,2,3,4,5)"}, 5},
         }},
    };
    return defs;
}

// conjugating elements h_2..h_5 of the degree-5 case on a6 (h_1 = id)
inline const std::vector<const char*>& a6_d4_conjugators() {
    static const std::vector<const char*> h = {"id", "(2,4)(3,5)", "(2,3)(5,6)", "(1,3)(2,5)",
                                               "(1,5)(2,3)"};
    return h;
}

struct GroupBundle {
    std::string name;
    FiniteGroup G;
    const Gf8* gf = nullptr;
    bool used_fallback_gf8 = false;
    std::map<std::string, FiniteGroup> subgroups;
    std::vector<uint16_t> class_rep_index;  // per paper column, index into G
    std::vector<uint16_t> class_rep_class;  // per paper column, class id
};

inline const GroupDef& group_def(const std::string& name) {
    for (const auto& d : group_defs())
        if (name == d.name) return d;
    throw std::invalid_argument("unknown group " + name);
}

inline GroupBundle make_group_bundle(const std::string& name) {
    const GroupDef& def = group_def(name);
    auto build = [&](const Gf8* gf) {
        GroupBundle b;
        b.name = name;
        b.gf = gf;
        std::vector<GroupElem> gens;
        for (const char* s : def.gens)
            gens.push_back(def.matrix_group ? parse_mat(s, *gf) : parse_perm(s));
        b.G = FiniteGroup::generate_closure(gens, gf);
        for (const auto& sd : def.subgroups) {
            std::vector<GroupElem> sg;
            for (const char* s : sd.gens)
                sg.push_back(def.matrix_group ? parse_mat(s, *gf) : parse_perm(s));
            b.subgroups.emplace(sd.label, FiniteGroup::generate_closure(sg, gf));
        }
        return b;
    };
    auto validate = [&](const GroupBundle& b) {
        if ((int)b.G.size() != def.expected_order) return false;
        for (const auto& sd : def.subgroups) {
            const auto& H = b.subgroups.at(sd.label);
            if ((int)H.size() != sd.expected_order) return false;
            if (!b.G.has_subgroup(H)) return false;
        }
        return true;
    };
    GroupBundle b = build(def.matrix_group ? &gf8_primary() : nullptr);
    if (!validate(b)) {
        if (!def.matrix_group) throw std::runtime_error("catalog order check failed for " + name);
        b = build(&gf8_fallback());
        b.used_fallback_gf8 = true;
        if (!validate(b))
            throw std::runtime_error("catalog order check failed for " + name +
                                     " under both GF(8) polynomials");
    }
    // derived D4_(i) subgroups of a6: generators h_i s_1 h_i^-1, h_i t_1 h_i^-1
    if (name == "a6") {
        const auto& D41 = b.subgroups.at("D4_1");
        const auto& hs = a6_d4_conjugators();
        for (int i = 1; i < 5; ++i) {
            GroupElem h = parse_perm(hs[i]);
            std::vector<GroupElem> gens;
            for (const auto& g : D41.generators())
                gens.push_back(product(product(h, g), inverse(h)));
            auto Hi = FiniteGroup::generate_closure(gens);
            if (Hi.size() != 8) throw std::runtime_error("conjugated D4 has wrong order");
            b.subgroups.emplace("D4_" + std::to_string(i + 1), std::move(Hi));
        }
    }
    // paper class representatives -> classes
    b.class_rep_index.clear();
    for (const char* rep : def.class_reps) {
        GroupElem e = def.matrix_group
                          ? (std::string(rep) == "id" ? GroupElem::mat_identity()
                                                      : parse_mat(rep, *b.gf))
                          : parse_perm(rep);
        b.class_rep_index.push_back(b.G.index_of(e));
    }
    for (uint16_t idx : b.class_rep_index) b.class_rep_class.push_back(b.G.class_of(idx));
    return b;
}

inline ordered_json catalog_as_json() {
    ordered_json out;
    out["schema"] = "subgroup-catalog-v1";
    out["groups"] = ordered_json::array();
    for (const auto& def : group_defs()) {
        ordered_json g;
        g["name"] = def.name;
        g["element_kind"] = def.matrix_group ? "mat2_gf8" : "perm";
        g["order"] = def.expected_order;
        g["generators"] = def.gens;
        g["class_representatives"] = def.class_reps;
        g["subgroups"] = ordered_json::array();
        for (const auto& sd : def.subgroups) {
            ordered_json s;
            s["label"] = sd.label;
            s["lemma"] = sd.lemma;
            s["generators"] = sd.gens;
            s["order"] = sd.expected_order;
            g["subgroups"].push_back(s);
        }
        if (std::string(def.name) == "a6") {
            g["derived_subgroups"] = {{"family", "D4_i"},
                                      {"rule", "generators h_i g h_i^-1 of D4_1"},
                                      {"conjugators", a6_d4_conjugators()}};
        }
        out["groups"].push_back(g);
    }
    return out;
}

}  // namespace gring::catalog
