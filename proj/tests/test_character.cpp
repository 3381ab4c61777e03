#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gring/tables.hpp"

using namespace gring;

namespace {
const catalog::GroupBundle& psl27() {
    static const catalog::GroupBundle b = catalog::make_group_bundle("psl27");
    return b;
}
const catalog::GroupBundle& psl28() {
    static const catalog::GroupBundle b = catalog::make_group_bundle("psl28");
    return b;
}
const catalog::GroupBundle& a6() {
    static const catalog::GroupBundle b = catalog::make_group_bundle("a6");
    return b;
}
const CharTable& t27() {
    static const CharTable t = table_of(psl27());
    return t;
}
const CharTable& t28() {
    static const CharTable t = table_of(psl28());
    return t;
}
const CharTable& t6() {
    static const CharTable t = table_of(a6());
    return t;
}

// independent oracle: inner product summed over every group element
Cyc inner_product_by_elements(const ClassFunction& a, const ClassFunction& b) {
    const FiniteGroup& G = *a.group;
    Cyc acc = Cyc(rat(0));
    for (uint16_t g = 0; g < G.size(); ++g) acc += a.at_index(g) * b.at_index(g).conj();
    return Rat(1, (unsigned long)G.size()) * acc;
}
}  // namespace

TEST_CASE("table spot values") {
    // chi_2 at c_5 is omega_7 for the 168 table
    REQUIRE(t27().rows[1].values[psl27().class_rep_class[4]] == omega7());
    // chi_7 at c_3 is -2 for the A6 table
    REQUIRE(t6().rows[6].values[a6().class_rep_class[2]] == Cyc(rat(-2)));
    // chi_1 rows are all ones
    for (const auto* t : {&t27(), &t28(), &t6()})
        for (const auto& v : t->rows[0].values) REQUIRE(v == Cyc(rat(1)));
}

TEST_CASE("corrected tables are orthonormal and degree sums match") {
    for (const auto* tb : {&t27(), &t28(), &t6()}) {
        const auto& rows = tb->rows;
        Rat degsum(0);
        for (const auto& r : rows) degsum += r.degree().rational_value() * r.degree().rational_value();
        REQUIRE(degsum == Rat((unsigned long)tb->G->size()));
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = i; j < rows.size(); ++j) {
                Cyc ip = inner_product(rows[i], rows[j]);
                REQUIRE(ip == Cyc(rat(i == j ? 1 : 0)));
            }
    }
}

TEST_CASE("printed-table corrections are flagged where expected") {
    REQUIRE(t27().changed.empty());
    REQUIRE(!t28().changed.empty());
    // the chi4/chi5 duplicate completion touches row 5 (index 4)
    bool chi5_fixed = false;
    for (auto [r, c] : t28().changed)
        if (r == 4 && c >= 6) chi5_fixed = true;
    REQUIRE(chi5_fixed);
    REQUIRE(!t6().changed.empty());
    for (auto [r, c] : t6().changed) REQUIRE(r == 5);
}

TEST_CASE("degree-one characters from assignments") {
    auto& D4 = psl27().subgroups.at("D4");
    GroupElem r = parse_perm("(1,7,3,8)(2,6,4,5)");
    GroupElem s = parse_perm("(1,2)(3,4)(5,7)(6,8)");
    ClassFunction eta = degree_one_char({&D4, {{r, Cyc(rat(-1))}, {s, Cyc(rat(-1))}}});
    REQUIRE(eta.degree() == Cyc(rat(1)));
    REQUIRE(eta.at(r) == Cyc(rat(-1)));
    REQUIRE(eta.at(s) == Cyc(rat(-1)));
    // order-2 character: kernel of index 2
    int kernel = 0;
    for (uint16_t i = 0; i < D4.size(); ++i)
        if (eta.at_index(i) == Cyc(rat(1))) ++kernel;
    REQUIRE(kernel == 4);

    // trivial assignment gives the trivial character
    ClassFunction tr = degree_one_char({&D4, {{r, Cyc(rat(1))}, {s, Cyc(rat(1))}}});
    REQUIRE(tr == trivial_character(D4));

    // C9 with h -> zeta_3^2 has order 3
    auto& C9 = psl28().subgroups.at("C9");
    GroupElem h = parse_mat("[[a4,1],[1,0]]", *psl28().gf);
    ClassFunction c = degree_one_char({&C9, {{h, Cyc::zeta(3, 2)}}});
    REQUIRE(c.at(h) == Cyc::zeta(3, 2));
    REQUIRE(c.at(product(h, h, psl28().gf)) == Cyc::zeta(3, 4));

    // an assignment that cannot extend multiplicatively is rejected
    REQUIRE_THROWS_AS(degree_one_char({&D4, {{r, Cyc::zeta(3)}, {s, Cyc(rat(1))}}}),
                      std::invalid_argument);
}

TEST_CASE("sign character of S4 subgroups") {
    auto& S41 = psl27().subgroups.at("S4_1");
    ClassFunction eta = sign_character(S41);
    REQUIRE(eta.degree() == Cyc(rat(1)));
    REQUIRE(inner_product(eta, eta) == Cyc(rat(1)));
    REQUIRE(inner_product(eta, trivial_character(S41)) == Cyc(rat(0)));
}

TEST_CASE("induction basics") {
    auto& G = a6().G;
    auto& S41 = a6().subgroups.at("S4_1");
    ClassFunction ind = induce(trivial_character(S41), S41, G);
    REQUIRE(ind.degree() == Cyc(rat(15)));  // index 360/24

    auto& G7 = psl27().G;
    ClassFunction full = induce(t27().rows[1], G7, G7);
    REQUIRE(full == t27().rows[1]);
}

TEST_CASE("Ind(chi_i^C7) - Ind(eta^D4) reproduces the chi_2 row") {
    auto& G = psl27().G;
    auto& C7 = psl27().subgroups.at("C7");
    auto& D4 = psl27().subgroups.at("D4");
    GroupElem a = parse_perm("(1,8,2,4,3,7,5)");
    GroupElem r = parse_perm("(1,7,3,8)(2,6,4,5)");
    GroupElem s = parse_perm("(1,2)(3,4)(5,7)(6,8)");
    ClassFunction eta = degree_one_char({&D4, {{r, Cyc(rat(-1))}, {s, Cyc(rat(-1))}}});
    for (long i : {1L, 2L, 4L}) {
        ClassFunction chi = degree_one_char({&C7, {{a, Cyc::zeta(7, i)}}});
        ClassFunction got = induce(chi, C7, G) - induce(eta, D4, G);
        REQUIRE(got == t27().rows[1]);
    }
}

TEST_CASE("inner products match the element-wise oracle") {
    const auto& rows = t27().rows;
    REQUIRE(inner_product(rows[1], rows[1]) == inner_product_by_elements(rows[1], rows[1]));
    REQUIRE(inner_product(rows[0], rows[1]) == inner_product_by_elements(rows[0], rows[1]));
    REQUIRE(inner_product_by_elements(rows[1], rows[1]) == Cyc(rat(1)));
    REQUIRE(inner_product_by_elements(rows[0], rows[1]) == Cyc(rat(0)));
}

TEST_CASE("induction is additive and satisfies Frobenius reciprocity") {
    auto& G = psl27().G;
    auto& H = psl27().subgroups.at("H");
    std::mt19937 rng(321);
    std::uniform_int_distribution<long> d(-3, 3);
    auto random_cf = [&](const FiniteGroup& K) {
        ClassFunction f;
        f.group = &K;
        f.k = 21;
        for (size_t c = 0; c < K.classes().size(); ++c)
            f.values.push_back(cyc_make(21, {{0, rat(d(rng))}, {1, rat(d(rng))}}));
        return f;
    };
    for (int t = 0; t < 4; ++t) {
        ClassFunction f = random_cf(H), g = random_cf(H);
        REQUIRE(induce(f + g, H, G) == induce(f, H, G) + induce(g, H, G));
        ClassFunction psi = random_cf(G);
        REQUIRE(inner_product(induce(f, H, G), psi) == inner_product(f, restrict_to(psi, G, H)));
    }
}

TEST_CASE("psl28 induction identities pin the table rows") {
    auto& b = psl28();
    auto& G = b.G;
    auto& C23 = b.subgroups.at("C23");
    auto& C9 = b.subgroups.at("C9");
    GroupElem s = parse_mat("[[0,a5],[a2,0]]", *b.gf);
    GroupElem t = parse_mat("[[a5,a2],[a6,a5]]", *b.gf);
    GroupElem u = parse_mat("[[a,a],[a5,a]]", *b.gf);
    GroupElem h = parse_mat("[[a4,1],[1,0]]", *b.gf);
    ClassFunction chi2_c23 =
        degree_one_char({&C23, {{s, Cyc(rat(-1))}, {t, Cyc(rat(1))}, {u, Cyc(rat(1))}}});
    ClassFunction chi2_c9 = degree_one_char({&C9, {{h, Cyc::zeta(3, 2)}}});
    ClassFunction chi8_c9 = degree_one_char({&C9, {{h, Cyc::zeta(9, 1)}}});

    REQUIRE(induce(chi2_c23, C23, G) - induce(chi2_c9, C9, G) == t28().rows[1]);
    REQUIRE(induce(chi2_c23, C23, G) - induce(chi8_c9, C9, G) == t28().rows[2]);

    auto& D71 = b.subgroups.at("D7_1");
    auto& D9 = b.subgroups.at("D9");
    REQUIRE(induce(trivial_character(D71), D71, G) - induce(trivial_character(D9), D9, G) ==
            t28().rows[5]);

    auto& F8 = b.subgroups.at("F8_1");
    GroupElem g4 = parse_mat("[[a6,a6],[a2,a4]]", *b.gf);
    GroupElem m1 = parse_mat("[[a,a],[a5,a]]", *b.gf);
    GroupElem m2 = parse_mat("[[0,a5],[a2,0]]", *b.gf);
    GroupElem m3 = parse_mat("[[a5,a2],[a6,a5]]", *b.gf);
    ClassFunction chi_f8 = degree_one_char(
        {&F8,
         {{m1, Cyc(rat(1))}, {m2, Cyc(rat(1))}, {m3, Cyc(rat(1))}, {g4, Cyc::zeta(7, 2)}}});
    REQUIRE(induce(chi_f8, F8, G) == t28().rows[6]);
}

TEST_CASE("a6 induction identities pin the table rows") {
    auto& b = a6();
    auto& G = b.G;
    auto& D41 = b.subgroups.at("D4_1");
    auto& H41 = b.subgroups.at("H41");
    GroupElem s1 = parse_perm("(1,2)(3,6)");
    GroupElem t1 = parse_perm("(1,4,2,5)(3,6)");
    ClassFunction etaD = degree_one_char({&D41, {{s1, Cyc(rat(1))}, {t1, Cyc(rat(-1))}}});
    ClassFunction chiH = degree_one_char({&H41,
                                          {{parse_perm("(1,6,3)"), Cyc::zeta(3)},
                                           {parse_perm("(2,4,5)"), Cyc::zeta(3)}}});
    REQUIRE(induce(etaD, D41, G) - induce(chiH, H41, G) == t6().rows[2]);

    auto& S41 = b.subgroups.at("S4_1");
    auto& A5a = b.subgroups.at("A5a");
    REQUIRE(induce(trivial_character(S41), S41, G) - induce(trivial_character(A5a), A5a, G) ==
            t6().rows[5]);

    auto& H43 = b.subgroups.at("H43");
    ClassFunction etaH1 = degree_one_char({&H43,
                                           {{parse_perm("(3,5)(4,6)"), Cyc(rat(-1))},
                                            {parse_perm("(1,2)(3,4,5,6)"), Cyc::zeta(4)},
                                            {parse_perm("(1,4,6)"), Cyc(rat(1))}}});
    REQUIRE(induce(etaH1, H43, G) == t6().rows[6]);

    auto& H44 = b.subgroups.at("H44");
    auto& C5 = b.subgroups.at("C5");
    ClassFunction psi2 = degree_one_char({&H44,
                                          {{parse_perm("(1,2,3)"), Cyc(rat(1))},
                                           {parse_perm("(4,5,6)"), Cyc::zeta(3)}}});
    ClassFunction psi5 = degree_one_char({&H44,
                                          {{parse_perm("(1,2,3)"), Cyc::zeta(3)},
                                           {parse_perm("(4,5,6)"), Cyc::zeta(3)}}});
    ClassFunction sigma = degree_one_char({&C5, {{parse_perm("(1,2,3,4,5)"), Cyc::zeta(5)}}});
    ClassFunction got = induce(psi2, H44, G) + induce(psi5, H44, G) - induce(sigma, C5, G);
    REQUIRE(got == t6().rows[3]);
}
