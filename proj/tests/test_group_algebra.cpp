#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gring/group_algebra.hpp"
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

AlgElem table_idempotent(const catalog::GroupBundle& b, const CharTable& t, size_t row) {
    return idempotent_of(t.rows[row], b.G, b.G);
}
}  // namespace

TEST_CASE("delta convolution") {
    auto& G = psl27().G;
    std::mt19937 rng(3);
    std::uniform_int_distribution<uint16_t> d(0, (uint16_t)G.size() - 1);
    for (int t = 0; t < 20; ++t) {
        uint16_t g = d(rng), h = d(rng);
        AlgElem p = AlgElem::delta(G, g) * AlgElem::delta(G, h);
        REQUIRE(p == AlgElem::delta(G, G.mul(g, h)));
    }
}

TEST_CASE("idempotent formula values") {
    auto t = table_of(psl27());
    AlgElem e1 = table_idempotent(psl27(), t, 0);
    // trivial idempotent has every coefficient 1/|G|
    for (const auto& v : e1.c) REQUIRE(v == Cyc(rat(1, 168)));
    REQUIRE(is_idempotent(e1));

    AlgElem e2 = table_idempotent(psl27(), t, 1);
    // identity coefficient chi(1)^2/|G| = 9/168 = 3/56
    REQUIRE(e2.c[0] == Cyc(rat(3, 56)));

    auto& D4 = psl27().subgroups.at("D4");
    ClassFunction eta = degree_one_char({&D4,
                                         {{parse_perm("(1,7,3,8)(2,6,4,5)"), Cyc(rat(-1))},
                                          {parse_perm("(1,2)(3,4)(5,7)(6,8)"), Cyc(rat(-1))}}});
    AlgElem ed4 = idempotent_of(eta, D4, psl27().G);
    REQUIRE(ed4.support().size() == 8);
    for (uint16_t i : ed4.support()) {
        bool ok = ed4.c[i] == Cyc(rat(1, 8)) || ed4.c[i] == Cyc(rat(-1, 8));
        REQUIRE(ok);
    }
    REQUIRE(is_idempotent(ed4));
    REQUIRE_FALSE(is_central(ed4));
}

TEST_CASE("central idempotents: orthogonality and partition of unity") {
    for (const auto* b : {&psl27(), &a6()}) {
        auto t = table_of(*b);
        std::vector<AlgElem> es;
        for (size_t i = 0; i < t.rows.size(); ++i) es.push_back(table_idempotent(*b, t, i));
        AlgElem sum = es[0];
        for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
        REQUIRE(sum == AlgElem::one(b->G, sum.k));
        for (const auto& e : es) {
            REQUIRE(is_idempotent(e));
            REQUIRE(is_central(e));
        }
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) REQUIRE((es[i] * es[j]).is_zero());
    }
}

TEST_CASE("psl28 partition of unity across mixed conductors") {
    auto& b = psl28();
    auto t = table_of(b);
    std::vector<AlgElem> es;
    for (size_t i = 0; i < t.rows.size(); ++i) es.push_back(table_idempotent(b, t, i));
    // coefficient-wise the zeta_9 rows and zeta_7 rows never collide
    AlgElem sum = es[0];
    for (size_t i = 1; i < es.size(); ++i) sum = sum + es[i];
    REQUIRE(sum == AlgElem::one(b.G, 1));

    for (const auto& e : es) REQUIRE(is_central(e));
    // same-field pairs multiply directly; cross-field pairs go through the
    // tensor-component test
    REQUIRE((es[2] * es[3]).is_zero());                 // zeta_9 x zeta_9
    REQUIRE((es[6] * es[7]).is_zero());                 // zeta_7 x zeta_7
    REQUIRE(mixed_product_is_zero(es[2], es[6]));       // zeta_9 x zeta_7
    REQUIRE(mixed_product_is_zero(es[4], es[8]));
    REQUIRE(mixed_product_is_zero(es[1], es[6]));       // rational x zeta_7
    REQUIRE_FALSE(mixed_product_is_zero(es[2], es[2]));  // e*e = e != 0
}

TEST_CASE("conjugation") {
    auto& G = psl27().G;
    auto& C7 = psl27().subgroups.at("C7");
    GroupElem a = parse_perm("(1,8,2,4,3,7,5)");
    auto chi = [&](long i) {
        return degree_one_char({&C7, {{a, Cyc::zeta(7, i)}}});
    };
    AlgElem e1 = idempotent_of(chi(1), C7, G);
    AlgElem e2 = idempotent_of(chi(2), C7, G);
    AlgElem e4 = idempotent_of(chi(4), C7, G);
    GroupElem h = parse_perm("(1,7,8)(3,5,4)");
    // e_4 = h^-1 e_2 h and e_1 = h e_2 h^-1
    REQUIRE(conj_by(inverse(h), e2) == e4);
    REQUIRE(conj_by(h, e2) == e1);

    AlgElem e2G = table_idempotent(psl27(), table_of(psl27()), 1);
    REQUIRE(conj_by(GroupElem::perm_identity(), e2G) == e2G);
    std::mt19937 rng(17);
    std::uniform_int_distribution<uint16_t> d(0, 167);
    for (int t = 0; t < 5; ++t) REQUIRE(conj_by(G.elem(d(rng)), e2G) == e2G);

    SECTION("conj_by preserves products") {
        for (int t = 0; t < 5; ++t) {
            GroupElem g = G.elem(d(rng));
            REQUIRE(conj_by(g, e1 * e2) == conj_by(g, e1) * conj_by(g, e2));
        }
    }
}

TEST_CASE("multiplication operator matrices") {
    auto& G = psl27().G;
    AlgElem one = AlgElem::one(G);
    MatCyc I = left_mul_matrix(one);
    for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = 0; j < G.size(); ++j)
            REQUIRE(I.at(i, j) == (i == j ? Cyc(rat(1)) : Cyc(rat(0))));

    // delta_g gives the permutation matrix of left translation
    AlgElem dg = AlgElem::delta(G, 5);
    MatCyc P = left_mul_matrix(dg);
    for (uint16_t g = 0; g < G.size(); ++g) REQUIRE(P.at(G.mul(5, g), g) == Cyc(rat(1)));

    auto t = table_of(psl27());
    REQUIRE(rank(left_mul_matrix(table_idempotent(psl27(), t, 0))) == 1);
    REQUIRE(rank(left_mul_matrix(table_idempotent(psl27(), t, 1))) == 9);
    REQUIRE(nullspace(left_mul_matrix(table_idempotent(psl27(), t, 0))).dim() == G.size() - 1);

    SECTION("left_mul_matrix is multiplicative on sampled columns") {
        auto& C7 = psl27().subgroups.at("C7");
        AlgElem x = idempotent_of(trivial_character(C7), C7, G);
        AlgElem e2G = table_idempotent(psl27(), t, 1);
        MatCyc Mx = left_mul_matrix(x), Me = left_mul_matrix(e2G), Mxe = left_mul_matrix(x * e2G);
        std::mt19937 rng(23);
        std::uniform_int_distribution<uint16_t> d(0, 167);
        for (int s = 0; s < 3; ++s) {
            uint16_t col = d(rng);
            for (uint16_t row = 0; row < G.size(); ++row) {
                Cyc acc = Cyc(rat(0)).embedded(7);
                for (uint16_t m = 0; m < G.size(); ++m) acc += Mx.at(row, m) * Me.at(m, col);
                REQUIRE(acc == Mxe.at(row, col));
            }
        }
    }
}

TEST_CASE("is_idempotent and is_central edge cases") {
    auto& G = psl27().G;
    AlgElem z = AlgElem::zero(G, 1);
    REQUIRE(is_idempotent(z));
    REQUIRE(is_central(z));

    auto t = table_of(psl27());
    AlgElem e4 = table_idempotent(psl27(), t, 3);
    REQUIRE(is_idempotent(e4));
    REQUIRE(is_central(e4));

    auto& A41 = psl27().subgroups.at("A4_1");
    AlgElem ea = idempotent_of(trivial_character(A41), A41, G);
    REQUIRE(is_idempotent(ea));
    REQUIRE_FALSE(is_central(ea));
}
