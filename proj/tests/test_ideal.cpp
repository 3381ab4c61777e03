#include <catch2/catch_amalgamated.hpp>

#include "gring/ideal.hpp"
#include "gring/tables.hpp"

using namespace gring;

namespace {
const catalog::GroupBundle& psl27() {
    static const catalog::GroupBundle b = catalog::make_group_bundle("psl27");
    return b;
}

struct Lemma21Objects {
    AlgElem e2G, eC7_1, eD4;
};
const Lemma21Objects& l21() {
    static const Lemma21Objects o = [] {
        auto& b = psl27();
        auto t = table_of(b);
        auto& C7 = b.subgroups.at("C7");
        auto& D4 = b.subgroups.at("D4");
        ClassFunction chi1 =
            degree_one_char({&C7, {{parse_perm("(1,8,2,4,3,7,5)"), Cyc::zeta(7, 1)}}});
        ClassFunction eta = degree_one_char({&D4,
                                             {{parse_perm("(1,7,3,8)(2,6,4,5)"), Cyc(rat(-1))},
                                              {parse_perm("(1,2)(3,4)(5,7)(6,8)"), Cyc(rat(-1))}}});
        return Lemma21Objects{idempotent_of(t.rows[1], b.G, b.G),
                              idempotent_of(chi1, C7, b.G), idempotent_of(eta, D4, b.G)};
    }();
    return o;
}
}  // namespace

TEST_CASE("ideal dimensions") {
    auto& G = psl27().G;
    AlgElem one = AlgElem::one(G);
    REQUIRE(ideal_of(one, Side::kRight).dim() == G.size());

    auto t = table_of(psl27());
    AlgElem e1 = idempotent_of(t.rows[0], G, G);
    REQUIRE(ideal_of(e1, Side::kRight).dim() == 1);
    REQUIRE(ideal_of(e1, Side::kLeft).dim() == 1);

    AlgElem e2 = idempotent_of(t.rows[1], G, G);
    auto I = ideal_of(e2, Side::kRight);
    REQUIRE(I.dim() == 9);  // Wedderburn block of a degree-3 character
    // the ideal dimension equals the rank of the multiplication operator
    REQUIRE(rank(left_mul_matrix(e2)) == 9);
}

TEST_CASE("solve_in_algebra") {
    auto& G = psl27().G;
    auto& o = l21();
    SECTION("c = b always has a witness") {
        auto q = solve_in_algebra(o.eD4, o.eD4, Side::kRight);
        REQUIRE(q.has_value());
        REQUIRE(o.eD4 * *q == o.eD4);
    }
    SECTION("zero left factor, nonzero rhs is inconsistent") {
        AlgElem z = AlgElem::zero(G, 1);
        REQUIRE(!solve_in_algebra(z, AlgElem::one(G), Side::kRight).has_value());
        REQUIRE(!solve_in_algebra(z, AlgElem::one(G), Side::kLeft).has_value());
    }
}

TEST_CASE("annihilators") {
    auto& G = psl27().G;
    SECTION("annihilator of the identity is zero") {
        REQUIRE(annihilator({AlgElem::one(G)}, Side::kRight).dim() == 0);
    }
    SECTION("rank-1 projector has corank-1 annihilator") {
        auto t = table_of(psl27());
        AlgElem e1 = idempotent_of(t.rows[0], G, G);
        REQUIRE(annihilator({e1}, Side::kRight).dim() == G.size() - 1);
    }
}

TEST_CASE("lemma 2.1 ideal equalities with witnesses") {
    auto& o = l21();
    AlgElem one = AlgElem::one(psl27().G, 7);
    AlgElem lhs = (one - o.e2G) * o.eC7_1;  // (1-e2)e1^C7
    AlgElem rhs = o.eC7_1 * o.eD4;          // e1^C7 e_eta^D4

    SECTION("(4): right ideals coincide") {
        auto cert = certify_ideal_equality(lhs, rhs, Side::kRight);
        REQUIRE(cert.equal);
        REQUIRE(cert.w_fwd.has_value());
        REQUIRE(cert.w_bwd.has_value());
        REQUIRE(rhs * *cert.w_fwd == lhs);
        REQUIRE(lhs * *cert.w_bwd == rhs);
        // exceptional-prime superset: denominators beyond {2,3,7} may occur
        // (the paper's own witness has 29); record and sanity-check they are
        // consistent with a finite exceptional set
        REQUIRE(!cert.primes_fwd.empty());
    }
    SECTION("(5): left ideals coincide") {
        auto cert = certify_ideal_equality(rhs, o.eD4, Side::kLeft);
        REQUIRE(cert.equal);
        REQUIRE(*cert.w_fwd * o.eD4 == rhs);
        REQUIRE(*cert.w_bwd * rhs == o.eD4);
    }
    SECTION("verdict is symmetric") {
        auto a = certify_ideal_equality(lhs, rhs, Side::kRight);
        auto b = certify_ideal_equality(rhs, lhs, Side::kRight);
        REQUIRE(a.equal == b.equal);
    }
    SECTION("trivial equality with witness 1") {
        auto cert = certify_ideal_equality(o.eD4, o.eD4, Side::kRight);
        REQUIRE(cert.equal);
        REQUIRE(o.eD4 * *cert.w_fwd == o.eD4);
    }
}

TEST_CASE("lemma 2.2(3) annihilator family") {
    auto& b = psl27();
    auto& G = b.G;
    auto t = table_of(b);
    AlgElem e4G = idempotent_of(t.rows[3], G, G);
    std::vector<AlgElem> eA4;
    for (int i = 1; i <= 6; ++i) {
        auto& A = b.subgroups.at("A4_" + std::to_string(i));
        eA4.push_back(idempotent_of(trivial_character(A), A, G));
    }
    for (int j = 0; j < 2; ++j) {  // two of the six is enough at unit-test level
        std::vector<AlgElem> others;
        for (int i = 0; i < 6; ++i)
            if (i != j) others.push_back(eA4[i]);
        SubspaceBasis space = annihilator_in_right_ideal(others, eA4[j]);
        REQUIRE(space.dim() > 0);

        // dual route: the generic annihilator met with the generic ideal
        SubspaceBasis direct = subspace_intersect(annihilator(others, Side::kLeft),
                                                  ideal_of(eA4[j], Side::kRight).basis);
        REQUIRE(subspace_equal(space, direct));

        // scan the canonical basis for an r_j with the membership property
        bool found = false;
        for (const auto& row : space.rows) {
            AlgElem r = from_vector(G, 1, row);
            // r in e_j R and r e_i = 0 hold by construction; verify anyway
            REQUIRE(eA4[j] * r == r);
            for (const auto& other : others) REQUIRE((r * other).is_zero());
            AlgElem target = e4G * eA4[j];
            AlgElem gen = r * target;  // r e4 e_j up to central reordering
            auto w = solve_in_algebra(gen, target, Side::kLeft);
            if (w.has_value()) {
                REQUIRE(*w * gen == target);
                found = true;
                break;
            }
        }
        REQUIRE(found);
    }
}

TEST_CASE("certificate JSON round trip") {
    auto& o = l21();
    auto& G = psl27().G;
    AlgElem one = AlgElem::one(G, 7);
    AlgElem lhs = (one - o.e2G) * o.eC7_1;
    AlgElem rhs = o.eC7_1 * o.eD4;
    auto q = solve_in_algebra(lhs, rhs, Side::kRight);
    REQUIRE(q.has_value());

    Certificate c;
    c.claim = "2.1(4):q1";
    c.group = "psl27";
    c.provenance = "solver";
    c.form = "right_unknown";
    c.conductor = 7;
    c.lhs = lhs;
    c.rhs = rhs;
    c.witness = *q;
    c.denominator_primes = q->denominator_primes();
    c.gf8_polynomial = "n/a";
    REQUIRE(c.recheck());

    std::string s1 = certificate_to_json(c).dump(2);
    Certificate c2 = certificate_from_json(G, ordered_json::parse(s1));
    std::string s2 = certificate_to_json(c2).dump(2);
    REQUIRE(s1 == s2);  // bit-exact round trip
    REQUIRE(c2.recheck());

    // a tampered coefficient must fail the recheck
    ordered_json j = certificate_to_json(c);
    j["witness"][0][1]["coeffs"][0] = "7/9999";
    Certificate bad = certificate_from_json(G, j);
    REQUIRE_FALSE(bad.recheck());
}
