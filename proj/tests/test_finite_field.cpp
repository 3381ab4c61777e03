#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gring/finite_field.hpp"

using namespace gring;

TEST_CASE("prime field arithmetic") {
    FqField F(43, 1);
    // 1/2 mod 43 = 22 since 2*22 = 44
    FqElem half = F.inv(F.from_int(2));
    REQUIRE(half.c[0] == 22);
    REQUIRE(F.equal(F.mul(F.from_int(2), half), F.one()));
    REQUIRE(F.is_zero(F.add(F.from_int(40), F.from_int(3))));
}

TEST_CASE("deterministic irreducible modulus") {
    FqField F8(2, 3);
    // smallest encoding: x^3 + x + 1 (coeffs 1,1,0)
    REQUIRE(F8.modulus() == std::vector<uint32_t>{1, 1, 0, 1});
    FqField F25(5, 2);
    REQUIRE(F25.modulus().back() == 1);
    // the found modulus really is irreducible: no roots in F_5
    for (int x = 0; x < 5; ++x) {
        int v = (F25.modulus()[0] + F25.modulus()[1] * x + x * x) % 5;
        REQUIRE(v != 0);
    }
}

TEST_CASE("order-k roots") {
    SECTION("order 21 in F_43 (43 = 1 mod 21)") {
        auto [F, r] = find_order_k_root(43, 21);
        REQUIRE(F.m() == 1);
        REQUIRE(F.elem_order(r) == 21);
    }
    SECTION("order 3 in F_7") {
        auto [F, r] = find_order_k_root(7, 3);
        REQUIRE(F.m() == 1);
        // deterministic: first element in enumeration order with exact order 3 is 2
        REQUIRE(r.c[0] == 2);
        REQUIRE(F.equal(F.pow(r, 3), F.one()));
    }
    SECTION("order 5 in F_11") {
        auto [F, r] = find_order_k_root(11, 5);
        REQUIRE(F.m() == 1);
        REQUIRE(F.elem_order(r) == 5);
    }
    SECTION("order 9 needs an extension of F_5") {
        REQUIRE(multiplicative_order_mod(5, 9) == 6);
        auto [F, r] = find_order_k_root(5, 9);
        REQUIRE(F.m() == 6);
        REQUIRE(F.elem_order(r) == 9);
    }
}

TEST_CASE("reduce_mod_p") {
    FqField F(43, 1);
    REQUIRE(reduce_mod_p(Cyc(rat(1)), F, F.one()).c[0] == 1);
    REQUIRE(reduce_mod_p(Cyc(rat(1, 2)), F, F.one()).c[0] == 22);

    auto [F7, r3] = find_order_k_root(7, 3);
    REQUIRE(r3.c[0] == 2);
    REQUIRE(reduce_mod_p(Cyc::zeta(3), F7, r3).c[0] == 2);

    SECTION("errors") {
        REQUIRE_THROWS_AS(reduce_mod_p(Cyc(rat(1, 43)), F, F.one()), std::domain_error);
        FqElem bad = F.from_int(2);  // order of 2 mod 43 is 14, not 3
        REQUIRE_THROWS_AS(reduce_mod_p(Cyc::zeta(3), F, bad), std::invalid_argument);
    }

    SECTION("ring homomorphism on random pairs") {
        auto [Fp, root] = find_order_k_root(43, 21);
        std::mt19937 rng(5);
        std::uniform_int_distribution<long> d(-20, 20);
        for (int trial = 0; trial < 12; ++trial) {
            std::vector<std::pair<long, Rat>> ma, mb;
            for (int i = 0; i < 12; ++i) {
                ma.push_back({i, rat(d(rng), 3)});
                mb.push_back({i, rat(d(rng), 2)});
            }
            Cyc a = cyc_make(21, ma), b = cyc_make(21, mb);
            auto ra = reduce_mod_p(a, Fp, root);
            auto rb = reduce_mod_p(b, Fp, root);
            REQUIRE(Fp.equal(reduce_mod_p(a * b, Fp, root), Fp.mul(ra, rb)));
            REQUIRE(Fp.equal(reduce_mod_p(a + b, Fp, root), Fp.add(ra, rb)));
        }
    }
}
