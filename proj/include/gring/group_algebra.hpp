#pragma once

#include "gring/class_function.hpp"
#include "gring/linalg.hpp"

namespace gring {

// An element of Q(zeta_k)[G]: a dense coefficient vector indexed by the
// group enumeration. Subgroup idempotents live inside the ambient algebra
// with coefficients zero off the subgroup.
struct AlgElem {
    const FiniteGroup* group = nullptr;
    int k = 1;
    std::vector<Cyc> c;

    static AlgElem zero(const FiniteGroup& G, int k) {
        AlgElem a;
        a.group = &G;
        a.k = k;
        a.c.assign(G.size(), Cyc(rat(0)).embedded(k));
        return a;
    }
    static AlgElem delta(const FiniteGroup& G, uint16_t idx, int k = 1) {
        AlgElem a = zero(G, k);
        a.c[idx] = Cyc(rat(1)).embedded(k);
        return a;
    }
    static AlgElem one(const FiniteGroup& G, int k = 1) { return delta(G, 0, k); }

    bool is_zero() const {
        for (const auto& x : c)
            if (!x.is_zero()) return false;
        return true;
    }

    std::vector<uint16_t> support() const {
        std::vector<uint16_t> s;
        for (uint16_t i = 0; i < c.size(); ++i)
            if (!c[i].is_zero()) s.push_back(i);
        return s;
    }

    AlgElem embedded(int K) const {
        AlgElem r;
        r.group = group;
        r.k = K;
        r.c.reserve(c.size());
        for (const auto& x : c) r.c.push_back(x.embedded(K));
        return r;
    }

    friend bool operator==(const AlgElem& a, const AlgElem& b) {
        if (a.group != b.group) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!(a.c[i] == b.c[i])) return false;
        return true;
    }

    // The nominal conductor of two operands; coefficient arithmetic handles
    // genuinely mixed values itself (rationals never force a conductor).
    static int join_conductor(int ka, int kb) {
        int K = std::lcm(ka, kb);
        return conductor_supported(K) ? K : std::max(ka, kb);
    }

    friend AlgElem operator+(const AlgElem& a, const AlgElem& b) {
        check_compat(a, b);
        AlgElem r = a;
        r.k = join_conductor(a.k, b.k);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
        return r;
    }
    friend AlgElem operator-(const AlgElem& a, const AlgElem& b) {
        check_compat(a, b);
        AlgElem r = a;
        r.k = join_conductor(a.k, b.k);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
        return r;
    }
    friend AlgElem operator*(const Cyc& s, const AlgElem& a) {
        AlgElem r = a;
        for (auto& x : r.c) x *= s;
        return r;
    }
    friend AlgElem operator*(const Rat& s, const AlgElem& a) {
        AlgElem r = a;
        for (auto& x : r.c) x = s * x;
        return r;
    }

    // convolution under the group's product convention; cost is
    // |support(a)| * |support(b)| coefficient products
    friend AlgElem operator*(const AlgElem& a, const AlgElem& b) {
        check_compat(a, b);
        const FiniteGroup& G = *a.group;
        AlgElem r = zero(G, join_conductor(a.k, b.k));
        auto sa = a.support(), sb = b.support();
        for (uint16_t x : sa)
            for (uint16_t y : sb) r.c[G.mul(x, y)] += a.c[x] * b.c[y];
        return r;
    }

    std::set<mpz_class> denominator_primes() const {
        std::set<mpz_class> out;
        for (const auto& x : c) {
            auto f = x.denominator_primes();
            out.insert(f.begin(), f.end());
        }
        return out;
    }

private:
    static void check_compat(const AlgElem& a, const AlgElem& b) {
        if (a.group != b.group) throw std::invalid_argument("elements of different group algebras");
    }
};

// e_chi^H = (chi(1)/|H|) sum chi(h^-1) h, embedded in Q(zeta_k)[G]
inline AlgElem idempotent_of(const ClassFunction& chi, const FiniteGroup& H,
                             const FiniteGroup& G) {
    if (chi.group != &H) throw std::invalid_argument("character not on the named subgroup");
    Cyc deg = chi.degree();
    if (deg.is_zero()) throw std::invalid_argument("zero-degree class function");
    AlgElem e = AlgElem::zero(G, chi.k);
    Rat scale = deg.rational_value() / Rat((unsigned long)H.size());
    for (uint16_t hi = 0; hi < H.size(); ++hi) {
        uint16_t gi = G.index_of(H.elem(hi));
        e.c[gi] = scale * chi.values[H.class_of(H.inv(hi))];
    }
    return e;
}

// g a g^-1 by coefficient permutation
inline AlgElem conj_by(const GroupElem& g, const AlgElem& a) {
    const FiniteGroup& G = *a.group;
    uint16_t gi = G.index_of(g);
    AlgElem r = AlgElem::zero(G, a.k);
    for (uint16_t x = 0; x < a.c.size(); ++x) {
        if (a.c[x].is_zero()) continue;
        r.c[G.conj(gi, x)] = a.c[x];
    }
    return r;
}

// matrix of x -> c*x in the group basis: column g holds the coefficients
// of c*delta_g, i.e. M[h][g] = c(h g^-1)
inline MatCyc left_mul_matrix(const AlgElem& c) {
    const FiniteGroup& G = *c.group;
    size_t n = G.size();
    MatCyc M(n, n, c.k);
    for (uint16_t g = 0; g < n; ++g) {
        uint16_t ginv = G.inv(g);
        for (uint16_t h = 0; h < n; ++h) {
            const Cyc& v = c.c[G.mul(h, ginv)];
            if (!v.is_zero()) M.at(h, g) = v.embedded(c.k);
        }
    }
    return M;
}

// matrix of x -> x*c: M[h][g] = c(g^-1 h)
inline MatCyc right_mul_matrix(const AlgElem& c) {
    const FiniteGroup& G = *c.group;
    size_t n = G.size();
    MatCyc M(n, n, c.k);
    for (uint16_t g = 0; g < n; ++g) {
        uint16_t ginv = G.inv(g);
        for (uint16_t h = 0; h < n; ++h) {
            const Cyc& v = c.c[G.mul(ginv, h)];
            if (!v.is_zero()) M.at(h, g) = v.embedded(c.k);
        }
    }
    return M;
}

inline bool is_idempotent(const AlgElem& a) { return a * a == a; }

// g a = a g for the group's generators suffices for centrality
inline bool is_central(const AlgElem& a) {
    const FiniteGroup& G = *a.group;
    for (const auto& gen : G.generators()) {
        uint16_t gi = G.index_of(gen);
        for (uint16_t x = 0; x < a.c.size(); ++x) {
            // compare coefficient of g*x in g*a with coefficient in a*g
            if (!(a.c[x] == a.c[G.mul(G.mul(gi, x), G.inv(gi))])) return false;
        }
    }
    return true;
}

// Zero test for a product whose factors live at coprime conductors with an
// unsupported lcm (e.g. zeta_9 times zeta_7 coefficients). Writing
// a = sum_i zeta^i A_i and b = sum_j xi^j B_j with rational A_i, B_j, the
// product vanishes iff every rational convolution A_i * B_j vanishes,
// because the tensor basis zeta^i (x) xi^j is linearly independent.
inline bool mixed_product_is_zero(const AlgElem& a, const AlgElem& b) {
    const FiniteGroup& G = *a.group;
    if (b.group != &G) throw std::invalid_argument("elements of different group algebras");
    int ka = 1, kb = 1;
    for (const auto& x : a.c) ka = std::lcm(ka, x.effective_conductor());
    for (const auto& x : b.c) kb = std::lcm(kb, x.effective_conductor());
    if (conductor_supported(std::lcm(ka, kb))) return (a * b).is_zero();
    if (std::gcd(ka, kb) != 1)
        throw std::invalid_argument("mixed zero test needs coprime conductors");
    int phi_a = euler_phi(a.k), phi_b = euler_phi(b.k);
    auto component = [&](const AlgElem& e, int phi, int i) {
        std::vector<std::pair<uint16_t, Rat>> comp;
        for (uint16_t x = 0; x < e.c.size(); ++x) {
            const auto& co = e.c[x].coeffs();
            if (i < (int)co.size() && co[i] != 0) comp.push_back({x, co[i]});
        }
        return comp;
    };
    std::vector<std::vector<std::pair<uint16_t, Rat>>> A, B;
    for (int i = 0; i < phi_a; ++i) A.push_back(component(a, phi_a, i));
    for (int j = 0; j < phi_b; ++j) B.push_back(component(b, phi_b, j));
    std::vector<Rat> conv(G.size());
    for (const auto& Ai : A) {
        if (Ai.empty()) continue;
        for (const auto& Bj : B) {
            if (Bj.empty()) continue;
            for (auto& v : conv) v = 0;
            for (const auto& [x, ax] : Ai)
                for (const auto& [y, by] : Bj) conv[G.mul(x, y)] += ax * by;
            for (const auto& v : conv)
                if (v != 0) return false;
        }
    }
    return true;
}

inline std::set<mpz_class> denominator_primes_of(const AlgElem& a) {
    return a.denominator_primes();
}

}  // namespace gring
