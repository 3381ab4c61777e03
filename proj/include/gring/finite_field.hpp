#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gring/cyclotomic.hpp"

namespace gring {

// F_{p^m} in the power basis over a fixed monic irreducible polynomial.
// For a given (p, m) the modulus is the irreducible with the smallest
// integer encoding sum(a_i p^i) of its non-leading coefficients, so every
// certificate can name it and a rerun rebuilds the identical field.

struct FqElem {
    static constexpr int kMaxDeg = 8;
    std::array<uint32_t, kMaxDeg> c{};  // c[i] mod p, length = field degree
};

class FqField {
public:
    FqField(uint32_t p, uint32_t m) : p_(p), m_(m) {
        if (m_ == 0 || m_ > FqElem::kMaxDeg) throw std::invalid_argument("unsupported degree");
        if (m_ == 1) {
            modulus_ = {0, 1};  // x, unused
        } else {
            modulus_ = smallest_irreducible();
        }
    }

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    std::string modulus_string() const {
        std::string s = "x^" + std::to_string(m_);
        for (int i = (int)m_ - 1; i >= 0; --i) {
            if (modulus_[i] == 0) continue;
            s += " + " + std::to_string(modulus_[i]);
            if (i == 1) s += "*x";
            if (i > 1) s += "*x^" + std::to_string(i);
        }
        return s;
    }

    FqElem zero() const { return FqElem{}; }
    FqElem one() const {
        FqElem e{};
        e.c[0] = 1 % p_;
        return e;
    }
    FqElem from_int(long v) const {
        long r = v % (long)p_;
        if (r < 0) r += p_;
        FqElem e{};
        e.c[0] = (uint32_t)r;
        return e;
    }
    FqElem from_mpz(const mpz_class& v) const {
        mpz_class r = v % p_;
        if (r < 0) r += p_;
        FqElem e{};
        e.c[0] = (uint32_t)r.get_ui();
        return e;
    }

    bool is_zero(const FqElem& a) const {
        for (uint32_t i = 0; i < m_; ++i)
            if (a.c[i] != 0) return false;
        return true;
    }
    bool equal(const FqElem& a, const FqElem& b) const {
        for (uint32_t i = 0; i < m_; ++i)
            if (a.c[i] != b.c[i]) return false;
        return true;
    }

    FqElem add(const FqElem& a, const FqElem& b) const {
        FqElem r{};
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t s = a.c[i] + b.c[i];
            r.c[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }
    FqElem sub(const FqElem& a, const FqElem& b) const {
        FqElem r{};
        for (uint32_t i = 0; i < m_; ++i) {
            uint32_t s = a.c[i] + p_ - b.c[i];
            r.c[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }
    FqElem neg(const FqElem& a) const { return sub(zero(), a); }

    FqElem mul(const FqElem& a, const FqElem& b) const {
        if (m_ == 1) {
            FqElem r{};
            r.c[0] = (uint32_t)((uint64_t)a.c[0] * b.c[0] % p_);
            return r;
        }
        std::array<uint64_t, 2 * FqElem::kMaxDeg> conv{};
        for (uint32_t i = 0; i < m_; ++i) {
            if (a.c[i] == 0) continue;
            for (uint32_t j = 0; j < m_; ++j) conv[i + j] += (uint64_t)a.c[i] * b.c[j];
        }
        // reduce degrees >= m via x^m = -(lower part of modulus)
        for (int d = 2 * (int)m_ - 2; d >= (int)m_; --d) {
            uint64_t t = conv[d] % p_;
            if (t == 0) continue;
            conv[d] = 0;
            for (uint32_t i = 0; i < m_; ++i)
                conv[d - m_ + i] += (uint64_t)(p_ - modulus_[i]) % p_ * t;
        }
        FqElem r{};
        for (uint32_t i = 0; i < m_; ++i) r.c[i] = (uint32_t)(conv[i] % p_);
        return r;
    }

    FqElem pow(FqElem a, mpz_class e) const {
        FqElem r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FqElem inv(const FqElem& a) const {
        if (is_zero(a)) throw std::domain_error("inversion of zero");
        mpz_class q = order();
        return pow(a, q - 2);
    }

    mpz_class order() const {
        mpz_class q = 1;
        for (uint32_t i = 0; i < m_; ++i) q *= p_;
        return q;
    }

    // multiplicative order of a nonzero element
    long elem_order(const FqElem& a) const {
        FqElem x = a;
        long n = 1;
        while (!equal(x, one())) {
            x = mul(x, a);
            ++n;
            if (n > order()) throw std::logic_error("order loop");
        }
        return n;
    }

    // deterministic enumeration: integer encoding sum c_i p^i ascending
    FqElem decode(uint64_t code) const {
        FqElem e{};
        for (uint32_t i = 0; i < m_; ++i) {
            e.c[i] = (uint32_t)(code % p_);
            code /= p_;
        }
        return e;
    }

private:
    std::vector<uint32_t> smallest_irreducible() const {
        uint64_t total = 1;
        for (uint32_t i = 0; i < m_; ++i) total *= p_;
        for (uint64_t code = 0; code < total; ++code) {
            std::vector<uint32_t> f(m_ + 1, 0);
            uint64_t c = code;
            for (uint32_t i = 0; i < m_; ++i) {
                f[i] = (uint32_t)(c % p_);
                c /= p_;
            }
            f[m_] = 1;
            if (poly_irreducible(f)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    using Poly = std::vector<uint32_t>;

    Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) const {
        std::vector<uint64_t> conv(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) conv[i + j] += (uint64_t)a[i] * b[j] % p_;
        }
        for (auto& x : conv) x %= p_;
        size_t dm = mod.size() - 1;
        for (size_t d = conv.size(); d-- > dm;) {
            uint64_t t = conv[d] % p_;
            if (!t) continue;
            conv[d] = 0;
            for (size_t i = 0; i < dm; ++i)
                conv[d - dm + i] = (conv[d - dm + i] + (uint64_t)(p_ - mod[i]) * t) % p_;
        }
        Poly r(dm, 0);
        for (size_t i = 0; i < dm; ++i) r[i] = (uint32_t)(conv[i] % p_);
        return r;
    }

    Poly poly_powmod(Poly base, mpz_class e, const Poly& mod) const {
        Poly r(mod.size() - 1, 0);
        r[0] = 1;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, mod);
            base = poly_mulmod(base, base, mod);
            e >>= 1;
        }
        return r;
    }

    static int poly_deg(const Poly& a) {
        for (int i = (int)a.size() - 1; i >= 0; --i)
            if (a[i] != 0) return i;
        return -1;
    }

    Poly poly_gcd(Poly a, Poly b) const {
        while (poly_deg(b) >= 0) {
            // a mod b
            int db = poly_deg(b);
            uint64_t lead_inv = 1;
            {  // inverse of leading coeff mod p
                uint64_t l = b[db], acc = 1, e = p_ - 2, base = l;
                while (e) {
                    if (e & 1) acc = acc * base % p_;
                    base = base * base % p_;
                    e >>= 1;
                }
                lead_inv = acc;
            }
            Poly r = a;
            for (int i = poly_deg(r); i >= db; i = poly_deg(r)) {
                uint64_t c = (uint64_t)r[i] * lead_inv % p_;
                for (int j = 0; j <= db; ++j)
                    r[i - db + j] = (uint32_t)((r[i - db + j] + (uint64_t)(p_ - b[j]) * c) % p_);
            }
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    bool poly_irreducible(const Poly& f) const {
        // x^(p^m) == x mod f, and x^(p^(m/q)) - x coprime to f for prime q | m
        Poly x(m_, 0);
        if (m_ == 1) return true;
        x[1] = 1;
        mpz_class pm = 1;
        for (uint32_t i = 0; i < m_; ++i) pm *= p_;
        Poly xq = poly_powmod(x, pm, f);
        if (poly_deg(xq) != 1 || xq[1] != 1 || xq[0] != 0) return false;
        for (uint32_t q = 2; q <= m_; ++q) {
            if (m_ % q != 0) continue;
            bool isprime = true;
            for (uint32_t d = 2; d * d <= q; ++d)
                if (q % d == 0) isprime = false;
            if (!isprime) continue;
            mpz_class e = 1;
            for (uint32_t i = 0; i < m_ / q; ++i) e *= p_;
            Poly xe = poly_powmod(x, e, f);
            // xe - x
            Poly diff = xe;
            diff[1] = (diff[1] + p_ - 1) % p_;
            Poly g = poly_gcd(f, diff);
            if (poly_deg(g) != 0) return false;
        }
        return true;
    }

    uint32_t p_;
    uint32_t m_;
    std::vector<uint32_t> modulus_;
};

// multiplicative order of p modulo k
inline uint32_t multiplicative_order_mod(uint64_t p, uint32_t k) {
    if (k == 1) return 1;
    uint64_t r = p % k;
    if (std::gcd(r, (uint64_t)k) != 1) throw std::invalid_argument("p not coprime to k");
    uint64_t x = r;
    uint32_t m = 1;
    while (x != 1) {
        x = x * r % k;
        ++m;
    }
    return m;
}

// An element of order exactly k in the smallest F_{p^m} containing one,
// deterministic: first hit in the fixed enumeration of field elements.
// Returns the field and the root.
inline std::pair<FqField, FqElem> find_order_k_root(uint32_t p, uint32_t k) {
    uint32_t m = multiplicative_order_mod(p, k);
    FqField F(p, m);
    mpz_class q1 = F.order() - 1;
    if (q1 % k != 0) throw std::logic_error("field misses order-k roots");
    for (uint64_t code = 1;; ++code) {
        FqElem e = F.decode(code);
        if (F.is_zero(e)) continue;
        // smallest element whose multiplicative order is exactly k
        FqElem x = e;
        uint32_t n = 1;
        while (!F.equal(x, F.one()) && n <= k) {
            x = F.mul(x, e);
            ++n;
        }
        if (n == k) return {F, e};
    }
}

// Ring-homomorphic image of a with zeta_(conductor) -> root. The root must
// have multiplicative order exactly the conductor, and p must not divide
// any coefficient denominator.
inline FqElem reduce_mod_p(const Cyc& a, const FqField& F, const FqElem& root) {
    int k = a.conductor();
    if (k > 1 && F.elem_order(root) != k) throw std::invalid_argument("root has wrong order");
    FqElem acc = F.zero();
    FqElem pw = F.one();
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        const Rat& c = a.coeffs()[i];
        if (c != 0) {
            mpz_class den(c.get_den());
            if (mpz_divisible_ui_p(den.get_mpz_t(), F.p()))
                throw std::domain_error("denominator divisible by p");
            FqElem num = F.from_mpz(mpz_class(c.get_num()));
            FqElem d = F.inv(F.from_mpz(den));
            acc = F.add(acc, F.mul(pw, F.mul(num, d)));
        }
        if (i + 1 < a.coeffs().size()) pw = F.mul(pw, root);
    }
    return acc;
}

}  // namespace gring
