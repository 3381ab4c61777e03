#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>
#include <vector>

#include "gring/rational.hpp"

namespace gring {

// Elements of Q(zeta_k) in the power basis 1, zeta, ..., zeta^(phi(k)-1),
// reduced modulo the k-th cyclotomic polynomial. The representation is
// canonical, so operator== is coefficient-wise.
//
// Conductors are restricted to a closed list (the fields the verifications
// live in, plus their subfields). Mixed-conductor arithmetic embeds both
// operands into the lcm conductor when that lcm is supported and fails
// loudly otherwise; values that happen to be rational are treated as
// conductor 1 so e.g. 0 * zeta_7 never forces a conductor-63 field.

inline int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace detail {

struct CycTable {
    int k = 0;
    int phi = 0;
    std::vector<Rat> cyclo;               // monic cyclotomic polynomial, low -> high
    std::vector<std::vector<Rat>> power;  // power[j] = coords of zeta^j for j < 2*phi
};

// (x^k - 1) / prod_{d | k, d < k} Phi_d, by exact polynomial division.
inline std::vector<Rat> cyclotomic_poly(int k, const std::map<int, std::vector<Rat>>& lower) {
    std::vector<Rat> num(k + 1, Rat(0));
    num[0] = Rat(-1);
    num[k] = Rat(1);
    for (const auto& [d, phi_d] : lower) {
        if (d >= k || k % d != 0) continue;
        // divide num by phi_d
        std::vector<Rat> q(num.size() - phi_d.size() + 1, Rat(0));
        std::vector<Rat> rem = num;
        for (int i = (int)q.size() - 1; i >= 0; --i) {
            Rat c = rem[i + phi_d.size() - 1] / phi_d.back();
            q[i] = c;
            if (c != 0)
                for (size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
        }
        num = std::move(q);
    }
    return num;
}

inline const std::map<int, CycTable>& cyc_tables() {
    static const std::map<int, CycTable> tables = [] {
        std::map<int, CycTable> out;
        std::map<int, std::vector<Rat>> polys;
        const int supported[] = {1, 2, 3, 4, 5, 6, 7, 9, 10, 12, 15, 20, 21, 30, 60};
        // cyclotomic polynomials are built in increasing order over all
        // divisors so the division has everything it needs
        std::vector<int> all;
        for (int k : supported)
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) all.push_back(d);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        for (int k : all) polys[k] = cyclotomic_poly(k, polys);
        for (int k : supported) {
            CycTable t;
            t.k = k;
            t.phi = euler_phi(k);
            t.cyclo = polys[k];
            t.power.resize(std::max(2 * t.phi - 1, t.phi + 1));
            for (int j = 0; j < t.phi; ++j) {
                t.power[j].assign(t.phi, Rat(0));
                t.power[j][j] = Rat(1);
            }
            for (size_t j = t.phi; j < t.power.size(); ++j) {
                // zeta^j = zeta * zeta^(j-1), reduce the top term via Phi_k
                const auto& prev = t.power[j - 1];
                std::vector<Rat> cur(t.phi, Rat(0));
                for (int i = 0; i + 1 < t.phi; ++i) cur[i + 1] = prev[i];
                Rat top = prev[t.phi - 1];
                if (top != 0)
                    for (int i = 0; i < t.phi; ++i) cur[i] -= top * t.cyclo[i];
                t.power[j] = std::move(cur);
            }
            out[k] = std::move(t);
        }
        return out;
    }();
    return tables;
}

inline const CycTable& table_for(int k) {
    const auto& t = cyc_tables();
    auto it = t.find(k);
    if (it == t.end()) throw std::invalid_argument("unsupported conductor " + std::to_string(k));
    return it->second;
}

}  // namespace detail

inline bool conductor_supported(int k) { return detail::cyc_tables().count(k) != 0; }

class Cyc {
public:
    Cyc() : k_(1), c_(1, Rat(0)) {}
    explicit Cyc(const Rat& r) : k_(1), c_(1, r) {}
    explicit Cyc(long n) : k_(1), c_(1, Rat(n)) {}

    // canonical representative of sum c * zeta_k^e over the given monomials
    static Cyc from_monomials(int k, const std::vector<std::pair<long, Rat>>& monomials) {
        const auto& t = detail::table_for(k);
        Cyc out;
        out.k_ = k;
        out.c_.assign(t.phi, Rat(0));
        for (const auto& [e, coeff] : monomials) {
            long r = ((e % k) + k) % k;
            if (r < t.phi) {
                out.c_[r] += coeff;
            } else {
                // zeta^r for phi <= r < k via repeated use of the power table
                std::vector<Rat> cur(t.phi, Rat(0));
                cur[0] = Rat(1);
                long rem = r;
                while (rem > 0) {
                    long step = std::min<long>(rem, t.phi);
                    // multiply cur by zeta^step
                    std::vector<Rat> next(t.phi, Rat(0));
                    for (int i = 0; i < t.phi; ++i) {
                        if (cur[i] == 0) continue;
                        const auto& row = t.power[i + step];
                        for (int j = 0; j < t.phi; ++j) next[j] += cur[i] * row[j];
                    }
                    cur = std::move(next);
                    rem -= step;
                }
                for (int j = 0; j < t.phi; ++j) out.c_[j] += coeff * cur[j];
            }
        }
        return out;
    }

    static Cyc zeta(int k, long e = 1) { return from_monomials(k, {{e, Rat(1)}}); }

    int conductor() const { return k_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    // conductor 1 for rational values, k otherwise
    int effective_conductor() const { return is_rational() ? 1 : k_; }

    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("value is not rational");
        return c_[0];
    }

    // value-preserving embedding zeta_d -> zeta_K^(K/d); requires d | K
    // (rational values move between any two conductors)
    Cyc embedded(int K) const {
        if (K == k_) return *this;
        if (K % k_ != 0) {
            if (is_rational()) {
                Cyc out;
                out.k_ = K;
                out.c_.assign(detail::table_for(K).phi, Rat(0));
                out.c_[0] = c_[0];
                return out;
            }
            throw std::invalid_argument("embed target is not a multiple of conductor");
        }
        std::vector<std::pair<long, Rat>> mono;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) mono.push_back({(long)i * (K / k_), c_[i]});
        if (mono.empty()) return Cyc::from_monomials(K, {});
        return Cyc::from_monomials(K, mono);
    }

    friend bool operator==(const Cyc& a, const Cyc& b) {
        if (a.k_ == b.k_) return a.c_ == b.c_;
        int K = a.common_conductor(b);
        return a.embedded(K).c_ == b.embedded(K).c_;
    }
    friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

    friend Cyc operator+(const Cyc& a, const Cyc& b) {
        if (a.k_ == b.k_) {
            Cyc out = a;
            for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
            return out;
        }
        int K = a.common_conductor(b);
        return a.embedded(K) + b.embedded(K);
    }
    friend Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }
    Cyc operator-() const {
        Cyc out = *this;
        for (auto& x : out.c_) x = -x;
        return out;
    }

    friend Cyc operator*(const Cyc& a, const Cyc& b) {
        if (a.k_ != b.k_) {
            int K = a.common_conductor(b);
            return a.embedded(K) * b.embedded(K);
        }
        const auto& t = detail::table_for(a.k_);
        int phi = t.phi;
        if (phi == 1) {
            Cyc out;
            out.k_ = a.k_;
            out.c_ = {a.c_[0] * b.c_[0]};
            return out;
        }
        std::vector<Rat> conv(2 * phi - 1, Rat(0));
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        Cyc out;
        out.k_ = a.k_;
        out.c_.assign(phi, Rat(0));
        for (int d = 0; d < phi; ++d) out.c_[d] = std::move(conv[d]);
        for (int d = phi; d < 2 * phi - 1; ++d) {
            if (conv[d] == 0) continue;
            const auto& row = t.power[d];
            for (int j = 0; j < phi; ++j) out.c_[j] += conv[d] * row[j];
        }
        return out;
    }

    friend Cyc operator*(const Rat& r, const Cyc& a) {
        Cyc out = a;
        for (auto& x : out.c_) x *= r;
        return out;
    }

    Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
    Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
    Cyc& operator*=(const Cyc& b) { return *this = *this * b; }

    // this -= a*b without temporaries; elimination inner loop
    void submul(const Cyc& a, const Cyc& b) {
        if (a.k_ != k_ || b.k_ != k_) {
            *this -= a * b;
            return;
        }
        const auto& t = detail::table_for(k_);
        int phi = t.phi;
        if (phi == 1) {
            c_[0] -= a.c_[0] * b.c_[0];
            return;
        }
        static thread_local std::vector<Rat> conv;
        size_t need = 2 * phi - 1;
        if (conv.size() < need) conv.resize(need);
        for (size_t i = 0; i < need; ++i) conv[i] = 0;
        for (int i = 0; i < phi; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < phi; ++j) {
                if (b.c_[j] == 0) continue;
                conv[i + j] += a.c_[i] * b.c_[j];
            }
        }
        for (int d = 0; d < phi; ++d) c_[d] -= conv[d];
        for (int d = phi; d < 2 * phi - 1; ++d) {
            if (conv[d] == 0) continue;
            const auto& row = t.power[d];
            for (int j = 0; j < phi; ++j)
                if (row[j] != 0) c_[j] -= conv[d] * row[j];
        }
    }

    // multiplicative inverse via the extended Euclidean algorithm in Q[x]/(Phi_k)
    Cyc inv() const {
        if (is_zero()) throw std::domain_error("inversion of zero");
        if (is_rational()) {
            Cyc out;
            out.k_ = k_;
            out.c_.assign(c_.size(), Rat(0));
            out.c_[0] = Rat(1) / c_[0];
            return out;
        }
        const auto& t = detail::table_for(k_);
        using Poly = std::vector<Rat>;
        auto deg = [](const Poly& p) {
            for (int i = (int)p.size() - 1; i >= 0; --i)
                if (p[i] != 0) return i;
            return -1;
        };
        Poly r0 = t.cyclo, r1(c_.begin(), c_.end());
        Poly s0(1, Rat(0)), s1(1, Rat(1));  // coefficients of *this in the Bezout identity
        while (deg(r1) > 0) {
            int d0 = deg(r0), d1 = deg(r1);
            Poly q(d0 - d1 + 1, Rat(0));
            Poly rem = r0;
            for (int i = d0 - d1; i >= 0; --i) {
                Rat c = rem[i + d1] / r1[d1];
                q[i] = c;
                if (c != 0)
                    for (int j = 0; j <= d1; ++j) rem[i + j] -= c * r1[j];
            }
            Poly s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
            for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
            }
            r0 = std::move(r1);
            r1 = std::move(rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        int d = deg(r1);
        if (d < 0) throw std::domain_error("element not invertible modulo cyclotomic polynomial");
        Rat lead = r1[d];
        Cyc out;
        out.k_ = k_;
        out.c_.assign(t.phi, Rat(0));
        // reduce s1 modulo Phi (degree may reach phi during the loop)
        std::vector<Rat> folded(t.phi, Rat(0));
        for (size_t i = 0; i < s1.size(); ++i) {
            if (s1[i] == 0) continue;
            if ((int)i < t.phi) {
                folded[i] += s1[i];
            } else {
                const auto& row = t.power[i];
                for (int j = 0; j < t.phi; ++j) folded[j] += s1[i] * row[j];
            }
        }
        for (int j = 0; j < t.phi; ++j) out.c_[j] = folded[j] / lead;
        return out;
    }

    // Galois automorphism zeta_k -> zeta_k^j; requires gcd(j, k) = 1
    Cyc galois(long j) const {
        long jj = ((j % k_) + k_) % k_;
        if (std::gcd(jj, (long)k_) != 1)
            throw std::invalid_argument("galois exponent not coprime to conductor");
        std::vector<std::pair<long, Rat>> mono;
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) mono.push_back({(long)i * jj, c_[i]});
        Cyc out = Cyc::from_monomials(k_, mono);
        return out;
    }

    // complex conjugation
    Cyc conj() const { return k_ == 1 || k_ == 2 ? *this : galois(-1); }

    // rational primes dividing any coefficient denominator
    std::set<mpz_class> denominator_primes() const {
        std::set<mpz_class> out;
        for (const auto& x : c_) {
            auto f = prime_factors(mpz_class(x.get_den()));
            out.insert(f.begin(), f.end());
        }
        return out;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << rat_to_string(c_[i]);
            if (i > 0) os << "*z" << k_ << "^" << i;
            first = false;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    int common_conductor(const Cyc& b) const {
        int ka = effective_conductor(), kb = b.effective_conductor();
        int K = std::lcm(ka, kb);
        if (!conductor_supported(K))
            throw std::invalid_argument("mixed conductors with unsupported lcm " +
                                        std::to_string(K));
        return K;
    }

    int k_;
    std::vector<Rat> c_;
};

inline Cyc operator*(const Cyc& a, const Rat& r) { return r * a; }

// Named entry points matching the operation vocabulary used elsewhere.
inline Cyc cyc_make(int k, const std::vector<std::pair<long, Rat>>& m) {
    return Cyc::from_monomials(k, m);
}
inline Cyc embed(const Cyc& a, int K) { return a.embedded(K); }
inline Cyc galois(const Cyc& a, long j) { return a.galois(j); }
inline std::set<mpz_class> denominator_primes(const Cyc& a) { return a.denominator_primes(); }

}  // namespace gring
