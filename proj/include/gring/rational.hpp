#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace gring {

// Exact rational scalar. GMP keeps values canonical (lowest terms,
// positive denominator) through arithmetic.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den" or "-num/den"; decimal points are not accepted.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty() || s.find('.') != std::string::npos)
        throw std::invalid_argument("bad rational literal: " + s);
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

namespace detail {

inline mpz_class pollard_rho(const mpz_class& n) {
    // n is composite, odd, not a prime power of 2; returns a nontrivial factor.
    for (unsigned long c = 1;; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break;  // cycle without factor, retry with next c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

inline void factor_into(mpz_class n, std::set<mpz_class>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out.insert(mpz_class(p));
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out.insert(n);
        return;
    }
    mpz_class f = pollard_rho(n);
    factor_into(f, out);
    factor_into(n / f, out);
}

}  // namespace detail

// Set of primes dividing |n|.
inline std::set<mpz_class> prime_factors(const mpz_class& n) {
    std::set<mpz_class> out;
    detail::factor_into(n, out);
    return out;
}

}  // namespace gring
