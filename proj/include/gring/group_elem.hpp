#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <stdexcept>

namespace gring {

// GF(8) for the 2x2 matrix groups. Elements are coded 0..7 as bit vectors
// b0 + b1*a + b2*a^2 over the chosen defining polynomial of degree 3.
// The primary choice is a^3 = a + 1 (x^3+x+1); the fallback a^3 = a^2 + 1
// exists because the source tables never fix one and a mismatch must be
// detectable rather than silent.
struct Gf8 {
    explicit Gf8(bool primary_poly = true) : primary(primary_poly) {
        uint8_t red = primary ? 0b011 : 0b101;  // value of a^3
        for (int x = 0; x < 8; ++x) {
            for (int y = 0; y < 8; ++y) {
                // carryless multiply then reduce bits 3,4
                int prod = 0;
                for (int i = 0; i < 3; ++i)
                    if (x >> i & 1) prod ^= y << i;
                for (int bit = 4; bit >= 3; --bit)
                    if (prod >> bit & 1) prod ^= (1 << bit) ^ (red << (bit - 3));
                mul[x][y] = (uint8_t)(prod & 7);
            }
        }
        apow[0] = 1;
        for (int i = 1; i < 7; ++i) apow[i] = mul[apow[i - 1]][2];
    }

    std::string name() const { return primary ? "x^3+x+1" : "x^3+x^2+1"; }

    bool primary;
    uint8_t mul[8][8];
    std::array<uint8_t, 7> apow;  // a^0 .. a^6
};

inline const Gf8& gf8_primary() {
    static const Gf8 t(true);
    return t;
}
inline const Gf8& gf8_fallback() {
    static const Gf8 t(false);
    return t;
}

// Tagged group element: a permutation on up to 8 points (0-based images,
// identity beyond the support), or a 2x2 invertible matrix over GF(8)
// stored as v[0..3] = (top-left, top-right, bottom-left, bottom-right).
struct GroupElem {
    enum Kind : uint8_t { kPerm = 0, kMat = 1 };
    uint8_t kind = kPerm;
    std::array<uint8_t, 8> v{0, 1, 2, 3, 4, 5, 6, 7};

    static GroupElem perm_identity() { return GroupElem{}; }
    static GroupElem mat_identity() {
        GroupElem e;
        e.kind = kMat;
        e.v = {1, 0, 0, 1, 0, 0, 0, 0};
        return e;
    }

    friend bool operator==(const GroupElem& a, const GroupElem& b) {
        return a.kind == b.kind && a.v == b.v;
    }
    friend bool operator<(const GroupElem& a, const GroupElem& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.v < b.v;
    }
};

// Product under the convention "apply b first, then a" (so with
// a = (1,2)(3,4), b = (1,2,3) the product is (2,4,3)).
inline GroupElem product(const GroupElem& a, const GroupElem& b, const Gf8* gf = nullptr) {
    if (a.kind != b.kind) throw std::invalid_argument("product of mixed element kinds");
    GroupElem r;
    r.kind = a.kind;
    if (a.kind == GroupElem::kPerm) {
        for (int i = 0; i < 8; ++i) r.v[i] = a.v[b.v[i]];
    } else {
        if (!gf) gf = &gf8_primary();
        auto& m = gf->mul;
        r.v = {};
        r.v[0] = m[a.v[0]][b.v[0]] ^ m[a.v[1]][b.v[2]];
        r.v[1] = m[a.v[0]][b.v[1]] ^ m[a.v[1]][b.v[3]];
        r.v[2] = m[a.v[2]][b.v[0]] ^ m[a.v[3]][b.v[2]];
        r.v[3] = m[a.v[2]][b.v[1]] ^ m[a.v[3]][b.v[3]];
    }
    return r;
}

inline GroupElem inverse(const GroupElem& a, const Gf8* gf = nullptr) {
    GroupElem r;
    r.kind = a.kind;
    if (a.kind == GroupElem::kPerm) {
        for (int i = 0; i < 8; ++i) r.v[a.v[i]] = (uint8_t)i;
    } else {
        if (!gf) gf = &gf8_primary();
        auto& m = gf->mul;
        uint8_t det = m[a.v[0]][a.v[3]] ^ m[a.v[1]][a.v[2]];
        if (det == 0) throw std::domain_error("singular matrix");
        // inverse of det in GF(8): det^6
        uint8_t inv = 1;
        for (int i = 0; i < 6; ++i) inv = m[inv][det];
        r.v = {};
        r.v[0] = m[inv][a.v[3]];
        r.v[1] = m[inv][a.v[1]];  // char 2: -x = x
        r.v[2] = m[inv][a.v[2]];
        r.v[3] = m[inv][a.v[0]];
    }
    return r;
}

// "(1,7,3,8)(2,6,4,5)" or "id" -> permutation (1-based cycles in the text)
inline GroupElem parse_perm(const std::string& s) {
    GroupElem e = GroupElem::perm_identity();
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    if (s.substr(i, 2) == "id" || i >= s.size()) return e;
    while (i < s.size()) {
        skip_ws();
        if (i >= s.size()) break;
        if (s[i] != '(') throw std::invalid_argument("bad cycle notation: " + s);
        ++i;
        std::vector<int> cyc;
        int cur = 0;
        bool have = false;
        for (; i < s.size(); ++i) {
            char c = s[i];
            if (c >= '0' && c <= '9') {
                cur = cur * 10 + (c - '0');
                have = true;
            } else if (c == ',' || c == ' ') {
                if (have) cyc.push_back(cur);
                cur = 0;
                have = false;
            } else if (c == ')') {
                if (have) cyc.push_back(cur);
                ++i;
                break;
            } else {
                throw std::invalid_argument("bad cycle notation: " + s);
            }
        }
        for (size_t j = 0; j < cyc.size(); ++j) {
            int from = cyc[j] - 1, to = cyc[(j + 1) % cyc.size()] - 1;
            if (from < 0 || from > 7 || to < 0 || to > 7)
                throw std::invalid_argument("cycle point out of range: " + s);
            e.v[from] = (uint8_t)to;
        }
    }
    return e;
}

// "[[0,a5],[a2,0]]" -> matrix; entries are 0, 1, or a<k> meaning a^k
inline GroupElem parse_mat(const std::string& s, const Gf8& gf) {
    std::vector<uint8_t> entries;
    size_t i = 0;
    while (i < s.size() && entries.size() < 4) {
        char c = s[i];
        if (c == '0') {
            entries.push_back(0);
            ++i;
        } else if (c == '1') {
            entries.push_back(1);
            ++i;
        } else if (c == 'a') {
            ++i;
            int k = 1;
            if (i < s.size() && s[i] >= '0' && s[i] <= '9') {
                k = s[i] - '0';
                ++i;
            }
            entries.push_back(gf.apow[k % 7]);
        } else {
            ++i;
        }
    }
    if (entries.size() != 4) throw std::invalid_argument("bad matrix literal: " + s);
    GroupElem e;
    e.kind = GroupElem::kMat;
    e.v = {};
    for (int j = 0; j < 4; ++j) e.v[j] = entries[j];
    return e;
}

inline std::string to_string(const GroupElem& e, const Gf8* gf = nullptr) {
    if (e.kind == GroupElem::kPerm) {
        std::array<bool, 8> seen{};
        std::ostringstream os;
        bool any = false;
        for (int i = 0; i < 8; ++i) {
            if (seen[i] || e.v[i] == i) continue;
            os << '(';
            int j = i;
            bool first = true;
            while (!seen[j]) {
                seen[j] = true;
                if (!first) os << ',';
                os << j + 1;
                first = false;
                j = e.v[j];
            }
            os << ')';
            any = true;
        }
        return any ? os.str() : "id";
    }
    if (!gf) gf = &gf8_primary();
    auto code = [&](uint8_t x) -> std::string {
        if (x == 0) return "0";
        if (x == 1) return "1";
        for (int k = 1; k < 7; ++k)
            if (gf->apow[k] == x) return k == 1 ? "a" : "a" + std::to_string(k);
        return "?";
    };
    std::ostringstream os;
    os << "[[" << code(e.v[0]) << ',' << code(e.v[1]) << "],[" << code(e.v[2]) << ','
       << code(e.v[3]) << "]]";
    return os.str();
}

}  // namespace gring
