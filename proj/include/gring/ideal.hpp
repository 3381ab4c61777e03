#pragma once

#include <nlohmann/json.hpp>

#include "gring/group_algebra.hpp"

namespace gring {

using ordered_json = nlohmann::ordered_json;

enum class Side { kLeft, kRight };

inline const char* side_name(Side s) { return s == Side::kLeft ? "left" : "right"; }

// Span of the |G| translates of a generator: c*R for kRight (elements c*q),
// R*c for kLeft. The basis is the canonical reduced echelon form, so ideal
// equality is literal basis equality.
struct IdealBasis {
    Side side = Side::kRight;
    std::string generator;  // description only
    SubspaceBasis basis;
    size_t dim() const { return basis.dim(); }
};

inline IdealBasis ideal_of(const AlgElem& c, Side side, const std::string& description = "") {
    const FiniteGroup& G = *c.group;
    size_t n = G.size();
    detail::RrefBuilder b(n, c.k);
    for (uint16_t g = 0; g < n; ++g) {
        VecCyc row(n, Cyc(rat(0)).embedded(c.k));
        // row = coefficients of c*g (right ideal) or g*c (left ideal)
        if (side == Side::kRight) {
            uint16_t ginv = G.inv(g);
            for (uint16_t h = 0; h < n; ++h) {
                const Cyc& v = c.c[G.mul(h, ginv)];
                if (!v.is_zero()) row[h] = v.embedded(c.k);
            }
        } else {
            uint16_t ginv = G.inv(g);
            for (uint16_t h = 0; h < n; ++h) {
                const Cyc& v = c.c[G.mul(ginv, h)];
                if (!v.is_zero()) row[h] = v.embedded(c.k);
            }
        }
        b.insert(std::move(row));
    }
    IdealBasis out;
    out.side = side;
    out.generator = description;
    out.basis = b.take();
    return out;
}

inline AlgElem from_vector(const FiniteGroup& G, int k, const VecCyc& v) {
    AlgElem a = AlgElem::zero(G, k);
    for (size_t i = 0; i < v.size(); ++i) a.c[i] = v[i].embedded(k);
    return a;
}

inline VecCyc to_vector(const AlgElem& a) { return a.c; }

// Solve c*q = b (side kRight: the unknown stands on the right) or
// q*c = b (side kLeft) for one exact q; free coordinates are zero.
inline std::optional<AlgElem> solve_in_algebra(const AlgElem& c, const AlgElem& b, Side side) {
    if (c.group != b.group) throw std::invalid_argument("elements of different group algebras");
    int K = AlgElem::join_conductor(c.k, b.k);
    MatCyc M = side == Side::kRight ? left_mul_matrix(c.embedded(K)) : right_mul_matrix(c.embedded(K));
    VecCyc rhs;
    rhs.reserve(b.c.size());
    for (const auto& x : b.c) rhs.push_back(x.embedded(K));
    auto q = solve_particular(M, rhs);
    if (!q) return std::nullopt;
    return from_vector(*c.group, K, *q);
}

// Annihilator of a set: {x : e*x = 0 for all e} (side kRight) or
// {x : x*e = 0 for all e} (side kLeft), via the nullspace of the stacked
// multiplication operators (stacked through their row spaces).
inline SubspaceBasis annihilator(const std::vector<AlgElem>& elems, Side side) {
    if (elems.empty()) throw std::invalid_argument("empty annihilator input");
    const FiniteGroup& G = *elems[0].group;
    int K = 1;
    for (const auto& e : elems) K = AlgElem::join_conductor(K, e.k);
    size_t n = G.size();
    detail::RrefBuilder rows(n, K);
    for (const auto& e : elems) {
        MatCyc M = side == Side::kRight ? left_mul_matrix(e.embedded(K))
                                        : right_mul_matrix(e.embedded(K));
        for (size_t i = 0; i < n; ++i) {
            VecCyc row(M.entries.begin() + i * n, M.entries.begin() + (i + 1) * n);
            rows.insert(std::move(row));
        }
    }
    SubspaceBasis constraints = rows.take();
    MatCyc C(constraints.rows.size(), n, K);
    for (size_t i = 0; i < constraints.rows.size(); ++i)
        for (size_t j = 0; j < n; ++j) C.at(i, j) = constraints.rows[i][j];
    return nullspace(C);
}

// {x in gen*R : x*e = 0 for all e}. Equivalent to intersecting
// annihilator(elems, kLeft) with ideal_of(gen, kRight), but parameterizes x
// by the ideal basis first, which is far cheaper at |G| ~ 500.
inline SubspaceBasis annihilator_in_right_ideal(const std::vector<AlgElem>& elems,
                                                const AlgElem& gen) {
    const FiniteGroup& G = *gen.group;
    int K = gen.k;
    for (const auto& e : elems) K = AlgElem::join_conductor(K, e.k);
    IdealBasis V = ideal_of(gen.embedded(K), Side::kRight);
    size_t m = V.dim(), n = G.size();
    // w[m][e] = v_m * e, then constraints over the beta coordinates
    detail::RrefBuilder constraints(m, K);
    for (const auto& e : elems) {
        std::vector<AlgElem> w;
        w.reserve(m);
        for (size_t i = 0; i < m; ++i)
            w.push_back(from_vector(G, K, V.basis.rows[i]) * e.embedded(K));
        for (size_t h = 0; h < n; ++h) {
            VecCyc row(m, Cyc(rat(0)).embedded(K));
            bool nz = false;
            for (size_t i = 0; i < m; ++i) {
                row[i] = w[i].c[h];
                nz = nz || !row[i].is_zero();
            }
            if (nz) constraints.insert(std::move(row));
        }
    }
    SubspaceBasis cb = constraints.take();
    MatCyc C(cb.rows.size(), m, K);
    for (size_t i = 0; i < cb.rows.size(); ++i)
        for (size_t j = 0; j < m; ++j) C.at(i, j) = cb.rows[i][j];
    SubspaceBasis beta = nullspace(C);
    detail::RrefBuilder out(n, K);
    for (const auto& bvec : beta.rows) {
        VecCyc x(n, Cyc(rat(0)).embedded(K));
        for (size_t i = 0; i < m; ++i) {
            if (bvec[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j)
                if (!V.basis.rows[i][j].is_zero()) x[j] += bvec[i] * V.basis.rows[i][j];
        }
        out.insert(std::move(x));
    }
    return out.take();
}

struct EqualityCertificatePair {
    bool equal = false;
    // fwd: expresses lhs generator through the rhs ideal, bwd the reverse.
    // For right ideals: rhs_gen * w_fwd = lhs_gen and lhs_gen * w_bwd = rhs_gen.
    // For left ideals: w_fwd * rhs_gen = lhs_gen and w_bwd * lhs_gen = rhs_gen.
    std::optional<AlgElem> w_fwd, w_bwd;
    std::set<mpz_class> primes_fwd, primes_bwd;
    size_t dim_lhs = 0, dim_rhs = 0;
};

// Ideal equality with two witnesses, one per inclusion. The subspace
// comparison and the solves are independent routes to the same fact.
inline EqualityCertificatePair certify_ideal_equality(const AlgElem& lhs_gen,
                                                      const AlgElem& rhs_gen, Side side) {
    EqualityCertificatePair out;
    int K = AlgElem::join_conductor(lhs_gen.k, rhs_gen.k);
    AlgElem L = lhs_gen.embedded(K), R = rhs_gen.embedded(K);
    IdealBasis bl = ideal_of(L, side);
    IdealBasis br = ideal_of(R, side);
    out.dim_lhs = bl.dim();
    out.dim_rhs = br.dim();
    out.equal = subspace_equal(bl.basis, br.basis);
    out.w_fwd = solve_in_algebra(R, L, side);
    out.w_bwd = solve_in_algebra(L, R, side);
    if (out.w_fwd) out.primes_fwd = out.w_fwd->denominator_primes();
    if (out.w_bwd) out.primes_bwd = out.w_bwd->denominator_primes();
    return out;
}

// ---- serialization ----------------------------------------------------

inline ordered_json algelem_to_json(const AlgElem& a) {
    ordered_json terms = ordered_json::array();
    const Gf8* gf = a.group->gf8();
    for (uint16_t i : a.support()) {
        // canonical form: rational values at conductor 1
        Cyc v = a.c[i].is_rational() ? Cyc(a.c[i].rational_value()) : a.c[i];
        ordered_json coeff;
        coeff["k"] = v.conductor();
        ordered_json cs = ordered_json::array();
        for (const auto& r : v.coeffs()) cs.push_back(rat_to_string(r));
        coeff["coeffs"] = cs;
        terms.push_back(ordered_json::array({to_string(a.group->elem(i), gf), coeff}));
    }
    return terms;
}

inline Cyc cyc_from_json(const ordered_json& j) {
    int k = j.at("k").get<int>();
    std::vector<std::pair<long, Rat>> mono;
    const auto& cs = j.at("coeffs");
    for (size_t i = 0; i < cs.size(); ++i)
        mono.push_back({(long)i, rat_from_string(cs[i].get<std::string>())});
    Cyc c = Cyc::from_monomials(k, mono);
    if ((int)cs.size() != euler_phi(k)) throw std::invalid_argument("coefficient count != phi(k)");
    return c;
}

inline AlgElem algelem_from_json(const FiniteGroup& G, const ordered_json& j) {
    AlgElem a = AlgElem::zero(G, 1);
    int K = 1;
    for (const auto& term : j) {
        std::string es = term.at(0).get<std::string>();
        GroupElem e = G.gf8() ? (es == "id" ? GroupElem::mat_identity() : parse_mat(es, *G.gf8()))
                              : parse_perm(es);
        Cyc v = cyc_from_json(term.at(1));
        a.c[G.index_of(e)] += v;  // keeps the serialized conductor
        K = AlgElem::join_conductor(K, v.conductor());
    }
    a.k = K;
    return a;
}

// A solved or transcribed witness for one lemma sub-claim. Self-contained:
// the operands are serialized with the claim, so a stored certificate can be
// rechecked by substitution alone.
struct Certificate {
    std::string claim;       // e.g. "2.1(4):q1"
    std::string group;       // catalog group name
    std::string provenance;  // "solver" or "paper-s5.x"
    std::string form;        // "right_unknown": lhs*w = rhs; "left_unknown": w*lhs = rhs
    int conductor = 1;
    AlgElem lhs, rhs, witness;
    std::set<mpz_class> denominator_primes;
    std::string gf8_polynomial;  // engine metadata
    std::string pivot_rule = "first-nonzero-column";

    bool recheck() const {
        AlgElem got = form == "right_unknown" ? lhs * witness : witness * lhs;
        return got == rhs;
    }
};

inline ordered_json certificate_to_json(const Certificate& c) {
    ordered_json j;
    j["schema"] = "certificate-v1";
    j["claim"] = c.claim;
    j["group"] = c.group;
    j["provenance"] = c.provenance;
    j["conductor"] = c.conductor;
    j["equation"] = {{"form", c.form}, {"lhs", algelem_to_json(c.lhs)}, {"rhs", algelem_to_json(c.rhs)}};
    j["witness"] = algelem_to_json(c.witness);
    ordered_json primes = ordered_json::array();
    for (const auto& p : c.denominator_primes) primes.push_back(p.get_str());
    j["denominator_primes"] = primes;
    j["engine"] = {{"pivot_rule", c.pivot_rule}, {"gf8_polynomial", c.gf8_polynomial}};
    return j;
}

inline Certificate certificate_from_json(const FiniteGroup& G, const ordered_json& j) {
    if (j.at("schema").get<std::string>() != "certificate-v1")
        throw std::invalid_argument("unknown certificate schema");
    Certificate c;
    c.claim = j.at("claim").get<std::string>();
    c.group = j.at("group").get<std::string>();
    c.provenance = j.at("provenance").get<std::string>();
    c.conductor = j.at("conductor").get<int>();
    c.form = j.at("equation").at("form").get<std::string>();
    c.lhs = algelem_from_json(G, j.at("equation").at("lhs"));
    c.rhs = algelem_from_json(G, j.at("equation").at("rhs"));
    c.witness = algelem_from_json(G, j.at("witness"));
    for (const auto& p : j.at("denominator_primes"))
        c.denominator_primes.insert(mpz_class(p.get<std::string>()));
    c.gf8_polynomial = j.at("engine").at("gf8_polynomial").get<std::string>();
    c.pivot_rule = j.at("engine").at("pivot_rule").get<std::string>();
    return c;
}

}  // namespace gring
