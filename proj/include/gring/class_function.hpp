#pragma once

#include "gring/cyclotomic.hpp"
#include "gring/group.hpp"

namespace gring {

// A class function on an enumerated group: one value per conjugacy class,
// all at a common conductor. Characters are always identified by value
// constraints (degree plus values at named elements), never by a position
// in some computed table.
struct ClassFunction {
    const FiniteGroup* group = nullptr;
    int k = 1;
    std::vector<Cyc> values;  // indexed by class id

    const Cyc& at_class(uint16_t cls) const { return values[cls]; }
    const Cyc& at_index(uint16_t elem_idx) const { return values[group->class_of(elem_idx)]; }
    const Cyc& at(const GroupElem& e) const { return at_index(group->index_of(e)); }

    // identity sits at element index 0, hence class 0
    Cyc degree() const { return values[group->class_of(0)]; }

    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        if (a.group != b.group || a.values.size() != b.values.size()) return false;
        for (size_t i = 0; i < a.values.size(); ++i)
            if (!(a.values[i] == b.values[i])) return false;
        return true;
    }

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
        if (a.group != b.group) throw std::invalid_argument("class functions on different groups");
        ClassFunction r = a;
        r.k = std::lcm(a.k, b.k);
        for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.values[i] + b.values[i];
        return r;
    }
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
        if (a.group != b.group) throw std::invalid_argument("class functions on different groups");
        ClassFunction r = a;
        r.k = std::lcm(a.k, b.k);
        for (size_t i = 0; i < r.values.size(); ++i) r.values[i] = a.values[i] - b.values[i];
        return r;
    }
};

inline ClassFunction trivial_character(const FiniteGroup& H) {
    ClassFunction c;
    c.group = &H;
    c.k = 1;
    c.values.assign(H.classes().size(), Cyc(rat(1)));
    return c;
}

// A degree-1 character given by root-of-unity values on generators.
struct CharAssignment {
    const FiniteGroup* subgroup = nullptr;
    std::vector<std::pair<GroupElem, Cyc>> pairs;
};

// The unique multiplicative extension of a generator assignment, built by
// BFS over products and checked for consistency on all of H x H. Throws if
// the assignment does not factor through the abelianization.
inline ClassFunction degree_one_char(const CharAssignment& spec) {
    const FiniteGroup& H = *spec.subgroup;
    int k = 1;
    for (const auto& [g, v] : spec.pairs) k = std::lcm(k, v.effective_conductor());
    std::vector<Cyc> val(H.size(), Cyc(rat(0)).embedded(k));
    std::vector<bool> have(H.size(), false);
    val[0] = Cyc(rat(1)).embedded(k);
    have[0] = true;
    std::vector<std::pair<uint16_t, Cyc>> gens;
    for (const auto& [g, v] : spec.pairs) gens.push_back({H.index_of(g), v.embedded(k)});
    std::vector<uint16_t> queue = {0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        uint16_t x = queue[qi];
        for (const auto& [gi, gv] : gens) {
            uint16_t y = H.mul(x, gi);
            if (have[y]) continue;
            val[y] = val[x] * gv;
            have[y] = true;
            queue.push_back(y);
        }
    }
    for (bool h : have)
        if (!h) throw std::invalid_argument("assignment generators do not generate the subgroup");
    for (uint16_t x = 0; x < H.size(); ++x)
        for (uint16_t y = 0; y < H.size(); ++y)
            if (!(val[H.mul(x, y)] == val[x] * val[y]))
                throw std::invalid_argument("assignment does not extend to a homomorphism");
    ClassFunction c;
    c.group = &H;
    c.k = k;
    c.values.reserve(H.classes().size());
    for (const auto& cls : H.classes()) c.values.push_back(val[cls[0]]);
    return c;
}

// The unique nontrivial degree-1 character when [H : [H,H]] = 2.
inline ClassFunction sign_character(const FiniteGroup& H) {
    auto A = abelianization(H);
    if (A.size() != 2)
        throw std::invalid_argument("subgroup has no unique nontrivial degree-1 character");
    ClassFunction c;
    c.group = &H;
    c.k = 1;
    for (const auto& cls : H.classes())
        c.values.push_back(Cyc(rat(A.coset_of[cls[0]] == 0 ? 1 : -1)));
    return c;
}

// Ind_H^G(chi)(g) = (1/|H|) sum over x in G with x^-1 g x in H of chi(x^-1 g x)
inline ClassFunction induce(const ClassFunction& chi, const FiniteGroup& H, const FiniteGroup& G) {
    if (chi.group != &H) throw std::invalid_argument("character not on the named subgroup");
    if (!G.has_subgroup(H)) throw std::invalid_argument("H is not a subgroup of G");
    // H-membership and H-class lookup by G-index
    std::vector<int> h_class_of(G.size(), -1);
    for (uint16_t hi = 0; hi < H.size(); ++hi)
        h_class_of[G.index_of(H.elem(hi))] = H.class_of(hi);
    ClassFunction out;
    out.group = &G;
    out.k = chi.k;
    Rat inv_h(1, (unsigned long)H.size());
    for (const auto& cls : G.classes()) {
        uint16_t rep = cls[0];
        Cyc acc = Cyc(rat(0)).embedded(chi.k);
        for (uint16_t x = 0; x < G.size(); ++x) {
            uint16_t y = G.mul(G.mul(G.inv(x), rep), x);
            if (h_class_of[y] >= 0) acc += chi.values[h_class_of[y]];
        }
        out.values.push_back(inv_h * acc);
    }
    return out;
}

inline ClassFunction restrict_to(const ClassFunction& chi, const FiniteGroup& G,
                                 const FiniteGroup& H) {
    if (chi.group != &G) throw std::invalid_argument("character not on the named group");
    ClassFunction out;
    out.group = &H;
    out.k = chi.k;
    for (const auto& cls : H.classes())
        out.values.push_back(chi.at_index(G.index_of(H.elem(cls[0]))));
    return out;
}

// (1/|G|) sum chi(g) conj(psi(g)), accumulated per class
inline Cyc inner_product(const ClassFunction& chi, const ClassFunction& psi) {
    if (chi.group != psi.group) throw std::invalid_argument("class functions on different groups");
    const FiniteGroup& G = *chi.group;
    Cyc acc = Cyc(rat(0));
    for (size_t c = 0; c < G.classes().size(); ++c) {
        Cyc term = chi.values[c] * psi.values[c].conj();
        acc += Rat((unsigned long)G.classes()[c].size()) * term;
    }
    return Rat(1, (unsigned long)G.size()) * acc;
}

}  // namespace gring
