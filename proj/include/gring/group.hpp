#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>

#include "gring/group_elem.hpp"

namespace gring {

// An enumerated finite group. Elements are listed in a deterministic order
// (BFS from the identity over the generator list, or the order handed to
// from_elements); the identity sits at index 0. Multiplication and inverse
// tables are precomputed; conjugacy classes are computed once on first use
// behind an initialization guard and shared by copies.
class FiniteGroup {
public:
    static constexpr size_t kClosureGuard = 1u << 16;

    static FiniteGroup generate_closure(const std::vector<GroupElem>& gens,
                                        const Gf8* gf = nullptr) {
        if (gens.empty()) throw std::invalid_argument("no generators");
        if (gens[0].kind == GroupElem::kMat && !gf) gf = &gf8_primary();
        GroupElem id = gens[0].kind == GroupElem::kPerm ? GroupElem::perm_identity()
                                                        : GroupElem::mat_identity();
        FiniteGroup G;
        G.gf_ = gf;
        G.gens_ = gens;
        G.elems_.push_back(id);
        G.index_[id] = 0;
        for (size_t i = 0; i < G.elems_.size(); ++i) {
            for (const auto& g : gens) {
                GroupElem y = product(G.elems_[i], g, gf);
                if (G.index_.emplace(y, (uint16_t)G.elems_.size()).second) {
                    G.elems_.push_back(y);
                    if (G.elems_.size() > kClosureGuard)
                        throw std::runtime_error("closure guard exceeded");
                }
            }
        }
        G.build_tables();
        return G;
    }

    // Wraps an already-closed element set (e.g. an intersection) keeping the
    // given order, except that the identity is rotated to index 0.
    static FiniteGroup from_elements(std::vector<GroupElem> elems, const Gf8* gf = nullptr) {
        if (elems.empty()) throw std::invalid_argument("empty element set");
        if (elems[0].kind == GroupElem::kMat && !gf) gf = &gf8_primary();
        GroupElem id = elems[0].kind == GroupElem::kPerm ? GroupElem::perm_identity()
                                                         : GroupElem::mat_identity();
        FiniteGroup G;
        G.gf_ = gf;
        auto it = std::find(elems.begin(), elems.end(), id);
        if (it == elems.end()) throw std::invalid_argument("element set without identity");
        std::iter_swap(elems.begin(), it);
        G.elems_ = std::move(elems);
        for (size_t i = 0; i < G.elems_.size(); ++i) G.index_[G.elems_[i]] = (uint16_t)i;
        if (G.index_.size() != G.elems_.size())
            throw std::invalid_argument("duplicate elements");
        G.gens_ = G.elems_;  // the set generates itself
        G.build_tables();
        return G;
    }

    size_t size() const { return elems_.size(); }
    const GroupElem& elem(size_t i) const { return elems_[i]; }
    const std::vector<GroupElem>& elements() const { return elems_; }
    const std::vector<GroupElem>& generators() const { return gens_; }
    const Gf8* gf8() const { return gf_; }

    bool contains(const GroupElem& e) const { return index_.count(e) != 0; }
    uint16_t index_of(const GroupElem& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) throw std::invalid_argument("element not in group");
        return it->second;
    }

    uint16_t mul(uint16_t i, uint16_t j) const { return mul_[(size_t)i * elems_.size() + j]; }
    uint16_t inv(uint16_t i) const { return inv_[i]; }
    uint16_t conj(uint16_t g, uint16_t x) const { return mul(mul(g, x), inv(g)); }

    int order_of(uint16_t i) const {
        uint16_t x = i;
        int n = 1;
        while (x != 0) {
            x = mul(x, i);
            ++n;
        }
        return n;
    }

    const std::vector<std::vector<uint16_t>>& classes() const {
        std::call_once(caches_->flag, [this] { compute_classes(); });
        return caches_->classes;
    }
    uint16_t class_of(uint16_t i) const {
        classes();
        return caches_->class_of[i];
    }

    // true if every element of H lies in *this
    bool has_subgroup(const FiniteGroup& H) const {
        for (const auto& e : H.elements())
            if (!contains(e)) return false;
        return true;
    }

    // sorted parent indices of H's elements
    std::vector<uint16_t> subgroup_indices(const FiniteGroup& H) const {
        std::vector<uint16_t> idx;
        idx.reserve(H.size());
        for (const auto& e : H.elements()) idx.push_back(index_of(e));
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    struct Caches {
        std::once_flag flag;
        std::vector<std::vector<uint16_t>> classes;
        std::vector<uint16_t> class_of;
    };

    void build_tables() {
        size_t n = elems_.size();
        mul_.assign(n * n, 0);
        inv_.assign(n, 0);
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                GroupElem p = product(elems_[i], elems_[j], gf_);
                auto it = index_.find(p);
                if (it == index_.end()) throw std::invalid_argument("element set not closed");
                mul_[i * n + j] = it->second;
                if (it->second == 0) inv_[i] = (uint16_t)j;
            }
        }
    }

    void compute_classes() const {
        size_t n = elems_.size();
        caches_->class_of.assign(n, 0xffff);
        for (uint16_t i = 0; i < n; ++i) {
            if (caches_->class_of[i] != 0xffff) continue;
            uint16_t cid = (uint16_t)caches_->classes.size();
            std::vector<uint16_t> cls;
            for (uint16_t g = 0; g < n; ++g) {
                uint16_t y = conj(g, i);
                if (caches_->class_of[y] == 0xffff) {
                    caches_->class_of[y] = cid;
                    cls.push_back(y);
                }
            }
            std::sort(cls.begin(), cls.end());
            caches_->classes.push_back(std::move(cls));
        }
    }

    std::vector<GroupElem> elems_;
    std::map<GroupElem, uint16_t> index_;
    std::vector<GroupElem> gens_;
    const Gf8* gf_ = nullptr;
    std::vector<uint16_t> mul_;
    std::vector<uint16_t> inv_;
    mutable std::shared_ptr<Caches> caches_ = std::make_shared<Caches>();
};

inline FiniteGroup generate_closure(const std::vector<GroupElem>& gens, const Gf8* gf = nullptr) {
    return FiniteGroup::generate_closure(gens, gf);
}

// g H g^-1 as a subgroup of G, elements in G-enumeration order
inline FiniteGroup conjugate_subgroup(const FiniteGroup& G, const FiniteGroup& H,
                                      const GroupElem& g) {
    uint16_t gi = G.index_of(g);
    std::vector<uint16_t> img;
    img.reserve(H.size());
    for (const auto& h : H.elements()) img.push_back(G.conj(gi, G.index_of(h)));
    std::sort(img.begin(), img.end());
    std::vector<GroupElem> elems;
    elems.reserve(img.size());
    for (uint16_t i : img) elems.push_back(G.elem(i));
    return FiniteGroup::from_elements(std::move(elems), G.gf8());
}

// Full conjugation orbit of H in G, deduplicated by element-set equality.
// H itself comes first (the identity is scanned first).
inline std::vector<FiniteGroup> all_conjugates(const FiniteGroup& G, const FiniteGroup& H) {
    std::vector<uint16_t> hidx;
    for (const auto& h : H.elements()) hidx.push_back(G.index_of(h));
    std::set<std::vector<uint16_t>> seen;
    std::vector<FiniteGroup> orbit;
    for (uint16_t g = 0; g < G.size(); ++g) {
        std::vector<uint16_t> img;
        img.reserve(hidx.size());
        for (uint16_t h : hidx) img.push_back(G.conj(g, h));
        std::sort(img.begin(), img.end());
        if (!seen.insert(img).second) continue;
        std::vector<GroupElem> elems;
        for (uint16_t i : img) elems.push_back(G.elem(i));
        orbit.push_back(FiniteGroup::from_elements(std::move(elems), G.gf8()));
    }
    return orbit;
}

// first g in enumeration order with g H1 g^-1 = H2, if any
inline std::optional<GroupElem> find_conjugator(const FiniteGroup& G, const FiniteGroup& H1,
                                                const FiniteGroup& H2) {
    if (H1.size() != H2.size()) return std::nullopt;
    std::vector<uint16_t> h1;
    for (const auto& h : H1.elements()) h1.push_back(G.index_of(h));
    std::vector<uint16_t> target = G.subgroup_indices(H2);
    for (uint16_t g = 0; g < G.size(); ++g) {
        std::vector<uint16_t> img;
        img.reserve(h1.size());
        for (uint16_t h : h1) img.push_back(G.conj(g, h));
        std::sort(img.begin(), img.end());
        if (img == target) return G.elem(g);
    }
    return std::nullopt;
}

// commutator closure [H, H]
inline FiniteGroup derived_subgroup(const FiniteGroup& H) {
    std::set<uint16_t> comm;
    for (uint16_t a = 0; a < H.size(); ++a)
        for (uint16_t b = 0; b < H.size(); ++b)
            comm.insert(H.mul(H.mul(a, b), H.mul(H.inv(a), H.inv(b))));
    std::vector<GroupElem> gens;
    for (uint16_t i : comm) gens.push_back(H.elem(i));
    return FiniteGroup::generate_closure(gens, H.gf8());
}

// H / [H,H] as an explicit group of cosets with the projection map
struct Abelianization {
    std::vector<std::vector<uint16_t>> cosets;  // H-indices, sorted; coset 0 = [H,H]
    std::vector<uint16_t> coset_of;             // H-index -> coset id
    std::vector<std::vector<uint16_t>> mul;     // coset multiplication table

    size_t size() const { return cosets.size(); }
};

inline Abelianization abelianization(const FiniteGroup& H) {
    FiniteGroup D = derived_subgroup(H);
    std::vector<uint16_t> didx = H.subgroup_indices(D);
    Abelianization A;
    A.coset_of.assign(H.size(), 0xffff);
    for (uint16_t i = 0; i < H.size(); ++i) {
        if (A.coset_of[i] != 0xffff) continue;
        uint16_t cid = (uint16_t)A.cosets.size();
        std::vector<uint16_t> coset;
        for (uint16_t d : didx) {
            uint16_t x = H.mul(i, d);
            A.coset_of[x] = cid;
            coset.push_back(x);
        }
        std::sort(coset.begin(), coset.end());
        A.cosets.push_back(std::move(coset));
    }
    size_t n = A.cosets.size();
    A.mul.assign(n, std::vector<uint16_t>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            A.mul[i][j] = A.coset_of[H.mul(A.cosets[i][0], A.cosets[j][0])];
    // well-definedness of the table is implied by normality of [H,H]
    return A;
}

inline FiniteGroup intersect(const FiniteGroup& H1, const FiniteGroup& H2) {
    std::vector<GroupElem> common;
    for (const auto& e : H1.elements())
        if (H2.contains(e)) common.push_back(e);
    return FiniteGroup::from_elements(std::move(common), H1.gf8());
}

}  // namespace gring
