#pragma once

#include "gring/catalog.hpp"
#include "gring/class_function.hpp"

namespace gring {

// The printed character tables of the three groups, their corrected
// variants, and the derived constants. "Corrected" differs from "printed"
// only where the printed rows cannot be a character table (duplicate rows,
// orthogonality failures); every departure is reported, never silent.

inline Cyc omega7() {  // (-1+sqrt(-7))/2
    return cyc_make(7, {{1, rat(1)}, {2, rat(1)}, {4, rat(1)}});
}
inline Cyc omega7_bar() { return omega7().conj(); }
inline Cyc omega9(long twist = 1) {  // -(z9^4 + z9^5), real
    return galois(cyc_make(9, {{4, rat(-1)}, {5, rat(-1)}}), twist);
}
// Table 2 overloads the name omega_7 for z7^2 + z7^5; distinct constant here
inline Cyc omega7_real(long twist = 1) {
    return galois(cyc_make(7, {{2, rat(1)}, {5, rat(1)}}), twist);
}
inline Cyc omega5() {  // (1+sqrt(5))/2
    return cyc_make(5, {{2, rat(-1)}, {3, rat(-1)}});
}
inline Cyc omega5_bar() { return galois(omega5(), 2); }

struct CharTable {
    const FiniteGroup* G = nullptr;
    std::vector<std::string> row_names;
    std::vector<ClassFunction> rows;                  // corrected
    std::vector<std::vector<Cyc>> printed;            // per row, in paper column order
    std::vector<std::string> notes;                   // corrections applied, human-readable
    std::vector<std::tuple<size_t, size_t>> changed;  // (row, column) entries that differ
};

namespace detail {

inline ClassFunction row_to_class_function(const catalog::GroupBundle& b,
                                           const std::vector<Cyc>& row) {
    ClassFunction f;
    f.group = &b.G;
    int k = 1;
    for (const auto& v : row) k = std::lcm(k, v.effective_conductor());
    f.k = k;
    f.values.assign(b.G.classes().size(), Cyc(rat(0)));
    for (size_t col = 0; col < row.size(); ++col) f.values[b.class_rep_class[col]] = row[col];
    return f;
}

}  // namespace detail

inline CharTable table_of(const catalog::GroupBundle& b) {
    auto C = [](long v) { return Cyc(rat(v)); };
    std::vector<std::vector<Cyc>> printed, corrected;
    std::vector<std::string> names;
    if (b.name == "psl27") {
        printed = {
            {C(1), C(1), C(1), C(1), C(1), C(1)},
            {C(3), C(-1), C(1), C(0), omega7(), omega7_bar()},
            {C(3), C(-1), C(1), C(0), omega7_bar(), omega7()},
            {C(6), C(2), C(0), C(0), C(-1), C(-1)},
            {C(7), C(-1), C(-1), C(1), C(0), C(0)},
            {C(8), C(0), C(0), C(-1), C(1), C(1)},
        };
        corrected = printed;
    } else if (b.name == "psl28") {
        printed = {
            {C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
            {C(7), C(-1), C(-2), C(0), C(0), C(0), C(1), C(1), C(1)},
            {C(7), C(-1), C(-1), C(0), C(0), C(0), omega9(1), omega9(4), omega9(2)},
            {C(7), C(-1), C(-1), C(0), C(0), C(0), omega9(4), omega9(2), omega9(1)},
            {C(7), C(-1), C(-1), C(0), C(0), C(0), omega9(4), omega9(2), omega9(1)},
            {C(8), C(0), C(-1), C(1), C(1), C(1), C(-1), C(-1), C(-1)},
            {C(9), C(1), C(0), omega7_real(1), omega7_real(3), omega7_real(2), C(0), C(0), C(0)},
            {C(9), C(1), C(0), omega7_real(2), omega7_real(1), omega7_real(3), C(0), C(0), C(0)},
            {C(9), C(1), C(0), omega7_real(3), omega7_real(2), omega7_real(1), C(0), C(0), C(0)},
        };
        corrected = printed;
        // chi_3..chi_5 must take +1 on the order-3 class or they are not
        // orthogonal to chi_1 and chi_2
        for (size_t r : {2, 3, 4}) corrected[r][2] = C(1);
        // chi_5 as printed duplicates chi_4; the completion is the remaining
        // Galois-conjugate pattern
        corrected[4][6] = omega9(2);
        corrected[4][7] = omega9(1);
        corrected[4][8] = omega9(4);
    } else if (b.name == "a6") {
        printed = {
            {C(1), C(1), C(1), C(1), C(1), C(1), C(1)},
            {C(5), C(-1), C(1), C(0), C(0), C(2), C(-1)},
            {C(5), C(2), C(1), C(0), C(0), C(-1), C(-1)},
            {C(8), C(-1), C(0), omega5_bar(), omega5(), C(-1), C(0)},
            {C(8), C(-1), C(0), omega5(), omega5_bar(), C(-1), C(0)},
            {C(9), C(1), C(0), C(-1), C(-1), C(1), C(0)},
            {C(10), C(1), C(-2), C(0), C(0), C(1), C(0)},
        };
        corrected = printed;
        // the printed chi_6 row has the c2/c3 and c6/c7 value pairs swapped;
        // as printed it is not orthogonal to chi_1
        corrected[5] = {C(9), C(0), C(1), C(-1), C(-1), C(0), C(1)};
    } else {
        throw std::invalid_argument("no table for group " + b.name);
    }
    CharTable t;
    t.G = &b.G;
    t.printed = printed;
    for (size_t i = 0; i < corrected.size(); ++i) {
        t.row_names.push_back("chi" + std::to_string(i + 1));
        t.rows.push_back(detail::row_to_class_function(b, corrected[i]));
        for (size_t j = 0; j < corrected[i].size(); ++j)
            if (!(corrected[i][j] == printed[i][j])) t.changed.push_back({i, j});
    }
    for (auto [r, c] : t.changed)
        t.notes.push_back("row chi" + std::to_string(r + 1) + ", column c" + std::to_string(c + 1) +
                          ": printed " + t.printed[r][c].to_string() + " replaced by " +
                          t.rows[r].values[b.class_rep_class[c]].to_string());
    return t;
}

}  // namespace gring
