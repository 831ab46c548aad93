#pragma once

// Finite groups as multiplication tables over element indices 0..n-1.

#include <optional>
#include <string>
#include <vector>

#include "spinsum/error.hpp"

namespace spinsum {

class FiniteGroup {
public:
    // Validates all group axioms; throws Error(Validation) naming the first
    // violated axiom.
    explicit FiniteGroup(std::vector<std::vector<int>> table,
                         std::vector<std::string> element_names = {})
        : table_(std::move(table)), names_(std::move(element_names)) {
        const int n = static_cast<int>(table_.size());
        if (n == 0) throw Error(ErrorKind::Validation, "group of order zero");
        for (const auto& row : table_) {
            if (static_cast<int>(row.size()) != n)
                throw Error(ErrorKind::Validation, "multiplication table is not square");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw Error(ErrorKind::Validation,
                                "table entry " + std::to_string(v) + " out of range");
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw Error(ErrorKind::Validation,
                                    "associativity fails at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
        identity_ = -1;
        for (int e = 0; e < n; ++e) {
            bool ok = true;
            for (int g = 0; g < n; ++g)
                if (table_[e][g] != g || table_[g][e] != g) { ok = false; break; }
            if (ok) { identity_ = e; break; }
        }
        if (identity_ < 0) throw Error(ErrorKind::Validation, "no identity element");
        inverse_.assign(n, -1);
        for (int g = 0; g < n; ++g) {
            for (int h = 0; h < n; ++h)
                if (table_[g][h] == identity_ && table_[h][g] == identity_) { inverse_[g] = h; break; }
            if (inverse_[g] < 0)
                throw Error(ErrorKind::Validation, "no inverse for element " + std::to_string(g));
        }
        if (names_.empty()) {
            names_.reserve(n);
            for (int g = 0; g < n; ++g) names_.push_back(std::to_string(g));
        } else if (static_cast<int>(names_.size()) != n) {
            throw Error(ErrorKind::Validation, "element name list has wrong length");
        }
    }

    int order() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    const std::string& name(int g) const { return names_[g]; }

    int power(int g, long e) const {
        int x = identity_;
        if (e < 0) { g = inv(g); e = -e; }
        for (long i = 0; i < e; ++i) x = mul(x, g);
        return x;
    }

    // number of solutions of g^p = 1
    int count_p_torsion(int p) const {
        int cnt = 0;
        for (int g = 0; g < order(); ++g)
            if (power(g, p) == identity_) ++cnt;
        return cnt;
    }

private:
    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::vector<int> inverse_;
    int identity_ = 0;
};

inline FiniteGroup make_cyclic_group(int n) {
    if (n < 1) throw Error(ErrorKind::Usage, "cyclic group order must be at least 1");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names;
    for (int a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    return FiniteGroup(std::move(t), std::move(names));
}

inline FiniteGroup make_group_from_table(std::vector<std::vector<int>> table,
                                         std::vector<std::string> names = {}) {
    return FiniteGroup(std::move(table), std::move(names));
}

// Symmetric group on three letters; handy in tests and as a non-abelian CLI
// builtin. Elements are the permutations of {0,1,2} in lexicographic order.
inline FiniteGroup make_s3() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
        for (int i = 0; i < 6; ++i)
            if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
        return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            int c[3];
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = index_of(c);
        }
    std::vector<std::string> names = {"e", "(12)", "(01)", "(012)", "(021)", "(02)"};
    return FiniteGroup(std::move(t), std::move(names));
}

}  // namespace spinsum
