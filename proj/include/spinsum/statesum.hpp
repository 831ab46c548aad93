#pragma once

// Admissible colorings and the state sum
//     Z(M,s) = sum_phi theta(P;phi) W(T;phi).
//
// W multiplies alpha(g,h,k)^{sign} over tetrahedra, where (g,h,k) are the
// colors of the edges e01, e12, e23 picked out by the branching. theta
// multiplies (-1)^{omega(a1,a2) omega(b1,b2)} over fake crossings, where
// (a1,a2) are the colors of the first two branch-ordered edges of the faces
// the two strands carry.

#include <algorithm>
#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinsum/cocycle.hpp"
#include "spinsum/ograph.hpp"
#include "spinsum/spin.hpp"
#include "spinsum/triangulation.hpp"

namespace spinsum {

using Coloring = std::vector<int>;  // edge class -> group element

// All admissible colorings in lexicographic order of the class assignment.
// Backtracking with face-relation propagation: a face with two known edges
// determines the third.
inline std::vector<Coloring> enumerate_admissible(const BranchedTriangulation& T,
                                                  const FiniteGroup& G) {
    const int n = T.edge_class_count();
    std::vector<std::array<int, 3>> rels;
    rels.reserve(T.face_class_count());
    for (int f = 0; f < T.face_class_count(); ++f) rels.push_back(T.face_branch_order(f));

    std::vector<std::vector<int>> rels_of_class(n);
    for (int r = 0; r < static_cast<int>(rels.size()); ++r)
        for (int s = 0; s < 3; ++s) rels_of_class[rels[r][s]].push_back(r);

    std::vector<int> col(n, -1);
    std::vector<Coloring> out;

    // propagate forced values; returns the trail of classes set, or nullopt on conflict
    auto propagate = [&](std::vector<int>& trail) -> bool {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& rel : rels) {
                int a = col[rel[0]], b = col[rel[1]], c = col[rel[2]];
                int known = (a >= 0) + (b >= 0) + (c >= 0);
                if (known == 3) {
                    if (G.mul(a, b) != c) return false;
                } else if (known == 2) {
                    int cls, val;
                    if (a < 0) { cls = rel[0]; val = G.mul(c, G.inv(b)); }
                    else if (b < 0) { cls = rel[1]; val = G.mul(G.inv(a), c); }
                    else { cls = rel[2]; val = G.mul(a, b); }
                    col[cls] = val;
                    trail.push_back(cls);
                    changed = true;
                }
            }
        }
        return true;
    };

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;

    std::function<void()> dfs = [&]() {
        int cls = -1;
        for (int i = 0; i < n; ++i)
            if (col[i] < 0) { cls = i; break; }
        if (cls < 0) {
            out.push_back(col);
            return;
        }
        for (int g = 0; g < G.order(); ++g) {
            col[cls] = g;
            std::vector<int> trail;
            if (propagate(trail)) dfs();
            for (int c : trail) col[c] = -1;
            col[cls] = -1;
        }
    };
    dfs();
    std::sort(out.begin(), out.end());
    return out;
}

// Product over tetrahedra of alpha(g,h,k)^{sign}.
inline Scalar weight_W(const BranchedTriangulation& T, const Coloring& phi,
                       const SuperCocycle& c) {
    Scalar w = Scalar::one();
    for (int t = 0; t < T.tetrahedra(); ++t) {
        int g = phi[T.edge_class(t, E01)];
        int h = phi[T.edge_class(t, E12)];
        int k = phi[T.edge_class(t, E23)];
        const Scalar& a = c.alpha(g, h, k);
        w = w * (T.sign(t) > 0 ? a : a.inverse());
    }
    return w;
}

// Product over fake crossings of (-1)^{omega(a1,a2) omega(b1,b2)}; returns +-1.
inline int theta_sign(const OGraph& g, const BranchedTriangulation& T, const Coloring& phi,
                      const SuperCocycle& c) {
    int exp = 0;
    for (const auto& x : g.crossings) {
        auto fa = T.face_branch_order(x.edge_a);
        auto fb = T.face_branch_order(x.edge_b);
        exp += c.omega(phi[fa[0]], phi[fa[1]]) * c.omega(phi[fb[0]], phi[fb[1]]);
    }
    return exp % 2 == 0 ? +1 : -1;
}

inline Scalar theta(const OGraph& g, const BranchedTriangulation& T, const Coloring& phi,
                    const SuperCocycle& c) {
    return theta_sign(g, T, phi, c) > 0 ? Scalar::one()
                                        : Scalar::exact(CycNumber::integer(1, -1));
}

struct StateSumTerm {
    Coloring coloring;
    int theta = +1;
    Scalar w;
};

struct StateSumResult {
    Scalar value;
    std::complex<double> float_value{0.0, 0.0};
    long coloring_count = 0;
    std::optional<std::vector<StateSumTerm>> terms;
};

struct ValidationIssue {
    std::string condition;  // "parse", "N2", "C1", "C2", "C3", "S", ...
    std::string detail;
};

// Full validation pipeline; returns the issues found (empty == valid).
struct ValidatedDiagram {
    OGraph graph;
    std::optional<BranchedTriangulation> tri;
    std::optional<SpinData> spin;
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

inline ValidatedDiagram validate_diagram(const MorseDiagram& d) {
    ValidatedDiagram v{};
    try {
        v.graph = extract_ograph(d);
    } catch (const Error& e) {
        v.issues.push_back({"well-formedness", e.what()});
        return v;
    }
    if (v.graph.circle_components > 0)
        v.issues.push_back({"well-formedness",
                            "diagram has closed curves with no true vertex"});
    if (v.graph.vertex_signs.empty()) {
        v.issues.push_back({"C1", "not an o-graph: no true vertices"});
        return v;
    }
    if (!check_C1(v.graph)) {
        v.issues.push_back({"C1", "through-strand closure is not a single circuit"});
        return v;
    }
    try {
        v.tri.emplace(build_triangulation(v.graph));
    } catch (const Error& e) {
        v.issues.push_back({"branching", e.what()});
        return v;
    }
    auto rep = v.tri->check_closedness();
    if (!rep.single_ideal_vertex)
        v.issues.push_back({"C2", "ideal triangulation has " +
                                      std::to_string(rep.ideal_vertices) + " vertices"});
    if (!rep.edge_count_ok)
        v.issues.push_back({"C3", "edge classes = " + std::to_string(rep.edge_classes) +
                                      ", tetrahedra + 1 = " +
                                      std::to_string(v.tri->tetrahedra() + 1)});
    if (!rep.ok()) return v;
    v.spin = circuits_and_dots(v.graph, *v.tri);
    auto srep = check_spin_condition(*v.spin);
    if (!srep.ok) {
        for (int c : srep.malformed)
            v.issues.push_back({"S", "circuit " + std::to_string(c) + " has an odd dot count"});
        for (const auto& f : srep.failures)
            v.issues.push_back({"S", "circuit " + std::to_string(f.edge_class) +
                                         ": weight sum " + std::to_string(f.weight_sum) +
                                         " != m/2 + 1 with m = " + std::to_string(f.solid_dots)});
    }
    // expected-weight assertions from the file
    for (auto [eid, w] : d.expected_weights) {
        if (eid < 0 || eid >= static_cast<int>(v.graph.edges.size()))
            v.issues.push_back({"expect_weight", "edge id " + std::to_string(eid) + " out of range"});
        else if (v.graph.edges[eid].weight() != w)
            v.issues.push_back({"expect_weight",
                                "edge " + std::to_string(eid) + " has weight " +
                                    std::to_string(v.graph.edges[eid].weight()) + ", expected " +
                                    std::to_string(w)});
    }
    return v;
}

// The invariant. Requires a fully valid diagram.
inline StateSumResult invariant_Z(const MorseDiagram& d, const SuperCocycle& c,
                                  bool keep_terms = false) {
    ValidatedDiagram v = validate_diagram(d);
    if (!v.ok())
        throw Error(ErrorKind::Validation,
                    "diagram fails " + v.issues.front().condition + ": " + v.issues.front().detail);
    StateSumResult r;
    r.value = Scalar::zero();
    if (keep_terms) r.terms.emplace();
    auto cols = enumerate_admissible(*v.tri, c.group());
    r.coloring_count = static_cast<long>(cols.size());
    for (const auto& phi : cols) {
        int th = theta_sign(v.graph, *v.tri, phi, c);
        Scalar w = weight_W(*v.tri, phi, c);
        Scalar term = (th > 0) ? w : w * Scalar::exact(CycNumber::integer(1, -1));
        r.value = r.value + term;
        if (keep_terms) r.terms->push_back({phi, th, std::move(w)});
    }
    r.float_value = r.value.to_complex();
    return r;
}

// Closed forms for L(2,1): the two spin structures evaluate to
//   s1: sum over g^2 = 1 of (-1)^{omega(g,g)+omega(g,1)} alpha(g,1,g) alpha(g,g,g)
//   s2: sum over g^2 = 1 of                               alpha(g,1,g) alpha(g,g,g)
// evaluated directly from the cocycle, independent of any diagram.
inline std::pair<Scalar, Scalar> lens_formula_eval(const SuperCocycle& c) {
    const FiniteGroup& G = c.group();
    Scalar s1 = Scalar::zero(), s2 = Scalar::zero();
    const int e = G.identity();
    for (int g = 0; g < G.order(); ++g) {
        if (G.mul(g, g) != e) continue;
        Scalar w = c.alpha(g, e, g) * c.alpha(g, g, g);
        int sgn = (c.omega(g, g) + c.omega(g, e)) % 2;
        s2 = s2 + w;
        s1 = s1 + (sgn ? w * Scalar::exact(CycNumber::integer(1, -1)) : w);
    }
    return {s1, s2};
}

}  // namespace spinsum
