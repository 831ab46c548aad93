#pragma once

// Branched ideal triangulation built from a closed normal o-graph.
//
// Each true vertex becomes a tetrahedron with ordered vertices 0..3 and edges
// e_ij (i<j) oriented i->j. Faces are labelled by the opposite vertex. Each
// diagram edge glues the faces attached to its two endpoint ports, by the
// orientation-reversing map that preserves the order of the face vertices.
//
// The port->face tables (one per vertex sign) are the single figure-derived
// constant of the construction. They are validated by the structural checks
// on the bundled lens-space diagrams and by move invariance:
//
//     positive vertex:  NW->F3  NE->F1  SW->F0  SE->F2
//     negative vertex:  NW->F0  NE->F2  SW->F3  SE->F1
//
// (The negative table is the positive one with the roles of the top and
//  bottom ports exchanged.)

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "spinsum/error.hpp"
#include "spinsum/ograph.hpp"

namespace spinsum {

// Tetrahedron edge indices.
enum TetEdge : int { E01 = 0, E02 = 1, E03 = 2, E12 = 3, E13 = 4, E23 = 5 };

inline const char* tet_edge_name(int e) {
    static const char* names[6] = {"01", "02", "03", "12", "13", "23"};
    return names[e];
}

// Face vertex triples (ascending) and branch-ordered edge triples
// (a, b, c) with the admissibility relation phi(a) phi(b) = phi(c).
inline const std::array<int, 3>& face_vertices(int f) {
    static const std::array<std::array<int, 3>, 4> v = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    return v[f];
}

inline const std::array<int, 3>& face_edge_triple(int f) {
    static const std::array<std::array<int, 3>, 4> t = {{
        {E12, E23, E13},  // F0
        {E02, E23, E03},  // F1
        {E01, E13, E03},  // F2
        {E01, E12, E02},  // F3
    }};
    return t[f];
}

inline int tet_edge_of(int va, int vb) {
    if (va > vb) std::swap(va, vb);
    if (va == 0) return vb == 1 ? E01 : (vb == 2 ? E02 : E03);
    if (va == 1) return vb == 2 ? E12 : E13;
    return E23;
}

// port -> face, indexed by Port (NW, NE, SW, SE)
inline const std::array<int, 4>& port_face_table(int sign) {
    static const std::array<int, 4> plus = {3, 1, 0, 2};
    static const std::array<int, 4> minus = {0, 2, 3, 1};
    return sign > 0 ? plus : minus;
}

struct FaceRef {
    int tet = -1;
    int face = -1;  // 0..3
    friend bool operator==(const FaceRef&, const FaceRef&) = default;
};

struct Gluing {
    FaceRef a, b;  // a at the edge's out-port, b at its in-port
};

struct ClosednessReport {
    bool single_ideal_vertex = false;  // C2
    bool edge_count_ok = false;        // C3: edge classes == tetrahedra + 1
    int ideal_vertices = 0;
    int edge_classes = 0;
    bool ok() const { return single_ideal_vertex && edge_count_ok; }
};

class BranchedTriangulation {
public:
    // One tetrahedron per true vertex; one gluing per diagram edge, in the
    // diagram's edge order (so face class i corresponds to diagram edge i).
    explicit BranchedTriangulation(const OGraph& g) : signs_(g.vertex_signs) {
        const int t = static_cast<int>(signs_.size());
        if (t == 0)
            throw Error(ErrorKind::Validation, "not an o-graph: no true vertices");
        gluings_.reserve(g.edges.size());
        for (const auto& e : g.edges) {
            int fa = port_face_table(signs_[e.from.vertex])[e.from.port];
            int fb = port_face_table(signs_[e.to.vertex])[e.to.port];
            gluings_.push_back({FaceRef{e.from.vertex, fa}, FaceRef{e.to.vertex, fb}});
        }
        // union-find over the 6t edge copies; gluing maps slot i to slot i
        parent_.resize(6 * t);
        for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
        std::vector<int> cparent(4 * t);
        for (std::size_t i = 0; i < cparent.size(); ++i) cparent[i] = static_cast<int>(i);
        auto cfind = [&](int x) {
            while (cparent[x] != x) x = cparent[x] = cparent[cparent[x]];
            return x;
        };
        for (const auto& gl : gluings_) {
            if (gl.a == gl.b)
                throw Error(ErrorKind::Validation, "face glued to itself");
            const auto& va = face_vertices(gl.a.face);
            const auto& vb = face_vertices(gl.b.face);
            for (int s = 0; s < 3; ++s) {
                int ra = cfind(gl.a.tet * 4 + va[s]);
                int rb = cfind(gl.b.tet * 4 + vb[s]);
                if (ra != rb) cparent[std::max(ra, rb)] = std::min(ra, rb);
            }
            for (int s = 0; s < 2; ++s)
                for (int u = s + 1; u < 3; ++u) {
                    int ea = tet_edge_of(va[s], va[u]);
                    int eb = tet_edge_of(vb[s], vb[u]);
                    unite(gl.a.tet * 6 + ea, gl.b.tet * 6 + eb);
                }
        }
        // canonical class ids in order of smallest member
        std::map<int, int> rep_to_class;
        cls_.assign(6 * t, -1);
        for (int i = 0; i < 6 * t; ++i) {
            int r = find(i);
            auto it = rep_to_class.find(r);
            if (it == rep_to_class.end())
                it = rep_to_class.emplace(r, static_cast<int>(rep_to_class.size())).first;
            cls_[i] = it->second;
        }
        n_classes_ = static_cast<int>(rep_to_class.size());
        ideal_vertices_ = 0;
        {
            std::vector<char> seen(4 * t, 0);
            for (int i = 0; i < 4 * t; ++i) {
                int r = cfind(i);
                if (!seen[r]) {
                    seen[r] = 1;
                    ++ideal_vertices_;
                }
            }
        }
    }

    int tetrahedra() const { return static_cast<int>(signs_.size()); }
    int sign(int tet) const { return signs_[tet]; }
    int edge_class_count() const { return n_classes_; }
    int face_class_count() const { return static_cast<int>(gluings_.size()); }
    int ideal_vertex_count() const { return ideal_vertices_; }
    const std::vector<Gluing>& gluings() const { return gluings_; }

    // class of tetrahedron edge (tet, TetEdge)
    int edge_class(int tet, int e) const { return cls_[tet * 6 + e]; }

    // branch-ordered edge-class triple of a face class (by gluing index);
    // the relation reads phi(a) phi(b) phi(c)^{-1} = 1
    std::array<int, 3> face_branch_order(int face_class) const {
        const Gluing& gl = gluings_[face_class];
        const auto& ta = face_edge_triple(gl.a.face);
        std::array<int, 3> out;
        for (int s = 0; s < 3; ++s) out[s] = edge_class(gl.a.tet, ta[s]);
        // both sides must agree slot by slot (gluing preserves vertex order)
        const auto& tb = face_edge_triple(gl.b.face);
        for (int s = 0; s < 3; ++s)
            if (edge_class(gl.b.tet, tb[s]) != out[s])
                throw Error(ErrorKind::Validation,
                            "branching violation: face class slots disagree");
        return out;
    }

    ClosednessReport check_closedness() const {
        ClosednessReport r;
        r.ideal_vertices = ideal_vertices_;
        r.edge_classes = n_classes_;
        r.single_ideal_vertex = (ideal_vertices_ == 1);
        r.edge_count_ok = (n_classes_ == tetrahedra() + 1);
        return r;
    }

    // Stable text dump for golden tests.
    std::string debug_dump() const {
        std::ostringstream os;
        os << "tetrahedra " << tetrahedra() << "\n";
        for (int v = 0; v < tetrahedra(); ++v)
            os << "tet " << v << " sign " << (signs_[v] > 0 ? "+" : "-") << "\n";
        for (std::size_t i = 0; i < gluings_.size(); ++i) {
            const auto& gl = gluings_[i];
            os << "glue " << i << ": (" << gl.a.tet << ",F" << gl.a.face << ") <-> ("
               << gl.b.tet << ",F" << gl.b.face << ")\n";
        }
        os << "edge classes " << n_classes_ << "\n";
        for (int c = 0; c < n_classes_; ++c) {
            os << "class " << c << ":";
            for (int t = 0; t < tetrahedra(); ++t)
                for (int e = 0; e < 6; ++e)
                    if (edge_class(t, e) == c) os << " " << t << ".e" << tet_edge_name(e);
            os << "\n";
        }
        return os.str();
    }

private:
    int find(int x) const {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra != rb) parent_[std::max(ra, rb)] = std::min(ra, rb);
    }

    std::vector<int> signs_;
    std::vector<Gluing> gluings_;
    mutable std::vector<int> parent_;
    std::vector<int> cls_;
    int n_classes_ = 0;
    int ideal_vertices_ = 0;
};

inline BranchedTriangulation build_triangulation(const OGraph& g) {
    return BranchedTriangulation(g);
}

}  // namespace spinsum
