#pragma once

// Spin condition S.
//
// Replacing each vertex and edge of the diagram with parallel circuits gives
// the closed circuit family E(P); combinatorially the circuits are exactly
// the edge classes of the branched triangulation, each circuit alternating
// between arcs (an edge of the diagram carries three arcs, ordered by the
// branch order of its face) and vertex passages (one per tetrahedron edge).
//
// Solid dots are placed by a fixed local rule, transcribed as a constant
// table and validated by the lens-space self-checks:
//   - the middle arc (branch slot 2) of every edge carries two solid dots;
//   - an edge whose endpoint vertices have different signs adds a twist:
//     two more solid dots on its first (branch slot 1) arc;
//   - vertex passages carry no dots.
//
// Condition S, per circuit with m > 0 solid dots (m is always even):
//     sum of the Z_2 edge weights along the circuit's loop == m/2 + 1 (mod 2).

#include <array>
#include <string>
#include <vector>

#include "spinsum/ograph.hpp"
#include "spinsum/triangulation.hpp"

namespace spinsum {

struct Circuit {
    int edge_class = -1;
    std::vector<int> edge_loop;  // diagram edge ids e_1..e_p (with repeats)
    int solid_dots = 0;
    int weight_sum = 0;  // sum of weights along edge_loop, mod 2
};

struct SpinData {
    std::vector<int> winding;  // per diagram edge
    std::vector<int> weights;  // winding mod 2
    std::vector<Circuit> circuits;
};

struct SpinViolation {
    int edge_class = -1;
    int weight_sum = 0;
    int solid_dots = 0;
};

struct SpinReport {
    bool ok = true;
    std::vector<SpinViolation> failures;
    std::vector<int> malformed;  // circuits with odd dot count
};

namespace detail {

constexpr std::array<int, 3> kArcDots = {0, 2, 0};   // per branch slot
constexpr std::array<int, 2> kTwistDots = {2, 0};    // slots 1,2 of twisted edges

}  // namespace detail

// Circuits of E(P) with dot counts and diagram-edge loops.
inline SpinData circuits_and_dots(const OGraph& g, const BranchedTriangulation& T) {
    SpinData out;
    out.winding = winding_numbers(g);
    for (const auto& e : g.edges) out.weights.push_back(e.weight());

    const auto& gls = T.gluings();
    // arc ends: (gluing, slot, side) <-> passage (tet, tet-edge)
    // face (tet,f) -> (gluing, side)
    std::vector<std::array<std::pair<int, int>, 4>> face_loc(T.tetrahedra());
    for (int gi = 0; gi < static_cast<int>(gls.size()); ++gi) {
        face_loc[gls[gi].a.tet][gls[gi].a.face] = {gi, 0};
        face_loc[gls[gi].b.tet][gls[gi].b.face] = {gi, 1};
    }
    struct ArcEnd {
        int gluing, slot, side;
    };
    // passage (tet, eps) -> its two arc ends
    std::vector<std::array<ArcEnd, 2>> passage_ends(T.tetrahedra() * 6);
    std::vector<int> passage_fill(T.tetrahedra() * 6, 0);
    for (int t = 0; t < T.tetrahedra(); ++t)
        for (int f = 0; f < 4; ++f) {
            auto [gi, side] = face_loc[t][f];
            const auto& triple = face_edge_triple(f);
            for (int s = 0; s < 3; ++s) {
                int eps = triple[s];
                int idx = t * 6 + eps;
                passage_ends[idx][passage_fill[idx]++] = ArcEnd{gi, s, side};
            }
        }

    std::vector<std::array<std::array<bool, 2>, 3>> arc_seen(gls.size());
    for (auto& a : arc_seen) a = {{{false, false}, {false, false}, {false, false}}};

    auto twisted = [&](int gi) {
        const auto& e = g.edges[gi];
        return g.vertex_signs[e.from.vertex] != g.vertex_signs[e.to.vertex];
    };

    for (int gi0 = 0; gi0 < static_cast<int>(gls.size()); ++gi0)
        for (int s0 = 0; s0 < 3; ++s0) {
            if (arc_seen[gi0][s0][0]) continue;
            Circuit c;
            c.edge_class = T.face_branch_order(gi0)[s0];
            int gi = gi0, s = s0, side = 0;
            // walk: arc (gi, s) from `side` to the other side, then through
            // the passage there to the adjacent arc, until back at the start
            do {
                arc_seen[gi][s][0] = arc_seen[gi][s][1] = true;
                c.edge_loop.push_back(gi);
                c.solid_dots += detail::kArcDots[s];
                if (twisted(gi) && s < 2) c.solid_dots += detail::kTwistDots[s];
                int far = 1 - side;
                const FaceRef& fr = (far == 0) ? gls[gi].a : gls[gi].b;
                int eps = face_edge_triple(fr.face)[s];
                const auto& ends = passage_ends[fr.tet * 6 + eps];
                ArcEnd nxt = (ends[0].gluing == gi && ends[0].slot == s && ends[0].side == far)
                                 ? ends[1]
                                 : ends[0];
                gi = nxt.gluing;
                s = nxt.slot;
                side = nxt.side;
            } while (!(gi == gi0 && s == s0 && side == 0));
            for (int e : c.edge_loop) c.weight_sum = (c.weight_sum + out.weights[e]) % 2;
            out.circuits.push_back(std::move(c));
        }
    return out;
}

// Condition S over all dotted circuits.
inline SpinReport check_spin_condition(const SpinData& s) {
    SpinReport rep;
    for (const auto& c : s.circuits) {
        if (c.solid_dots % 2 != 0) {
            rep.ok = false;
            rep.malformed.push_back(c.edge_class);
            continue;
        }
        if (c.solid_dots == 0) continue;
        if (c.weight_sum != (c.solid_dots / 2 + 1) % 2) {
            rep.ok = false;
            rep.failures.push_back({c.edge_class, c.weight_sum, c.solid_dots});
        }
    }
    return rep;
}

}  // namespace spinsum
