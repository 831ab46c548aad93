#pragma once

// O-graph extraction from a Morse word: runs the tape, propagates strand
// orientations, accumulates windings at extrema, and assembles the oriented
// edges (maximal strand paths between true-vertex ports) and fake crossings.

#include <algorithm>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

#include "spinsum/error.hpp"
#include "spinsum/morse.hpp"

namespace spinsum {

// Ports of a true vertex. NW/NE are the outgoing (top) ends, SW/SE incoming.
enum Port : int { NW = 0, NE = 1, SW = 2, SE = 3 };

struct PortRef {
    int vertex = -1;
    Port port = NW;
    friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct OEdge {
    PortRef from;          // (vertex, NW|NE)
    PortRef to;            // (vertex, SW|SE)
    int winding = 0;       // sum of +-1/2 extremum contributions (an integer)
    int weight() const { return ((winding % 2) + 2) % 2; }
};

struct FakeCrossing {
    int edge_a = -1;  // edges passing through, by index into OGraph::edges
    int edge_b = -1;
};

struct OGraph {
    std::vector<int> vertex_signs;       // +1 / -1 per true vertex
    std::vector<OEdge> edges;            // deterministic first-traversal order
    std::vector<FakeCrossing> crossings;
    int circle_components = 0;           // vertex-free closed curves (invalid downstream)
    std::vector<int> circle_windings;    // their rotation numbers
};

namespace detail {

struct Strand {
    int half_winding = 0;
    std::optional<PortRef> start;
    std::optional<PortRef> end;
    std::vector<int> crossings;
    bool closed = false;
    bool dead = false;
};

}  // namespace detail

// Structural extraction; throws Error(Validation) on tape violations
// (position out of range, wrong orientations at an event, dangling strands).
inline OGraph extract_ograph(const MorseDiagram& d) {
    using detail::Strand;
    std::vector<std::unique_ptr<Strand>> arcs;
    // tape slot: (strand, end) where end 'head' means orientation points up
    struct Slot { Strand* s; bool head; };
    std::vector<Slot> tape;
    OGraph g;
    std::vector<std::pair<Strand*, Strand*>> raw_crossings;

    int ev_index = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::Validation,
                    msg + " at event " + std::to_string(ev_index + 1));
    };

    for (const Event& e : d.events) {
        const int p = e.pos;
        switch (e.kind) {
            case EventKind::Cup: {
                if (p < 0 || p > static_cast<int>(tape.size())) fail("cup position out of tape range");
                arcs.push_back(std::make_unique<Strand>());
                Strand* s = arcs.back().get();
                s->half_winding += (e.sense > 0) ? 1 : -1;
                Slot left{s, e.sense < 0}, right{s, e.sense > 0};
                tape.insert(tape.begin() + p, {left, right});
                break;
            }
            case EventKind::Cap: {
                if (p < 0 || p + 1 >= static_cast<int>(tape.size())) fail("cap position out of tape range");
                Slot a = tape[p], b = tape[p + 1];
                if (a.head == b.head) fail("cap requires one upward and one downward strand");
                tape.erase(tape.begin() + p, tape.begin() + p + 2);
                int half = a.head ? -1 : 1;  // up-strand on the left turns clockwise
                if (a.s == b.s) {
                    a.s->half_winding += half;
                    a.s->closed = true;
                    break;
                }
                Strand* src = a.head ? a.s : b.s;  // oriented into the cap
                Strand* dst = a.head ? b.s : a.s;  // oriented out of it
                src->half_winding += dst->half_winding + half;
                src->crossings.insert(src->crossings.end(), dst->crossings.begin(),
                                      dst->crossings.end());
                if (dst->end) src->end = dst->end;
                dst->dead = true;
                for (auto& slot : tape)
                    if (slot.s == dst) slot.s = src;
                for (auto& rc : raw_crossings) {
                    if (rc.first == dst) rc.first = src;
                    if (rc.second == dst) rc.second = src;
                }
                break;
            }
            case EventKind::Vertex: {
                if (p < 0 || p + 1 >= static_cast<int>(tape.size()))
                    fail("vertex position out of tape range");
                Slot a = tape[p], b = tape[p + 1];
                if (!a.head || !b.head)
                    fail("true vertex requires both strands oriented upward");
                int v = static_cast<int>(g.vertex_signs.size());
                g.vertex_signs.push_back(e.sense);
                a.s->end = PortRef{v, SW};
                b.s->end = PortRef{v, SE};
                arcs.push_back(std::make_unique<Strand>());
                arcs.back()->start = PortRef{v, NW};
                tape[p] = {arcs.back().get(), true};
                arcs.push_back(std::make_unique<Strand>());
                arcs.back()->start = PortRef{v, NE};
                tape[p + 1] = {arcs.back().get(), true};
                break;
            }
            case EventKind::Cross: {
                if (p < 0 || p + 1 >= static_cast<int>(tape.size()))
                    fail("cross position out of tape range");
                raw_crossings.emplace_back(tape[p].s, tape[p + 1].s);
                std::swap(tape[p], tape[p + 1]);
                break;
            }
        }
        ++ev_index;
    }
    if (!tape.empty())
        throw Error(ErrorKind::Validation,
                    "dangling strands at end of word: " + std::to_string(tape.size()));

    std::vector<Strand*> edge_of_arc(arcs.size(), nullptr);
    std::vector<int> edge_index;
    // assign edge ids in first-traversal (creation) order
    std::vector<std::pair<Strand*, int>> ids;
    for (auto& up : arcs) {
        Strand* s = up.get();
        if (s->dead) continue;
        if (s->closed) {
            ++g.circle_components;
            g.circle_windings.push_back(s->half_winding / 2);
            continue;
        }
        if (!s->start && !s->end) continue;
        if (!s->start || !s->end)
            throw Error(ErrorKind::Validation, "internal error: half-finished strand");
        if (s->half_winding % 2 != 0)
            throw Error(ErrorKind::Validation, "internal error: non-integer edge winding");
        ids.emplace_back(s, static_cast<int>(g.edges.size()));
        g.edges.push_back(OEdge{*s->start, *s->end, s->half_winding / 2});
    }
    auto id_of = [&](Strand* s) -> int {
        for (auto& [t, i] : ids)
            if (t == s) return i;
        return -1;
    };
    for (auto& [a, b] : raw_crossings) {
        int ia = id_of(a), ib = id_of(b);
        if (ia < 0 || ib < 0)
            throw Error(ErrorKind::Validation, "fake crossing on a closed circle component");
        g.crossings.push_back(FakeCrossing{ia, ib});
    }
    return g;
}

// Condition C1: removing the true vertices and joining the strands opposite
// at each vertex (SW<->NE, SE<->NW) must give a single oriented circuit.
inline bool check_C1(const OGraph& g) {
    if (g.vertex_signs.empty() || g.circle_components > 0) return false;
    const int n = static_cast<int>(g.edges.size());
    std::vector<int> start_at(g.vertex_signs.size() * 2, -1);  // (v, NW/NE) -> edge
    for (int i = 0; i < n; ++i)
        start_at[g.edges[i].from.vertex * 2 + (g.edges[i].from.port == NW ? 0 : 1)] = i;
    std::vector<int> next(n, -1);
    for (int i = 0; i < n; ++i) {
        const auto& to = g.edges[i].to;
        Port cont = (to.port == SW) ? NE : NW;
        next[i] = start_at[to.vertex * 2 + (cont == NW ? 0 : 1)];
        if (next[i] < 0) return false;
    }
    std::vector<char> seen(n, 0);
    int cycles = 0;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (int c = i; !seen[c]; c = next[c]) seen[c] = 1;
    }
    return cycles == 1;
}

// Per-edge winding numbers keyed by edge index (identity map over the
// extraction result; exposed as the named operation).
inline std::vector<int> winding_numbers(const OGraph& g) {
    std::vector<int> w;
    w.reserve(g.edges.size());
    for (const auto& e : g.edges) w.push_back(e.winding);
    return w;
}

}  // namespace spinsum
