#pragma once

// Example diagrams: the lens spaces L(p,1).
//
// The diagram is a chain of p true vertices: the first carries a curl on its
// left pair of ports, the last a curl on its right pair, and consecutive
// vertices are joined by a straight strand and a feedback strand. All
// feedback arcs are nested on the right. For even p the chain admits two
// spin structures; the second one is reached by re-routing the final curl
// through a self-crossing, which flips its winding parity.

#include <set>
#include <string>
#include <utility>

#include "spinsum/morse.hpp"
#include "spinsum/ograph.hpp"

namespace spinsum {

namespace detail {

// A self-curl on the upward strand at tape position q (clockwise loop).
inline void append_curl(std::vector<Event>& ev, int q) {
    ev.push_back(cup(q + 1, -1));
    ev.push_back(cross(q));
    ev.push_back(cap(q + 1, -1));
}

}  // namespace detail

// Standard planar diagram of L(p,1). With `other_spin_structure` the final
// curl edge picks up a self-crossing, realizing the second spin structure
// (even p only).
inline MorseDiagram lens_diagram(int p, bool other_spin_structure = false) {
    if (p < 1) throw Error(ErrorKind::Usage, "lens diagram needs p >= 1");
    if (other_spin_structure && p % 2 != 0)
        throw Error(ErrorKind::Usage,
                    "L(p,1) with odd p has a unique spin structure");
    MorseDiagram d;
    d.name = "L(" + std::to_string(p) + ",1)" + (other_spin_structure ? "_s1" : "_s2");
    if (p % 2 != 0) d.name = "L(" + std::to_string(p) + ",1)";
    auto& ev = d.events;
    ev.push_back(cup(0, -1));
    ev.push_back(cup(1, -1));
    ev.push_back(vertex(0, +1));
    for (int i = 1; i < p; ++i) {
        ev.push_back(cup(i + 1, -1));
        ev.push_back(vertex(i, +1));
    }
    if (other_spin_structure) detail::append_curl(ev, p);
    for (int j = p; j >= 1; --j) ev.push_back(cap(j, -1));
    ev.push_back(cap(0, -1));
    return d;
}

}  // namespace spinsum
