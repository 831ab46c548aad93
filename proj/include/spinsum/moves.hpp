#pragma once

// Executable rewrites on Morse words: planar isotopy adjustments, the
// Reidemeister-type moves of planar spin diagrams, the framed R1 move, the
// R3-type slide across a true vertex, the branched 0-2 move, and the
// branched MP moves. Each move is a window rewrite; applying one
// re-validates the result (including C1-C3 and condition S for the
// triangulation-changing moves), so a site whose rewrite would break a
// condition is rejected rather than applied.
//
// MP variants, as window rewrites on three adjacent upward strands:
//   mp-a:  [vertex i +, vertex i+1 +]  <->  [vertex i+1 +, cross i, vertex i+1 +, vertex i -]
//   mp-b:  [vertex i -, vertex i+1 -]  <->  [vertex i+1 -, cross i, vertex i+1 -, vertex i +]
//   mp-c:  [vertex i +, vertex i+1 -]  <->
//          [vertex i +, cup i+1 ccw, cross i+1, vertex i +, vertex i+3 -, cap i+1]
// Two true vertices sharing one face trade for three true vertices and one
// fake crossing; the local scalar identity is the super 3-cocycle condition.

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinsum/morse.hpp"
#include "spinsum/statesum.hpp"

namespace spinsum {

enum class MoveId {
    IsotopyExchange,
    Snake,
    CupLegSwap,
    CapLegSwap,
    R2Fake,
    R1Framed,
    R3Slide,
    Branched02,
    BranchedMP,
};

struct MoveSite {
    MoveId move;
    bool forward = true;
    int index = 0;    // event index of the window (or insertion gap)
    int pos = 0;      // tape position parameter for insertions
    int variant = 0;
};

struct MoveDescriptor {
    MoveId id;
    const char* name;
    const char* figure;  // which family of the paper's calculus it realizes
    bool enabled;
    bool changes_triangulation;
};

inline const std::vector<MoveDescriptor>& move_registry() {
    static const std::vector<MoveDescriptor> reg = {
        {MoveId::IsotopyExchange, "isotopy-exchange", "planar isotopy", true, false},
        {MoveId::Snake, "snake", "planar isotopy (zigzag)", true, false},
        {MoveId::CupLegSwap, "cup-leg-swap", "R2-type", true, false},
        {MoveId::CapLegSwap, "cap-leg-swap", "R2-type", true, false},
        {MoveId::R2Fake, "r2-fake-pair", "R2-type", true, false},
        {MoveId::R1Framed, "r1-framed", "framed R1", true, false},
        {MoveId::R3Slide, "r3-slide", "R3-type", true, false},
        {MoveId::Branched02, "branched-0-2", "branched 0-2", true, true},
        {MoveId::BranchedMP, "branched-mp", "branched MP", true, true},
    };
    return reg;
}

inline const char* move_name(MoveId id) {
    for (const auto& m : move_registry())
        if (m.id == id) return m.name;
    return "?";
}

namespace detail {

inline std::pair<int, int> event_arity(const Event& e) {
    switch (e.kind) {
        case EventKind::Cup: return {0, 2};
        case EventKind::Cap: return {2, 0};
        default: return {2, 2};
    }
}

// Orientation profile of the tape at each event gap (true = points up);
// entry k is the tape before event k. Empty result: malformed word.
inline std::vector<std::vector<bool>> tape_profiles(const MorseDiagram& d) {
    std::vector<std::vector<bool>> out;
    std::vector<bool> tape;
    out.push_back(tape);
    for (const Event& e : d.events) {
        const int p = e.pos;
        const int n = static_cast<int>(tape.size());
        switch (e.kind) {
            case EventKind::Cup:
                if (p < 0 || p > n) return {};
                tape.insert(tape.begin() + p, {e.sense < 0, e.sense > 0});
                break;
            case EventKind::Cap:
                if (p < 0 || p + 1 >= n) return {};
                tape.erase(tape.begin() + p, tape.begin() + p + 2);
                break;
            case EventKind::Vertex:
                if (p < 0 || p + 1 >= n) return {};
                tape[p] = tape[p + 1] = true;
                break;
            case EventKind::Cross:
                if (p < 0 || p + 1 >= n) return {};
                std::swap(tape[p], tape[p + 1]);
                break;
        }
        out.push_back(tape);
    }
    return out;
}

inline MorseDiagram splice(const MorseDiagram& d, int at, int remove_count,
                           std::vector<Event> insert) {
    MorseDiagram out;
    out.name = d.name;
    out.events = d.events;
    out.events.erase(out.events.begin() + at, out.events.begin() + at + remove_count);
    out.events.insert(out.events.begin() + at, insert.begin(), insert.end());
    return out;
}

// Self-curl on the upward strand at tape position q.
inline std::vector<Event> curl_events(int q, bool positive) {
    if (positive) return {cup(q, +1), cross(q + 1), cap(q, +1)};
    return {cup(q + 1, -1), cross(q), cap(q + 1, -1)};
}

// kind/pos match; senses compared for cups and vertices only (cap senses are
// informational).
inline bool events_match(const Event& a, const Event& b) {
    if (a.kind != b.kind || a.pos != b.pos) return false;
    if (a.kind == EventKind::Cap || a.kind == EventKind::Cross) return true;
    return a.sense == b.sense;
}

inline bool window_matches(const MorseDiagram& d, int at, const std::vector<Event>& pat) {
    if (at + pat.size() > d.events.size()) return false;
    for (std::size_t j = 0; j < pat.size(); ++j)
        if (!events_match(d.events[at + j], pat[j])) return false;
    return true;
}

// MP window tables; `pos` offsets are relative to the window base i.
inline std::vector<Event> mp_lhs(int i, int variant) {
    switch (variant) {
        case 0: return {vertex(i, +1), vertex(i + 1, +1)};
        case 1: return {vertex(i, -1), vertex(i + 1, -1)};
        default: return {vertex(i, +1), vertex(i + 1, -1)};
    }
}

inline std::vector<Event> mp_rhs(int i, int variant) {
    switch (variant) {
        case 0: return {vertex(i + 1, +1), cross(i), vertex(i + 1, +1), vertex(i, -1)};
        case 1: return {vertex(i + 1, -1), cross(i), vertex(i + 1, -1), vertex(i, +1)};
        default:
            return {vertex(i, +1), cup(i + 1, +1), cross(i + 1),
                    vertex(i, +1), vertex(i + 3, -1), cap(i + 1, -1)};
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline std::vector<MoveSite> find_sites(const MorseDiagram& d, MoveId id) {
    std::vector<MoveSite> sites;
    const auto& ev = d.events;
    const int n = static_cast<int>(ev.size());
    auto profiles = detail::tape_profiles(d);
    if (profiles.empty()) return sites;

    switch (id) {
        case MoveId::IsotopyExchange: {
            for (int k = 0; k + 1 < n; ++k) {
                auto [ca, pa] = detail::event_arity(ev[k]);
                auto [cb, pb] = detail::event_arity(ev[k + 1]);
                int a = ev[k].pos, b = ev[k + 1].pos;
                if (b >= a + pa || b + cb <= a) sites.push_back({id, true, k, 0, 0});
            }
            break;
        }
        case MoveId::Snake: {
            for (int k = 0; k + 1 < n; ++k) {
                if (ev[k].kind != EventKind::Cup || ev[k + 1].kind != EventKind::Cap) continue;
                if (ev[k + 1].pos == ev[k].pos + 1 || ev[k + 1].pos == ev[k].pos - 1)
                    sites.push_back({id, false, k, 0, 0});
            }
            for (int gap = 0; gap <= n; ++gap)
                for (int q = 0; q < static_cast<int>(profiles[gap].size()); ++q)
                    for (int side = 0; side < 2; ++side)
                        sites.push_back({id, true, gap, q, side});
            break;
        }
        case MoveId::CupLegSwap: {
            for (int k = 0; k + 1 < n; ++k) {
                if (ev[k].kind != EventKind::Cup || ev[k + 1].kind != EventKind::Cross) continue;
                if (ev[k + 1].pos == ev[k].pos + 1) sites.push_back({id, true, k, 0, 0});
                else if (ev[k + 1].pos == ev[k].pos - 1) sites.push_back({id, false, k, 0, 0});
            }
            break;
        }
        case MoveId::CapLegSwap: {
            for (int k = 0; k + 1 < n; ++k) {
                if (ev[k].kind != EventKind::Cross || ev[k + 1].kind != EventKind::Cap) continue;
                if (ev[k].pos == ev[k + 1].pos - 1) sites.push_back({id, true, k, 0, 0});
                else if (ev[k].pos == ev[k + 1].pos + 1) sites.push_back({id, false, k, 0, 0});
            }
            break;
        }
        case MoveId::R2Fake: {
            for (int k = 0; k + 1 < n; ++k)
                if (ev[k].kind == EventKind::Cross && ev[k + 1].kind == EventKind::Cross &&
                    ev[k].pos == ev[k + 1].pos)
                    sites.push_back({id, false, k, 0, 0});
            for (int gap = 0; gap <= n; ++gap)
                for (int q = 0; q + 1 < static_cast<int>(profiles[gap].size()); ++q)
                    sites.push_back({id, true, gap, q, 0});
            break;
        }
        case MoveId::R1Framed: {
            for (int k = 0; k + 5 < n; ++k)
                for (int v = 0; v < 2; ++v) {
                    int q = (v == 1) ? ev[k].pos : ev[k].pos - 1;
                    if (q < 0 || ev[k].kind != EventKind::Cup) continue;
                    auto one = detail::curl_events(q, v == 1);
                    std::vector<Event> two = one;
                    two.insert(two.end(), one.begin(), one.end());
                    if (detail::window_matches(d, k, two)) sites.push_back({id, false, k, q, v});
                }
            for (int gap = 0; gap <= n; ++gap)
                for (int q = 0; q < static_cast<int>(profiles[gap].size()); ++q)
                    if (profiles[gap][q])
                        for (int v = 0; v < 2; ++v) sites.push_back({id, true, gap, q, v});
            break;
        }
        case MoveId::R3Slide: {
            for (int k = 0; k + 2 < n; ++k) {
                if (ev[k].kind == EventKind::Vertex && ev[k + 1].kind == EventKind::Cross &&
                    ev[k + 2].kind == EventKind::Cross) {
                    if (ev[k + 1].pos == ev[k].pos + 1 && ev[k + 2].pos == ev[k].pos)
                        sites.push_back({id, true, k, 0, 0});
                    if (ev[k + 1].pos == ev[k].pos - 1 && ev[k + 2].pos == ev[k].pos &&
                        ev[k].pos >= 1)
                        sites.push_back({id, true, k, 0, 1});
                }
                if (ev[k].kind == EventKind::Cross && ev[k + 1].kind == EventKind::Cross &&
                    ev[k + 2].kind == EventKind::Vertex) {
                    if (ev[k].pos == ev[k + 1].pos + 1 && ev[k + 2].pos == ev[k].pos)
                        sites.push_back({id, false, k, 0, 0});
                    if (ev[k].pos == ev[k + 1].pos - 1 && ev[k + 2].pos == ev[k].pos + 1)
                        sites.push_back({id, false, k, 0, 1});
                }
            }
            break;
        }
        case MoveId::Branched02: {
            for (int k = 0; k + 1 < n; ++k)
                if (ev[k].kind == EventKind::Vertex && ev[k + 1].kind == EventKind::Vertex &&
                    ev[k].pos == ev[k + 1].pos && ev[k].sense != ev[k + 1].sense)
                    sites.push_back({id, false, k, 0, ev[k].sense > 0 ? 0 : 1});
            for (int gap = 0; gap <= n; ++gap)
                for (int q = 0; q + 1 < static_cast<int>(profiles[gap].size()); ++q)
                    if (profiles[gap][q] && profiles[gap][q + 1])
                        for (int v = 0; v < 2; ++v) sites.push_back({id, true, gap, q, v});
            break;
        }
        case MoveId::BranchedMP: {
            for (int k = 0; k < n; ++k) {
                int i = ev[k].pos;
                if (i < 0) continue;
                for (int v = 0; v < 3; ++v) {
                    if (detail::window_matches(d, k, detail::mp_lhs(i, v)))
                        sites.push_back({id, true, k, i, v});
                    if (detail::window_matches(d, k, detail::mp_rhs(i, v)))
                        sites.push_back({id, false, k, i, v});
                }
            }
            break;
        }
    }
    return sites;
}

inline std::vector<MoveSite> find_all_sites(const MorseDiagram& d) {
    std::vector<MoveSite> all;
    for (const auto& md : move_registry()) {
        if (!md.enabled) continue;
        auto ms = find_sites(d, md.id);
        all.insert(all.end(), ms.begin(), ms.end());
    }
    return all;
}

// ---------------------------------------------------------------------------

inline MorseDiagram apply_move_unchecked(const MorseDiagram& d, const MoveSite& s) {
    const auto& ev = d.events;
    // a site must come from find_sites on this diagram; reject others
    {
        bool known = false;
        for (const auto& cand : find_sites(d, s.move))
            if (cand.forward == s.forward && cand.index == s.index && cand.pos == s.pos &&
                cand.variant == s.variant) {
                known = true;
                break;
            }
        if (!known)
            throw Error(ErrorKind::Usage, "move pattern does not match at the given site");
    }
    switch (s.move) {
        case MoveId::IsotopyExchange: {
            const Event& A = ev[s.index];
            const Event& B = ev[s.index + 1];
            auto [ca, pa] = detail::event_arity(A);
            auto [cb, pb] = detail::event_arity(B);
            Event A2 = A, B2 = B;
            if (B.pos >= A.pos + pa) B2.pos = B.pos - pa + ca;
            else A2.pos = A.pos - cb + pb;
            return detail::splice(d, s.index, 2, {B2, A2});
        }
        case MoveId::Snake: {
            if (!s.forward) return detail::splice(d, s.index, 2, {});
            auto profiles = detail::tape_profiles(d);
            bool up = profiles[s.index][s.pos];
            if (s.variant == 0)
                return detail::splice(d, s.index, 0,
                                      {cup(s.pos, up ? -1 : +1), cap(s.pos + 1, up ? +1 : -1)});
            return detail::splice(d, s.index, 0,
                                  {cup(s.pos + 1, up ? +1 : -1), cap(s.pos, up ? -1 : +1)});
        }
        case MoveId::CupLegSwap: {
            const Event& c = ev[s.index];
            int i = s.forward ? c.pos : c.pos - 1;
            return detail::splice(d, s.index, 2,
                                  s.forward ? std::vector<Event>{cup(i + 1, c.sense), cross(i)}
                                            : std::vector<Event>{cup(i, c.sense), cross(i + 1)});
        }
        case MoveId::CapLegSwap: {
            const Event& x = ev[s.index];
            const Event& c = ev[s.index + 1];
            // forward:  [cross i, cap i+1] -> [cross i+1, cap i]
            // backward: [cross i+1, cap i] -> [cross i, cap i+1]
            if (s.forward)
                return detail::splice(d, s.index, 2, {cross(x.pos + 1), cap(c.pos - 1, c.sense)});
            return detail::splice(d, s.index, 2, {cross(x.pos - 1), cap(c.pos + 1, c.sense)});
        }
        case MoveId::R2Fake: {
            if (!s.forward) return detail::splice(d, s.index, 2, {});
            return detail::splice(d, s.index, 0, {cross(s.pos), cross(s.pos)});
        }
        case MoveId::R1Framed: {
            if (!s.forward) return detail::splice(d, s.index, 6, {});
            auto c = detail::curl_events(s.pos, s.variant == 1);
            auto c2 = c;
            c.insert(c.end(), c2.begin(), c2.end());
            return detail::splice(d, s.index, 0, std::move(c));
        }
        case MoveId::R3Slide: {
            if (s.forward) {
                const Event& v = ev[s.index];
                if (s.variant == 0)
                    return detail::splice(
                        d, s.index, 3,
                        {cross(v.pos + 1), cross(v.pos), vertex(v.pos + 1, v.sense)});
                return detail::splice(
                    d, s.index, 3, {cross(v.pos - 1), cross(v.pos), vertex(v.pos - 1, v.sense)});
            }
            const Event& v = ev[s.index + 2];
            if (s.variant == 0)
                return detail::splice(
                    d, s.index, 3, {vertex(v.pos - 1, v.sense), cross(v.pos), cross(v.pos - 1)});
            return detail::splice(
                d, s.index, 3, {vertex(v.pos + 1, v.sense), cross(v.pos), cross(v.pos + 1)});
        }
        case MoveId::Branched02: {
            if (!s.forward) return detail::splice(d, s.index, 2, {});
            int first = s.variant == 0 ? +1 : -1;
            return detail::splice(d, s.index, 0, {vertex(s.pos, first), vertex(s.pos, -first)});
        }
        case MoveId::BranchedMP: {
            if (s.forward)
                return detail::splice(d, s.index,
                                      static_cast<int>(detail::mp_lhs(0, s.variant).size()),
                                      detail::mp_rhs(s.pos, s.variant));
            return detail::splice(d, s.index,
                                  static_cast<int>(detail::mp_rhs(0, s.variant).size()),
                                  detail::mp_lhs(s.pos, s.variant));
        }
    }
    throw Error(ErrorKind::Usage, "unknown move");
}

// Applies and re-validates; throws Error(Validation) if the rewritten diagram
// fails any condition (the site is then not applicable).
inline MorseDiagram apply_move(const MorseDiagram& d, const MoveSite& s) {
    MorseDiagram out = apply_move_unchecked(d, s);
    ValidatedDiagram v = validate_diagram(out);
    if (!v.ok())
        throw Error(ErrorKind::Validation, "move result fails " + v.issues.front().condition +
                                               ": " + v.issues.front().detail);
    return out;
}

// ---------------------------------------------------------------------------

struct FuzzStep {
    int step;
    std::string move;
    bool forward;
    int index, pos, variant;
};

struct FuzzReport {
    bool ok = true;
    unsigned seed = 0;
    int steps_requested = 0;
    int steps_applied = 0;
    std::vector<FuzzStep> history;
    std::string failure;
};

// Applies `steps` random applicable moves, recomputing Z after each and
// comparing with the starting value. Deterministic for a given seed.
inline FuzzReport fuzz_invariance(const MorseDiagram& d0, const SuperCocycle& c, int steps,
                                  unsigned seed, std::size_t max_events = 300) {
    FuzzReport rep;
    rep.seed = seed;
    rep.steps_requested = steps;
    std::mt19937 rng(seed);
    StateSumResult base = invariant_Z(d0, c);
    MorseDiagram cur = d0;
    for (int step = 0; step < steps; ++step) {
        auto sites = find_all_sites(cur);
        if (cur.events.size() > max_events) {
            sites.erase(std::remove_if(sites.begin(), sites.end(),
                                       [](const MoveSite& m) { return m.forward; }),
                        sites.end());
        }
        if (sites.empty()) break;
        std::shuffle(sites.begin(), sites.end(), rng);
        bool applied = false;
        for (const auto& site : sites) {
            MorseDiagram next;
            try {
                next = apply_move(cur, site);
            } catch (const Error&) {
                continue;
            }
            StateSumResult z = invariant_Z(next, c);
            rep.history.push_back({step, move_name(site.move), site.forward, site.index,
                                   site.pos, site.variant});
            if (!(z.value == base.value)) {
                rep.ok = false;
                rep.failure = "invariant changed after " + std::string(move_name(site.move)) +
                              " at step " + std::to_string(step) + ": " + z.value.str() +
                              " vs " + base.value.str();
                return rep;
            }
            cur = std::move(next);
            ++rep.steps_applied;
            applied = true;
            break;
        }
        if (!applied) break;
    }
    return rep;
}

}  // namespace spinsum
