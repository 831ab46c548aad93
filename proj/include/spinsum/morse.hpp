#pragma once

// Planar diagrams as Morse-event words, read bottom to top. The tape is the
// horizontal slice of strand positions; events act on adjacent positions.
//
//   cup <pos> <ccw|cw>    minimum; creates two strands at pos, pos+1.
//                         ccw: the new pair is (down, up), winding +1/2;
//                         cw:  (up, down), winding -1/2.
//   cap <pos> <ccw|cw>    maximum; joins the strands at pos, pos+1. The
//                         turning sense is forced by the strand orientations;
//                         the annotation is informational and the printer
//                         always emits the derived one.
//   vertex <pos> <+|->    true vertex on strands pos, pos+1; all four ends
//                         point upward; the strands cross.
//   cross <pos>           fake crossing; the strands at pos, pos+1 swap.

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "spinsum/error.hpp"

namespace spinsum {

enum class EventKind { Cup, Cap, Vertex, Cross };

struct Event {
    EventKind kind;
    int pos = 0;
    int sense = 0;  // cup/cap: +1 ccw, -1 cw; vertex: +1/-1 sign
    friend bool operator==(const Event&, const Event&) = default;
};

inline Event cup(int pos, int sense) { return {EventKind::Cup, pos, sense}; }
inline Event cap(int pos, int sense = 0) { return {EventKind::Cap, pos, sense}; }
inline Event vertex(int pos, int sign) { return {EventKind::Vertex, pos, sign}; }
inline Event cross(int pos) { return {EventKind::Cross, pos, 0}; }

struct MorseDiagram {
    std::string name;
    std::vector<Event> events;
    // optional weight assertions from the file: (edge id, expected weight)
    std::vector<std::pair<int, int>> expected_weights;

    friend bool operator==(const MorseDiagram& a, const MorseDiagram& b) {
        return a.name == b.name && a.events == b.events;
    }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

}  // namespace detail

// Parses the diagram file format. Structural tape discipline (positions in
// range, orientations at events, empty tape at the end) is checked by
// extract_ograph; this parser is purely syntactic.
inline MorseDiagram parse_morse(const std::string& text) {
    MorseDiagram d;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        auto want = [&](std::size_t n) {
            if (toks.size() != n)
                throw parse_error("'" + kw + "' expects " + std::to_string(n - 1) + " arguments",
                                  lineno);
        };
        auto num = [&](const std::string& t) {
            try {
                std::size_t used = 0;
                int v = std::stoi(t, &used);
                if (used != t.size()) throw std::invalid_argument("");
                return v;
            } catch (...) {
                throw parse_error("expected an integer, got '" + t + "'", lineno);
            }
        };
        auto sense_of = [&](const std::string& t) {
            if (t == "ccw") return +1;
            if (t == "cw") return -1;
            throw parse_error("expected 'ccw' or 'cw', got '" + t + "'", lineno);
        };
        if (kw == "name") {
            want(2);
            d.name = toks[1];
        } else if (kw == "cup") {
            want(3);
            d.events.push_back(cup(num(toks[1]), sense_of(toks[2])));
        } else if (kw == "cap") {
            want(3);
            d.events.push_back(cap(num(toks[1]), sense_of(toks[2])));
        } else if (kw == "vertex") {
            want(3);
            int s = 0;
            if (toks[2] == "+") s = +1;
            else if (toks[2] == "-") s = -1;
            else throw parse_error("vertex sign must be '+' or '-'", lineno);
            d.events.push_back(vertex(num(toks[1]), s));
        } else if (kw == "cross") {
            want(2);
            d.events.push_back(cross(num(toks[1])));
        } else if (kw == "expect_weight") {
            want(3);
            int w = num(toks[2]);
            if (w != 0 && w != 1) throw parse_error("expected weight must be 0 or 1", lineno);
            d.expected_weights.emplace_back(num(toks[1]), w);
        } else {
            throw parse_error("unknown event keyword '" + kw + "'", lineno);
        }
    }
    return d;
}

// Canonical printer; parse(print(d)) == d for diagrams whose cap senses are
// the derived ones (print_morse is used with post-extraction diagrams, whose
// senses are always canonical).
inline std::string print_morse(const MorseDiagram& d) {
    std::ostringstream os;
    if (!d.name.empty()) os << "name " << d.name << "\n";
    for (const Event& e : d.events) {
        switch (e.kind) {
            case EventKind::Cup:
                os << "cup " << e.pos << (e.sense > 0 ? " ccw" : " cw") << "\n";
                break;
            case EventKind::Cap:
                os << "cap " << e.pos << (e.sense > 0 ? " ccw" : " cw") << "\n";
                break;
            case EventKind::Vertex:
                os << "vertex " << e.pos << (e.sense > 0 ? " +" : " -") << "\n";
                break;
            case EventKind::Cross:
                os << "cross " << e.pos << "\n";
                break;
        }
    }
    for (auto [eid, w] : d.expected_weights) os << "expect_weight " << eid << " " << w << "\n";
    return os.str();
}

}  // namespace spinsum
