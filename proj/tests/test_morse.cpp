#include <catch2/catch_amalgamated.hpp>

#include "spinsum/lens.hpp"
#include "spinsum/morse.hpp"
#include "spinsum/ograph.hpp"

using namespace spinsum;

TEST_CASE("parse a simple closed curve") {
    MorseDiagram d = parse_morse("cup 0 ccw\ncap 0 cw\n");
    REQUIRE(d.events.size() == 2);
    OGraph g = extract_ograph(d);
    CHECK(g.vertex_signs.empty());
    CHECK(g.circle_components == 1);
    // rotation number of the embedded counterclockwise circle
    REQUIRE(g.circle_windings.size() == 1);
    CHECK(g.circle_windings[0] == 1);
    // and the clockwise one
    OGraph g2 = extract_ograph(parse_morse("cup 0 cw\ncap 0 ccw\n"));
    CHECK(g2.circle_windings[0] == -1);
}

TEST_CASE("counterclockwise circle has winding +1") {
    // cup ccw produces (down, up); the cap joining them turns ccw as well.
    // The total rotation of the embedded circle is +1; circles are tracked as
    // components, so probe via a one-vertex diagram instead: a straight edge
    // between two vertices has winding 0.
    MorseDiagram d = parse_morse(
        "cup 0 cw\ncup 1 cw\nvertex 0 +\ncap 1 cw\ncap 0 cw\n");
    OGraph g = extract_ograph(d);
    REQUIRE(g.edges.size() == 2);
    // both feedback edges of the one-vertex chain have winding -1
    CHECK(g.edges[0].winding == -1);
    CHECK(g.edges[1].winding == -1);
    CHECK(g.edges[0].weight() == 1);
}

TEST_CASE("dangling strands are rejected") {
    MorseDiagram d = parse_morse("cup 0 ccw\ncup 0 ccw\ncap 0 cw\n");
    CHECK_THROWS_AS(extract_ograph(d), Error);
    // vertex with no closure
    MorseDiagram d2 = parse_morse("cup 0 cw\ncup 1 cw\nvertex 0 +\n");
    CHECK_THROWS_AS(extract_ograph(d2), Error);
}

TEST_CASE("true vertices require upward strands") {
    // cup ccw makes (down, up): a vertex on that pair must fail
    MorseDiagram d = parse_morse("cup 0 ccw\nvertex 0 +\ncap 0 cw\n");
    CHECK_THROWS_AS(extract_ograph(d), Error);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_WITH(parse_morse("cupp 0 ccw\n"),
                      Catch::Matchers::ContainsSubstring("line 1"));
    CHECK_THROWS_WITH(parse_morse("# ok\nvertex 0 ?\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    CHECK_THROWS_AS(parse_morse("cup 0\n"), Error);
    CHECK_THROWS_AS(parse_morse("cross x\n"), Error);
}

TEST_CASE("print/parse round trip") {
    for (int p : {1, 2, 3, 4}) {
        MorseDiagram d = lens_diagram(p);
        MorseDiagram d2 = parse_morse(print_morse(d));
        CHECK(d2 == d);
    }
    MorseDiagram s1 = lens_diagram(2, true);
    CHECK(parse_morse(print_morse(s1)) == s1);
}

TEST_CASE("lens diagram o-graph structure") {
    for (int p : {1, 2, 3}) {
        OGraph g = extract_ograph(lens_diagram(p));
        CHECK(static_cast<int>(g.vertex_signs.size()) == p);
        CHECK(static_cast<int>(g.edges.size()) == 2 * p);
        CHECK(g.crossings.empty());
        CHECK(check_C1(g));
    }
    // the other-spin variant carries one self-crossing
    OGraph g = extract_ograph(lens_diagram(2, true));
    CHECK(g.crossings.size() == 1);
    CHECK(g.crossings[0].edge_a == g.crossings[0].edge_b);
}

TEST_CASE("a two-circuit closure fails C1") {
    // two stacked vertices closing into two separate through-circuits:
    // the straight double chain V0 -> V1 with straight wrap
    MorseDiagram d;
    d.events = {cup(0, -1), cup(1, -1), cup(2, -1), cup(3, -1),
                vertex(0, +1), vertex(0, +1),
                cap(1, -1), cap(1, -1), cap(1, -1), cap(0, -1)};
    // the exact word above may not even be well-formed; build the known
    // failing shape instead: L(2,1) chain with the wrap connecting
    // NW->SW / NE->SE (straight), realized by crossing the feedbacks twice
    MorseDiagram d2 = lens_diagram(2);
    // swap the two middle caps so the feedback arcs reconnect straight
    // (cap order controls which strand pairs join)
    std::swap(d2.events[5], d2.events[6]);
    bool valid_and_c1 = true;
    try {
        valid_and_c1 = check_C1(extract_ograph(d2));
    } catch (const Error&) {
        valid_and_c1 = false;
    }
    CHECK_FALSE(valid_and_c1);
}

TEST_CASE("expected weights are parsed and checked downstream") {
    std::string text = print_morse(lens_diagram(2)) + "expect_weight 0 1\n";
    MorseDiagram d = parse_morse(text);
    REQUIRE(d.expected_weights.size() == 1);
    CHECK(d.expected_weights[0] == std::pair<int, int>{0, 1});
}
