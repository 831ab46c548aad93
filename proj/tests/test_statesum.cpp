#include <catch2/catch_amalgamated.hpp>

#include "spinsum/lens.hpp"
#include "spinsum/statesum.hpp"
#include "support/oracles.hpp"

using namespace spinsum;

namespace {

BranchedTriangulation tri_of(const MorseDiagram& d) {
    return build_triangulation(extract_ograph(d));
}

Scalar exact_int(long v) { return Scalar::exact(CycNumber::integer(1, v)); }

}  // namespace

TEST_CASE("coloring counts match the brute-force oracle") {
    std::vector<FiniteGroup> groups;
    groups.push_back(make_cyclic_group(2));
    groups.push_back(make_cyclic_group(3));
    groups.push_back(make_cyclic_group(4));
    groups.push_back(make_s3());
    for (int p = 1; p <= 4; ++p) {
        BranchedTriangulation T = tri_of(lens_diagram(p));
        for (const auto& G : groups) {
            INFO("p = " << p << " |G| = " << G.order());
            auto cols = enumerate_admissible(T, G);
            CHECK(static_cast<long>(cols.size()) == oracles::brute_force_coloring_count(T, G));
            CHECK(static_cast<long>(cols.size()) == G.count_p_torsion(p));
        }
    }
}

TEST_CASE("enumeration is sorted and duplicate free, matching the oracle sets") {
    BranchedTriangulation T = tri_of(lens_diagram(2));
    FiniteGroup G = make_cyclic_group(4);
    auto cols = enumerate_admissible(T, G);
    auto oracle = oracles::brute_force_colorings(T, G);
    std::sort(oracle.begin(), oracle.end());
    REQUIRE(cols.size() == oracle.size());
    for (std::size_t i = 0; i < cols.size(); ++i) CHECK(cols[i] == oracle[i]);
    CHECK(std::is_sorted(cols.begin(), cols.end()));
}

TEST_CASE("trivial group forces the all-identity coloring") {
    BranchedTriangulation T = tri_of(lens_diagram(3));
    FiniteGroup z1 = make_cyclic_group(1);
    auto cols = enumerate_admissible(T, z1);
    REQUIRE(cols.size() == 1);
    for (int v : cols[0]) CHECK(v == 0);
}

TEST_CASE("weight W on the lens colorings") {
    // L(2,1) with Z_2: the nontrivial coloring colors the tetrahedra
    // (g,g,g) and (g,1,g); with the zn:2 cocycle W = alpha(g,1,g) alpha(g,g,g) = i
    auto c = zn_example_cocycle(2);
    BranchedTriangulation T = tri_of(lens_diagram(2));
    auto cols = enumerate_admissible(T, c.group());
    REQUIRE(cols.size() == 2);
    std::vector<Scalar> ws;
    for (const auto& phi : cols) ws.push_back(weight_W(T, phi, c));
    // one coloring gives 1, the other i
    bool seen_one = false, seen_i = false;
    for (const auto& w : ws) {
        if (w == Scalar::one()) seen_one = true;
        if (w == Scalar::exact(CycNumber::root_power(4, 1))) seen_i = true;
    }
    CHECK(seen_one);
    CHECK(seen_i);
}

TEST_CASE("a +/- pair with equal colorings cancels in W") {
    // insert a 0-2 pair into L(1,1); W of each coloring is unchanged
    auto c = zn_example_cocycle(2);
    MorseDiagram d = lens_diagram(1);
    MorseDiagram d2 = d;
    d2.events.insert(d2.events.begin() + 3, {vertex(0, +1), vertex(0, -1)});
    auto z1 = invariant_Z(d, c);
    auto z2 = invariant_Z(d2, c);
    CHECK(z1.value == z2.value);
}

TEST_CASE("theta is trivial without fake crossings or with omega = 0") {
    MorseDiagram d = lens_diagram(2);  // no fake crossings
    OGraph g = extract_ograph(d);
    BranchedTriangulation T = build_triangulation(g);
    auto c = zn_example_cocycle(2);
    for (const auto& phi : enumerate_admissible(T, c.group()))
        CHECK(theta_sign(g, T, phi, c) == 1);

    MorseDiagram s1 = lens_diagram(2, true);  // one self-crossing
    OGraph g1 = extract_ograph(s1);
    BranchedTriangulation T1 = build_triangulation(g1);
    auto triv = trivial_cocycle(make_cyclic_group(2));
    for (const auto& phi : enumerate_admissible(T1, triv.group()))
        CHECK(theta_sign(g1, T1, phi, triv) == 1);
}

TEST_CASE("invariant on the paper values: Z(L(2,1)) = 1 -+ i") {
    auto c = zn_example_cocycle(2);
    auto s2 = invariant_Z(lens_diagram(2, false), c);
    auto s1 = invariant_Z(lens_diagram(2, true), c);
    CycNumber one = CycNumber::integer(4, 1);
    CycNumber i = CycNumber::root_power(4, 1);
    CHECK(s2.value == Scalar::exact(one + i));
    CHECK(s1.value == Scalar::exact(one - i));
    CHECK(s1.coloring_count == 2);
    CHECK(s2.coloring_count == 2);
    CHECK(s1.float_value.real() == Catch::Approx(1.0).margin(1e-12));
    CHECK(s1.float_value.imag() == Catch::Approx(-1.0).margin(1e-12));
}

TEST_CASE("trivial cocycle counts torsion") {
    for (int p = 1; p <= 5; ++p) {
        for (int n : {2, 3, 6}) {
            auto c = trivial_cocycle(make_cyclic_group(n));
            auto r = invariant_Z(lens_diagram(p), c);
            INFO("p=" << p << " n=" << n);
            CHECK(r.value == exact_int(c.group().count_p_torsion(p)));
        }
    }
}

TEST_CASE("lens formula cross-check against the full pipeline") {
    std::vector<SuperCocycle> cocycles;
    cocycles.push_back(trivial_cocycle(make_cyclic_group(2)));
    cocycles.push_back(zn_example_cocycle(2));
    cocycles.push_back(trivial_cocycle(make_cyclic_group(4)));
    cocycles.push_back(zn_example_cocycle(4));
    for (const auto& c : cocycles) {
        auto [f1, f2] = lens_formula_eval(c);
        auto p1 = invariant_Z(lens_diagram(2, true), c);
        auto p2 = invariant_Z(lens_diagram(2, false), c);
        INFO(c.name());
        CHECK(p1.value == f1);
        CHECK(p2.value == f2);
    }
}

TEST_CASE("lens formula closed values") {
    // trivial cocycle on Z_2: both sums are 2
    auto t = lens_formula_eval(trivial_cocycle(make_cyclic_group(2)));
    CHECK(t.first == exact_int(2));
    CHECK(t.second == exact_int(2));
    // Z_4 example: sums over g in {0, 2}: alpha(2,0,2) = 1, alpha(2,2,2) = i
    // s2 = 1 + i; signs: omega(2,2) = 1, omega(2,0) = 0 -> s1 = 1 - i
    auto z4 = lens_formula_eval(zn_example_cocycle(4));
    CycNumber one = CycNumber::integer(8, 1);
    CycNumber i = CycNumber::root_power(8, 2);
    CHECK(z4.second == Scalar::exact(one + i));
    CHECK(z4.first == Scalar::exact(one - i));
}

TEST_CASE("terms are retained on request and sum to Z") {
    auto c = zn_example_cocycle(2);
    auto r = invariant_Z(lens_diagram(2), c, true);
    REQUIRE(r.terms.has_value());
    REQUIRE(r.terms->size() == 2);
    Scalar sum = Scalar::zero();
    for (const auto& t : *r.terms) {
        Scalar term = t.w;
        if (t.theta < 0) term = term * exact_int(-1);
        sum = sum + term;
    }
    CHECK(sum == r.value);
}

TEST_CASE("validation failures are structured") {
    MorseDiagram bad = parse_morse("cup 0 ccw\ncap 0 ccw\n");
    auto v = validate_diagram(bad);
    CHECK_FALSE(v.ok());
    CHECK_THROWS_AS(invariant_Z(bad, trivial_cocycle(make_cyclic_group(2))), Error);
}

TEST_CASE("re-planarizing with extra fake crossing pairs leaves Z unchanged") {
    // with omega = 0 and a genuine 3-cocycle, theta = 1: crossing pairs do nothing;
    // with nontrivial omega the two equal signs cancel pairwise
    for (bool nontrivial : {false, true}) {
        SuperCocycle c = nontrivial ? zn_example_cocycle(2)
                                    : trivial_cocycle(make_cyclic_group(2));
        MorseDiagram d = lens_diagram(2);
        MorseDiagram d2 = d;
        d2.events.insert(d2.events.begin() + 3, {cross(0), cross(0)});
        auto z = invariant_Z(d, c);
        auto z2 = invariant_Z(d2, c);
        CHECK(z.value == z2.value);
    }
}
