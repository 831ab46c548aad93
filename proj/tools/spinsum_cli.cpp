// Command-line front end: validation, state-sum computation, cocycle
// checking, coloring listings, move application, and invariance fuzzing.
//
// Exit codes: 0 success, 1 validation/computation failure, 2 usage error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spinsum/io.hpp"
#include "spinsum/lens.hpp"

using namespace spinsum;

namespace {

struct CocycleSpec {
    std::string text = "trivial:z2";
};

FiniteGroup parse_group_name(const std::string& s) {
    if (s == "s3" || s == "S3") return make_s3();
    if ((s[0] == 'z' || s[0] == 'Z') && s.size() > 1) return make_cyclic_group(std::stoi(s.substr(1)));
    return make_cyclic_group(std::stoi(s));
}

SuperCocycle resolve_cocycle(const std::string& spec) {
    auto colon = spec.find(':');
    std::string kind = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (kind == "trivial") {
        if (arg.empty()) throw Error(ErrorKind::Usage, "trivial:<group> needs a group");
        return trivial_cocycle(parse_group_name(arg), "trivial:" + arg);
    }
    if (kind == "zn") return zn_example_cocycle(std::stoi(arg));
    if (kind == "table") {
        SuperCocycle c = parse_cocycle_table(read_file(arg));
        auto rep = check_super3cocycle(c);
        if (!rep.ok) {
            std::string where;
            for (int v : rep.violations.front().tuple) where += " " + std::to_string(v);
            throw Error(ErrorKind::Validation,
                        "cocycle table fails " + rep.violations.front().detail + " at" + where);
        }
        return c;
    }
    throw Error(ErrorKind::Usage, "unknown cocycle spec '" + spec + "' (trivial:<g>|zn:<n>|table:<path>)");
}

MorseDiagram load_diagram(const std::string& path) {
    if (path.rfind("lens:", 0) == 0) {
        // lens:<p> or lens:<p>:s1 / :s2 -- builtin example diagrams
        std::string rest = path.substr(5);
        auto colon = rest.find(':');
        int p = std::stoi(rest.substr(0, colon));
        bool other = colon != std::string::npos && rest.substr(colon + 1) == "s1";
        return lens_diagram(p, other);
    }
    return parse_morse(read_file(path));
}

int cmd_validate(const std::string& path, bool as_json) {
    MorseDiagram d = load_diagram(path);
    ValidatedDiagram v = validate_diagram(d);
    json j;
    j["name"] = d.name;
    json issues = json::array();
    for (const auto& i : v.issues) issues.push_back({{"condition", i.condition}, {"detail", i.detail}});
    j["issues"] = issues;
    j["valid"] = v.ok();
    if (!v.graph.edges.empty()) {
        json edges = json::array();
        for (std::size_t i = 0; i < v.graph.edges.size(); ++i) {
            const auto& e = v.graph.edges[i];
            edges.push_back({{"id", i},
                             {"from", {e.from.vertex, static_cast<int>(e.from.port)}},
                             {"to", {e.to.vertex, static_cast<int>(e.to.port)}},
                             {"winding", e.winding},
                             {"weight", e.weight()}});
        }
        j["edges"] = edges;
        j["vertices"] = v.graph.vertex_signs.size();
        j["fake_crossings"] = v.graph.crossings.size();
    }
    if (v.tri) {
        j["tetrahedra"] = v.tri->tetrahedra();
        j["edge_classes"] = v.tri->edge_class_count();
        j["face_classes"] = v.tri->face_class_count();
        j["ideal_vertices"] = v.tri->ideal_vertex_count();
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "diagram: " << (d.name.empty() ? "(unnamed)" : d.name) << "\n";
        if (v.tri)
            std::cout << "tetrahedra " << v.tri->tetrahedra() << ", edge classes "
                      << v.tri->edge_class_count() << ", ideal vertices "
                      << v.tri->ideal_vertex_count() << "\n";
        std::cout << "edges (id: from -> to, winding, weight):\n";
        static const char* pn[] = {"NW", "NE", "SW", "SE"};
        for (std::size_t i = 0; i < v.graph.edges.size(); ++i) {
            const auto& e = v.graph.edges[i];
            std::cout << "  " << i << ": v" << e.from.vertex << "." << pn[e.from.port] << " -> v"
                      << e.to.vertex << "." << pn[e.to.port] << "  w=" << e.winding
                      << "  z=" << e.weight() << "\n";
        }
        // per-condition report; conditions beyond the first failure are
        // unreachable and shown as skipped
        const char* conds[] = {"well-formedness", "N2", "C1", "branching", "C2", "C3", "S",
                               "expect_weight"};
        for (const char* cond : conds) {
            std::string status = "pass";
            for (const auto& i : v.issues)
                if (i.condition == cond) status = "FAIL: " + i.detail;
            bool reached = true;
            if ((std::string(cond) == "C2" || std::string(cond) == "C3") && !v.tri)
                reached = false;
            if (std::string(cond) == "S" && !v.spin) reached = false;
            if (!reached && status == "pass") status = "skipped";
            std::cout << "  " << cond << ": " << status << "\n";
        }
        std::cout << (v.ok() ? "all conditions pass\n" : "INVALID\n");
    }
    return v.ok() ? 0 : 1;
}

int cmd_compute(const std::string& path, const std::string& cocycle, bool as_json, bool terms) {
    MorseDiagram d = load_diagram(path);
    SuperCocycle c = resolve_cocycle(cocycle);
    StateSumResult r = invariant_Z(d, c, terms);
    json j = result_to_json(d.name, std::to_string(c.group().order()) + " elements", c.name(), r);
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "Z(" << (d.name.empty() ? "diagram" : d.name) << "; " << c.name()
                  << ") = " << r.value.str() << "\n";
        std::cout << "  float: " << r.float_value.real() << " + " << r.float_value.imag()
                  << "i\n  admissible colorings: " << r.coloring_count << "\n";
        if (terms && r.terms) {
            for (const auto& t : *r.terms) {
                std::cout << "  term theta=" << t.theta << " W=" << t.w.str() << " coloring=[";
                for (std::size_t i = 0; i < t.coloring.size(); ++i)
                    std::cout << (i ? " " : "") << t.coloring[i];
                std::cout << "]\n";
            }
        }
    }
    return 0;
}

int cmd_cocycle_check(const std::string& spec, bool as_json) {
    SuperCocycle c = [&] {
        if (spec.rfind("table:", 0) == 0) return parse_cocycle_table(read_file(spec.substr(6)));
        return resolve_cocycle(spec);
    }();
    CocycleReport rep = check_super3cocycle(c);
    if (as_json) {
        json j;
        j["ok"] = rep.ok;
        json v = json::array();
        for (const auto& viol : rep.violations)
            v.push_back({{"tuple", viol.tuple}, {"condition", viol.detail}});
        j["violations"] = v;
        std::cout << j.dump(2) << "\n";
    } else if (rep.ok) {
        std::cout << "cocycle passes: 2-cocycle and super 3-cocycle conditions hold\n";
    } else {
        std::cout << "cocycle FAILS (" << rep.violations.size() << " violations)\n";
        for (std::size_t i = 0; i < rep.violations.size() && i < 10; ++i) {
            std::cout << "  " << rep.violations[i].detail << " at (";
            for (std::size_t k = 0; k < rep.violations[i].tuple.size(); ++k)
                std::cout << (k ? "," : "") << rep.violations[i].tuple[k];
            std::cout << ")\n";
        }
    }
    return rep.ok ? 0 : 1;
}

int cmd_colorings(const std::string& path, const std::string& group, bool as_json) {
    MorseDiagram d = load_diagram(path);
    ValidatedDiagram v = validate_diagram(d);
    if (!v.ok()) {
        std::cerr << "diagram fails " << v.issues.front().condition << ": "
                  << v.issues.front().detail << "\n";
        return 1;
    }
    FiniteGroup G = parse_group_name(group);
    auto cols = enumerate_admissible(*v.tri, G);
    if (as_json) {
        json j;
        j["coloring_count"] = cols.size();
        j["edge_classes"] = v.tri->edge_class_count();
        json cj = json::array();
        for (const auto& c : cols) cj.push_back(c);
        j["colorings"] = cj;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << cols.size() << " admissible colorings over " << v.tri->edge_class_count()
                  << " edge classes\n";
        for (const auto& c : cols) {
            std::cout << "  [";
            for (std::size_t i = 0; i < c.size(); ++i)
                std::cout << (i ? " " : "") << G.name(c[i]);
            std::cout << "]\n";
        }
    }
    return 0;
}

int cmd_moves_list(bool as_json) {
    if (as_json) {
        json j = json::array();
        for (const auto& m : move_registry())
            j.push_back({{"name", m.name},
                         {"figure", m.figure},
                         {"enabled", m.enabled},
                         {"changes_triangulation", m.changes_triangulation}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& m : move_registry())
            std::cout << m.name << "  [" << m.figure << "]"
                      << (m.enabled ? "" : "  (disabled)") << "\n";
    }
    return 0;
}

int cmd_moves_apply(const std::string& path, const std::string& move, int index, int pos,
                    int variant, bool backward, bool as_json) {
    MorseDiagram d = load_diagram(path);
    MoveId id;
    bool found = false;
    for (const auto& m : move_registry())
        if (move == m.name) { id = m.id; found = true; }
    if (!found) throw Error(ErrorKind::Usage, "unknown move '" + move + "'");
    MoveSite site{id, !backward, index, pos, variant};
    MorseDiagram out = apply_move(d, site);
    if (as_json) {
        json j;
        j["diagram"] = print_morse(out);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << print_morse(out);
    }
    return 0;
}

int cmd_fuzz(const std::string& path, const std::string& cocycle, int steps, unsigned seed,
             bool as_json) {
    MorseDiagram d = load_diagram(path);
    SuperCocycle c = resolve_cocycle(cocycle);
    FuzzReport rep = fuzz_invariance(d, c, steps, seed);
    if (as_json) {
        std::cout << fuzz_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << (rep.ok ? "PASS" : "FAIL") << " after " << rep.steps_applied
                  << " applied moves (seed " << rep.seed << ")\n";
        if (!rep.ok) std::cout << rep.failure << "\n";
    }
    return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"state-sum invariants of closed spin 3-manifolds from planar o-graphs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string path, cocycle = "trivial:z2", group = "z2", move;
    int steps = 100, index = 0, pos = 0, variant = 0;
    unsigned seed = 1;
    bool terms = false, backward = false;

    auto* validate = app.add_subcommand("validate", "parse a diagram and check N2, C1-C3, S");
    validate->add_option("diagram", path, "diagram file or lens:<p>[:s1|:s2]")->required();

    auto* compute = app.add_subcommand("compute", "compute the invariant Z");
    compute->add_option("diagram", path)->required();
    compute->add_option("--cocycle", cocycle, "trivial:<group> | zn:<n> | table:<path>");
    compute->add_flag("--terms", terms, "include the per-coloring terms");

    auto* ccheck = app.add_subcommand("cocycle-check", "verify the super 3-cocycle equations");
    ccheck->add_option("cocycle", cocycle)->required();

    auto* colorings = app.add_subcommand("colorings", "list admissible colorings");
    colorings->add_option("diagram", path)->required();
    colorings->add_option("--group", group, "z<n> or s3");

    auto* moves = app.add_subcommand("moves", "move calculus");
    auto* mlist = moves->add_subcommand("list", "list the move registry");
    auto* mapply = moves->add_subcommand("apply", "apply one move");
    mapply->add_option("diagram", path)->required();
    mapply->add_option("move", move, "move name from `moves list`")->required();
    mapply->add_option("--index", index, "event index / insertion gap");
    mapply->add_option("--pos", pos, "tape position");
    mapply->add_option("--variant", variant, "move variant");
    mapply->add_flag("--backward", backward, "apply in the reverse direction");

    auto* fuzz = app.add_subcommand("fuzz", "random move sequences; Z must stay fixed");
    fuzz->add_option("diagram", path)->required();
    fuzz->add_option("--cocycle", cocycle);
    fuzz->add_option("--steps", steps);
    fuzz->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(path, as_json);
        if (compute->parsed()) return cmd_compute(path, cocycle, as_json, terms);
        if (ccheck->parsed()) return cmd_cocycle_check(cocycle, as_json);
        if (colorings->parsed()) return cmd_colorings(path, group, as_json);
        if (moves->parsed()) {
            if (mlist->parsed()) return cmd_moves_list(as_json);
            if (mapply->parsed())
                return cmd_moves_apply(path, move, index, pos, variant, backward, as_json);
            return cmd_moves_list(as_json);
        }
        if (fuzz->parsed()) return cmd_fuzz(path, cocycle, steps, seed, as_json);
    } catch (const Error& e) {
        if (as_json) {
            json j;
            j["error"] = e.what();
            j["kind"] = static_cast<int>(e.kind());
            std::cout << j.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return e.kind() == ErrorKind::Usage ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
