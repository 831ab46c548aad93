#pragma once

// Serialization: JSON result objects and the cocycle table file format.
//
// Cocycle table files (UTF-8, line based, '#' comments):
//   group <n>            cyclic group Z_n,  or
//   group s3             the symmetric group S3, or
//   table <k>            followed by k rows of k indices (multiplication table)
//   omega <g> <h> <v>    v in {0,1}; omitted entries default to 0
//   alpha <g> <h> <k> <N> <c_0> ... <c_{deg Phi_N - 1}>
//                        exact value sum_j c_j zeta_N^j; rationals allowed as p/q;
//                        omitted entries default to 1
//   alpha_float <g> <h> <k> <re> <im>   numeric value (switches that entry to
//                        float mode)

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinsum/cocycle.hpp"
#include "spinsum/moves.hpp"
#include "spinsum/statesum.hpp"

namespace spinsum {

using nlohmann::json;

inline json scalar_to_json(const Scalar& s) {
    json j;
    auto z = s.to_complex();
    j["float"] = {z.real(), z.imag()};
    if (s.is_exact()) {
        const CycNumber& c = s.exact_value();
        j["root_order"] = c.root_order();
        json coeffs = json::array();
        for (const auto& q : c.coeffs()) {
            if (boost::multiprecision::denominator(q) == 1)
                coeffs.push_back(boost::multiprecision::numerator(q).str());
            else
                coeffs.push_back(q.str());
        }
        j["coefficients"] = coeffs;
        j["pretty"] = c.str();
    }
    return j;
}

inline json result_to_json(const std::string& name, const std::string& group,
                           const std::string& cocycle, const StateSumResult& r) {
    json j;
    j["name"] = name;
    j["group"] = group;
    j["cocycle"] = cocycle;
    j["coloring_count"] = r.coloring_count;
    if (r.value.is_exact()) j["value_exact"] = scalar_to_json(r.value);
    j["value_float"] = {r.float_value.real(), r.float_value.imag()};
    if (r.terms) {
        json terms = json::array();
        for (const auto& t : *r.terms) {
            json tj;
            tj["coloring"] = t.coloring;
            tj["theta"] = t.theta;
            tj["w"] = scalar_to_json(t.w);
            terms.push_back(tj);
        }
        j["terms"] = terms;
    }
    return j;
}

inline json fuzz_to_json(const FuzzReport& r) {
    json j;
    j["status"] = r.ok ? "pass" : "fail";
    j["seed"] = r.seed;
    j["steps"] = r.steps_requested;
    j["steps_applied"] = r.steps_applied;
    json hist = json::array();
    for (const auto& h : r.history) {
        hist.push_back({{"step", h.step},
                        {"move", h.move},
                        {"forward", h.forward},
                        {"index", h.index},
                        {"pos", h.pos},
                        {"variant", h.variant}});
    }
    j["history"] = hist;
    if (!r.ok) j["failure"] = r.failure;
    return j;
}

namespace detail {

inline Rational parse_rational(const std::string& t, int lineno) {
    try {
        auto slash = t.find('/');
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(t));
        return Rational(boost::multiprecision::cpp_int(t.substr(0, slash)),
                        boost::multiprecision::cpp_int(t.substr(slash + 1)));
    } catch (...) {
        throw parse_error("bad rational '" + t + "'", lineno);
    }
}

}  // namespace detail

// Parses a cocycle table file. The result is checked against the super
// 3-cocycle equations by the callers that require a valid cocycle.
inline SuperCocycle parse_cocycle_table(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;

    std::optional<FiniteGroup> G;
    std::vector<std::vector<int>> omega;
    std::vector<std::optional<Scalar>> alpha;
    int pending_table_rows = 0;
    std::vector<std::vector<int>> table_rows;

    auto require_group = [&]() -> FiniteGroup& {
        if (!G) throw Error(ErrorKind::Parse, "cocycle file must declare the group first");
        return *G;
    };

    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;

        if (pending_table_rows > 0) {
            std::vector<int> row;
            for (const auto& t : toks) row.push_back(std::stoi(t));
            table_rows.push_back(std::move(row));
            if (--pending_table_rows == 0) {
                G.emplace(make_group_from_table(table_rows));
                int n = G->order();
                omega.assign(n, std::vector<int>(n, 0));
                alpha.assign(static_cast<std::size_t>(n) * n * n, std::nullopt);
            }
            continue;
        }

        const std::string& kw = toks[0];
        if (kw == "group") {
            if (toks.size() != 2) throw parse_error("'group' expects one argument", lineno);
            if (toks[1] == "s3" || toks[1] == "S3") G.emplace(make_s3());
            else G.emplace(make_cyclic_group(std::stoi(toks[1])));
            int n = G->order();
            omega.assign(n, std::vector<int>(n, 0));
            alpha.assign(static_cast<std::size_t>(n) * n * n, std::nullopt);
        } else if (kw == "table") {
            if (toks.size() != 2) throw parse_error("'table' expects the order", lineno);
            pending_table_rows = std::stoi(toks[1]);
            table_rows.clear();
        } else if (kw == "omega") {
            if (toks.size() != 4) throw parse_error("'omega' expects g h v", lineno);
            auto& g = require_group();
            int a = std::stoi(toks[1]), b = std::stoi(toks[2]), v = std::stoi(toks[3]);
            if (a < 0 || a >= g.order() || b < 0 || b >= g.order())
                throw parse_error("omega index out of range", lineno);
            if (v != 0 && v != 1) throw parse_error("omega value must be 0 or 1", lineno);
            omega[a][b] = v;
        } else if (kw == "alpha") {
            auto& g = require_group();
            if (toks.size() < 6) throw parse_error("'alpha' expects g h k N coefficients", lineno);
            int a = std::stoi(toks[1]), b = std::stoi(toks[2]), cc = std::stoi(toks[3]);
            int N = std::stoi(toks[4]);
            if (a < 0 || a >= g.order() || b < 0 || b >= g.order() || cc < 0 || cc >= g.order())
                throw parse_error("alpha index out of range", lineno);
            if (N < 1) throw parse_error("root order must be positive", lineno);
            std::vector<Rational> coeffs;
            for (std::size_t i = 5; i < toks.size(); ++i)
                coeffs.push_back(detail::parse_rational(toks[i], lineno));
            alpha[(static_cast<std::size_t>(a) * g.order() + b) * g.order() + cc] =
                Scalar::exact(CycNumber::from_coeffs(N, std::move(coeffs)));
        } else if (kw == "alpha_float") {
            auto& g = require_group();
            if (toks.size() != 6) throw parse_error("'alpha_float' expects g h k re im", lineno);
            int a = std::stoi(toks[1]), b = std::stoi(toks[2]), cc = std::stoi(toks[3]);
            alpha[(static_cast<std::size_t>(a) * g.order() + b) * g.order() + cc] =
                Scalar::approx({std::stod(toks[4]), std::stod(toks[5])});
        } else {
            throw parse_error("unknown keyword '" + kw + "'", lineno);
        }
    }
    auto& g = require_group();
    std::vector<Scalar> al;
    al.reserve(alpha.size());
    for (auto& a : alpha) al.push_back(a.value_or(Scalar::one()));
    return SuperCocycle(g, std::move(omega), std::move(al), "table");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Usage, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace spinsum
