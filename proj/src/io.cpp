#include "brauer/io.hpp"

#include "brauer/verify.hpp"

namespace brauer {

json diagram_to_json(const Diagram& d) {
    json pairs = json::array();
    for (auto& [a, b] : d.pairs()) pairs.push_back(json::array({a, b}));
    return json{{"n", d.n()}, {"pairs", pairs}};
}

Diagram diagram_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> pairs;
    for (auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return Diagram(n, std::move(pairs));
}

json element_to_json(const Element& a) {
    json terms = json::array();
    for (auto& [d, c] : a.terms()) {
        json pairs = json::array();
        for (auto& [x, y] : d.pairs()) pairs.push_back(json::array({x, y}));
        terms.push_back(json{{"pairs", pairs}, {"coeff", a.ring().to_string(c)}});
    }
    return json{{"n", a.n()},
                {"ring", a.ring().spec_string()},
                {"delta", a.ring().to_string(a.ring().delta())},
                {"terms", terms}};
}

Element element_from_json(const json& j) {
    Ring ring = Ring::parse(j.at("ring").get<std::string>(),
                            j.value("delta", std::string("0")));
    int n = j.at("n").get<int>();
    Element a(n, ring);
    for (auto& t : j.at("terms")) {
        std::vector<std::pair<int, int>> pairs;
        for (auto& p : t.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
        a.add_term(Diagram(n, std::move(pairs)),
                   ring.parse_scalar(t.at("coeff").get<std::string>()));
    }
    return a;
}

json box_diagram_to_json(const BoxDiagram& b) {
    json pairs = json::array();
    for (auto& [x, y] : b.pairs()) pairs.push_back(json::array({x, y}));
    return json{{"n", b.n()}, {"m", b.m()}, {"pairs", pairs}, {"box", b.box()}};
}

BoxDiagram box_diagram_from_json(const json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return BoxDiagram(j.at("n").get<int>(), j.at("m").get<int>(), std::move(pairs),
                      j.at("box").get<std::vector<int>>());
}

json homology_row_to_json(int degree, const HomologyGroup& g) {
    json torsion = json::array();
    for (auto& d : g.torsion) torsion.push_back(d.str());
    return json{{"degree", degree}, {"free_rank", g.free_rank}, {"torsion", torsion}};
}

json complex_to_json(const ChainComplex& c, bool with_labels,
                     const std::vector<std::vector<std::string>>* labels) {
    json ranks = json::array();
    for (int p = c.lo(); p <= c.hi(); ++p)
        ranks.push_back(json{{"degree", p}, {"rank", c.rank(p)}});
    json bnds = json::array();
    for (int p = c.lo() + 1; p <= c.hi(); ++p) {
        const RatMat& m = c.boundary(p);
        json entries = json::array();
        for (int col = 0; col < m.cols; ++col)
            for (auto& [r, v] : m.col[col])
                entries.push_back(json::array({r, col, c.ring().to_string(v)}));
        bnds.push_back(json{{"degree", p}, {"rows", m.rows}, {"cols", m.cols},
                            {"entries", entries}});
    }
    json out{{"ring", c.ring().spec_string()},
             {"delta", c.ring().to_string(c.ring().delta())},
             {"lo", c.lo()},
             {"hi", c.hi()},
             {"ranks", ranks},
             {"boundaries", bnds}};
    if (with_labels && labels) {
        json labs = json::array();
        for (auto& per_degree : *labels) labs.push_back(per_degree);
        out["labels"] = labs;
    }
    return out;
}

json suite_report_to_json(const SuiteReport& rep) {
    json checks = json::array();
    for (auto& line : rep.lines)
        checks.push_back(json{{"name", line.name},
                              {"expected", line.expected},
                              {"computed", line.computed},
                              {"pass", line.pass}});
    return json{{"suite", rep.suite}, {"pass", rep.pass}, {"checks", checks}};
}

json tor_result_to_json(const TorResult& t) {
    json rows = json::array();
    for (int i = 0; i < (int)t.groups.size(); ++i)
        rows.push_back(homology_row_to_json(i, t.groups[i]));
    return json{{"algebra", t.spec.alg == AlgebraKind::brauer ? "brauer" : "sym"},
                {"n", t.spec.n},
                {"ring", t.spec.ring.spec_string()},
                {"delta", t.spec.ring.to_string(t.spec.ring.delta())},
                {"coefficients", t.spec.coeff.describe()},
                {"maxdeg", t.D},
                {"groups", rows}};
}

}  // namespace brauer
