#include "cocal/catalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace cocal {

namespace {

struct Term {
    int i, j;
    Rat c;
};

LieAlgebra build(int dim, const std::string& name, const std::vector<std::vector<Term>>& rows) {
    LieAlgebra g(dim, name);
    for (size_t k = 0; k < rows.size(); ++k)
        for (auto& t : rows[k]) g.d1[k].add_term(mask_of({t.i, t.j}), t.c);
    return g;
}

const Rat one = rat(1);

}  // namespace

std::string AlgebraId::str() const {
    if (params.empty()) return family;
    std::string s = family + "^{";
    for (size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += rat_str(params[i]);
    }
    return s + "}";
}

int family_dim(const std::string& f) {
    static const std::map<std::string, int> dims = {
        {"R3", 3},     {"h3", 3},      {"e(2)", 3},      {"e(1,1)", 3},   {"so(3)", 3},
        {"so(2,1)", 3}, {"r2R", 3},    {"r3", 3},        {"r3mu", 3},     {"r3'mu", 3},
        {"so(3)R", 4}, {"so(2,1)R", 4}, {"e(2)R", 4},    {"e(1,1)R", 4},  {"h3R", 4},
        {"R4", 4},     {"A_{4,1}", 4}, {"A_{4,2}", 4},   {"A_{4,3}", 4},  {"A_{4,4}", 4},
        {"A_{4,5}", 4}, {"A_{4,6}", 4}, {"A_{4,7}", 4},  {"A_{4,8}", 4},  {"A_{4,9}", 4},
        {"A_{4,10}", 4}, {"A_{4,11}", 4}, {"A_{4,12}", 4}, {"r2r2", 4},   {"r2R2", 4},
        {"r3R", 4},    {"r3muR", 4},  {"r3'muR", 4},     {"R5", 5},       {"h3R2", 5},
        {"A_{5,7}", 5}, {"r2", 2}};
    auto it = dims.find(f);
    if (it == dims.end()) throw std::invalid_argument("unknown family: " + f);
    return it->second;
}

void validate(const AlgebraId& id) {
    const auto& f = id.family;
    const auto& p = id.params;
    auto need = [&](size_t n) {
        if (p.size() != n)
            throw std::invalid_argument(f + ": expected " + std::to_string(n) + " parameter(s)");
    };
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument(id.str() + ": parameter out of range (" + why + ")");
    };
    if (f == "r3mu") {
        need(1);
        if (!(p[0] > -1 && p[0] <= 1) || sgn(p[0]) == 0) fail("-1 < mu <= 1, mu != 0");
    } else if (f == "r3'mu") {
        need(1);
        if (!(sgn(p[0]) > 0)) fail("mu > 0");
    } else if (f == "A_{4,2}") {
        need(1);
        if (sgn(p[0]) == 0) fail("alpha != 0");
    } else if (f == "A_{4,5}") {
        need(2);
        if (!(p[0] >= -1 && p[0] <= p[1] && p[1] <= 1)) fail("-1 <= alpha <= beta <= 1");
        if (sgn(p[0]) == 0 || sgn(p[1]) == 0) fail("alpha*beta != 0");
        if (p[0] == -1 && sgn(p[1]) < 0) fail("alpha = -1 requires beta > 0");
    } else if (f == "A_{4,6}") {
        need(2);
        if (!(sgn(p[0]) > 0)) fail("alpha > 0");
    } else if (f == "A_{4,9}") {
        need(1);
        if (!(p[0] > -1 && p[0] <= 1)) fail("-1 < alpha <= 1");
    } else if (f == "A_{4,11}") {
        need(1);
        if (!(sgn(p[0]) > 0)) fail("alpha > 0");
    } else if (f == "r3muR") {
        need(1);
        if (!(p[0] > -1 && p[0] <= 1) || sgn(p[0]) == 0) fail("-1 < mu <= 1, mu != 0");
    } else if (f == "r3'muR") {
        need(1);
        if (!(sgn(p[0]) > 0)) fail("mu > 0");
    } else if (f == "A_{5,7}") {
        need(3);
        Rat third = rat(-1, 3);
        if (!(p[0] == third && p[1] == third && p[2] == third))
            fail("only A_{5,7}^{-1/3,-1/3,-1/3} is cataloged");
    } else {
        family_dim(f);
        need(0);
    }
}

LieAlgebra instantiate(const AlgebraId& id) {
    validate(id);
    const auto& f = id.family;
    const auto& p = id.params;
    std::string nm = id.str();
    if (f == "R3") return build(3, nm, {{}, {}, {}});
    if (f == "h3") return build(3, nm, {{{2, 3, one}}, {}, {}});
    if (f == "e(2)") return build(3, nm, {{{2, 3, one}}, {{1, 3, -one}}, {}});
    if (f == "e(1,1)") return build(3, nm, {{{2, 3, one}}, {{1, 3, one}}, {}});
    if (f == "so(3)") return build(3, nm, {{{2, 3, one}}, {{1, 3, -one}}, {{1, 2, one}}});
    if (f == "so(2,1)") return build(3, nm, {{{2, 3, one}}, {{1, 3, one}}, {{1, 2, one}}});
    if (f == "r2R") return build(3, nm, {{{1, 3, one}}, {}, {}});
    if (f == "r3") return build(3, nm, {{{1, 3, one}, {2, 3, one}}, {{2, 3, one}}, {}});
    if (f == "r3mu") return build(3, nm, {{{1, 3, one}}, {{2, 3, p[0]}}, {}});
    if (f == "r3'mu")
        return build(3, nm, {{{1, 3, p[0]}, {2, 3, one}}, {{1, 3, -one}, {2, 3, p[0]}}, {}});

    if (f == "so(3)R") return build(4, nm, {{{2, 3, one}}, {{1, 3, -one}}, {{1, 2, one}}, {}});
    if (f == "so(2,1)R") return build(4, nm, {{{2, 3, one}}, {{1, 3, one}}, {{1, 2, one}}, {}});
    if (f == "e(2)R") return build(4, nm, {{{2, 3, one}}, {{1, 3, -one}}, {}, {}});
    if (f == "e(1,1)R") return build(4, nm, {{{2, 3, one}}, {{1, 3, one}}, {}, {}});
    if (f == "h3R") return build(4, nm, {{{2, 3, one}}, {}, {}, {}});
    if (f == "R4") return build(4, nm, {{}, {}, {}, {}});
    if (f == "A_{4,1}") return build(4, nm, {{{2, 4, one}}, {{3, 4, one}}, {}, {}});
    if (f == "A_{4,2}")
        return build(4, nm, {{{1, 4, p[0]}}, {{2, 4, one}, {3, 4, one}}, {{3, 4, one}}, {}});
    if (f == "A_{4,3}") return build(4, nm, {{{1, 4, one}}, {{3, 4, one}}, {}, {}});
    if (f == "A_{4,4}")
        return build(4, nm,
                     {{{1, 4, one}, {2, 4, one}}, {{2, 4, one}, {3, 4, one}}, {{3, 4, one}}, {}});
    if (f == "A_{4,5}")
        return build(4, nm, {{{1, 4, one}}, {{2, 4, p[0]}}, {{3, 4, p[1]}}, {}});
    if (f == "A_{4,6}")
        return build(4, nm,
                     {{{1, 4, p[0]}},
                      {{2, 4, p[1]}, {3, 4, one}},
                      {{2, 4, -one}, {3, 4, p[1]}},
                      {}});
    if (f == "A_{4,7}")
        return build(4, nm,
                     {{{1, 4, rat(2)}, {2, 3, one}}, {{2, 4, one}, {3, 4, one}}, {{3, 4, one}}, {}});
    if (f == "A_{4,8}") return build(4, nm, {{{2, 3, one}}, {{2, 4, one}}, {{3, 4, -one}}, {}});
    if (f == "A_{4,9}")
        return build(4, nm,
                     {{{1, 4, p[0] + 1}, {2, 3, one}}, {{2, 4, one}}, {{3, 4, p[0]}}, {}});
    if (f == "A_{4,10}") return build(4, nm, {{{2, 3, one}}, {{3, 4, one}}, {{2, 4, -one}}, {}});
    if (f == "A_{4,11}")
        return build(4, nm,
                     {{{1, 4, p[0] * 2}, {2, 3, one}},
                      {{2, 4, p[0]}, {3, 4, one}},
                      {{2, 4, -one}, {3, 4, p[0]}},
                      {}});
    if (f == "A_{4,12}")
        return build(4, nm, {{{1, 4, one}, {2, 3, one}}, {{2, 4, one}, {1, 3, -one}}, {}, {}});
    if (f == "r2r2")
        return build(4, nm, {{{1, 4, one}, {2, 3, one}}, {{2, 4, one}, {1, 3, one}}, {}, {}});
    if (f == "r2R2") return build(4, nm, {{{1, 4, one}}, {}, {}, {}});
    if (f == "r3R") return build(4, nm, {{{1, 4, one}, {2, 4, one}}, {{2, 4, one}}, {}, {}});
    if (f == "r3muR") return build(4, nm, {{{1, 4, one}}, {{2, 4, p[0]}}, {}, {}});
    if (f == "r3'muR")
        return build(4, nm, {{{1, 4, p[0]}, {2, 4, one}}, {{1, 4, -one}, {2, 4, p[0]}}, {}, {}});

    if (f == "R5") return build(5, nm, {{}, {}, {}, {}, {}});
    if (f == "h3R2") return build(5, nm, {{{2, 3, one}}, {}, {}, {}, {}});
    if (f == "A_{5,7}")
        return build(5, nm,
                     {{{1, 5, one}},
                      {{2, 5, rat(-1, 3)}},
                      {{3, 5, rat(-1, 3)}},
                      {{4, 5, rat(-1, 3)}},
                      {}});
    throw std::invalid_argument("unknown family: " + f);
}

namespace {

std::string normalize_family(std::string s) {
    // '+'-joined aliases of the composite family tokens
    static const std::map<std::string, std::string> alias = {
        {"r2+R", "r2R"},         {"h3+R", "h3R"},         {"e(2)+R", "e(2)R"},
        {"e(1,1)+R", "e(1,1)R"}, {"so(3)+R", "so(3)R"},   {"so(2,1)+R", "so(2,1)R"},
        {"r2+r2", "r2r2"},       {"r2+R2", "r2R2"},       {"r3+R", "r3R"},
        {"r3mu+R", "r3muR"},     {"r3'mu+R", "r3'muR"},   {"h3+R2", "h3R2"},
        {"R^3", "R3"},           {"R^4", "R4"},           {"R^5", "R5"}};
    auto it = alias.find(s);
    return it == alias.end() ? s : it->second;
}

std::optional<AlgebraId> try_parse(const std::string& name, std::string* why = nullptr) {
    std::string fam = name;
    std::vector<Rat> params;
    size_t caret = name.find('^');
    if (caret != std::string::npos) {
        fam = name.substr(0, caret);
        std::string ps = name.substr(caret + 1);
        if (!ps.empty() && ps.front() == '{') {
            if (ps.back() != '}') return std::nullopt;
            ps = ps.substr(1, ps.size() - 2);
        }
        std::stringstream ss(ps);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                params.push_back(rat_parse(tok));
            } catch (const std::exception&) {
                return std::nullopt;
            }
        }
        if (params.empty()) return std::nullopt;
    }
    fam = normalize_family(fam);
    AlgebraId id{fam, params};
    try {
        validate(id);
    } catch (const std::exception& e) {
        // remember range violations of recognized families for diagnostics
        if (why) {
            try {
                family_dim(fam);
                *why = e.what();
            } catch (const std::exception&) {
            }
        }
        return std::nullopt;
    }
    return id;
}

}  // namespace

AlgebraId parse(const std::string& name) {
    std::string why;
    auto id = try_parse(name, &why);
    if (!id)
        throw std::invalid_argument(why.empty() ? "cannot parse algebra name: " + name : why);
    return *id;
}

std::pair<AlgebraId, AlgebraId> parse_pair(const std::string& name) {
    std::vector<std::pair<AlgebraId, AlgebraId>> hits;
    std::string why;
    for (size_t pos = name.find('+'); pos != std::string::npos; pos = name.find('+', pos + 1)) {
        auto left = try_parse(name.substr(0, pos), &why);
        auto right = try_parse(name.substr(pos + 1), &why);
        if (!left || !right) continue;
        int dl = family_dim(left->family), dr = family_dim(right->family);
        if ((dl == 4 && dr == 3) || (dl == 5 && dr == 2)) hits.push_back({*left, *right});
    }
    if (hits.size() != 1) {
        if (hits.empty() && !why.empty()) throw std::invalid_argument(why);
        throw std::invalid_argument(hits.empty()
                                        ? "cannot split '" + name + "' into a valid direct sum"
                                        : "ambiguous direct sum: " + name);
    }
    return hits[0];
}

std::vector<std::vector<Rat>> param_grid(const std::string& f) {
    auto r = [](long n, long d = 1) { return rat(n, d); };
    if (f == "r3mu" || f == "r3muR")
        return {{r(1)}, {r(1, 2)}, {r(-1, 2)}, {r(-1, 4)}, {r(-1, 3)}};
    if (f == "r3'mu" || f == "r3'muR") return {{r(1)}, {r(2)}, {r(1, 2)}};
    if (f == "A_{4,2}") return {{r(-2)}, {r(-1)}, {r(1)}, {r(3)}, {r(-1, 2)}};
    if (f == "A_{4,5}")
        return {{r(-1, 2), r(-1, 2)}, {r(-3, 4), r(-1, 4)}, {r(1, 2), r(1)},
                {r(1, 3), r(1, 2)},   {r(-1), r(1, 2)},     {r(-1), r(1)}};
    if (f == "A_{4,6}")
        return {{r(2), r(-1)}, {r(1), r(-1, 2)}, {r(1), r(1)}, {r(2), r(1, 3)}, {r(1), r(0)},
                {r(3), r(0)}};
    if (f == "A_{4,9}")
        return {{r(1)}, {r(-1, 2)}, {r(0)}, {r(1, 3)}, {r(-1, 4)}, {r(-1, 3)}, {r(-2, 3)}};
    if (f == "A_{4,11}") return {{r(1)}, {r(1, 2)}, {r(2)}};
    if (f == "A_{5,7}") return {{r(-1, 3), r(-1, 3), r(-1, 3)}};
    return {{}};
}

std::string param_range(const std::string& f) {
    if (f == "r3mu" || f == "r3muR") return "-1 < mu <= 1, mu != 0";
    if (f == "r3'mu" || f == "r3'muR") return "mu > 0";
    if (f == "A_{4,2}") return "alpha != 0";
    if (f == "A_{4,5}") return "-1 <= alpha <= beta <= 1, alpha beta != 0, beta > 0 when alpha = -1";
    if (f == "A_{4,6}") return "alpha > 0";
    if (f == "A_{4,9}") return "-1 < alpha <= 1";
    if (f == "A_{4,11}") return "alpha > 0";
    if (f == "A_{5,7}") return "(-1/3, -1/3, -1/3) only";
    return "";
}

namespace {
std::vector<std::vector<Rat>> grid_for(const std::string& f, const ParamOverride* ov) {
    if (ov) {
        auto it = ov->find(f);
        if (it != ov->end()) return it->second;
    }
    return param_grid(f);
}
}  // namespace

std::vector<AlgebraId> all_3d_ids(const ParamOverride* ov) {
    std::vector<AlgebraId> ids;
    for (const char* f : {"so(3)", "so(2,1)", "e(2)", "e(1,1)", "h3", "R3", "r2R", "r3", "r3mu",
                          "r3'mu"})
        for (auto& p : grid_for(f, ov)) ids.push_back({f, p});
    return ids;
}

std::vector<AlgebraId> all_4d_ids(const ParamOverride* ov) {
    std::vector<AlgebraId> ids;
    for (const char* f :
         {"so(3)R", "so(2,1)R", "e(2)R", "e(1,1)R", "h3R", "R4", "A_{4,1}", "A_{4,2}", "A_{4,3}",
          "A_{4,4}", "A_{4,5}", "A_{4,6}", "A_{4,7}", "A_{4,8}", "A_{4,9}", "A_{4,10}", "A_{4,11}",
          "A_{4,12}", "r2r2", "r2R2", "r3R", "r3muR", "r3'muR"})
        for (auto& p : grid_for(f, ov)) ids.push_back({f, p});
    return ids;
}

namespace {

Fixture fx(AlgebraId id, std::vector<int> h, bool uni, std::vector<std::string> ker, int cd,
           std::vector<int> last) {
    return Fixture{std::move(id), std::move(h), uni, std::move(ker), cd, std::move(last)};
}

}  // namespace

std::vector<Fixture> catalog_fixtures() {
    std::vector<Fixture> out;
    // three-dimensional families
    out.push_back(fx({"so(3)", {}}, {0, 0, 1}, true, {}, 3, {}));
    out.push_back(fx({"so(2,1)", {}}, {0, 0, 1}, true, {}, 3, {}));
    out.push_back(fx({"e(2)", {}}, {1, 1, 1}, true, {}, 2, {}));
    out.push_back(fx({"e(1,1)", {}}, {1, 1, 1}, true, {}, 2, {}));
    out.push_back(fx({"h3", {}}, {2, 2, 1}, true, {}, 1, {}));
    out.push_back(fx({"R3", {}}, {3, 3, 1}, true, {}, 0, {}));
    out.push_back(fx({"r2R", {}}, {2, 1, 0}, false, {}, 1, {}));
    out.push_back(fx({"r3", {}}, {1, 0, 0}, false, {}, 2, {}));
    for (auto& p : param_grid("r3mu")) out.push_back(fx({"r3mu", p}, {1, 0, 0}, false, {}, 2, {}));
    for (auto& p : param_grid("r3'mu"))
        out.push_back(fx({"r3'mu", p}, {1, 0, 0}, false, {}, 2, {}));
    // four-dimensional families, unimodular
    out.push_back(fx({"so(3)R", {}}, {1, 0, 1, 1}, true, {"so(3)"}, 3, {1}));
    out.push_back(fx({"so(2,1)R", {}}, {1, 0, 1, 1}, true, {"so(2,1)"}, 3, {1}));
    out.push_back(fx({"e(2)R", {}}, {2, 2, 2, 1}, true, {"R3", "e(2)"}, 2, {3, 1}));
    out.push_back(fx({"e(1,1)R", {}}, {2, 2, 2, 1}, true, {"R3", "e(1,1)"}, 2, {3, 1}));
    out.push_back(fx({"h3R", {}}, {3, 4, 3, 1}, true, {"R3", "h3"}, 1, {2, 1}));
    out.push_back(fx({"R4", {}}, {4, 6, 4, 1}, true, {"R3"}, 0, {1}));
    out.push_back(fx({"A_{4,1}", {}}, {2, 2, 2, 1}, true, {"R3", "h3"}, 2, {3, 2}));
    out.push_back(fx({"A_{4,8}", {}}, {1, 0, 1, 1}, true, {"h3"}, 3, {3}));
    out.push_back(fx({"A_{4,10}", {}}, {1, 0, 1, 1}, true, {"h3"}, 3, {3}));
    // parameterized families: route each grid point to its catalog row
    for (auto& p : param_grid("A_{4,2}")) {
        if (p[0] == -2)
            out.push_back(fx({"A_{4,2}", p}, {1, 0, 1, 1}, true, {"R3"}, 3, {4}));
        else if (p[0] == -1)
            out.push_back(fx({"A_{4,2}", p}, {1, 1, 1, 0}, false, {"R3"}, 3, {3}));
        else
            out.push_back(fx({"A_{4,2}", p}, {1, 0, 0, 0}, false, {"R3"}, 3, {4}));
    }
    out.push_back(fx({"A_{4,3}", {}}, {2, 2, 1, 0}, false, {"R3"}, 2, {3}));
    out.push_back(fx({"A_{4,4}", {}}, {1, 0, 0, 0}, false, {"R3"}, 3, {4}));
    for (auto& p : param_grid("A_{4,5}")) {
        if (p[1] == -p[0] - 1)
            out.push_back(fx({"A_{4,5}", p}, {1, 0, 1, 1}, true, {"R3"}, 3, {4}));
        else if (p[0] == -1 && p[1] == 1)
            out.push_back(fx({"A_{4,5}", p}, {1, 2, 2, 0}, false, {"R3"}, 3, {2}));
        else if (p[0] == -1)
            out.push_back(fx({"A_{4,5}", p}, {1, 1, 1, 0}, false, {"R3"}, 3, {3}));
        else
            out.push_back(fx({"A_{4,5}", p}, {1, 0, 0, 0}, false, {"R3"}, 3, {4}));
    }
    for (auto& p : param_grid("A_{4,6}")) {
        if (p[1] == -p[0] / 2)
            out.push_back(fx({"A_{4,6}", p}, {1, 0, 1, 1}, true, {"R3"}, 3, {4}));
        else if (sgn(p[1]) == 0)
            out.push_back(fx({"A_{4,6}", p}, {1, 1, 1, 0}, false, {"R3"}, 3, {3}));
        else
            out.push_back(fx({"A_{4,6}", p}, {1, 0, 0, 0}, false, {"R3"}, 3, {4}));
    }
    out.push_back(fx({"A_{4,7}", {}}, {1, 0, 0, 0}, false, {"h3"}, 3, {3}));
    for (auto& p : param_grid("A_{4,9}")) {
        if (p[0] == rat(-1, 2))
            out.push_back(fx({"A_{4,9}", p}, {1, 1, 1, 0}, false, {"h3"}, 3, {2}));
        else if (sgn(p[0]) == 0)
            out.push_back(fx({"A_{4,9}", p}, {2, 1, 0, 0}, false, {"h3"}, 2, {3}));
        else
            out.push_back(fx({"A_{4,9}", p}, {1, 0, 0, 0}, false, {"h3"}, 3, {3}));
    }
    for (auto& p : param_grid("A_{4,11}"))
        out.push_back(fx({"A_{4,11}", p}, {1, 0, 0, 0}, false, {"h3"}, 3, {3}));
    out.push_back(fx({"A_{4,12}", {}}, {2, 1, 0, 0}, false, {"e(2)"}, 2, {2}));
    out.push_back(fx({"r2r2", {}}, {2, 1, 0, 0}, false, {"e(1,1)"}, 2, {2}));
    out.push_back(fx({"r2R2", {}}, {3, 3, 1, 0}, false, {"R3"}, 1, {3}));
    out.push_back(fx({"r3R", {}}, {2, 1, 0, 0}, false, {"R3"}, 2, {4}));
    for (auto& p : param_grid("r3muR"))
        out.push_back(fx({"r3muR", p}, {2, 1, 0, 0}, false, {"R3"}, 2, {4}));
    for (auto& p : param_grid("r3'muR"))
        out.push_back(fx({"r3'muR", p}, {2, 1, 0, 0}, false, {"R3"}, 2, {4}));
    return out;
}

std::optional<std::vector<KForm<Quad>>> table3_example(const AlgebraId& g4, const AlgebraId& g3) {
    auto e = [](int i, const Quad& c) {
        KForm<Quad> f(7, 1);
        f.add_term(1u << (i - 1), c);
        return f;
    };
    auto qi = [](long n, long d = 1) { return Quad(rat(n, d)); };
    auto rt5 = [](long n, long d) { return Quad(Rat(0), rat(n, d), rat(5)); };    // (n/d) sqrt 5
    auto rt10 = [](long n, long d) { return Quad(Rat(0), rat(n, d), rat(10)); };  // (n/d) sqrt 10
    bool r31 = (g3.family == "r3mu" && g3.params.size() == 1 && g3.params[0] == 1);
    if (g4.family == "A_{4,8}" && g3.family == "e(1,1)") {
        return std::vector<KForm<Quad>>{e(5, qi(1)), e(6, qi(1)), e(7, qi(1)), e(4, qi(1)),
                                        e(2, qi(1)), e(3, qi(1)), e(1, qi(1))};
    }
    if (g4.family == "A_{4,12}" && r31) {
        return std::vector<KForm<Quad>>{
            e(1, rt5(-1, 3)),
            e(4, rt5(1, 1)),
            e(2, qi(1)) + e(5, rt5(-4, 5)),
            e(3, qi(1)) + e(6, rt5(2, 5)),
            e(5, qi(1)),
            e(6, qi(1)),
            e(7, qi(1))};
    }
    if (g4.family == "r2r2" && r31) {
        // 1/(2 sqrt10) = sqrt10/20, 1/(3 sqrt10) = sqrt10/30, 9/sqrt10 = (9/10) sqrt10
        return std::vector<KForm<Quad>>{
            e(2, qi(1)) + e(5, qi(13, 9)),
            e(5, qi(1)),
            e(3, qi(1)) + e(6, qi(3)),
            e(6, qi(1)),
            e(7, rt10(1, 20)),
            e(4, rt10(1, 30)),
            e(1, rt10(9, 10))};
    }
    return std::nullopt;
}

}  // namespace cocal
