#include "cocal/serialization.hpp"

namespace cocal {

std::string quad_str(const Quad& q) { return q.str(); }

Quad quad_parse(const std::string& s) {
    size_t sq = s.find("sqrt(");
    if (sq == std::string::npos) return Quad(rat_parse(s));
    size_t close = s.rfind(')');
    if (close == std::string::npos || close < sq) throw std::invalid_argument("bad coefficient: " + s);
    Rat rad = rat_parse(s.substr(sq + 5, close - sq - 5));
    // split "<a><sign><b>*sqrt(rad)"; the b-part ends with "sqrt(...)"
    std::string head = s.substr(0, sq);
    if (!head.empty() && head.back() == '*') head.pop_back();
    // find the split between a and b: the last '+' or '-' not at position 0
    // and not part of the b coefficient start
    Rat a(0), b(1);
    if (head.empty()) {
        // pure sqrt
    } else if (head == "-") {
        b = Rat(-1);
    } else {
        size_t split = std::string::npos;
        for (size_t i = head.size(); i-- > 1;) {
            if (head[i] == '+' || head[i] == '-') {
                if (head[i - 1] == '/' ) continue;
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            b = rat_parse(head);
        } else {
            a = rat_parse(head.substr(0, split));
            std::string bs = head.substr(split);
            if (bs == "+")
                b = Rat(1);
            else if (bs == "-")
                b = Rat(-1);
            else
                b = rat_parse(bs);
        }
    }
    return Quad(a, b, rad);
}

json kform_to_json(const KForm<Quad>& f) {
    json terms = json::array();
    for (auto& [m, c] : f.terms) {
        json t;
        t["indices"] = mask_indices(m);
        t["coeff"] = quad_str(c);
        terms.push_back(t);
    }
    return json{{"dim", f.dim}, {"degree", f.degree}, {"terms", terms}};
}

KForm<Quad> kform_from_json(const json& j) {
    KForm<Quad> f(j.at("dim").get<int>(), j.at("degree").get<int>());
    for (auto& t : j.at("terms")) {
        Mask m = 0;
        for (int i : t.at("indices").get<std::vector<int>>()) m |= 1u << (i - 1);
        f.add_term(m, quad_parse(t.at("coeff").get<std::string>()));
    }
    return f;
}

json qform_to_json(const QForm& f) { return kform_to_json(lift<Quad>(f)); }

QForm qform_from_json(const json& j) {
    KForm<Quad> q = kform_from_json(j);
    QForm f(q.dim, q.degree);
    for (auto& [m, c] : q.terms) f.add_term(m, c.as_rat());
    return f;
}

json algebra_to_json(const LieAlgebra& g) {
    json d = json::array();
    for (auto& f : g.d1) d.push_back(qform_to_json(f));
    json out{{"dim", g.dim}, {"d", d}};
    if (!g.name.empty()) out["name"] = g.name;
    return out;
}

LieAlgebra algebra_from_json(const json& j) {
    LieAlgebra g(j.at("dim").get<int>());
    if (j.contains("name")) g.name = j.at("name").get<std::string>();
    auto& d = j.at("d");
    if ((int)d.size() != g.dim) throw std::invalid_argument("algebra JSON: wrong number of d-forms");
    for (int i = 0; i < g.dim; ++i) {
        QForm f = qform_from_json(d[i]);
        if (f.dim != g.dim || f.degree != 2)
            throw std::invalid_argument("algebra JSON: d-entries must be 2-forms");
        g.d1[i] = f;
    }
    return g;
}

json certificate_to_json(const Certificate& c, const LieAlgebra& g) {
    json evidence;
    if (c.kind == Evidence::Coframe) {
        evidence["kind"] = "coframe";
        json cof = json::array();
        for (auto& f : c.coframe) cof.push_back(kform_to_json(f));
        evidence["coframe"] = cof;
    } else {
        evidence["kind"] = "numeric";
        evidence["margin"] = c.margin;
        evidence["precision"] = kNumericPrecision;
    }
    json out;
    out["psi"] = kform_to_json(c.psi);
    out["evidence"] = evidence;
    out["algebra"] = algebra_to_json(g);
    if (!c.route.empty()) out["route"] = c.route;
    return out;
}

std::pair<Certificate, LieAlgebra> certificate_from_json(const json& j) {
    Certificate c;
    c.psi = kform_from_json(j.at("psi"));
    auto& ev = j.at("evidence");
    std::string kind = ev.at("kind").get<std::string>();
    if (kind == "coframe") {
        c.kind = Evidence::Coframe;
        for (auto& f : ev.at("coframe")) c.coframe.push_back(kform_from_json(f));
    } else if (kind == "numeric") {
        c.kind = Evidence::Numeric;
        c.margin = ev.value("margin", 0.0);
    } else {
        throw std::invalid_argument("certificate JSON: unknown evidence kind");
    }
    if (j.contains("route")) c.route = j.at("route").get<std::string>();
    LieAlgebra g = algebra_from_json(j.at("algebra"));
    c.algebra = g.name;
    return {c, g};
}

}  // namespace cocal
