#include "cocal/serialization.hpp"
#include "cocal/sweep.hpp"

#include <fstream>
#include <iostream>

using namespace cocal;

namespace {

int usage() {
    std::cerr <<
        "usage: cocal <command> [options]\n"
        "  classify  \"<g4>+<g3>\" [--explain] [--certificate FILE] [--json]\n"
        "  construct \"<g4>+<g3>\" [-o FILE] [--route] [--json]\n"
        "  verify    FILE [--json]\n"
        "  cohomology \"<name>\" [--json]\n"
        "  catalog   list [--json]\n"
        "  sweep     [--serial] [--no-certificates] [--json]\n"
        "exit codes: 0 exists/valid, 1 not-exists/invalid, 2 error\n";
    return 2;
}

bool has_flag(std::vector<std::string>& args, const std::string& f) {
    for (auto it = args.begin(); it != args.end(); ++it)
        if (*it == f) {
            args.erase(it);
            return true;
        }
    return false;
}

std::string take_opt(std::vector<std::string>& args, const std::string& f) {
    for (auto it = args.begin(); it != args.end(); ++it)
        if (*it == f && it + 1 != args.end()) {
            std::string v = *(it + 1);
            args.erase(it, it + 2);
            return v;
        }
    return "";
}

json verdict_json(const AlgebraId& a, const AlgebraId& b, const Verdict& v) {
    json out;
    out["g4"] = a.str();
    out["g3"] = b.str();
    out["exists"] = v.exists;
    if (v.exists)
        out["route"] = route_tag(v.route);
    else
        out["obstruction"] = obstruction_tag(v.obstruction);
    out["branch"] = std::string(1, v.data.branch);
    out["clause"] = v.data.subclause;
    if (v.data.q) out["q"] = *v.data.q;
    if (!v.data.kernel4.empty()) out["kernel"] = v.data.kernel4;
    return out;
}

LieAlgebra algebra_of_pair(const AlgebraId& a, const AlgebraId& b) {
    if (family_dim(a.family) == 5) return five_r2_sum(instantiate(a));
    return direct_sum(instantiate(a), instantiate(b));
}

int cmd_classify(std::vector<std::string> args) {
    bool as_json = has_flag(args, "--json");
    bool explain_flag = has_flag(args, "--explain");
    std::string cert_file = take_opt(args, "--certificate");
    if (args.size() != 1) return usage();
    auto [a, b] = parse_pair(args[0]);
    Verdict v = decide(a, b);
    if (as_json)
        std::cout << verdict_json(a, b, v).dump(2) << "\n";
    else if (explain_flag)
        std::cout << explain(a, b, v) << "\n";
    else if (v.exists)
        std::cout << "Exists (" << v.data.subclause << "; route " << route_tag(v.route) << ")\n";
    else
        std::cout << "NotExists (" << obstruction_tag(v.obstruction) << ")\n";
    if (v.exists && !cert_file.empty()) {
        Certificate cert = family_dim(a.family) == 5 ? construct_5d_r2(instantiate(a))
                                                     : construct(a, b, v);
        std::ofstream out(cert_file);
        out << certificate_to_json(cert, algebra_of_pair(a, b)).dump(2) << "\n";
    }
    return v.exists ? 0 : 1;
}

int cmd_construct(std::vector<std::string> args) {
    bool as_json = has_flag(args, "--json");
    bool route_flag = has_flag(args, "--route");
    std::string out_file = take_opt(args, "-o");
    if (args.size() != 1) return usage();
    auto [a, b] = parse_pair(args[0]);
    Verdict v = decide(a, b);
    if (!v.exists) {
        std::cerr << "no cocalibrated G2-structure exists on " << args[0] << " ("
                  << obstruction_tag(v.obstruction) << ")\n";
        return 1;
    }
    Certificate cert =
        family_dim(a.family) == 5 ? construct_5d_r2(instantiate(a)) : construct(a, b, v);
    json j = certificate_to_json(cert, algebra_of_pair(a, b));
    if (!out_file.empty()) {
        std::ofstream out(out_file);
        out << j.dump(2) << "\n";
    }
    if (route_flag) std::cout << cert.route << "\n";
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else if (!route_flag)
        std::cout << "certificate with "
                  << (cert.kind == Evidence::Coframe ? "adapted-coframe" : "numeric-stability")
                  << " evidence via route " << cert.route << "\n";
    return 0;
}

int cmd_verify(std::vector<std::string> args) {
    bool as_json = has_flag(args, "--json");
    if (args.size() != 1) return usage();
    std::ifstream in(args[0]);
    if (!in) {
        std::cerr << "cannot open " << args[0] << "\n";
        return 2;
    }
    json j = json::parse(in);
    auto [cert, g] = certificate_from_json(j);
    std::string why;
    bool ok = verify_certificate(g, cert, &why);
    if (as_json)
        std::cout << json{{"valid", ok}, {"reason", why}}.dump(2) << "\n";
    else
        std::cout << (ok ? "valid" : "INVALID: " + why) << "\n";
    return ok ? 0 : 1;
}

int cmd_cohomology(std::vector<std::string> args) {
    bool as_json = has_flag(args, "--json");
    if (args.size() != 1) return usage();
    LieAlgebra g;
    try {
        AlgebraId id = parse(args[0]);
        g = instantiate(id);
    } catch (const std::exception&) {
        // not a single catalog member: try a direct-sum split, but keep the
        // more specific single-name diagnostic when no split exists either
        try {
            auto [a, b] = parse_pair(args[0]);
            g = algebra_of_pair(a, b);
        } catch (const std::exception& pair_err) {
            std::string msg = pair_err.what();
            if (msg.find("cannot split") == 0) parse(args[0]);  // rethrows the name error
            throw;
        }
    }
    CohomologyVector h = cohomology(g);
    if (as_json) {
        std::cout << json{{"name", g.name}, {"h", h.h}}.dump(2) << "\n";
    } else {
        std::cout << "(";
        for (size_t i = 0; i < h.h.size(); ++i) std::cout << (i ? "," : "") << h.h[i];
        std::cout << ")\n";
    }
    return 0;
}

json fixture_row(const Fixture& fx) {
    json r;
    r["name"] = fx.id.str();
    r["family"] = fx.id.family;
    std::string range = param_range(fx.id.family);
    if (!range.empty()) r["range"] = range;
    r["h"] = fx.h;
    r["unimodular"] = fx.unimodular;
    if (!fx.kernel_classes.empty()) r["u"] = fx.kernel_classes;
    r["dim_commutator"] = fx.comm_dim;
    if (!fx.last_col.empty()) r["h1+h1(u)-h2"] = fx.last_col;
    return r;
}

int cmd_catalog(std::vector<std::string> args) {
    bool as_json = has_flag(args, "--json");
    if (args.size() == 2 && args[0] == "dump") {
        // machine-readable catalog + fixture sidecar
        json algebras = json::array();
        auto add = [&](const AlgebraId& id) {
            json r;
            r["name"] = id.str();
            std::string range = param_range(id.family);
            if (!range.empty()) r["range"] = range;
            r["algebra"] = algebra_to_json(instantiate(id));
            algebras.push_back(r);
        };
        for (auto& id : all_3d_ids()) add(id);
        for (auto& id : all_4d_ids()) add(id);
        for (const char* f : {"R5", "h3R2"}) add(parse(f));
        add(parse("A_{5,7}^{-1/3,-1/3,-1/3}"));
        json fixtures = json::array();
        for (auto& fx : catalog_fixtures()) fixtures.push_back(fixture_row(fx));
        std::ofstream cat(args[1] + "/catalog.json"), fix(args[1] + "/fixtures.json");
        if (!cat || !fix) {
            std::cerr << "cannot write to " << args[1] << "\n";
            return 2;
        }
        cat << algebras.dump(2) << "\n";
        fix << fixtures.dump(2) << "\n";
        std::cout << "wrote " << algebras.size() << " algebras and " << fixtures.size()
                  << " fixture rows to " << args[1] << "\n";
        return 0;
    }
    if (args.size() != 1 || args[0] != "list") return usage();
    json rows = json::array();
    for (auto& fx : catalog_fixtures()) {
        if (as_json) {
            rows.push_back(fixture_row(fx));
        } else {
            std::cout << fx.id.str() << "\th=(";
            for (size_t i = 0; i < fx.h.size(); ++i) std::cout << (i ? "," : "") << fx.h[i];
            std::cout << ")\t" << (fx.unimodular ? "unimodular" : "non-unimodular");
            std::string range = param_range(fx.id.family);
            if (!range.empty()) std::cout << "\trange: " << range;
            if (!fx.kernel_classes.empty()) {
                std::cout << "\tu=";
                for (size_t i = 0; i < fx.kernel_classes.size(); ++i)
                    std::cout << (i ? "," : "") << fx.kernel_classes[i];
            }
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << rows.dump(2) << "\n";
    return 0;
}

int cmd_sweep(std::vector<std::string> args) {
    bool as_json = has_flag(args, "--json");
    bool serial = has_flag(args, "--serial");
    bool no_certs = has_flag(args, "--no-certificates");
    std::string params_file = take_opt(args, "--params");
    if (!args.empty()) return usage();
    ParamOverride params;
    if (!params_file.empty()) {
        std::ifstream in(params_file);
        if (!in) {
            std::cerr << "cannot open " << params_file << "\n";
            return 2;
        }
        json j = json::parse(in);
        for (auto& [fam, grids] : j.items()) {
            std::vector<std::vector<Rat>> g;
            for (auto& row : grids) {
                std::vector<Rat> p;
                for (auto& v : row) p.push_back(rat_parse(v.get<std::string>()));
                g.push_back(p);
            }
            params[fam] = g;
        }
    }
    SweepResult res = run_sweep(!serial, !no_certs, params_file.empty() ? nullptr : &params);
    if (as_json) {
        json items = json::array();
        for (auto& it : res.items) {
            json r;
            r["pair"] = it.g4.str() + "+" + it.g3.str();
            r["exists"] = it.exists;
            r["label"] = it.label;
            r["certificate_ok"] = it.cert_ok;
            if (!it.error.empty()) r["error"] = it.error;
            items.push_back(r);
        }
        std::cout << json{{"pairs", (int)res.items.size()},
                          {"exists", res.exists_count},
                          {"not_exists", res.not_exists_count},
                          {"certificate_failures", res.cert_failures},
                          {"seconds", res.seconds},
                          {"items", items}}
                         .dump(2)
                  << "\n";
    } else {
        for (auto& it : res.items) {
            std::cout << it.g4.str() << "+" << it.g3.str() << "\t"
                      << (it.exists ? "Exists" : "NotExists") << "\t" << it.label;
            if (it.exists) std::cout << "\tcert=" << (it.cert_ok ? "ok" : "FAIL");
            if (!it.error.empty()) std::cout << "\terror=" << it.error;
            std::cout << "\n";
        }
        std::cout << res.items.size() << " pairs, " << res.exists_count << " exist, "
                  << res.not_exists_count << " do not, " << res.cert_failures
                  << " certificate failures, " << res.seconds << "s\n";
    }
    return res.cert_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage();
    std::string cmd = argv[1];
    std::vector<std::string> args(argv + 2, argv + argc);
    try {
        if (cmd == "classify") return cmd_classify(args);
        if (cmd == "construct") return cmd_construct(args);
        if (cmd == "verify") return cmd_verify(args);
        if (cmd == "cohomology") return cmd_cohomology(args);
        if (cmd == "catalog") return cmd_catalog(args);
        if (cmd == "sweep") return cmd_sweep(args);
        return usage();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
