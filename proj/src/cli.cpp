#include "cosmotope/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "cosmotope/canonical_form.hpp"
#include "cosmotope/facet_rules.hpp"

namespace cosmo {

namespace {

using json = nlohmann::ordered_json;

const char* kVersion = "1.0";

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected an integer for " + what + ", got '" + s + "'");
    }
}

struct OrderChoice {
    TermOrder order;
    std::string how;  // which rule picked it
};

std::vector<int> read_lex_file(const std::string& path, const GeneratorTable& table) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open order file " + path);
    std::map<std::string, int> by_name;
    for (int id = 0; id < table.count(); ++id) by_name[table.name(id)] = id;
    std::vector<int> seq;
    std::string tok;
    while (in >> tok) {
        auto it = by_name.find(tok);
        if (it == by_name.end()) throw UsageError("unknown generator '" + tok + "' in order file");
        seq.push_back(it->second);
    }
    return seq;
}

int smallest_leaf(const Graph& g) {
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.is_leaf(v)) return v;
    throw ValidationError("graph has no leaf");
}

OrderChoice resolve_order(const std::string& spec, const GeneratorTable& table) {
    const Graph& g = table.graph();
    if (spec == "path") return {specialized_order(table, OrderKind::Path), "path"};
    if (spec == "cycle") return {specialized_order(table, OrderKind::Cycle), "cycle"};
    if (starts_with(spec, "tree:")) {
        int root = parse_int(spec.substr(5), "tree root");
        return {specialized_order(table, OrderKind::Tree, root), spec};
    }
    if (starts_with(spec, "lex:"))
        return {generic_good_order(table, read_lex_file(spec.substr(4), table)), spec};
    if (spec == "auto") {
        if (g.is_canonical_path()) return {specialized_order(table, OrderKind::Path), "auto:path"};
        if (g.is_canonical_cycle()) return {specialized_order(table, OrderKind::Cycle), "auto:cycle"};
        if (g.is_tree()) {
            int root = smallest_leaf(g);
            return {specialized_order(table, OrderKind::Tree, root),
                    "auto:tree:" + std::to_string(root)};
        }
        return {generic_good_order(table, default_generic_sequence(table)), "auto:generic"};
    }
    throw UsageError("unknown order spec '" + spec + "'");
}

json command_echo(const Command& c) {
    json j;
    j["verb"] = c.verb;
    j["graph"] = c.graph_spec;
    j["order"] = c.order_spec;
    j["seed"] = c.seed;
    if (c.verb == "canonical-eval") j["count"] = c.count;
    return j;
}

Report finish(const Command& c, bool pass, const std::string& text, json results) {
    json j;
    j["version"] = kVersion;
    j["command"] = command_echo(c);
    j["results"] = std::move(results);
    j["pass"] = pass;
    Report r;
    r.pass = pass;
    r.text = text;
    r.structured = j.dump(2) + "\n";
    return r;
}

std::vector<std::string> facet_names(const GenSet& f, const GeneratorTable& table) {
    std::vector<std::string> names;
    for (int id : f) names.push_back(table.name(id));
    return names;
}

}  // namespace

Graph load_graph(const std::string& spec) {
    auto builtin = [&](const std::string& prefix) -> int {
        if (!starts_with(spec, prefix)) return -1;
        return parse_int(spec.substr(prefix.size()), "builtin graph size");
    };
    if (int n = builtin("path:"); n >= 0) return path_graph(n);
    if (int n = builtin("cycle:"); n >= 0) return cycle_graph(n);
    if (int n = builtin("star:"); n >= 0) return star_graph(n);

    std::ifstream in(spec);
    if (!in) throw UsageError("cannot open graph file " + spec);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw UsageError("graph file " + spec + " is not valid JSON: " + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges"))
        throw UsageError("graph file needs \"vertices\" and \"edges\"");
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw UsageError("each edge must be a pair [a,b]");
        edges.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return build_graph(j["vertices"].get<int>(), edges);
}

Command parse_args(const std::vector<std::string>& argv) {
    static const std::vector<std::string> verbs = {
        "facets", "volume", "hstar", "gb-verify", "nonfaces", "canonical-eval", "cross-check"};
    if (argv.empty()) throw UsageError("missing subcommand");
    Command c;
    c.verb = argv[0];
    if (std::find(verbs.begin(), verbs.end(), c.verb) == verbs.end())
        throw UsageError("unknown subcommand '" + c.verb + "'");
    bool have_graph = false;
    for (size_t i = 1; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        auto value = [&]() -> const std::string& {
            if (i + 1 >= argv.size()) throw UsageError("flag " + a + " needs a value");
            return argv[++i];
        };
        if (a == "--graph") { c.graph_spec = value(); have_graph = true; }
        else if (a == "--order") c.order_spec = value();
        else if (a == "--output") c.output = value();
        else if (a == "--seed") {
            const std::string& v = value();
            try {
                c.seed = std::stoull(v);
            } catch (const std::exception&) {
                throw UsageError("expected an integer for --seed, got '" + v + "'");
            }
        }
        else if (a == "--count") c.count = parse_int(value(), "--count");
        else throw UsageError("unknown flag '" + a + "'");
    }
    if (!have_graph) throw UsageError("--graph is required");
    if (c.output != "text" && c.output != "structured")
        throw UsageError("--output must be text or structured");
    if (c.verb == "canonical-eval" && c.count < 1)
        throw UsageError("canonical-eval needs --count >= 1");
    return c;
}

namespace {

Report run_facets(const Command& c, const GeneratorTable& table) {
    auto choice = resolve_order(c.order_spec, table);
    Triangulation t = enumerate_facets(table, choice.order);
    std::ostringstream text;
    text << "order: " << choice.how << "\nfacets: " << t.facets.size() << "\n";
    json facets = json::array();
    for (const GenSet& f : t.facets) {
        facets.push_back(facet_names(f, table));
        text << facet_to_string(f, table) << "\n";
    }
    json res;
    res["order"] = choice.how;
    res["facet_count"] = t.facets.size();
    res["facets"] = std::move(facets);
    return finish(c, true, text.str(), std::move(res));
}

Report run_volume(const Command& c, const Graph& g, const GeneratorTable& table) {
    json res;
    std::ostringstream text;
    BigInt vol(0);
    std::string method;
    std::vector<std::string> notes;
    if (g.is_canonical_path()) {
        vol = closed_volume(VolumeKind::Path, g.edge_count());
        method = "closed_form";
        notes.push_back("engine skipped: closed form available for paths");
    } else if (g.is_canonical_cycle()) {
        vol = closed_volume(VolumeKind::Cycle, g.vertex_count());
        method = "closed_form";
        notes.push_back("engine skipped: closed form available for cycles");
    } else if (g.is_tree() && g.edge_count() <= 12) {
        RootedTree rt(g, smallest_leaf(g));
        vol = BigInt((long long)tree_facets(rt, table).size());
        method = "tree_rules";
    } else {
        auto choice = resolve_order(c.order_spec, table);
        vol = normalized_volume(enumerate_facets(table, choice.order));
        method = "engine";
        notes.push_back("order: " + choice.how);
    }
    text << "volume: " << vol.to_string() << " (" << method << ")\n";
    for (auto& n : notes) text << "note: " << n << "\n";
    res["volume"] = vol.to_string();
    res["method"] = method;
    res["notes"] = notes;
    return finish(c, true, text.str(), std::move(res));
}

Report run_hstar(const Command& c, const GeneratorTable& table) {
    HStarVector h = hstar_ehrhart(table);
    std::ostringstream text;
    json coeffs = json::array();
    text << "h*:";
    for (const auto& x : h.coefficients) {
        text << " " << x.to_string();
        coeffs.push_back(x.to_string());
    }
    text << "\nsum: " << h.sum().to_string() << "\n";
    json res;
    res["hstar"] = std::move(coeffs);
    res["sum"] = h.sum().to_string();
    res["method"] = "ehrhart";
    return finish(c, true, text.str(), std::move(res));
}

Report run_gb_verify(const Command& c, const GeneratorTable& table) {
    auto choice = resolve_order(c.order_spec, table);
    auto basis = generate_basis(table);
    GroebnerReport rep = verify_groebner(basis, choice.order, table);
    std::ostringstream text;
    text << "order: " << choice.how << "\nbasis size: " << basis.size()
         << "\npairs checked: " << rep.pairs_checked
         << "\nfailing pairs: " << rep.failing_pairs.size() << "\n";
    json failing = json::array();
    for (auto& [i, j] : rep.failing_pairs) {
        std::string a = binomial_to_string(basis[(size_t)i], table);
        std::string b = binomial_to_string(basis[(size_t)j], table);
        text << "  (" << a << ") with (" << b << ")\n";
        failing.push_back({a, b});
    }
    text << (rep.pass ? "pass" : "FAIL") << "\n";
    json res;
    res["order"] = choice.how;
    res["basis_size"] = basis.size();
    res["pairs_checked"] = rep.pairs_checked;
    res["failing_pairs"] = std::move(failing);
    return finish(c, rep.pass, text.str(), std::move(res));
}

Report run_nonfaces(const Command& c, const GeneratorTable& table) {
    auto choice = resolve_order(c.order_spec, table);
    auto nf = minimal_nonfaces(generate_basis(table), choice.order);
    std::ostringstream text;
    text << "order: " << choice.how << "\nminimal non-faces: " << nf.size() << "\n";
    json sets = json::array();
    for (const GenSet& s : nf) {
        sets.push_back(facet_names(s, table));
        text << facet_to_string(s, table) << "\n";
    }
    json res;
    res["order"] = choice.how;
    res["count"] = nf.size();
    res["nonfaces"] = std::move(sets);
    return finish(c, true, text.str(), std::move(res));
}

Report run_canonical_eval(const Command& c, const GeneratorTable& table) {
    auto choice = resolve_order(c.order_spec, table);
    Triangulation t = enumerate_facets(table, choice.order);
    PolytopeForm form(t, table);
    auto points = sample_points(table, c.count, c.seed);
    std::ostringstream text;
    text << "order: " << choice.how << "\n";
    json vals = json::array();
    for (size_t i = 0; i < points.size(); ++i) {
        Rational v = form.value(points[i]);
        text << "point " << i << ": " << v.to_fraction_string() << "\n";
        vals.push_back(v.to_fraction_string());
    }
    json res;
    res["order"] = choice.how;
    res["values"] = std::move(vals);
    return finish(c, true, text.str(), std::move(res));
}

Report run_cross_check(const Command& c, const Graph& g, const GeneratorTable& table) {
    std::ostringstream text;
    json res;
    std::vector<std::string> notes;
    bool pass = true;
    auto note = [&](const std::string& s) { notes.push_back(s); };
    auto check = [&](bool ok, const std::string& what) {
        pass = pass && ok;
        text << (ok ? "  ok: " : "  FAIL: ") << what << "\n";
    };
    text << "cross-check\n";

    BigInt engine_count(-1);
    if (table.count() <= 32) {
        auto choice = resolve_order(c.order_spec, table);
        Triangulation t = enumerate_facets(table, choice.order);
        engine_count = BigInt((long long)t.facets.size());
        res["engine_facets"] = t.facets.size();
        bool uni = true;
        for (const GenSet& f : t.facets) uni = uni && is_unimodular_simplex(f, table);
        check(uni, "all engine facets unimodular");
        GroebnerReport gb = verify_groebner(generate_basis(table), choice.order, table);
        check(gb.pass, "basis passes the S-pair criterion");
    } else {
        note("engine skipped: more than 32 generators");
    }

    if (g.is_canonical_path()) {
        BigInt closed = closed_volume(VolumeKind::Path, g.edge_count());
        res["closed_volume"] = closed.to_string();
        auto rules = path_facets(table);
        check(BigInt((long long)rules.size()) == closed, "path rule count equals closed form");
        if (!(engine_count == BigInt(-1)))
            check(engine_count == BigInt((long long)rules.size()), "engine equals path rules");
    } else if (g.is_canonical_cycle()) {
        BigInt closed = closed_volume(VolumeKind::Cycle, g.vertex_count());
        res["closed_volume"] = closed.to_string();
        auto rules = cycle_facets(table);
        check(BigInt((long long)rules.size()) == closed, "cycle rule count equals closed form");
        if (!(engine_count == BigInt(-1)))
            check(engine_count == BigInt((long long)rules.size()), "engine equals cycle rules");
    } else if (g.is_tree() && g.edge_count() <= 12) {
        RootedTree rt(g, smallest_leaf(g));
        auto rules = tree_facets(rt, table);
        res["tree_rule_facets"] = rules.size();
        if (!(engine_count == BigInt(-1)))
            check(engine_count == BigInt((long long)rules.size()), "engine equals tree rules");
    }

    if (dimension(g) <= 7) {
        BigInt vol = brute_volume(table);
        res["oracle_volume"] = vol.to_string();
        if (!(engine_count == BigInt(-1)))
            check(engine_count == vol, "engine count equals the volume oracle");
    } else {
        note("volume oracle skipped: dimension > 7");
    }

    if (dimension(g) <= 6) {
        HStarVector h = hstar_ehrhart(table);
        res["hstar_sum"] = h.sum().to_string();
        if (!(engine_count == BigInt(-1)))
            check(engine_count == h.sum(), "engine count equals the h* sum");
    } else {
        note("h* skipped: dimension > 6");
    }

    for (auto& n : notes) text << "note: " << n << "\n";
    text << (pass ? "PASS\n" : "FAIL\n");
    res["notes"] = notes;
    return finish(c, pass, text.str(), std::move(res));
}

}  // namespace

Report run_command(const Command& c) {
    Graph g = load_graph(c.graph_spec);
    GeneratorTable table(g);
    if (c.verb == "facets") return run_facets(c, table);
    if (c.verb == "volume") return run_volume(c, g, table);
    if (c.verb == "hstar") return run_hstar(c, table);
    if (c.verb == "gb-verify") return run_gb_verify(c, table);
    if (c.verb == "nonfaces") return run_nonfaces(c, table);
    if (c.verb == "canonical-eval") return run_canonical_eval(c, table);
    if (c.verb == "cross-check") return run_cross_check(c, g, table);
    throw UsageError("unknown subcommand '" + c.verb + "'");
}

std::string emit_report(const Report& r, const std::string& format) {
    return format == "structured" ? r.structured : r.text;
}

std::string usage_text() {
    return "usage: cosmotope <facets|volume|hstar|gb-verify|nonfaces|canonical-eval|cross-check>\n"
           "                 --graph <path:n|cycle:n|star:n|file.json>\n"
           "                 [--order auto|path|cycle|tree:<root>|lex:<file>]\n"
           "                 [--output text|structured] [--seed <n>] [--count <n>]\n";
}

int cli_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        Command c = parse_args(args);
        Report r = run_command(c);
        std::cout << emit_report(r, c.output);
        return r.pass ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n" << usage_text();
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 1;
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << "; facets:";
        for (int ix : e.facet_indices) std::cerr << " " << ix;
        std::cerr << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace cosmo
