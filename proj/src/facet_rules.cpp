#include "cosmotope/facet_rules.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace cosmo {

bool DecoratedGraph::has_arrow(const Graph& g, int from, int to) const {
    int e = g.edge_index(from, to);
    if (e < 0) throw ValidationError("arrow query on a non-edge");
    bool fwd = from < to;
    return fwd ? edges[(size_t)e].yf : edges[(size_t)e].yb;
}

bool DecoratedGraph::has_z(const Graph& g, int a, int b) const {
    int e = g.edge_index(a, b);
    if (e < 0) throw ValidationError("symbol query on a non-edge");
    return edges[(size_t)e].z;
}

bool DecoratedGraph::has_t(const Graph& g, int a, int b) const {
    int e = g.edge_index(a, b);
    if (e < 0) throw ValidationError("symbol query on a non-edge");
    return edges[(size_t)e].t;
}

DecoratedGraph decorate(const GenSet& s, const GeneratorTable& table) {
    const Graph& g = table.graph();
    DecoratedGraph d;
    d.zmark.assign((size_t)g.vertex_count() + 1, false);
    d.edges.assign((size_t)g.edge_count(), {});
    for (int id : s) {
        switch (table.tag(id)) {
            case GenTag::ZVertex: d.zmark[(size_t)table.vertex_of(id)] = true; break;
            case GenTag::ZEdge: d.edges[(size_t)table.edge_of(id)].z = true; break;
            case GenTag::T: d.edges[(size_t)table.edge_of(id)].t = true; break;
            case GenTag::Y: {
                int e = table.edge_of(id);
                if (id == table.y_fwd(e)) d.edges[(size_t)e].yf = true;
                else d.edges[(size_t)e].yb = true;
                break;
            }
        }
    }
    return d;
}

GenSet extract(const DecoratedGraph& d, const GeneratorTable& table) {
    const Graph& g = table.graph();
    GenSet s;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (d.zmark[(size_t)v]) s.push_back(table.z_vertex(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& sym = d.edges[(size_t)e];
        if (sym.z) s.push_back(table.z_edge(e));
        if (sym.t) s.push_back(table.t_edge(e));
        if (sym.yf) s.push_back(table.y_fwd(e));
        if (sym.yb) s.push_back(table.y_bwd(e));
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::string decorated_to_string(const DecoratedGraph& d, const Graph& g) {
    std::string out;
    for (int v = 1; v <= g.vertex_count(); ++v)
        out += d.zmark[(size_t)v] ? 'o' : '*';
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges()[(size_t)e];
        out += " " + std::to_string(i) + "-" + std::to_string(j) + ":";
        const auto& sym = d.edges[(size_t)e];
        if (sym.z) out += '-';
        if (sym.t) out += '~';
        if (sym.yf) out += '>';
        if (sym.yb) out += '<';
    }
    return out;
}

namespace {

// Emit every decoration of an interval between two marked endpoints: one
// single edge, backward doubles behind it, a forward double then free
// doubles in front. Codes: 0 single plain, 1 single wavy, 2 single
// backward arrow, 3 double backward, 4 double forward.
void middle_patterns(int len, const std::function<void(const std::vector<int>&)>& sink) {
    std::vector<int> shape((size_t)len, 3);
    // single edge at position 0: plain or wavy, backward doubles after
    for (int first : {0, 1}) {
        shape.assign((size_t)len, 3);
        shape[0] = first;
        sink(shape);
    }
    // single edge at position s > 0: wavy or backward arrow; forward double
    // first, then free doubles, backward doubles after the single edge
    for (int s = 1; s < len; ++s) {
        for (int single : {1, 2}) {
            for (unsigned free = 0; free < (1u << (s - 1)); ++free) {
                shape.assign((size_t)len, 3);
                shape[0] = 4;
                for (int q = 1; q < s; ++q)
                    shape[(size_t)q] = (free >> (q - 1) & 1) ? 4 : 3;
                shape[(size_t)s] = single;
                sink(shape);
            }
        }
    }
}

}  // namespace

std::vector<GenSet> path_facets(const GeneratorTable& table) {
    const Graph& g = table.graph();
    if (!g.is_canonical_path())
        throw ValidationError("path facet generation needs the canonical path");
    int V = g.vertex_count();
    std::vector<GenSet> out;

    // symbol codes as in middle_patterns; u -> v is the rightward direction
    auto apply = [&](GenSet& s, int u, int v, int code) {
        int e = g.edge_index(u, v);
        switch (code) {
            case 0: s.push_back(table.z_edge(e)); break;
            case 1: s.push_back(table.t_edge(e)); break;
            case 2: s.push_back(table.y_directed(v, u)); break;
            case 3: s.push_back(table.z_edge(e)); s.push_back(table.y_directed(v, u)); break;
            case 4: s.push_back(table.z_edge(e)); s.push_back(table.y_directed(u, v)); break;
        }
    };

    for (unsigned zmask = 1; zmask < (1u << V); ++zmask) {
        std::vector<int> zs;
        for (int v = 1; v <= V; ++v)
            if (zmask >> (v - 1) & 1) zs.push_back(v);
        GenSet base;
        for (int v : zs) base.push_back(table.z_vertex(v));
        for (int v = 1; v < zs.front(); ++v) apply(base, v, v + 1, 3);

        // decorations of the middle intervals, then the free tail
        std::vector<GenSet> partial = {base};
        for (size_t j = 0; j + 1 < zs.size(); ++j) {
            int lo = zs[j], hi = zs[j + 1];
            std::vector<GenSet> next;
            middle_patterns(hi - lo, [&](const std::vector<int>& shape) {
                for (const GenSet& p : partial) {
                    GenSet s = p;
                    for (int q = 0; q < hi - lo; ++q)
                        apply(s, lo + q, lo + q + 1, shape[(size_t)q]);
                    next.push_back(std::move(s));
                }
            });
            partial = std::move(next);
        }
        int tail = V - zs.back();
        for (unsigned free = 0; free < (1u << std::max(0, tail - 1)); ++free) {
            for (const GenSet& p : partial) {
                GenSet s = p;
                for (int q = 0; q < tail; ++q) {
                    int code = q == 0 ? 4 : ((free >> (q - 1) & 1) ? 4 : 3);
                    apply(s, zs.back() + q, zs.back() + q + 1, code);
                }
                std::sort(s.begin(), s.end());
                out.push_back(std::move(s));
            }
            if (tail == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<GenSet> cycle_facets(const GeneratorTable& table) {
    const Graph& g = table.graph();
    if (!g.is_canonical_cycle())
        throw ValidationError("cycle facet generation needs the canonical cycle");
    int n = g.vertex_count();
    std::vector<GenSet> out;

    auto vertex_at = [&](int start, int off) { return (start - 1 + off) % n + 1; };
    auto apply = [&](GenSet& s, int u, int v, int code) {
        int e = g.edge_index(u, v);
        switch (code) {
            case 0: s.push_back(table.z_edge(e)); break;
            case 1: s.push_back(table.t_edge(e)); break;
            case 2: s.push_back(table.y_directed(v, u)); break;
            case 3: s.push_back(table.z_edge(e)); s.push_back(table.y_directed(v, u)); break;
            case 4: s.push_back(table.z_edge(e)); s.push_back(table.y_directed(u, v)); break;
        }
    };

    for (unsigned zmask = 1; zmask < (1u << n); ++zmask) {
        std::vector<int> zs;
        for (int v = 1; v <= n; ++v)
            if (zmask >> (v - 1) & 1) zs.push_back(v);
        GenSet base;
        for (int v : zs) base.push_back(table.z_vertex(v));
        std::vector<GenSet> partial = {base};
        for (size_t j = 0; j < zs.size(); ++j) {
            int from = zs[j];
            int len = j + 1 < zs.size() ? zs[j + 1] - zs[j] : n - zs[j] + zs[0];
            std::vector<GenSet> next;
            middle_patterns(len, [&](const std::vector<int>& shape) {
                for (const GenSet& p : partial) {
                    GenSet s = p;
                    for (int q = 0; q < len; ++q)
                        apply(s, vertex_at(from, q), vertex_at(from, q + 1), shape[(size_t)q]);
                    next.push_back(std::move(s));
                }
            });
            partial = std::move(next);
        }
        for (GenSet& s : partial) {
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt closed_volume(VolumeKind kind, int n) {
    if (kind == VolumeKind::Path && n < 1)
        throw ValidationError("path volume needs n >= 1");
    if (kind == VolumeKind::Cycle && n < 3)
        throw ValidationError("cycle volume needs n >= 3");
    BigInt four(1), two(1);
    for (int i = 0; i < n; ++i) { four *= BigInt(4); two *= BigInt(2); }
    return kind == VolumeKind::Path ? four : four - two;
}

std::vector<ZComponent> z_components(const DecoratedGraph& d, const RootedTree& rt) {
    const Graph& g = rt.tree();
    if (!g.is_tree()) throw ValidationError("components are defined for trees");
    int E = g.edge_count();
    // union-find over edges joined through unmarked endpoints
    std::vector<int> uf((size_t)E);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[(size_t)x] != x) x = uf[(size_t)x] = uf[(size_t)uf[(size_t)x]];
        return x;
    };
    for (int v = 1; v <= g.vertex_count(); ++v) {
        if (d.zmark[(size_t)v]) continue;
        int first = -1;
        for (int w : g.neighbors(v)) {
            int e = g.edge_index(v, w);
            if (first < 0) first = e;
            else uf[(size_t)find(e)] = find(first);
        }
    }
    std::vector<ZComponent> comps;
    std::vector<int> slot((size_t)E, -1);
    for (int e = 0; e < E; ++e) {
        int r = find(e);
        if (slot[(size_t)r] < 0) {
            slot[(size_t)r] = (int)comps.size();
            comps.push_back({});
        }
        comps[(size_t)slot[(size_t)r]].edge_ixs.push_back(e);
    }
    for (auto& c : comps) {
        std::set<int> verts;
        for (int e : c.edge_ixs) {
            verts.insert(g.edges()[(size_t)e].first);
            verts.insert(g.edges()[(size_t)e].second);
            if (d.edges[(size_t)e].total() == 1) c.single_edges.push_back(e);
        }
        c.vertices.assign(verts.begin(), verts.end());
        c.local_root = *std::min_element(c.vertices.begin(), c.vertices.end(),
                                         [&](int a, int b) { return rt.less(a, b); });
        for (int v : c.vertices)
            if (d.zmark[(size_t)v]) c.z_members.push_back(v);
        // leaves of the component's support subtree
        c.bounded = true;
        for (int v : c.vertices) {
            int deg = 0;
            for (int e : c.edge_ixs) {
                auto [a, b] = g.edges()[(size_t)e];
                deg += a == v || b == v;
            }
            if (deg == 1 && !d.zmark[(size_t)v]) c.bounded = false;
        }
    }
    return comps;
}

namespace {

bool edge_is_single(const DecoratedGraph& d, const Graph& g, int a, int b) {
    return d.edges[(size_t)g.edge_index(a, b)].total() == 1;
}

// first single edge on the walk i -> local root, as an index into the walk
int first_single_on_walk(const DecoratedGraph& d, const RootedTree& rt,
                         const std::vector<int>& walk) {
    for (size_t q = 0; q + 1 < walk.size(); ++q)
        if (edge_is_single(d, rt.tree(), walk[q], walk[q + 1])) return (int)q;
    return -1;
}

}  // namespace

ThresholdPath threshold_path(const DecoratedGraph& d, const ZComponent& c, int i,
                             const RootedTree& rt) {
    const Graph& g = rt.tree();
    if ((int)c.single_edges.size() != (int)c.z_members.size() - 1)
        throw ValidationError("component does not have the facet single-edge count");
    std::vector<int> walk = rt.path_between(i, c.local_root);
    int pos = first_single_on_walk(d, rt, walk);
    if (pos < 0) throw ValidationError("no single edge on the walk to the component root");
    int estar = g.edge_index(walk[(size_t)pos], walk[(size_t)pos + 1]);

    // the unique partner separated from i by estar alone
    int partner = 0, found = 0;
    for (int a : c.z_members) {
        if (a == i) continue;
        auto path = rt.path_between(i, a);
        bool through = false, other = false;
        for (size_t q = 0; q + 1 < path.size(); ++q) {
            int e = g.edge_index(path[q], path[q + 1]);
            if (d.edges[(size_t)e].total() == 1) {
                if (e == estar) through = true;
                else other = true;
            }
        }
        if (through && !other) { partner = a; ++found; }
    }
    if (found != 1)
        throw ValidationError("single edges do not critically separate a unique pair");

    auto pi = rt.path_between(i, partner);
    int alpha = *std::min_element(pi.begin(), pi.end(),
                                  [&](int a, int b) { return rt.less(a, b); });
    ThresholdPath p;
    p.endpoint = i;
    p.far_endpoint = partner;
    p.alpha = alpha;
    p.type = rt.less(i, partner) ? 1 : 2;
    p.vertices = rt.path_between(i, alpha);
    p.single_pos = pos;
    // the first single edge always lies between the endpoint and the low
    // point, as it sits on the connecting path of the separated pair
    if (pos + 1 >= (int)p.vertices.size())
        throw std::logic_error("threshold single edge fell outside the path");
    return p;
}

bool is_blocking(const ThresholdPath& p, const DecoratedGraph& d, const RootedTree& rt) {
    const Graph& g = rt.tree();
    auto away = [&](int q) { return d.has_arrow(g, p.vertices[(size_t)q], p.vertices[(size_t)q + 1]); };
    auto toward = [&](int q) { return d.has_arrow(g, p.vertices[(size_t)q + 1], p.vertices[(size_t)q]); };
    int edges = (int)p.vertices.size() - 1;
    for (int q = 0; q < p.single_pos; ++q)
        if (!d.has_z(g, p.vertices[(size_t)q], p.vertices[(size_t)q + 1]) || !away(q))
            return false;
    int sp = p.single_pos;
    bool single_z = d.has_z(g, p.vertices[(size_t)sp], p.vertices[(size_t)sp + 1]);
    bool single_t = d.has_t(g, p.vertices[(size_t)sp], p.vertices[(size_t)sp + 1]);
    if (p.type == 1)
        return single_t || away(sp);
    if (single_t) return true;
    if (single_z) {
        for (int q = sp + 1; q < edges; ++q)
            if (toward(q)) return false;
        return true;
    }
    if (away(sp)) {
        for (int q = sp + 1; q < edges; ++q)
            if (toward(q)) return true;
        return false;
    }
    return false;  // single edge directed toward the endpoint
}

bool has_partially_directed_branching(const DecoratedGraph& d, int i, const RootedTree& rt) {
    const Graph& g = rt.tree();
    for (int j = 1; j <= g.vertex_count(); ++j) {
        if (j == i || !covers(rt, i, j)) continue;
        auto path = rt.path_between(i, j);
        size_t apos = 0;
        for (size_t q = 1; q < path.size(); ++q)
            if (rt.less(path[q], path[apos])) apos = q;
        bool ok = true;
        for (size_t q = 0; q < apos && ok; ++q)              // i side: undirected present
            ok = d.has_z(g, path[q], path[q + 1]);
        for (size_t q = apos; q + 1 < path.size() && ok; ++q)  // j side: toward the minimum
            ok = d.has_arrow(g, path[q + 1], path[q]);
        if (ok) return true;
    }
    return false;
}

bool tree_facet_check(const GenSet& s, const RootedTree& rt, const GeneratorTable& table) {
    const Graph& g = rt.tree();
    if (&table.graph() != &g && table.graph().edges() != g.edges())
        throw ValidationError("generator table does not match the rooted tree");
    DecoratedGraph d = decorate(s, table);

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& sym = d.edges[(size_t)e];
        if (sym.total() == 0) return false;                    // support must be all of T
        if (sym.total() > 2) return false;
        if (sym.total() == 2 && !(sym.z && (sym.yf || sym.yb))) return false;
    }

    for (const ZComponent& c : z_components(d, rt)) {
        if ((int)c.single_edges.size() != (int)c.z_members.size() - 1) return false;
        bool root_marked = d.zmark[(size_t)c.local_root];
        if (root_marked) {
            for (int e : c.edge_ixs) {
                auto [a, b] = g.edges()[(size_t)e];
                if (a != c.local_root && b != c.local_root) continue;
                const auto& sym = d.edges[(size_t)e];
                int other = a == c.local_root ? b : a;
                bool away = d.has_arrow(g, c.local_root, other);
                bool ok = (sym.total() == 1 && (sym.z || sym.t)) ||
                          (sym.total() == 2 && sym.z && away);
                if (!ok) return false;
            }
        }
        for (int i : c.z_members) {
            if (i == c.local_root) continue;
            std::vector<int> walk = rt.path_between(i, c.local_root);
            int pos = first_single_on_walk(d, rt, walk);
            if (pos < 0) {
                // no single edge: every double on the walk must point away
                for (size_t q = 0; q + 1 < walk.size(); ++q)
                    if (!d.has_arrow(g, walk[q], walk[q + 1])) return false;
                continue;
            }
            ThresholdPath p;
            try {
                p = threshold_path(d, c, i, rt);
            } catch (const ValidationError&) {
                return false;  // separation structure broken
            }
            if (!is_blocking(p, d, rt)) return false;
        }
    }

    for (int v = 1; v <= g.vertex_count(); ++v)
        if (d.zmark[(size_t)v] && has_partially_directed_branching(d, v, rt))
            return false;
    return true;
}

std::vector<GenSet> tree_facets(const RootedTree& rt, const GeneratorTable& table) {
    const Graph& g = rt.tree();
    if (g.edge_count() > 12) throw GuardError("tree facet generation is limited to 12 edges");
    int V = g.vertex_count();
    std::vector<GenSet> out;

    for (unsigned zmask = 0; zmask < (1u << V); ++zmask) {
        DecoratedGraph d;
        d.zmark.assign((size_t)V + 1, false);
        for (int v = 1; v <= V; ++v) d.zmark[(size_t)v] = zmask >> (v - 1) & 1;
        d.edges.assign((size_t)g.edge_count(), {});
        auto comps = z_components(d, rt);
        bool feasible = true;
        for (auto& c : comps)
            if (c.z_members.empty()) feasible = false;
        if (!feasible) continue;

        // per-component candidate decorations, then the cross product
        std::vector<std::vector<std::vector<DecoratedGraph::EdgeSymbols>>> choices;
        for (auto& c : comps) {
            std::vector<std::vector<DecoratedGraph::EdgeSymbols>> local;
            int singles_needed = (int)c.z_members.size() - 1;
            std::vector<DecoratedGraph::EdgeSymbols> cur((size_t)c.edge_ixs.size());
            std::function<void(size_t, int)> rec = [&](size_t pos, int singles) {
                if (pos == c.edge_ixs.size()) {
                    if (singles != singles_needed) return;
                    local.push_back(cur);
                    return;
                }
                int e = c.edge_ixs[pos];
                auto [a, b] = g.edges()[(size_t)e];
                static const int codes[6][4] = {
                    // z t yf yb
                    {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                    {0, 0, 0, 1}, {1, 0, 1, 0}, {1, 0, 0, 1}};
                for (auto& code : codes) {
                    DecoratedGraph::EdgeSymbols sym;
                    sym.z = code[0]; sym.t = code[1]; sym.yf = code[2]; sym.yb = code[3];
                    // arrows may not point at a marked vertex
                    if (sym.yf && d.zmark[(size_t)b]) continue;
                    if (sym.yb && d.zmark[(size_t)a]) continue;
                    int ns = singles + (sym.total() == 1);
                    if (ns > singles_needed) continue;
                    cur[pos] = sym;
                    rec(pos + 1, ns);
                }
            };
            rec(0, 0);
            // keep only decorations passing the in-component checks
            std::vector<std::vector<DecoratedGraph::EdgeSymbols>> kept;
            for (auto& cand : local) {
                for (size_t q = 0; q < c.edge_ixs.size(); ++q)
                    d.edges[(size_t)c.edge_ixs[q]] = cand[q];
                bool ok = true;
                auto sub = z_components(d, rt);  // component membership is unchanged
                for (auto& cc : sub) {
                    if (cc.edge_ixs[0] != c.edge_ixs[0]) continue;
                    for (int i : cc.z_members) {
                        if (!ok || i == cc.local_root) continue;
                        std::vector<int> walk = rt.path_between(i, cc.local_root);
                        int pos = first_single_on_walk(d, rt, walk);
                        if (pos < 0) {
                            for (size_t q = 0; q + 1 < walk.size(); ++q)
                                if (!d.has_arrow(g, walk[q], walk[q + 1])) ok = false;
                            continue;
                        }
                        try {
                            ThresholdPath p = threshold_path(d, cc, i, rt);
                            if (!is_blocking(p, d, rt)) ok = false;
                        } catch (const ValidationError&) {
                            ok = false;
                        }
                    }
                }
                if (ok) kept.push_back(std::move(cand));
                for (int e : c.edge_ixs) d.edges[(size_t)e] = {};
            }
            choices.push_back(std::move(kept));
            if (choices.back().empty()) { feasible = false; break; }
        }
        if (!feasible) continue;

        std::function<void(size_t)> assemble = [&](size_t ci) {
            if (ci == comps.size()) {
                GenSet s = extract(d, table);
                if (tree_facet_check(s, rt, table)) out.push_back(std::move(s));
                return;
            }
            for (auto& cand : choices[ci]) {
                for (size_t q = 0; q < comps[ci].edge_ixs.size(); ++q)
                    d.edges[(size_t)comps[ci].edge_ixs[q]] = cand[q];
                assemble(ci + 1);
            }
            for (int e : comps[ci].edge_ixs) d.edges[(size_t)e] = {};
        };
        assemble(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void interreduce(std::vector<GenSet>& sets) {
    for (auto& s : sets) std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end(), [](const GenSet& a, const GenSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<GenSet> kept;
    for (auto& s : sets) {
        bool redundant = false;
        for (auto& k : kept)
            if (std::includes(s.begin(), s.end(), k.begin(), k.end())) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(std::move(s));
    }
    sets = std::move(kept);
}

}  // namespace

std::vector<GenSet> simple_obstructions(const RootedTree& rt, const GeneratorTable& table) {
    const Graph& g = rt.tree();
    std::vector<GenSet> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges()[(size_t)e];
        int yf = table.y_fwd(e), yb = table.y_bwd(e), t = table.t_edge(e);
        out.push_back({yf, yb});
        out.push_back({yf, t});
        out.push_back({yb, t});
        out.push_back({yf, table.z_vertex(j)});
        out.push_back({yb, table.z_vertex(i)});
        out.push_back({t, table.z_edge(e)});
    }
    // type 1: strictly descending chains of length >= 2 edges; arrow on the
    // first edge, plain edges after, mark at the deep end
    std::vector<int> chain;
    std::function<void(int)> descend = [&](int v) {
        chain.push_back(v);
        if (chain.size() >= 3) {
            GenSet s = {table.z_vertex(chain.back()),
                        table.y_directed(chain[0], chain[1])};
            for (size_t q = 1; q + 1 < chain.size(); ++q)
                s.push_back(table.z_edge(g.edge_index(chain[q], chain[q + 1])));
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
        for (int c : rt.children(v)) descend(c);
        chain.pop_back();
    };
    for (int v = 1; v <= g.vertex_count(); ++v) {
        chain.clear();
        descend(v);
    }
    // type 2: marked low endpoint i, coverer j, both sides of the path
    // minimum nonempty; plain on i's side, arrows toward the minimum on j's
    for (int i = 1; i <= g.vertex_count(); ++i) {
        for (int j = 1; j <= g.vertex_count(); ++j) {
            if (i == j || !covers(rt, i, j)) continue;
            auto path = rt.path_between(i, j);
            size_t apos = 0;
            for (size_t q = 1; q < path.size(); ++q)
                if (rt.less(path[q], path[apos])) apos = q;
            if (apos == 0 || apos + 1 == path.size()) continue;
            GenSet s = {table.z_vertex(i)};
            for (size_t q = 0; q < apos; ++q)
                s.push_back(table.z_edge(g.edge_index(path[q], path[q + 1])));
            for (size_t q = apos; q + 1 < path.size(); ++q)
                s.push_back(table.y_directed(path[q + 1], path[q]));
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
        }
    }
    interreduce(out);
    return out;
}

std::vector<GenSet> facets_avoiding(const GeneratorTable& table,
                                    const std::vector<GenSet>& nonfaces) {
    if (table.count() > 64) throw GuardError("subset search is limited to 64 generators");
    int N = table.count();
    int m = table.coord_dim();
    std::vector<std::vector<uint64_t>> by_top((size_t)N);
    for (const auto& nf : nonfaces) {
        uint64_t mask = 0;
        for (int id : nf) mask |= 1ull << id;
        by_top[(size_t)nf.back()].push_back(mask);
    }
    std::vector<GenSet> out;
    GenSet current;
    std::function<void(int, uint64_t)> rec = [&](int next, uint64_t chosen) {
        if ((int)current.size() == m) {
            out.push_back(current);
            return;
        }
        if (N - next < m - (int)current.size()) return;
        for (int g = next; g < N; ++g) {
            uint64_t with = chosen | (1ull << g);
            bool blocked = false;
            for (uint64_t nf : by_top[(size_t)g])
                if ((nf & ~with) == 0) { blocked = true; break; }
            if (blocked) continue;
            current.push_back(g);
            rec(g + 1, with);
            current.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

}  // namespace cosmo
