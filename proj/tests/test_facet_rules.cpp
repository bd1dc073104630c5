#include <doctest.h>

#include <fstream>

#include "cosmotope/prng.hpp"
#include "test_util.hpp"

using namespace cosmo;
using namespace cosmo::testutil;

namespace {

std::vector<std::string> golden_lines(const std::string& file) {
    std::ifstream in(std::string(COSMO_GOLDEN_DIR) + "/" + file);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    std::sort(lines.begin(), lines.end());
    return lines;
}

std::vector<std::string> render_all(const std::vector<GenSet>& sets, const GeneratorTable& t) {
    std::vector<std::string> out;
    for (const GenSet& s : sets) out.push_back(decorated_to_string(decorate(s, t), t.graph()));
    std::sort(out.begin(), out.end());
    return out;
}

TermOrder order_for(const GeneratorTable& t) {
    const Graph& g = t.graph();
    if (g.is_canonical_cycle()) return specialized_order(t, OrderKind::Cycle);
    if (g.is_canonical_path()) return specialized_order(t, OrderKind::Path);
    return specialized_order(t, OrderKind::Tree, 1);
}

}  // namespace

TEST_CASE("decorate and extract") {
    GeneratorTable t(path_graph(2));
    GenSet s = {t.z_vertex(1), t.z_vertex(3), t.y_fwd(0), t.z_edge(0), t.t_edge(1)};
    std::sort(s.begin(), s.end());
    DecoratedGraph d = decorate(s, t);
    CHECK(decorated_to_string(d, t.graph()) == "o*o 1-2:-> 2-3:~");
    CHECK(extract(d, t) == s);

    GenSet empty;
    CHECK(decorated_to_string(decorate(empty, t), t.graph()) == "*** 1-2: 2-3:");

    SplitMix64 gen(5);
    for (const Graph& g : {path_graph(2), cycle_graph(4), star_graph(3)}) {
        GeneratorTable table(g);
        for (int trial = 0; trial < 100; ++trial) {
            GenSet sub;
            for (int id = 0; id < table.count(); ++id)
                if (gen.next() % 2) sub.push_back(id);
            CHECK(extract(decorate(sub, table), table) == sub);
        }
    }
}

TEST_CASE("path facet generation") {
    GeneratorTable t1(path_graph(1));
    auto rules1 = path_facets(t1);
    auto engine1 = enumerate_facets(t1, specialized_order(t1, OrderKind::Path)).facets;
    CHECK(rules1 == engine1);

    GeneratorTable t2(path_graph(2));
    auto rules2 = path_facets(t2);
    CHECK(rules2.size() == 16);
    CHECK(render_all(rules2, t2) == golden_lines("path2_facets.txt"));

    GeneratorTable t4(path_graph(4));
    CHECK(path_facets(t4).size() == 256);

    GeneratorTable t6(path_graph(6));
    CHECK(path_facets(t6) ==
          enumerate_facets(t6, specialized_order(t6, OrderKind::Path)).facets);
}

TEST_CASE("closed volumes") {
    CHECK(closed_volume(VolumeKind::Path, 5) == BigInt(1024));
    CHECK(closed_volume(VolumeKind::Cycle, 3) == BigInt(56));
    CHECK(closed_volume(VolumeKind::Cycle, 4) == BigInt(240));
    CHECK_THROWS_AS(closed_volume(VolumeKind::Path, 0), ValidationError);
    CHECK_THROWS_AS(closed_volume(VolumeKind::Cycle, 2), ValidationError);
}

TEST_CASE("cycle facet generation") {
    GeneratorTable t(cycle_graph(3));
    auto rules = cycle_facets(t);
    CHECK(rules.size() == 56);
    auto engine = enumerate_facets(t, specialized_order(t, OrderKind::Cycle)).facets;
    CHECK(rules == engine);
    // each nonempty set of marked vertices carries 2^n facets
    std::map<std::vector<int>, int> per_mark;
    for (const GenSet& f : rules) {
        std::vector<int> marks;
        for (int id : f)
            if (t.tag(id) == GenTag::ZVertex) marks.push_back(t.vertex_of(id));
        CHECK(!marks.empty());
        per_mark[marks] += 1;
    }
    CHECK(per_mark.size() == 7);
    for (auto& [marks, count] : per_mark) CHECK(count == 8);

    GeneratorTable t6(cycle_graph(6));
    CHECK(cycle_facets(t6) ==
          enumerate_facets(t6, specialized_order(t6, OrderKind::Cycle)).facets);
}

TEST_CASE("z components on the three vertex path") {
    Graph g = path_graph(2);
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    GenSet s = {t.z_vertex(2), t.z_edge(0), t.z_edge(1), t.y_fwd(0), t.y_bwd(1)};
    std::sort(s.begin(), s.end());
    auto comps = z_components(decorate(s, t), rt);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices == std::vector<int>{1, 2});
    CHECK(comps[1].vertices == std::vector<int>{2, 3});
}

TEST_CASE("z components of the worked 25 vertex example") {
    Graph g = worked_tree25();
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    GenSet s = worked_tree25_facet(t);
    CHECK(s.size() == 49);  // 2n+1 with n = 24
    DecoratedGraph d = decorate(s, t);
    std::vector<int> marked;
    for (int v = 1; v <= 25; ++v)
        if (d.zmark[(size_t)v]) marked.push_back(v);
    CHECK(marked == std::vector<int>{6, 7, 10, 11, 13, 14, 21, 22, 23, 24, 25});

    auto comps = z_components(d, rt);
    REQUIRE(comps.size() == 5);
    std::map<std::vector<int>, bool> bounded;
    for (auto& c : comps) bounded[c.vertices] = c.bounded;
    std::vector<int> big_left = {1, 2, 3, 4, 5, 6, 7, 8, 9, 13};
    std::vector<int> mid = {7, 12, 14, 15};
    std::vector<int> right = {13, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25};
    REQUIRE(bounded.count(big_left));
    REQUIRE(bounded.count(mid));
    REQUIRE(bounded.count(right));
    REQUIRE(bounded.count(std::vector<int>{6, 10}));
    REQUIRE(bounded.count(std::vector<int>{7, 11}));
    CHECK_FALSE(bounded[big_left]);
    CHECK_FALSE(bounded[mid]);
    CHECK(bounded[right]);
    CHECK(bounded[std::vector<int>{6, 10}]);
    CHECK(bounded[std::vector<int>{7, 11}]);
}

TEST_CASE("threshold paths of the worked example") {
    Graph g = worked_tree25();
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    DecoratedGraph d = decorate(worked_tree25_facet(t), t);
    auto comps = z_components(d, rt);
    const ZComponent* right = nullptr;
    for (auto& c : comps)
        if (c.vertices.front() == 13 && c.vertices.size() == 11) right = &c;
    REQUIRE(right != nullptr);
    CHECK(right->single_edges.size() == right->z_members.size() - 1);

    ThresholdPath p22 = threshold_path(d, *right, 22, rt);
    CHECK(p22.type == 2);
    CHECK(p22.far_endpoint == 13);
    CHECK(p22.vertices == std::vector<int>{22, 19, 17, 16, 13});
    CHECK(is_blocking(p22, d, rt));

    ThresholdPath p25 = threshold_path(d, *right, 25, rt);
    CHECK(p25.type == 2);
    CHECK(p25.far_endpoint == 22);
    CHECK(p25.single_pos == 0);  // the wavy edge right at the leaf
    CHECK(is_blocking(p25, d, rt));

    ThresholdPath p21 = threshold_path(d, *right, 21, rt);
    CHECK(p21.type == 1);
    CHECK(p21.far_endpoint == 22);
    CHECK(p21.vertices == std::vector<int>{21, 19});
    CHECK(is_blocking(p21, d, rt));
}

TEST_CASE("partially directed branchings of the worked example") {
    Graph g = worked_tree25();
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    CHECK(covers(rt, 23, 24));
    CHECK(covers(rt, 23, 25));
    DecoratedGraph d = decorate(worked_tree25_facet(t), t);
    CHECK_FALSE(has_partially_directed_branching(d, 23, rt));

    // reversing the 16-18 arrow creates a branching from 24 to 23
    DecoratedGraph flipped = d;
    int e = g.edge_index(16, 18);
    flipped.edges[(size_t)e].yf = false;
    flipped.edges[(size_t)e].yb = true;
    CHECK(has_partially_directed_branching(flipped, 23, rt));
}

TEST_CASE("tree facet check on the worked example") {
    Graph g = worked_tree25();
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    GenSet s = worked_tree25_facet(t);
    CHECK(tree_facet_check(s, rt, t));

    // the reversed arrow on 16-18 must break the characterization
    DecoratedGraph d = decorate(s, t);
    int e = g.edge_index(16, 18);
    d.edges[(size_t)e].yf = false;
    d.edges[(size_t)e].yb = true;
    CHECK_FALSE(tree_facet_check(extract(d, t), rt, t));
}

TEST_CASE("simple obstruction shapes on the six vertex spider") {
    Graph g = spider6();
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    CHECK(rt.vertex_order() == std::vector<int>{1, 2, 3, 5, 4, 6});
    auto obstructions = simple_obstructions(rt, t);
    std::set<GenSet> all(obstructions.begin(), obstructions.end());

    // descending chain 2 -> 3 -> 4: arrow on the first edge, plain second,
    // mark at the deep end
    GenSet type1 = {t.z_vertex(4), t.y_directed(2, 3), t.z_edge(g.edge_index(3, 4))};
    std::sort(type1.begin(), type1.end());
    CHECK(all.count(type1) == 1);

    // 6 covers 4 across the low point 2: plain on the side of 4, arrows
    // toward 2 on the side of 6
    CHECK(covers(rt, 4, 6));
    GenSet type2 = {t.z_vertex(4), t.z_edge(g.edge_index(3, 4)), t.z_edge(g.edge_index(2, 3)),
                    t.y_directed(6, 5), t.y_directed(5, 2)};
    std::sort(type2.begin(), type2.end());
    CHECK(all.count(type2) == 1);

    // every obstruction is a non-face of the engine triangulation
    auto nf = minimal_nonfaces(generate_basis(t), specialized_order(t, OrderKind::Tree, 1));
    std::set<GenSet> engine_nf(nf.begin(), nf.end());
    CHECK(engine_nf == all);
}

TEST_CASE("tree facets match the engine") {
    auto run = [](const Graph& g, int root) {
        GeneratorTable t(g);
        RootedTree rt(g, root);
        auto rules = tree_facets(rt, t);
        auto engine = enumerate_facets(t, specialized_order(t, OrderKind::Tree, root)).facets;
        CHECK(rules == engine);
        return rules.size();
    };
    CHECK(run(path_graph(2), 1) == 16);
    CHECK(run(star_graph(3), 1) == 64);
    Graph spider5 = build_graph(6, {{1, 2}, {2, 3}, {2, 4}, {4, 5}, {4, 6}});
    CHECK(run(spider5, 1) == 1024);
    run(spider6(), 1);
    run(spider6(), 4);
}

TEST_CASE("path trees give the path facets") {
    for (int n : {1, 2, 3}) {
        Graph g = path_graph(n);
        GeneratorTable t(g);
        RootedTree rt(g, 1);
        CHECK(tree_facets(rt, t) == path_facets(t));
    }
}

TEST_CASE("simple obstructions reproduce the minimal non-faces on paths") {
    GeneratorTable t(path_graph(2));
    RootedTree rt(t.graph(), 1);
    auto simple = simple_obstructions(rt, t);
    auto nf = minimal_nonfaces(generate_basis(t), specialized_order(t, OrderKind::Path));
    std::sort(nf.begin(), nf.end());
    std::sort(simple.begin(), simple.end());
    CHECK(simple == nf);
}

TEST_CASE("facets against simple obstructions equal the engine on small trees") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : all_trees(n)) {
            GeneratorTable t(g);
            for (int r : leaves_of(g)) {
                RootedTree rt(g, r);
                auto via_simple = facets_avoiding(t, simple_obstructions(rt, t));
                auto engine = enumerate_facets(t, specialized_order(t, OrderKind::Tree, r)).facets;
                CHECK(via_simple == engine);
            }
        }
    }
}

TEST_CASE("two rule routes agree beyond the engine guard") {
    // 8 edges: 41 generators, out of reach for the engine but fine for the
    // characterization and for the reduced obstruction set
    Graph g = build_graph(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 6}, {4, 7}, {6, 8}, {2, 9}});
    GeneratorTable t(g);
    RootedTree rt(g, 1);
    auto rules = tree_facets(rt, t);
    CHECK(rules.size() == 65536);  // 4^8, matching the small-tree pattern
    CHECK(rules == facets_avoiding(t, simple_obstructions(rt, t)));
}

TEST_CASE("single edges separate the marked vertices in every facet") {
    for (const Graph& g : {star_graph(3), spider6()}) {
        GeneratorTable t(g);
        RootedTree rt(g, 1);
        for (const GenSet& f : tree_facets(rt, t)) {
            DecoratedGraph d = decorate(f, t);
            for (const ZComponent& c : z_components(d, rt)) {
                CHECK((int)c.single_edges.size() == (int)c.z_members.size() - 1);
                for (int a : c.z_members) {
                    for (int b : c.z_members) {
                        if (a >= b) continue;
                        auto path = rt.path_between(a, b);
                        bool separated = false;
                        for (size_t q = 0; q + 1 < path.size(); ++q) {
                            int e = g.edge_index(path[q], path[q + 1]);
                            if (d.edges[(size_t)e].total() == 1) separated = true;
                        }
                        CHECK(separated);
                    }
                }
            }
        }
    }
}
