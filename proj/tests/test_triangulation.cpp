#include <doctest.h>

#include "cosmotope/facet_rules.hpp"
#include "test_util.hpp"

using namespace cosmo;
using namespace cosmo::testutil;

namespace {

// exhaustive subset oracle, no pruning machinery shared with the engine
std::vector<GenSet> subsets_avoiding(const GeneratorTable& t, const std::vector<GenSet>& nf) {
    int N = t.count(), m = t.coord_dim();
    std::vector<GenSet> out;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int from) {
        if ((int)pick.size() == m) {
            for (const GenSet& s : nf)
                if (std::includes(pick.begin(), pick.end(), s.begin(), s.end())) return;
            out.push_back(pick);
            return;
        }
        for (int g = from; g < N; ++g) {
            pick.push_back(g);
            rec(g + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_CASE("facets of the single edge") {
    GeneratorTable t(path_graph(1));
    TermOrder o = specialized_order(t, OrderKind::Path);
    Triangulation tri = enumerate_facets(t, o);
    std::set<GenSet> expected;
    for (GenSet s : {GenSet{t.z_vertex(1), t.z_vertex(2), t.z_edge(0)},
                     GenSet{t.y_fwd(0), t.z_vertex(1), t.z_edge(0)},
                     GenSet{t.y_bwd(0), t.z_vertex(2), t.z_edge(0)},
                     GenSet{t.t_edge(0), t.z_vertex(1), t.z_vertex(2)}}) {
        std::sort(s.begin(), s.end());
        expected.insert(s);
    }
    CHECK(std::set<GenSet>(tri.facets.begin(), tri.facets.end()) == expected);
    CHECK(normalized_volume(tri) == BigInt(4));
    // independent subset oracle agrees
    CHECK(subsets_avoiding(t, tri.nonfaces) == tri.facets);
}

TEST_CASE("facet counts on the small named graphs") {
    GeneratorTable i2(path_graph(2));
    auto tri2 = enumerate_facets(i2, specialized_order(i2, OrderKind::Path));
    CHECK(tri2.facets.size() == 16);
    CHECK(subsets_avoiding(i2, tri2.nonfaces) == tri2.facets);

    GeneratorTable c3(cycle_graph(3));
    auto tric = enumerate_facets(c3, specialized_order(c3, OrderKind::Cycle));
    CHECK(tric.facets.size() == 56);

    GeneratorTable i3(path_graph(3));
    CHECK(enumerate_facets(i3, specialized_order(i3, OrderKind::Path)).facets.size() == 64);

    GeneratorTable c4(cycle_graph(4));
    CHECK(enumerate_facets(c4, specialized_order(c4, OrderKind::Cycle)).facets.size() == 240);
}

TEST_CASE("engine refuses bad input") {
    GeneratorTable t(path_graph(2));
    std::vector<int> seq = default_generic_sequence(t);
    std::rotate(seq.begin(), seq.begin() + 3 * 2, seq.end());
    CHECK_THROWS_AS(enumerate_facets(t, TermOrder("z-first", seq)), ValidationError);
    GeneratorTable big(cycle_graph(7));  // 35 generators
    CHECK_THROWS_AS(enumerate_facets(big, specialized_order(big, OrderKind::Cycle)), GuardError);
}

TEST_CASE("unimodularity of simplices") {
    GeneratorTable t(path_graph(1));
    GenSet id_simplex = {t.z_vertex(1), t.z_vertex(2), t.z_edge(0)};
    std::sort(id_simplex.begin(), id_simplex.end());
    CHECK(is_unimodular_simplex(id_simplex, t));
    GenSet big = {t.y_fwd(0), t.y_bwd(0), t.t_edge(0)};
    std::sort(big.begin(), big.end());
    CHECK_FALSE(is_unimodular_simplex(big, t));  // |det| = 4
    CHECK_THROWS_AS(is_unimodular_simplex(GenSet{0, 1}, t), ValidationError);
}

TEST_CASE("every enumerated facet is unimodular") {
    for (const Graph& g : {path_graph(2), path_graph(3), cycle_graph(3), star_graph(3)}) {
        GeneratorTable t(g);
        TermOrder o = g.is_canonical_cycle()  ? specialized_order(t, OrderKind::Cycle)
                      : g.is_canonical_path() ? specialized_order(t, OrderKind::Path)
                                              : specialized_order(t, OrderKind::Tree, 1);
        for (const GenSet& f : enumerate_facets(t, o).facets)
            CHECK(is_unimodular_simplex(f, t));
    }
}

TEST_CASE("facet counts are order independent") {
    for (const Graph& g : {path_graph(2), path_graph(3), cycle_graph(3), star_graph(3)}) {
        GeneratorTable t(g);
        TermOrder special = g.is_canonical_cycle()  ? specialized_order(t, OrderKind::Cycle)
                            : g.is_canonical_path() ? specialized_order(t, OrderKind::Path)
                                                    : specialized_order(t, OrderKind::Tree, 1);
        TermOrder generic = generic_good_order(t, default_generic_sequence(t));
        auto a = enumerate_facets(t, special);
        auto b = enumerate_facets(t, generic);
        CHECK(a.facets.size() == b.facets.size());
    }
    // and the sets themselves may genuinely differ between good orders
    GeneratorTable t(path_graph(2));
    std::vector<int> alt;
    for (int e = 0; e < 2; ++e) alt.push_back(t.y_bwd(e));
    for (int e = 0; e < 2; ++e) alt.push_back(t.y_fwd(e));
    for (int e = 0; e < 2; ++e) alt.push_back(t.t_edge(e));
    for (int e = 0; e < 2; ++e) alt.push_back(t.z_edge(e));
    for (int v = 1; v <= 3; ++v) alt.push_back(t.z_vertex(v));
    auto a = enumerate_facets(t, specialized_order(t, OrderKind::Path));
    auto b = enumerate_facets(t, generic_good_order(t, alt));
    CHECK(a.facets.size() == b.facets.size());
    CHECK(a.facets != b.facets);
}

TEST_CASE("validate_triangulation") {
    GeneratorTable i2(path_graph(2));
    Triangulation tri = enumerate_facets(i2, specialized_order(i2, OrderKind::Path));
    TriangulationReport rep = validate_triangulation(tri, i2);
    CHECK(rep.pass);
    CHECK(rep.failures.empty());

    GeneratorTable c3(cycle_graph(3));
    Triangulation tric = enumerate_facets(c3, specialized_order(c3, OrderKind::Cycle));
    CHECK(validate_triangulation(tric, c3).pass);
    for (const GenSet& f : tric.facets) {
        bool has_z_vertex = false;
        for (int id : f) has_z_vertex = has_z_vertex || c3.tag(id) == GenTag::ZVertex;
        CHECK(has_z_vertex);  // cycle facets always keep a marked vertex
    }

    Triangulation mutilated = tri;
    mutilated.facets.pop_back();
    TriangulationReport bad = validate_triangulation(mutilated, i2);
    CHECK_FALSE(bad.pass);
    bool count_failure = false;
    for (const auto& f : bad.failures)
        count_failure = count_failure || f.find("15 != oracle volume 16") != std::string::npos;
    CHECK(count_failure);
}

TEST_CASE("h-vector from the triangulation") {
    GeneratorTable i1(path_graph(1));
    Triangulation tri1 = enumerate_facets(i1, specialized_order(i1, OrderKind::Path));
    HStarVector h1 = hstar_from_triangulation(tri1);
    CHECK(h1.coefficients == std::vector<BigInt>{1, 3, 0});
    CHECK(h1.sum() == BigInt((long long)tri1.facets.size()));

    for (const Graph& g : {path_graph(1), path_graph(2), cycle_graph(3), star_graph(3)}) {
        GeneratorTable t(g);
        TermOrder o = g.is_canonical_cycle()  ? specialized_order(t, OrderKind::Cycle)
                      : g.is_canonical_path() ? specialized_order(t, OrderKind::Path)
                                              : specialized_order(t, OrderKind::Tree, 1);
        Triangulation tri = enumerate_facets(t, o);
        HStarVector from_tri = hstar_from_triangulation(tri);
        HStarVector from_counts = hstar_ehrhart(t);
        CHECK(from_tri.coefficients == from_counts.coefficients);
        CHECK(from_tri.sum() == BigInt((long long)tri.facets.size()));
    }
}

TEST_CASE("facets are distinct and maximal") {
    for (const Graph& g : {path_graph(1), path_graph(2), cycle_graph(3)}) {
        GeneratorTable t(g);
        TermOrder o = g.is_canonical_cycle() ? specialized_order(t, OrderKind::Cycle)
                                             : specialized_order(t, OrderKind::Path);
        Triangulation tri = enumerate_facets(t, o);
        std::set<GenSet> dedup(tri.facets.begin(), tri.facets.end());
        CHECK(dedup.size() == tri.facets.size());
        for (const GenSet& f : tri.facets) {
            for (int extra = 0; extra < t.count(); ++extra) {
                if (std::binary_search(f.begin(), f.end(), extra)) continue;
                GenSet bigger = f;
                bigger.push_back(extra);
                std::sort(bigger.begin(), bigger.end());
                bool hits_nonface = false;
                for (const GenSet& nf : tri.nonfaces)
                    if (std::includes(bigger.begin(), bigger.end(), nf.begin(), nf.end())) {
                        hits_nonface = true;
                        break;
                    }
                CHECK(hits_nonface);
            }
        }
    }
}
