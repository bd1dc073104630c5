#include "cosmotope/triangulation.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "cosmotope/prng.hpp"

namespace cosmo {

Triangulation enumerate_facets(const GeneratorTable& table, const TermOrder& o) {
    if (table.count() > 32)
        throw GuardError("facet enumeration is limited to 32 generators");
    if (!is_good_order(o, table))
        throw ValidationError("facet enumeration requires a good term order");
    auto basis = generate_basis(table);
    auto nonfaces = minimal_nonfaces(basis, o);

    int N = table.count();
    int m = table.coord_dim();
    std::vector<uint32_t> nf_masks;
    for (const auto& nf : nonfaces) {
        uint32_t mask = 0;
        for (int id : nf) mask |= 1u << id;
        nf_masks.push_back(mask);
    }
    // non-faces indexed by their largest generator: a completed non-face is
    // detected exactly when its last element is chosen
    std::vector<std::vector<uint32_t>> by_top((size_t)N);
    for (size_t i = 0; i < nonfaces.size(); ++i)
        by_top[(size_t)nonfaces[i].back()].push_back(nf_masks[i]);

    Triangulation t;
    t.order_descriptor = o.descriptor();
    t.nonfaces = nonfaces;
    GenSet current;
    std::function<void(int, uint32_t)> rec = [&](int next, uint32_t chosen) {
        if ((int)current.size() == m) {
            t.facets.push_back(current);
            return;
        }
        if (N - next < m - (int)current.size()) return;
        for (int g = next; g < N; ++g) {
            uint32_t with = chosen | (1u << g);
            bool blocked = false;
            for (uint32_t nf : by_top[(size_t)g])
                if ((nf & ~with) == 0) { blocked = true; break; }
            if (blocked) continue;
            current.push_back(g);
            rec(g + 1, with);
            current.pop_back();
        }
    };
    rec(0, 0);
    return t;
}

bool is_unimodular_simplex(const GenSet& f, const GeneratorTable& table) {
    if ((int)f.size() != table.coord_dim())
        throw ValidationError("simplex has the wrong number of vertices");
    IntMat m;
    for (int id : f) m.push_back(table.point(id));
    BigInt d = det_bareiss(m).abs();
    return d == BigInt(1);
}

BigInt normalized_volume(const Triangulation& t) {
    return BigInt((long long)t.facets.size());
}

namespace {

// symbols present on one edge inside a facet
struct EdgeSymbols {
    bool z = false, tt = false, yf = false, yb = false;
    int total() const { return (int)z + (int)tt + (int)yf + (int)yb; }
};

std::vector<EdgeSymbols> edge_symbols(const GenSet& f, const GeneratorTable& table) {
    std::vector<EdgeSymbols> out((size_t)table.graph().edge_count());
    for (int id : f) {
        switch (table.tag(id)) {
            case GenTag::ZEdge: out[(size_t)table.edge_of(id)].z = true; break;
            case GenTag::T: out[(size_t)table.edge_of(id)].tt = true; break;
            case GenTag::Y: {
                int e = table.edge_of(id);
                if (id == table.y_fwd(e)) out[(size_t)e].yf = true;
                else out[(size_t)e].yb = true;
                break;
            }
            default: break;
        }
    }
    return out;
}

}  // namespace

TriangulationReport validate_triangulation(const Triangulation& t, const GeneratorTable& table,
                                           uint64_t seed) {
    TriangulationReport rep;
    const Graph& g = table.graph();
    int V = g.vertex_count(), E = g.edge_count();

    for (size_t i = 0; i < t.facets.size(); ++i)
        if (!is_unimodular_simplex(t.facets[i], table))
            rep.fail("facet " + std::to_string(i) + " is not unimodular");

    BigInt vol = brute_volume(table);
    if (!(BigInt((long long)t.facets.size()) == vol))
        rep.fail("facet count " + std::to_string(t.facets.size()) +
                 " != oracle volume " + vol.to_string());

    for (size_t i = 0; i < t.facets.size(); ++i) {
        auto syms = edge_symbols(t.facets[i], table);
        for (int e = 0; e < E; ++e) {
            const auto& s = syms[(size_t)e];
            if (s.total() == 0)
                rep.fail("facet " + std::to_string(i) + " misses edge " + std::to_string(e));
            if (s.total() > 2 || (s.total() == 2 && !(s.z && (s.yf || s.yb))))
                rep.fail("facet " + std::to_string(i) + " has a bad double on edge " +
                         std::to_string(e));
        }
    }

    if (g.is_canonical_path()) {
        for (size_t i = 0; i < t.facets.size(); ++i) {
            auto syms = edge_symbols(t.facets[i], table);
            std::vector<int> zs;
            for (int id : t.facets[i])
                if (table.tag(id) == GenTag::ZVertex) zs.push_back(table.vertex_of(id));
            int doubles = 0;
            for (auto& s : syms) doubles += s.total() == 2;
            int k = V - (int)zs.size();
            if (doubles != k)
                rep.fail("facet " + std::to_string(i) + " has " + std::to_string(doubles) +
                         " doubles, expected " + std::to_string(k));
            auto doubles_in = [&](int lo, int hi) {  // vertices [lo, hi]
                int c = 0;
                for (int v = lo; v < hi; ++v) c += syms[(size_t)(v - 1)].total() == 2;
                return c;
            };
            if (!zs.empty()) {
                if (doubles_in(1, zs.front()) != zs.front() - 1)
                    rep.fail("facet " + std::to_string(i) + ": leading interval count");
                for (size_t j = 0; j + 1 < zs.size(); ++j)
                    if (doubles_in(zs[j], zs[j + 1]) != zs[j + 1] - zs[j] - 1)
                        rep.fail("facet " + std::to_string(i) + ": interior interval count");
                if (doubles_in(zs.back(), V) != V - zs.back())
                    rep.fail("facet " + std::to_string(i) + ": trailing interval count");
            } else {
                rep.fail("facet " + std::to_string(i) + ": path facet without z-vertices");
            }
        }
    }

    // covering spot-check: seeded interior points must land in some facet
    size_t m = (size_t)table.coord_dim();
    std::vector<QMat> inverses;
    for (const GenSet& f : t.facets) {
        QMat mat(m, QVec(m));
        for (size_t r = 0; r < m; ++r)
            for (size_t c = 0; c < m; ++c)
                mat[r][c] = Rational(table.point(f[r])[c]);
        auto inv = invert(std::move(mat));
        if (!inv) {
            rep.fail("facet matrix is singular");
            return rep;
        }
        inverses.push_back(std::move(*inv));
    }
    SplitMix64 gen(seed);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<long long> w((size_t)table.count());
        long long total = 0;
        for (auto& x : w) { x = gen.next_positive(97); total += x; }
        QVec p(m, Rational(0));
        for (int id = 0; id < table.count(); ++id)
            for (size_t c = 0; c < m; ++c)
                if (table.point(id)[c])
                    p[c] += Rational(w[(size_t)id] * table.point(id)[c], total);
        bool covered = false;
        for (size_t fi = 0; fi < t.facets.size() && !covered; ++fi) {
            bool inside = true;
            for (size_t col = 0; col < m && inside; ++col) {
                Rational lambda(0);
                for (size_t r = 0; r < m; ++r) lambda += p[r] * inverses[fi][r][col];
                if (lambda.is_negative()) inside = false;
            }
            covered = inside;
        }
        if (!covered) {
            rep.fail("seeded point " + std::to_string(trial) + " is covered by no facet");
            break;
        }
    }
    return rep;
}

HStarVector hstar_from_triangulation(const Triangulation& t) {
    if (t.facets.empty()) throw ValidationError("empty triangulation");
    int d = (int)t.facets[0].size() - 1;
    // distinct faces of the complex, counted by cardinality
    std::unordered_set<uint32_t> faces;
    std::vector<long long> fvec((size_t)d + 2, 0);  // f_{-1}..f_d
    for (const GenSet& f : t.facets) {
        uint32_t full = 0;
        for (int id : f) full |= 1u << id;
        for (uint32_t sub = full;; sub = (sub - 1) & full) {
            if (faces.insert(sub).second) fvec[(size_t)__builtin_popcount(sub)] += 1;
            if (sub == 0) break;
        }
    }
    // h_k = sum_i (-1)^{k-i} C(d+1-i, k-i) f_{i-1}
    auto choose = [](long long n, long long k) {
        if (k < 0 || k > n) return BigInt(0);
        BigInt r(1);
        for (long long i = 1; i <= k; ++i) r = r * BigInt(n - k + i) / BigInt(i);
        return r;
    };
    HStarVector h;
    h.coefficients.assign((size_t)d + 1, BigInt(0));
    for (int k = 0; k <= d; ++k) {
        BigInt v(0);
        for (int i = 0; i <= k; ++i) {
            BigInt term = choose(d + 1 - i, k - i) * BigInt(fvec[(size_t)i]);
            v = ((k - i) % 2 == 0) ? v + term : v - term;
        }
        h.coefficients[(size_t)k] = v;
    }
    return h;
}

std::string facet_to_string(const GenSet& f, const GeneratorTable& table) {
    std::string out = "{";
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += ",";
        out += table.name(f[i]);
    }
    return out + "}";
}

}  // namespace cosmo
