#include "cosmotope/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cosmo {

std::optional<std::pair<IntVec, long long>> hyperplane_through(
    const std::vector<IntVec>& points) {
    if (points.empty()) return std::nullopt;
    size_t m = points[0].size();
    // Unknowns (a_1..a_m, c): a.x_i - c = 0 for each point, gauge sum(a) = 0.
    QMat sys;
    for (const auto& x : points) {
        QVec row(m + 1);
        for (size_t j = 0; j < m; ++j) row[j] = Rational(x[j]);
        row[m] = Rational(-1);
        sys.push_back(std::move(row));
    }
    QVec gauge(m + 1, Rational(1));
    gauge[m] = Rational(0);
    sys.push_back(std::move(gauge));
    QMat null = rational_nullspace(std::move(sys));
    if (null.size() != 1) return std::nullopt;
    std::vector<BigInt> prim = primitive_integer(null[0]);
    IntVec a(m);
    for (size_t j = 0; j < m; ++j) a[j] = prim[j].to_long_long();
    return std::make_pair(std::move(a), prim[m].to_long_long());
}

namespace {

long long dot64(const IntVec& a, const IntVec& x) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
    return s;
}

}  // namespace

HalfspaceDescription halfspaces(const GeneratorTable& table) {
    int d = dimension(table.graph());
    if (d > 8) throw GuardError("halfspaces is limited to dimension 8");
    size_t m = (size_t)table.coord_dim();
    std::vector<IntVec> pts;
    for (int id = 0; id < table.count(); ++id) pts.push_back(table.point(id));

    // Every facet is the affine span of d of the points; enumerate d-subsets,
    // keep hyperplanes with all points on one side.
    HalfspaceDescription h;
    h.coord_dim = (int)m;
    std::set<std::pair<IntVec, long long>> seen;
    std::vector<int> idx((size_t)d);
    std::vector<IntVec> subset((size_t)d);
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == d) {
            for (int t = 0; t < d; ++t) subset[(size_t)t] = pts[(size_t)idx[(size_t)t]];
            auto hp = hyperplane_through(subset);
            if (!hp) return;
            auto [a, c] = *hp;
            bool any_below = false, any_above = false;
            for (const auto& p : pts) {
                long long v = dot64(a, p);
                if (v < c) any_below = true;
                if (v > c) any_above = true;
            }
            if (any_below && any_above) return;
            if (any_above) {  // flip so the polytope satisfies a.x <= c
                for (auto& v : a) v = -v;
                c = -c;
            }
            if (seen.insert({a, c}).second) h.inequalities.push_back({a, c});
            return;
        }
        for (int i = start; i <= (int)pts.size() - (d - pos); ++i) {
            idx[(size_t)pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    std::sort(h.inequalities.begin(), h.inequalities.end());
    return h;
}

bool contains(const HalfspaceDescription& h, const QVec& p) {
    if ((int)p.size() != h.coord_dim)
        throw ValidationError("point has the wrong dimension");
    Rational sum(0);
    for (const auto& x : p) sum += x;
    if (sum != Rational(1)) return false;
    for (const auto& [a, c] : h.inequalities) {
        Rational v(0);
        for (size_t i = 0; i < p.size(); ++i)
            if (a[i]) v += p[i] * Rational(a[i]);
        if (v > Rational(c)) return false;
    }
    return true;
}

long long count_dilate_points(const GeneratorTable& table, int k) {
    int d = dimension(table.graph());
    if (d > 6) throw GuardError("dilate counting is limited to dimension 6");
    if (k < 0 || k > d + 1) throw GuardError("dilate counting is limited to k <= dim+1");
    if (k == 0) return 1;
    HalfspaceDescription h = halfspaces(table);
    size_t m = (size_t)table.coord_dim();
    size_t q = h.inequalities.size();

    // suffix bound of |a_j| per inequality for pruning
    std::vector<std::vector<long long>> suffix(q, std::vector<long long>(m + 1, 0));
    for (size_t i = 0; i < q; ++i)
        for (size_t j = m; j-- > 0;)
            suffix[i][j] = suffix[i][j + 1] + std::abs(h.inequalities[i].first[j]);

    long long count = 0;
    IntVec x(m, 0);
    std::vector<long long> dots(q, 0);
    std::function<void(size_t, long long)> rec = [&](size_t pos, long long partial) {
        long long rest = (long long)(m - pos);
        if (pos == m) {
            ++count;
            return;
        }
        if (std::llabs((long long)k - partial) > rest * k) return;
        for (size_t i = 0; i < q; ++i)
            if (dots[i] - (long long)k * suffix[i][pos] > (long long)k * h.inequalities[i].second)
                return;
        long long lo = -k, hi = k;
        if (pos + 1 == m) lo = hi = (long long)k - partial;  // sum forced
        if (lo < -k || hi > k) return;
        for (long long v = lo; v <= hi; ++v) {
            x[pos] = v;
            bool ok = true;
            for (size_t i = 0; i < q; ++i) {
                dots[i] += h.inequalities[i].first[pos] * v;
                if (pos + 1 == m && dots[i] > (long long)k * h.inequalities[i].second) ok = false;
            }
            if (ok) rec(pos + 1, partial + v);
            for (size_t i = 0; i < q; ++i) dots[i] -= h.inequalities[i].first[pos] * v;
        }
    };
    rec(0, 0);
    return count;
}

QVec ehrhart_polynomial(const std::vector<long long>& counts) {
    // Newton forward differences on nodes 0..d, then expand.
    size_t n = counts.size();
    std::vector<Rational> diff(n);
    for (size_t i = 0; i < n; ++i) diff[i] = Rational(counts[i]);
    std::vector<Rational> newton;  // divided differences at 0..d (unit spacing)
    for (size_t level = 0; level < n; ++level) {
        newton.push_back(diff[0]);
        for (size_t i = 0; i + level + 1 < n; ++i)
            diff[i] = (diff[i + 1] - diff[i]) / Rational((long long)(level + 1));
    }
    QVec coeffs(n, Rational(0));
    QVec factor = {Rational(1)};  // product (x-0)(x-1)...
    for (size_t level = 0; level < n; ++level) {
        for (size_t j = 0; j < factor.size(); ++j)
            coeffs[j] += newton[level] * factor[j];
        QVec next(factor.size() + 1, Rational(0));
        for (size_t j = 0; j < factor.size(); ++j) {
            next[j + 1] += factor[j];
            next[j] -= factor[j] * Rational((long long)level);
        }
        factor = std::move(next);
    }
    return coeffs;
}

Rational evaluate_polynomial(const QVec& coeffs, long long x) {
    Rational v(0), p(1);
    for (const auto& c : coeffs) {
        v += c * p;
        p *= Rational(x);
    }
    return v;
}

HStarVector hstar_ehrhart(const GeneratorTable& table) {
    int d = dimension(table.graph());
    if (d > 6) throw GuardError("h* extraction is limited to dimension 6");
    std::vector<long long> counts;
    for (int k = 0; k <= d; ++k) counts.push_back(count_dilate_points(table, k));

    QVec poly = ehrhart_polynomial(counts);
    for (int k = 0; k <= d; ++k)
        if (evaluate_polynomial(poly, k) != Rational(counts[(size_t)k]))
            throw std::logic_error("Ehrhart interpolation failed to reproduce counts");

    // sum_k L(k) t^k = h*(t) / (1-t)^{d+1}
    std::vector<BigInt> binom((size_t)d + 2, BigInt(0));
    binom[0] = BigInt(1);
    for (int i = 1; i <= d + 1; ++i)
        binom[(size_t)i] = binom[(size_t)i - 1] * BigInt(d + 2 - i) / BigInt(i);
    HStarVector h;
    h.coefficients.assign((size_t)d + 1, BigInt(0));
    for (int j = 0; j <= d; ++j) {
        BigInt v(0);
        for (int i = 0; i <= j; ++i) {
            BigInt term = binom[(size_t)i] * BigInt(counts[(size_t)(j - i)]);
            v = (i % 2 == 0) ? v + term : v - term;
        }
        h.coefficients[(size_t)j] = v;
    }
    if (!(h.coefficients[0] == BigInt(1)))
        throw std::logic_error("h* vector must start at 1");
    for (const auto& c : h.coefficients)
        if (c.is_negative()) throw std::logic_error("h* coefficients must be nonnegative");
    return h;
}

namespace {

struct Simplex {
    std::vector<int> verts;  // point indices, sorted
};

}  // namespace

BigInt brute_volume(const GeneratorTable& table) {
    int d = dimension(table.graph());
    if (d > 7) throw GuardError("volume oracle is limited to dimension 7");
    size_t m = (size_t)table.coord_dim();
    std::vector<IntVec> pts;
    for (int id = 0; id < table.count(); ++id) pts.push_back(table.point(id));

    // The first m points are the standard basis: the seed simplex.
    std::vector<Simplex> simplices;
    Simplex seed;
    for (size_t i = 0; i < m; ++i) seed.verts.push_back((int)i);
    simplices.push_back(seed);

    // Cached oriented facet hyperplanes keyed by the vertex set.
    std::map<std::vector<int>, std::pair<IntVec, long long>> plane_cache;
    auto facet_plane = [&](const std::vector<int>& facet, int opposite)
        -> const std::pair<IntVec, long long>& {
        auto it = plane_cache.find(facet);
        if (it == plane_cache.end()) {
            std::vector<IntVec> sub;
            for (int ix : facet) sub.push_back(pts[(size_t)ix]);
            auto hp = hyperplane_through(sub);
            if (!hp) throw std::logic_error("degenerate facet in placing triangulation");
            it = plane_cache.emplace(facet, std::move(*hp)).first;
        }
        auto& [a, c] = it->second;
        if (dot64(a, pts[(size_t)opposite]) > c) {  // orient: owner below
            for (auto& v : a) v = -v;
            c = -c;
        }
        return it->second;
    };

    for (size_t next = m; next < pts.size(); ++next) {
        // Boundary facets appear in exactly one simplex.
        std::map<std::vector<int>, std::pair<int, int>> facet_count;  // facet -> (count, opposite)
        for (const Simplex& s : simplices) {
            for (size_t drop = 0; drop < s.verts.size(); ++drop) {
                std::vector<int> f = s.verts;
                int opposite = f[drop];
                f.erase(f.begin() + (long)drop);
                auto [it, fresh] = facet_count.emplace(std::move(f), std::make_pair(1, opposite));
                if (!fresh) it->second.first += 1;
            }
        }
        const IntVec& p = pts[next];
        for (const auto& [facet, info] : facet_count) {
            if (info.first != 1) continue;
            const auto& [a, c] = facet_plane(facet, info.second);
            if (dot64(a, p) > c) {  // strictly beyond: cone
                Simplex s;
                s.verts = facet;
                s.verts.push_back((int)next);
                std::sort(s.verts.begin(), s.verts.end());
                simplices.push_back(std::move(s));
            }
        }
    }

    BigInt vol(0);
    for (const Simplex& s : simplices) {
        IntMat mat;
        for (int ix : s.verts) mat.push_back(pts[(size_t)ix]);
        vol += det_bareiss(mat).abs();
    }
    return vol;
}

}  // namespace cosmo
