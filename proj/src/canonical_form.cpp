#include "cosmotope/canonical_form.hpp"

#include "cosmotope/prng.hpp"

namespace cosmo {

SimplexForm make_simplex_form(const std::vector<IntVec>& points) {
    SimplexForm s;
    size_t m = points.size();
    s.points.assign(m, QVec(m));
    IntMat imat;
    for (size_t r = 0; r < m; ++r) {
        if (points[r].size() != m)
            throw ValidationError("simplex needs as many points as coordinates");
        imat.push_back(points[r]);
        for (size_t c = 0; c < m; ++c) s.points[r][c] = Rational(points[r][c]);
    }
    s.volume = det_bareiss(imat).abs();
    auto inv = invert(s.points);
    if (!inv) throw ValidationError("simplex points are affinely dependent");
    s.inverse = std::move(*inv);
    return s;
}

SimplexForm facet_simplex_form(const GenSet& f, const GeneratorTable& table) {
    std::vector<IntVec> pts;
    for (int id : f) pts.push_back(table.point(id));
    SimplexForm s = make_simplex_form(pts);
    s.facet = f;
    return s;
}

QVec barycentric(const SimplexForm& s, const QVec& p) {
    size_t m = s.points.size();
    if (p.size() != m) throw ValidationError("point has the wrong dimension");
    QVec lambda(m, Rational(0));
    for (size_t j = 0; j < m; ++j)
        for (size_t r = 0; r < m; ++r)
            if (!p[r].is_zero()) lambda[j] += p[r] * s.inverse[r][j];
    return lambda;
}

Rational simplex_canonical_value(const SimplexForm& s, const QVec& p) {
    QVec lambda = barycentric(s, p);
    Rational prod(1);
    for (const auto& l : lambda) {
        if (l.is_zero()) throw PoleError({});
        prod *= l;
    }
    return Rational(1) / (Rational(s.volume) * prod);
}

PolytopeForm::PolytopeForm(const Triangulation& t, const GeneratorTable& table) {
    for (const GenSet& f : t.facets) forms_.push_back(facet_simplex_form(f, table));
}

Rational PolytopeForm::value(const QVec& p) const {
    std::vector<int> poles;
    RationalSum sum;
    for (size_t i = 0; i < forms_.size(); ++i) {
        try {
            sum.add(simplex_canonical_value(forms_[i], p));
        } catch (const PoleError&) {
            poles.push_back((int)i);
        }
    }
    if (!poles.empty()) throw PoleError(std::move(poles));
    return sum.value();
}

Rational polytope_canonical_value(const Triangulation& t, const GeneratorTable& table,
                                  const QVec& p) {
    return PolytopeForm(t, table).value(p);
}

std::vector<QVec> sample_points(const GeneratorTable& table, int count, uint64_t seed) {
    if (count < 1) throw ValidationError("need at least one sample point");
    SplitMix64 gen(seed);
    size_t m = (size_t)table.coord_dim();
    std::vector<QVec> out;
    for (int k = 0; k < count; ++k) {
        std::vector<long long> w((size_t)table.count());
        long long total = 0;
        for (auto& x : w) { x = gen.next_positive(97); total += x; }
        QVec p(m, Rational(0));
        for (int id = 0; id < table.count(); ++id) {
            const IntVec& pt = table.point(id);
            for (size_t c = 0; c < m; ++c)
                if (pt[c]) p[c] += Rational(w[(size_t)id] * pt[c], total);
        }
        out.push_back(std::move(p));
    }
    return out;
}

IndependenceReport independence_check(const GeneratorTable& table,
                                      const std::vector<TermOrder>& orders,
                                      const std::vector<QVec>& points) {
    std::vector<PolytopeForm> forms;
    std::vector<std::string> names;
    for (const TermOrder& o : orders) {
        Triangulation t = enumerate_facets(table, o);
        forms.emplace_back(t, table);
        names.push_back(o.descriptor());
    }
    IndependenceReport rep;
    for (size_t pi = 0; pi < points.size(); ++pi) {
        std::vector<Rational> vals;
        for (const auto& f : forms) vals.push_back(f.value(points[pi]));
        for (size_t a = 1; a < vals.size(); ++a) {
            if (vals[a] != vals[0]) {
                rep.pass = false;
                rep.disagreements.push_back({(int)pi, names[0], names[a], vals[0], vals[a]});
            }
        }
    }
    return rep;
}

}  // namespace cosmo
