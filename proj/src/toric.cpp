#include "cosmotope/toric.hpp"

#include <algorithm>
#include <set>

namespace cosmo {

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
}

bool Monomial::is_one() const {
    for (int x : e_) if (x) return false;
    return true;
}

bool Monomial::squarefree() const {
    for (int x : e_) if (x > 1) return false;
    return true;
}

std::vector<int> Monomial::support() const {
    std::vector<int> s;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i]) s.push_back((int)i);
    return s;
}

bool Monomial::divides(const Monomial& m) const {
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
}

Monomial Monomial::divide(const Monomial& m) const {
    Monomial r = *this;
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= m.e_[i];
        if (r.e_[i] < 0) throw std::logic_error("monomial division is not exact");
    }
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e_.size(); ++i)
        if (a.e_[i] && b.e_[i]) return false;
    return true;
}

Monomial monomial_of(const GeneratorTable& table, const std::vector<int>& gen_ids) {
    Monomial m(table.count());
    for (int id : gen_ids) m.mul_gen(id);
    return m;
}

namespace {

// Factor order used only for printing: z-vertex, y, t, z-edge.
std::vector<int> display_order(const GeneratorTable& table) {
    std::vector<int> ids;
    const Graph& g = table.graph();
    for (int v = 1; v <= g.vertex_count(); ++v) ids.push_back(table.z_vertex(v));
    for (int e = 0; e < g.edge_count(); ++e) {
        ids.push_back(table.y_fwd(e));
        ids.push_back(table.y_bwd(e));
    }
    for (int e = 0; e < g.edge_count(); ++e) ids.push_back(table.t_edge(e));
    for (int e = 0; e < g.edge_count(); ++e) ids.push_back(table.z_edge(e));
    return ids;
}

// Compare under the sign-normalization ranking (order independent).
bool sign_rank_less(const Monomial& a, const Monomial& b, const GeneratorTable& table) {
    std::vector<int> by_rank((size_t)table.count());
    for (int id = 0; id < table.count(); ++id) by_rank[(size_t)table.sign_rank(id)] = id;
    for (int id : by_rank) {
        if (a.exp(id) != b.exp(id)) return a.exp(id) < b.exp(id);
    }
    return false;
}

Binomial make_binomial(Monomial a, Monomial b, BinomialKind kind, const GeneratorTable& table) {
    if (sign_rank_less(a, b, table)) std::swap(a, b);
    Binomial bin{std::move(a), std::move(b), kind};
    if (!homogeneous(bin) || !kernel_member(bin, table))
        throw std::logic_error("constructed binomial violates its invariants");
    return bin;
}

}  // namespace

std::string monomial_to_string(const Monomial& m, const GeneratorTable& table) {
    if (m.is_one()) return "1";
    std::string out;
    for (int id : display_order(table)) {
        int k = m.exp(id);
        if (!k) continue;
        if (!out.empty()) out += "*";
        out += table.name(id);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string binomial_to_string(const Binomial& b, const GeneratorTable& table) {
    return monomial_to_string(b.plus, table) + " - " + monomial_to_string(b.minus, table);
}

bool kernel_member(const Binomial& b, const GeneratorTable& table) {
    size_t dim = (size_t)table.coord_dim();
    std::vector<long long> img(dim, 0);
    for (int id = 0; id < table.count(); ++id) {
        long long d = b.plus.exp(id) - b.minus.exp(id);
        if (!d) continue;
        const IntVec& p = table.point(id);
        for (size_t c = 0; c < dim; ++c) img[c] += d * p[c];
    }
    for (long long x : img) if (x) return false;
    return true;
}

bool homogeneous(const Binomial& b) {
    return b.plus.total_degree() == b.minus.total_degree();
}

std::vector<Binomial> fundamental_binomials(const GeneratorTable& table) {
    const Graph& g = table.graph();
    std::vector<Binomial> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [i, j] = g.edges()[(size_t)e];
        int yf = table.y_fwd(e), yb = table.y_bwd(e), t = table.t_edge(e);
        int ze = table.z_edge(e), zi = table.z_vertex(i), zj = table.z_vertex(j);
        auto mono = [&](std::vector<int> ids) { return monomial_of(table, ids); };
        out.push_back(make_binomial(mono({yf, yb}), mono({ze, ze}), BinomialKind::Fundamental, table));
        out.push_back(make_binomial(mono({yf, t}), mono({zi, zi}), BinomialKind::Fundamental, table));
        out.push_back(make_binomial(mono({yb, t}), mono({zj, zj}), BinomialKind::Fundamental, table));
        out.push_back(make_binomial(mono({yf, zj}), mono({zi, ze}), BinomialKind::Fundamental, table));
        out.push_back(make_binomial(mono({yb, zi}), mono({zj, ze}), BinomialKind::Fundamental, table));
        out.push_back(make_binomial(mono({t, ze}), mono({zi, zj}), BinomialKind::Fundamental, table));
    }
    return out;
}

std::vector<Binomial> zigzag_binomials(const GeneratorTable& table) {
    const Graph& g = table.graph();
    std::vector<Binomial> out;
    std::set<std::pair<Monomial, Monomial>> seen;
    for (const auto& path : enumerate_simple_paths(g)) {
        int k = (int)path.size();
        int edges = k - 1;
        // Ordered bipartitions into two nonempty blocks; bit t set means the
        // t-th path edge goes to the forward block.
        for (unsigned mask = 1; mask + 1 < (1u << edges); ++mask) {
            Monomial plus(table.count()), minus(table.count());
            plus.mul_gen(table.z_vertex(path.back()));
            minus.mul_gen(table.z_vertex(path.front()));
            for (int t = 0; t < edges; ++t) {
                int a = path[(size_t)t], b = path[(size_t)t + 1];
                int e = g.edge_index(a, b);
                if (mask >> t & 1) {
                    plus.mul_gen(table.y_directed(a, b));
                    minus.mul_gen(table.z_edge(e));
                } else {
                    minus.mul_gen(table.y_directed(b, a));
                    plus.mul_gen(table.z_edge(e));
                }
            }
            Binomial bin = make_binomial(std::move(plus), std::move(minus), BinomialKind::ZigZag, table);
            if (seen.insert({bin.plus, bin.minus}).second) out.push_back(std::move(bin));
        }
    }
    return out;
}

std::vector<Binomial> cyclic_binomials(const GeneratorTable& table) {
    const Graph& g = table.graph();
    std::vector<Binomial> out;
    std::set<std::pair<Monomial, Monomial>> seen;
    for (const auto& cyc : enumerate_simple_cycles(g)) {
        int k = (int)cyc.size();
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            Monomial plus(table.count()), minus(table.count());
            bool full = mask == (1u << k) - 1, empty = mask == 0;
            for (int t = 0; t < k; ++t) {
                int a = cyc[(size_t)t], b = cyc[(size_t)((t + 1) % k)];
                int e = g.edge_index(a, b);
                if (mask >> t & 1) {
                    plus.mul_gen(table.y_directed(a, b));
                    minus.mul_gen(table.z_edge(e));
                } else {
                    minus.mul_gen(table.y_directed(b, a));
                    plus.mul_gen(table.z_edge(e));
                }
            }
            BinomialKind kind = (full || empty) ? BinomialKind::Cycle : BinomialKind::Cyclic;
            Binomial bin = make_binomial(std::move(plus), std::move(minus), kind, table);
            if (seen.insert({bin.plus, bin.minus}).second) out.push_back(std::move(bin));
        }
    }
    return out;
}

std::vector<Binomial> generate_basis(const GeneratorTable& table) {
    if (table.graph().edge_count() > 12)
        throw GuardError("basis generation is limited to 12 edges");
    std::vector<Binomial> out = fundamental_binomials(table);
    auto zz = zigzag_binomials(table);
    auto cy = cyclic_binomials(table);
    out.insert(out.end(), zz.begin(), zz.end());
    out.insert(out.end(), cy.begin(), cy.end());
    return out;
}

TermOrder::TermOrder(std::string descriptor, std::vector<int> seq)
    : descriptor_(std::move(descriptor)), seq_(std::move(seq)) {}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    for (int id : seq_) {
        int ea = a.exp(id), eb = b.exp(id);
        if (ea != eb) return ea > eb ? 1 : -1;
    }
    return 0;
}

TermOrder generic_good_order(const GeneratorTable& table, const std::vector<int>& seq) {
    if ((int)seq.size() != table.count())
        throw ValidationError("order sequence must list every generator once");
    std::vector<bool> used((size_t)table.count(), false);
    bool z_seen = false;
    for (int id : seq) {
        if (id < 0 || id >= table.count() || used[(size_t)id])
            throw ValidationError("order sequence must list every generator once");
        used[(size_t)id] = true;
        GenTag tag = table.tag(id);
        bool is_z = tag == GenTag::ZVertex || tag == GenTag::ZEdge;
        if (is_z) z_seen = true;
        else if (z_seen)
            throw ValidationError("y and t variables must precede every z variable");
    }
    return TermOrder("generic-lex", seq);
}

std::vector<int> default_generic_sequence(const GeneratorTable& table) {
    const Graph& g = table.graph();
    std::vector<int> seq;
    for (int e = 0; e < g.edge_count(); ++e) seq.push_back(table.y_fwd(e));
    for (int e = 0; e < g.edge_count(); ++e) seq.push_back(table.y_bwd(e));
    for (int e = 0; e < g.edge_count(); ++e) seq.push_back(table.t_edge(e));
    for (int e = 0; e < g.edge_count(); ++e) seq.push_back(table.z_edge(e));
    for (int v = 1; v <= g.vertex_count(); ++v) seq.push_back(table.z_vertex(v));
    return seq;
}

TermOrder specialized_order(const GeneratorTable& table, OrderKind kind, int root) {
    const Graph& g = table.graph();
    std::vector<int> seq;
    if (kind == OrderKind::Path) {
        if (!g.is_canonical_path())
            throw ValidationError("path order requires the canonically labeled path");
        int E = g.edge_count();
        for (int e = 0; e < E; ++e) seq.push_back(table.y_fwd(e));
        for (int e = E - 1; e >= 0; --e) seq.push_back(table.y_bwd(e));
        for (int e = 0; e < E; ++e) seq.push_back(table.z_edge(e));
        for (int e = 0; e < E; ++e) seq.push_back(table.t_edge(e));
        for (int v = 1; v <= g.vertex_count(); ++v) seq.push_back(table.z_vertex(v));
        return TermOrder("path", seq);
    }
    if (kind == OrderKind::Cycle) {
        if (!g.is_canonical_cycle())
            throw ValidationError("cycle order requires the canonically labeled cycle");
        int n = g.vertex_count();
        // Forward means the cyclic direction i -> i+1 (mod n); the closing
        // edge is stored as (1,n), so its forward variable is y[n,1].
        auto y_cyclic = [&](int i, bool along) {
            int a = i, b = i % n + 1;
            return along ? table.y_directed(a, b) : table.y_directed(b, a);
        };
        for (int i = 1; i <= n; ++i) seq.push_back(y_cyclic(i, true));
        for (int i = n; i >= 1; --i) seq.push_back(y_cyclic(i, false));
        for (int e = 0; e < n; ++e) seq.push_back(table.z_edge(e));
        for (int e = 0; e < n; ++e) seq.push_back(table.t_edge(e));
        for (int v = 1; v <= n; ++v) seq.push_back(table.z_vertex(v));
        return TermOrder("cycle", seq);
    }
    RootedTree rt(g, root);
    const auto& eo = rt.edge_order();
    for (auto& [p, c] : eo) seq.push_back(table.y_directed(p, c));
    for (auto it = eo.rbegin(); it != eo.rend(); ++it)
        seq.push_back(table.y_directed(it->second, it->first));
    for (auto& [p, c] : eo) seq.push_back(table.z_edge(g.edge_index(p, c)));
    for (auto& [p, c] : eo) seq.push_back(table.t_edge(g.edge_index(p, c)));
    for (int v : rt.vertex_order()) seq.push_back(table.z_vertex(v));
    return TermOrder("tree:" + std::to_string(root), seq);
}

bool is_good_order(const TermOrder& o, const GeneratorTable& table) {
    for (const Binomial& b : fundamental_binomials(table))
        if (o.compare(b.plus, b.minus) <= 0) return false;
    for (const Binomial& b : cyclic_binomials(table)) {
        if (b.kind != BinomialKind::Cycle) continue;
        // plus is the all-y monomial by sign normalization
        if (o.compare(b.plus, b.minus) <= 0) return false;
    }
    return true;
}

const Monomial& leading_monomial(const Binomial& b, const TermOrder& o) {
    int c = o.compare(b.plus, b.minus);
    if (c == 0) throw std::logic_error("binomial with equal monomials has no leading term");
    return c > 0 ? b.plus : b.minus;
}

const Monomial& trailing_monomial(const Binomial& b, const TermOrder& o) {
    return &leading_monomial(b, o) == &b.plus ? b.minus : b.plus;
}

Polynomial polynomial_of(const Binomial& b) {
    return {{b.plus, BigInt(1)}, {b.minus, BigInt(-1)}};
}

namespace {

void add_term(Polynomial& p, const Monomial& m, const BigInt& c) {
    for (auto it = p.begin(); it != p.end(); ++it) {
        if (it->mono == m) {
            it->coeff += c;
            if (it->coeff.is_zero()) p.erase(it);
            return;
        }
    }
    if (!c.is_zero()) p.push_back({m, c});
}

}  // namespace

Polynomial reduce(Polynomial p, const std::vector<Binomial>& basis, const TermOrder& o) {
    while (true) {
        // the o-largest term divisible by some leading monomial
        int best = -1;
        const Binomial* divisor = nullptr;
        for (size_t t = 0; t < p.size(); ++t) {
            if (best >= 0 && o.compare(p[t].mono, p[(size_t)best].mono) <= 0) continue;
            for (const Binomial& b : basis) {
                if (leading_monomial(b, o).divides(p[t].mono)) {
                    best = (int)t;
                    divisor = &b;
                    break;
                }
            }
        }
        if (best < 0) return p;
        Monomial q = p[(size_t)best].mono.divide(leading_monomial(*divisor, o));
        BigInt c = p[(size_t)best].coeff;
        add_term(p, p[(size_t)best].mono, -c);
        add_term(p, q * trailing_monomial(*divisor, o), c);
    }
}

GroebnerReport verify_groebner(const std::vector<Binomial>& basis, const TermOrder& o,
                               const GeneratorTable& table) {
    if (!is_good_order(o, table))
        throw ValidationError("verify_groebner requires a good term order");
    GroebnerReport report;
    for (size_t i = 0; i < basis.size(); ++i) {
        const Monomial& lt_i = leading_monomial(basis[i], o);
        for (size_t j = i + 1; j < basis.size(); ++j) {
            const Monomial& lt_j = leading_monomial(basis[j], o);
            if (coprime(lt_i, lt_j)) continue;  // product criterion
            Monomial l = lcm(lt_i, lt_j);
            Polynomial s;
            add_term(s, l.divide(lt_i) * trailing_monomial(basis[i], o), BigInt(-1));
            add_term(s, l.divide(lt_j) * trailing_monomial(basis[j], o), BigInt(1));
            ++report.pairs_checked;
            if (!reduce(std::move(s), basis, o).empty()) {
                report.pass = false;
                report.failing_pairs.push_back({(int)i, (int)j});
            }
        }
    }
    return report;
}

std::vector<std::vector<int>> minimal_nonfaces(const std::vector<Binomial>& basis,
                                               const TermOrder& o) {
    std::vector<std::vector<int>> supports;
    for (const Binomial& b : basis) {
        const Monomial& lm = leading_monomial(b, o);
        if (!lm.squarefree())
            throw ValidationError("leading monomial is not squarefree; order is not good");
        supports.push_back(lm.support());
    }
    std::sort(supports.begin(), supports.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
    std::vector<std::vector<int>> out;
    for (const auto& s : supports) {
        bool redundant = false;
        for (const auto& kept : out) {
            if (std::includes(s.begin(), s.end(), kept.begin(), kept.end())) {
                redundant = true;
                break;
            }
        }
        if (!redundant) out.push_back(s);
    }
    return out;
}

}  // namespace cosmo
