#ifndef COSMOTOPE_TORIC_HPP
#define COSMOTOPE_TORIC_HPP

// Monomials and binomials of the edge ring, the binomial basis attached to
// a graph, good term orders, division, Buchberger verification and minimal
// non-face extraction.

#include <string>
#include <vector>

#include "cosmotope/generators.hpp"
#include "cosmotope/rational.hpp"

namespace cosmo {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(int gen_count) : e_((size_t)gen_count, 0) {}

    int size() const { return (int)e_.size(); }
    int exp(int id) const { return e_[(size_t)id]; }
    void set_exp(int id, int v) { e_[(size_t)id] = v; }
    void mul_gen(int id, int k = 1) { e_[(size_t)id] += k; }

    int total_degree() const;
    bool is_one() const;
    bool squarefree() const;
    std::vector<int> support() const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    Monomial divide(const Monomial& m) const;  // exact
    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

private:
    std::vector<int> e_;
};

Monomial monomial_of(const GeneratorTable& table, const std::vector<int>& gen_ids);
std::string monomial_to_string(const Monomial& m, const GeneratorTable& table);

enum class BinomialKind { Fundamental, ZigZag, Cyclic, Cycle };

// Homogeneous kernel binomial plus - minus with disjoint supports. The
// stored plus-monomial is the larger one under a fixed order-independent
// ranking, so one object serves every term order.
struct Binomial {
    Monomial plus, minus;
    BinomialKind kind;
};

std::string binomial_to_string(const Binomial& b, const GeneratorTable& table);

// Exponent image under the monomial map; zero iff plus - minus is in the
// toric ideal.
bool kernel_member(const Binomial& b, const GeneratorTable& table);
bool homogeneous(const Binomial& b);

std::vector<Binomial> fundamental_binomials(const GeneratorTable& table);
std::vector<Binomial> zigzag_binomials(const GeneratorTable& table);
std::vector<Binomial> cyclic_binomials(const GeneratorTable& table);
// Fundamental + zig-zag + cyclic. Guarded: |E| <= 12.
std::vector<Binomial> generate_basis(const GeneratorTable& table);

// Lexicographic term order given by a variable sequence, largest first.
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(std::string descriptor, std::vector<int> seq);

    const std::string& descriptor() const { return descriptor_; }
    const std::vector<int>& sequence() const { return seq_; }

    // -1, 0, +1 for a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    std::string descriptor_;
    std::vector<int> seq_;
};

// Any permutation with every y and t variable ahead of every z variable.
TermOrder generic_good_order(const GeneratorTable& table, const std::vector<int>& seq);
std::vector<int> default_generic_sequence(const GeneratorTable& table);

enum class OrderKind { Path, Cycle, Tree };

// The dedicated lexicographic orders: the path and cycle orders on
// canonically labeled paths/cycles, and the rooted-tree order.
TermOrder specialized_order(const GeneratorTable& table, OrderKind kind, int root = 0);

// Leading terms of degree-two basis binomials are the marked monomials and
// cycle binomials lead with their all-y monomial.
bool is_good_order(const TermOrder& o, const GeneratorTable& table);

const Monomial& leading_monomial(const Binomial& b, const TermOrder& o);
const Monomial& trailing_monomial(const Binomial& b, const TermOrder& o);

struct Term {
    Monomial mono;
    BigInt coeff;
};
using Polynomial = std::vector<Term>;  // kept combined, no zero terms

Polynomial polynomial_of(const Binomial& b);
// Normal form: no term divisible by a basis leading monomial. Reduction is
// deterministic: largest reducible term, first matching basis element.
Polynomial reduce(Polynomial p, const std::vector<Binomial>& basis, const TermOrder& o);

struct GroebnerReport {
    bool pass = true;
    std::vector<std::pair<int, int>> failing_pairs;  // basis indices
    int pairs_checked = 0;
};

// Buchberger criterion over all S-pairs; refuses non-good orders.
GroebnerReport verify_groebner(const std::vector<Binomial>& basis, const TermOrder& o,
                               const GeneratorTable& table);

// Supports of the leading monomials, interreduced so no returned set
// contains another. Throws when a leading monomial is not squarefree.
std::vector<std::vector<int>> minimal_nonfaces(const std::vector<Binomial>& basis,
                                               const TermOrder& o);

}  // namespace cosmo

#endif
