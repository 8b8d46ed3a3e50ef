#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtq/rational.hpp"

namespace gtq {

// Elementary matrix generator E_ij of gl_n, indices 1-based.
struct Gen {
    int i;
    int j;
    friend bool operator==(const Gen&, const Gen&) = default;
};

// Global factor order for normal forms: lowering (i > j), then Cartan (i == j),
// then raising (i < j); lexicographic on (i, j) inside each block. With raising
// factors rightmost, the Harish-Chandra projection is a plain filter on terms.
int pbw_block(const Gen& g);
bool pbw_less(const Gen& a, const Gen& b);

class PBWMonomial {
public:
    using Factor = std::pair<Gen, unsigned>;

    PBWMonomial() = default;  // identity monomial

    // factors must already be in strict pbw_less order with positive exponents
    static PBWMonomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    unsigned degree() const;
    bool is_identity() const { return factors_.empty(); }
    bool cartan_only() const;

    bool operator==(const PBWMonomial& o) const { return factors_ == o.factors_; }
    bool operator<(const PBWMonomial& o) const;

    std::string str() const;

private:
    std::vector<Factor> factors_;
};

// Commutative polynomial in h_1..h_n, exact rational coefficients.
class CartanPolynomial {
public:
    explicit CartanPolynomial(int nvars);
    static CartanPolynomial scalar(int nvars, const Rat& c);
    static CartanPolynomial variable(int nvars, int k);  // h_k, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<unsigned>, Rat>& terms() const { return terms_; }

    CartanPolynomial& operator+=(const CartanPolynomial& o);
    friend CartanPolynomial operator+(CartanPolynomial a, const CartanPolynomial& b);
    friend CartanPolynomial operator*(const CartanPolynomial& a, const CartanPolynomial& b);
    bool operator==(const CartanPolynomial& o) const;

    Rat evaluate(const std::vector<Rat>& lambda) const;
    std::string str() const;

private:
    std::map<std::vector<unsigned>, Rat> terms_;
    int nvars_;
};

// Element of U(gl_n) in PBW normal form: rational combination of ordered monomials.
class AlgebraElement {
public:
    explicit AlgebraElement(int rank);  // zero element
    static AlgebraElement scalar(int rank, const Rat& c);
    static AlgebraElement generator(int rank, int i, int j);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<PBWMonomial, Rat>& terms() const { return terms_; }
    Rat coeff(const PBWMonomial& m) const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(const Rat& c);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b);
    friend AlgebraElement operator-(AlgebraElement a);
    friend AlgebraElement operator*(AlgebraElement a, const Rat& c);
    friend AlgebraElement operator*(const Rat& c, AlgebraElement a);
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

    bool operator==(const AlgebraElement& o) const;

    std::string str() const;

    // internal: adds c * (normal form of word) to this element
    void add_straightened(const std::vector<Gen>& word, const Rat& c);

    friend AlgebraElement normal_product(const AlgebraElement& a, const AlgebraElement& b);

private:
    void prune();

    std::map<PBWMonomial, Rat> terms_;
    int rank_;
};

// Product in U(gl_n), result again in normal form. Same as operator*.
AlgebraElement normal_product(const AlgebraElement& a, const AlgebraElement& b);

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

// Drops every term with a raising or lowering factor, maps E_kk^e to h_k^e.
CartanPolynomial harish_chandra_project(const AlgebraElement& a);

// Harish-Chandra image evaluated at lambda (lambda.size() == rank).
Rat hw_eigenvalue(const AlgebraElement& a, const std::vector<Rat>& lambda);

}  // namespace gtq
