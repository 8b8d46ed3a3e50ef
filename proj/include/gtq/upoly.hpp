#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtq/algebra.hpp"
#include "gtq/rational.hpp"

namespace gtq {

// Dense univariate polynomial over the rationals, coefficients low to high.
class ScalarPoly {
public:
    ScalarPoly() = default;  // zero
    explicit ScalarPoly(std::vector<Rat> coeffs);
    static ScalarPoly constant(const Rat& c);

    const std::vector<Rat>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rat coeff(int k) const;
    Rat eval(const Rat& x) const;

    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
    friend ScalarPoly operator+(const ScalarPoly& a, const ScalarPoly& b);
    bool operator==(const ScalarPoly& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Polynomial in central variables u (and optionally v) with AlgebraElement
// coefficients. Bivariate support covers what the commutation relations need:
// products of univariate polynomials in u and in v.
class UPoly {
public:
    explicit UPoly(int rank);  // zero
    static UPoly constant(const AlgebraElement& a);
    static UPoly scalar(int rank, const Rat& c);
    static UPoly var_u(int rank);
    static UPoly var_v(int rank);
    // univariate in u from coefficient list, low to high
    static UPoly from_u_coeffs(int rank, const std::vector<AlgebraElement>& coeffs);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool pure_u() const;  // no v occurs
    int degree_u() const;  // -1 for zero
    int degree_v() const;
    AlgebraElement coeff(int du, int dv = 0) const;
    AlgebraElement leading_coeff_u() const;  // pure-u polynomials only
    const std::map<std::pair<int, int>, AlgebraElement>& terms() const { return terms_; }

    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b);
    friend UPoly operator-(UPoly a, const UPoly& b);
    friend UPoly operator-(UPoly a);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const Rat& c, UPoly a);
    bool operator==(const UPoly& o) const;

    UPoly shift_u(long k) const;      // p(u) -> p(u - k)
    UPoly rename_u_to_v() const;      // pure-u polynomials only
    AlgebraElement evaluate(const Rat& u_val) const;  // pure-u polynomials only
    AlgebraElement evaluate_uv(const Rat& u_val, const Rat& v_val) const;

    std::string str() const;

private:
    void set(int du, int dv, AlgebraElement a);

    std::map<std::pair<int, int>, AlgebraElement> terms_;  // (deg_u, deg_v) -> nonzero
    int rank_;
};

inline UPoly poly_multiply(const UPoly& p, const UPoly& q) { return p * q; }
inline AlgebraElement evaluate_at(const UPoly& p, const Rat& point) { return p.evaluate(point); }
inline UPoly shift_variable(const UPoly& p, long k) { return p.shift_u(k); }

}  // namespace gtq
