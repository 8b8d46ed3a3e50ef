#pragma once

#include <string>
#include <vector>

#include "gtq/upoly.hpp"

namespace gtq {

// c_mk: sum over all (i_1..i_k) in {1..m}^k of E_{i1 i2} E_{i2 i3} ... E_{ik i1},
// an element of U(gl_n). Requires 1 <= k <= m <= n.
AlgebraElement gt_generator(int n, int m, int k);

// n x n matrix with entry (i, j) = delta_ij * u + E_ji. The transpose in the
// generator lives here and nowhere else.
std::vector<std::vector<UPoly>> t_matrix(int n);

// Row-ordered expansion with argument shifts: sum over permutations s of
// sign(s) * X_{1 s(1)}(u) X_{2 s(2)}(u-1) ... X_{m s(m)}(u-m+1).
UPoly quantum_determinant(const std::vector<std::vector<UPoly>>& x);

enum class DrinfeldKind { A, B, C, D };

// Quantum determinants of submatrices of the T-matrix:
//   A: rows 1..m, cols 1..m                      (degree m, monic)
//   B: rows 1..m-1,m+1, cols 1..m                (degree m-1, lead E_{m,m+1})
//   C: rows 1..m, cols 1..m-1,m+1                (degree m-1, lead E_{m+1,m})
//   D: rows 1..m-1,m+1, cols 1..m-1,m+1          (degree m)
// A accepts m = 0 and returns 1, so the string relations hold verbatim at m = 1.
UPoly drinfeld_polynomial(int n, DrinfeldKind kind, int m);

struct RelationInstance {
    std::string family;  // "i" .. "ix"
    char series;         // 'b' or 'c' for family (iv), 0 otherwise
    int m;
    int l;  // -1 for the single-index families (v)..(ix)
    bool pass;
    UPoly residual;
};

struct RelationReport {
    int n;
    std::vector<RelationInstance> instances;
    bool all_pass() const;
};

// Exact residuals, as polynomial identities in u (and v), for all nine families
// over every admissible index pair.
RelationReport verify_nt_relations(int n);

// Lagrange interpolation: unique polynomial of degree <= degree_bound through
// (points[i], values[i]). Requires pairwise distinct points and
// points.size() == degree_bound + 1.
UPoly interpolate(const std::vector<Rat>& points, const std::vector<AlgebraElement>& values,
                  int degree_bound);

// Embeds a scalar polynomial as a pure-u UPoly of the given rank.
UPoly upoly_from_scalar(int rank, const ScalarPoly& p);

}  // namespace gtq
