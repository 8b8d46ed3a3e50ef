#pragma once

#include <array>
#include <string>
#include <vector>

#include "gtq/rational.hpp"
#include "gtq/upoly.hpp"

namespace gtq {

// Triangular array with m entries in row m, rows indexed 1 (bottom) to n (top).
// Row n is the fixed top row; rows 1..n-1 are the ones lattice shifts move.
class Tableau {
public:
    explicit Tableau(std::vector<std::vector<Rat>> rows);

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Rat>& row(int m) const;
    const Rat& entry(int m, int i) const;
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }

    // lattice_shift: entry (m, i) moved by dir (+1 or -1); row n is immovable
    Tableau shifted(int m, int i, int dir) const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    std::string str() const;

private:
    std::vector<std::vector<Rat>> rows_;
};

inline Tableau lattice_shift(const Tableau& t, int m, int i, int dir) {
    return t.shifted(m, i, dir);
}

enum class TabKind { Generic, Singular, Critical };

struct Classification {
    TabKind kind;
    // critical: the equal-entry pairs; singular: the integer-difference pairs
    // in rows 2..n-1; generic: empty. Entries are (m, i, j) with i < j.
    std::vector<std::array<int, 3>> pairs;
};

Classification classify_tableau(const Tableau& t);
bool is_critical(const Tableau& t);
bool is_one_singular(const Tableau& t);

// gamma_mk(L) = sum_i (l_mi + m - 1)^k prod_{j != i} (1 - 1/(l_mi - l_mj)).
// Requires 1 <= k <= m <= n and pairwise distinct entries in row m.
Rat gamma_value(const Tableau& t, int m, int k);

// Row-sorted canonical form; two tableaux name the same maximal ideal iff their
// canonical forms agree. Rows are sorted descending.
class GTIdeal {
public:
    explicit GTIdeal(const Tableau& t);

    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<std::vector<Rat>>& rows() const { return rows_; }
    Tableau representative() const { return Tableau(rows_); }

    bool operator==(const GTIdeal& o) const { return rows_ == o.rows_; }
    bool operator<(const GTIdeal& o) const { return rows_ < o.rows_; }

private:
    std::vector<std::vector<Rat>> rows_;
};

GTIdeal canonical_ideal(const Tableau& t);

// True iff b = a + M for some integer triangular M with zero top row.
bool in_integer_lattice_of(const Tableau& a, const Tableau& b);

// Sign-pattern test for membership in the same discrete (non-critical) piece of
// the shift lattice: every integer-difference pair keeps its strict order.
// Requires b in a's lattice and both non-critical.
bool same_nc_component(const Tableau& a, const Tableau& b);

// True iff some per-row permutation of b differs from a by an integer shift of
// rows 1..n-1 (top rows must match exactly as multisets).
bool module_orbit_equivalent(const Tableau& a, const Tableau& b);

// alpha_m(u) = prod_{i=1..m} (u + l_mi); alpha_0 is the constant 1.
ScalarPoly alpha_polynomial(const Tableau& t, int m);

}  // namespace gtq
