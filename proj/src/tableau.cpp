#include "gtq/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "gtq/error.hpp"

namespace gtq {

Tableau::Tableau(std::vector<std::vector<Rat>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw InputError("tableau needs at least one row");
    for (std::size_t m = 0; m < rows_.size(); ++m)
        if (rows_[m].size() != m + 1)
            throw InputError("tableau row " + std::to_string(m + 1) + " must have " +
                             std::to_string(m + 1) + " entries");
}

const std::vector<Rat>& Tableau::row(int m) const {
    if (m < 1 || m > rank()) throw InputError("tableau row index out of range");
    return rows_[m - 1];
}

const Rat& Tableau::entry(int m, int i) const {
    const auto& r = row(m);
    if (i < 1 || i > m) throw InputError("tableau entry index out of range");
    return r[i - 1];
}

Tableau Tableau::shifted(int m, int i, int dir) const {
    if (m < 1 || m > rank() - 1)
        throw InputError("lattice shifts only move rows 1..n-1");
    if (i < 1 || i > m) throw InputError("tableau entry index out of range");
    if (dir != 1 && dir != -1) throw InputError("shift direction must be +1 or -1");
    std::vector<std::vector<Rat>> rows(rows_);
    rows[m - 1][i - 1] += dir;
    return Tableau(std::move(rows));
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (int m = rank(); m >= 1; --m) {
        for (int i = 1; i <= m; ++i) {
            if (i > 1) os << ",";
            os << rat_str(entry(m, i));
        }
        if (m > 1) os << " | ";
    }
    return os.str();
}

Classification classify_tableau(const Tableau& t) {
    const int n = t.rank();
    std::vector<std::array<int, 3>> equal_pairs;
    for (int m = 2; m <= n; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                if (t.entry(m, i) == t.entry(m, j)) equal_pairs.push_back({m, i, j});
    if (!equal_pairs.empty()) return {TabKind::Critical, std::move(equal_pairs)};

    std::vector<std::array<int, 3>> singular_pairs;
    for (int m = 2; m <= n - 1; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                if (rat_is_integer(t.entry(m, i) - t.entry(m, j)))
                    singular_pairs.push_back({m, i, j});
    if (!singular_pairs.empty()) return {TabKind::Singular, std::move(singular_pairs)};
    return {TabKind::Generic, {}};
}

bool is_critical(const Tableau& t) {
    return classify_tableau(t).kind == TabKind::Critical;
}

bool is_one_singular(const Tableau& t) {
    const Classification c = classify_tableau(t);
    return c.kind == TabKind::Singular && c.pairs.size() == 1;
}

Rat gamma_value(const Tableau& t, int m, int k) {
    if (!(1 <= k && k <= m && m <= t.rank()))
        throw InputError("gamma_value needs 1 <= k <= m <= n");
    const auto& row = t.row(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (row[i] == row[j])
                throw InputError("gamma_value undefined: repeated entry " + rat_str(row[i]) +
                                 " in row " + std::to_string(m));
    Rat total = 0;
    for (int i = 0; i < m; ++i) {
        Rat term = 1;
        const Rat base = row[i] + (m - 1);
        for (int e = 0; e < k; ++e) term *= base;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            term *= Rat(1) - Rat(1) / (row[i] - row[j]);
        }
        total += term;
    }
    return total;
}

GTIdeal::GTIdeal(const Tableau& t) : rows_(t.rows()) {
    for (auto& row : rows_) std::sort(row.begin(), row.end(), std::greater<Rat>());
}

GTIdeal canonical_ideal(const Tableau& t) {
    return GTIdeal(t);
}

bool in_integer_lattice_of(const Tableau& a, const Tableau& b) {
    if (a.rank() != b.rank()) return false;
    const int n = a.rank();
    if (a.row(n) != b.row(n)) return false;
    for (int m = 1; m <= n - 1; ++m)
        for (int i = 1; i <= m; ++i)
            if (!rat_is_integer(a.entry(m, i) - b.entry(m, i))) return false;
    return true;
}

namespace {

int rat_sign(const Rat& r) {
    return sgn(r);
}

}  // namespace

bool same_nc_component(const Tableau& a, const Tableau& b) {
    if (!in_integer_lattice_of(a, b))
        throw InputError("same_nc_component needs tableaux in the same shift lattice");
    if (is_critical(a) || is_critical(b))
        throw InputError("same_nc_component is undefined for critical tableaux");
    const int n = a.rank();
    for (int m = 2; m <= n; ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                const Rat da = a.entry(m, i) - a.entry(m, j);
                if (!rat_is_integer(da)) continue;
                const Rat db = b.entry(m, i) - b.entry(m, j);
                if (rat_sign(da) != rat_sign(db) || rat_sign(da) == 0) return false;
            }
    return true;
}

bool module_orbit_equivalent(const Tableau& a, const Tableau& b) {
    if (a.rank() != b.rank())
        throw InputError("module_orbit_equivalent needs equal ranks");
    const int n = a.rank();
    {
        std::vector<Rat> ra(a.row(n)), rb(b.row(n));
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ra != rb) return false;
    }
    // Rows below the top: entries must match up to permutation modulo integers,
    // i.e. the multiset of fractional parts per row must agree.
    for (int m = 1; m <= n - 1; ++m) {
        std::map<Rat, int> ca, cb;
        for (int i = 1; i <= m; ++i) {
            ++ca[rat_frac(a.entry(m, i))];
            ++cb[rat_frac(b.entry(m, i))];
        }
        if (ca != cb) return false;
    }
    return true;
}

ScalarPoly alpha_polynomial(const Tableau& t, int m) {
    if (m == 0) return ScalarPoly::constant(1);
    if (m < 1 || m > t.rank()) throw InputError("alpha_polynomial index out of range");
    ScalarPoly p = ScalarPoly::constant(1);
    for (int i = 1; i <= m; ++i) p = p * ScalarPoly({t.entry(m, i), Rat(1)});
    return p;
}

}  // namespace gtq
