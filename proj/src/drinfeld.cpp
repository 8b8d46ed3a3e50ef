#include "gtq/drinfeld.hpp"

#include <algorithm>
#include <numeric>

#include "gtq/error.hpp"

namespace gtq {

AlgebraElement gt_generator(int n, int m, int k) {
    if (!(1 <= k && k <= m && m <= n))
        throw InputError("gt_generator needs 1 <= k <= m <= n");
    AlgebraElement c(n);
    std::vector<int> idx(k, 1);
    std::vector<Gen> word(k);
    for (;;) {
        for (int t = 0; t < k; ++t) word[t] = Gen{idx[t], idx[(t + 1) % k]};
        c.add_straightened(word, 1);
        int p = k - 1;
        while (p >= 0 && idx[p] == m) idx[p--] = 1;
        if (p < 0) break;
        ++idx[p];
    }
    return c;
}

std::vector<std::vector<UPoly>> t_matrix(int n) {
    if (n < 1) throw InputError("t_matrix needs n >= 1");
    std::vector<std::vector<UPoly>> t(n, std::vector<UPoly>(n, UPoly(n)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            UPoly e = UPoly::constant(AlgebraElement::generator(n, j, i));
            t[i - 1][j - 1] = (i == j) ? UPoly::var_u(n) + e : e;
        }
    return t;
}

namespace {

int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

UPoly quantum_determinant(const std::vector<std::vector<UPoly>>& x) {
    const int m = static_cast<int>(x.size());
    if (m == 0) throw InputError("quantum determinant of an empty matrix");
    for (const auto& row : x)
        if (static_cast<int>(row.size()) != m)
            throw InputError("quantum determinant needs a square matrix");
    const int rank = x[0][0].rank();

    // cache the shifted entries: row i uses argument u - i
    std::vector<std::vector<UPoly>> shifted(m, std::vector<UPoly>(m, UPoly(rank)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) shifted[i][j] = x[i][j].shift_u(i);

    UPoly total(rank);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        UPoly term = shifted[0][perm[0]];
        for (int i = 1; i < m; ++i) term = term * shifted[i][perm[i]];
        if (permutation_sign(perm) < 0) term = -term;
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

UPoly drinfeld_polynomial(int n, DrinfeldKind kind, int m) {
    if (n < 1) throw InputError("drinfeld_polynomial needs n >= 1");
    if (kind == DrinfeldKind::A && m == 0) return UPoly::scalar(n, 1);
    const int max_m = (kind == DrinfeldKind::A) ? n : n - 1;
    if (m < 1 || m > max_m)
        throw InputError("drinfeld_polynomial index m out of range");

    std::vector<int> rows, cols;
    for (int t = 1; t < m; ++t) {
        rows.push_back(t);
        cols.push_back(t);
    }
    switch (kind) {
        case DrinfeldKind::A:
            rows.push_back(m);
            cols.push_back(m);
            break;
        case DrinfeldKind::B:
            rows.push_back(m + 1);
            cols.push_back(m);
            break;
        case DrinfeldKind::C:
            rows.push_back(m);
            cols.push_back(m + 1);
            break;
        case DrinfeldKind::D:
            rows.push_back(m + 1);
            cols.push_back(m + 1);
            break;
    }

    auto t = t_matrix(n);
    std::vector<std::vector<UPoly>> sub(m, std::vector<UPoly>(m, UPoly(n)));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) sub[a][b] = t[rows[a] - 1][cols[b] - 1];
    return quantum_determinant(sub);
}

bool RelationReport::all_pass() const {
    return std::all_of(instances.begin(), instances.end(),
                       [](const RelationInstance& r) { return r.pass; });
}

namespace {

UPoly poly_commutator(const UPoly& p, const UPoly& q) {
    return p * q - q * p;
}

}  // namespace

RelationReport verify_nt_relations(int n) {
    if (n < 2 || n > 4) throw InputError("verify_nt_relations supports 2 <= n <= 4");
    RelationReport report;
    report.n = n;

    std::vector<UPoly> au, av, bu, bv, cu, cv, du, dv;
    au.assign(n + 1, UPoly(n));
    av.assign(n + 1, UPoly(n));
    bu.assign(n, UPoly(n));
    bv.assign(n, UPoly(n));
    cu.assign(n, UPoly(n));
    cv.assign(n, UPoly(n));
    du.assign(n, UPoly(n));
    dv.assign(n, UPoly(n));
    for (int m = 0; m <= n; ++m) {
        au[m] = drinfeld_polynomial(n, DrinfeldKind::A, m);
        av[m] = au[m].rename_u_to_v();
    }
    for (int m = 1; m <= n - 1; ++m) {
        bu[m] = drinfeld_polynomial(n, DrinfeldKind::B, m);
        bv[m] = bu[m].rename_u_to_v();
        cu[m] = drinfeld_polynomial(n, DrinfeldKind::C, m);
        cv[m] = cu[m].rename_u_to_v();
        du[m] = drinfeld_polynomial(n, DrinfeldKind::D, m);
        dv[m] = du[m].rename_u_to_v();
    }
    const UPoly u_minus_v = UPoly::var_u(n) - UPoly::var_v(n);

    auto add = [&](const std::string& family, char series, int m, int l, UPoly residual) {
        report.instances.push_back({family, series, m, l, residual.is_zero(), std::move(residual)});
    };

    for (int m = 1; m <= n; ++m)
        for (int l = 1; l <= n - 1; ++l)
            if (l != m) add("i", 0, m, l, poly_commutator(au[m], bv[l]));
    for (int m = 1; m <= n; ++m)
        for (int l = 1; l <= n - 1; ++l)
            if (l != m) add("ii", 0, m, l, poly_commutator(au[m], cv[l]));
    for (int m = 1; m <= n - 1; ++m)
        for (int l = 1; l <= n - 1; ++l)
            if (l != m) add("iii", 0, m, l, poly_commutator(cu[m], bv[l]));
    for (char series : {'b', 'c'}) {
        const auto& su = series == 'b' ? bu : cu;
        const auto& sv = series == 'b' ? bv : cv;
        for (int m = 1; m <= n - 1; ++m)
            for (int l = 1; l <= n - 1; ++l)
                if (std::abs(l - m) != 1) add("iv", series, m, l, poly_commutator(su[m], sv[l]));
    }
    for (int m = 1; m <= n - 1; ++m)
        add("v", 0, m, -1,
            u_minus_v * poly_commutator(au[m], cv[m]) - (cu[m] * av[m] - cv[m] * au[m]));
    for (int m = 1; m <= n - 1; ++m)
        add("vi", 0, m, -1,
            u_minus_v * poly_commutator(au[m], bv[m]) - (bv[m] * au[m] - bu[m] * av[m]));
    for (int m = 1; m <= n - 1; ++m)
        add("vii", 0, m, -1,
            u_minus_v * poly_commutator(cu[m], bv[m]) - (dv[m] * au[m] - du[m] * av[m]));
    for (int m = 1; m <= n - 1; ++m)
        add("viii", 0, m, -1,
            bu[m] * cu[m].shift_u(1) - (du[m] * au[m].shift_u(1) - au[m + 1] * au[m - 1].shift_u(1)));
    for (int m = 1; m <= n - 1; ++m)
        add("ix", 0, m, -1,
            cu[m].shift_u(1) * bu[m] - (du[m].shift_u(1) * au[m] - au[m + 1] * au[m - 1].shift_u(1)));

    return report;
}

UPoly upoly_from_scalar(int rank, const ScalarPoly& p) {
    std::vector<AlgebraElement> coeffs;
    for (const Rat& c : p.coeffs()) coeffs.push_back(AlgebraElement::scalar(rank, c));
    return UPoly::from_u_coeffs(rank, coeffs);
}

UPoly interpolate(const std::vector<Rat>& points, const std::vector<AlgebraElement>& values,
                  int degree_bound) {
    if (points.size() != values.size())
        throw InputError("interpolation needs matching point and value counts");
    if (static_cast<int>(points.size()) != degree_bound + 1)
        throw InputError("interpolation needs degree_bound + 1 points");
    if (points.empty()) throw InputError("interpolation needs at least one point");
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b)
            if (points[a] == points[b])
                throw InputError("repeated interpolation point " + rat_str(points[a]));
    const int rank = values[0].rank();
    for (const auto& v : values)
        if (v.rank() != rank) throw InputError("rank mismatch among interpolation values");

    UPoly result(rank);
    for (std::size_t i = 0; i < points.size(); ++i) {
        ScalarPoly basis = ScalarPoly::constant(1);
        Rat denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * ScalarPoly({-points[j], Rat(1)});
            denom *= points[i] - points[j];
        }
        basis = basis * ScalarPoly::constant(1 / denom);
        result += UPoly::constant(values[i]) * upoly_from_scalar(rank, basis);
    }
    return result;
}

}  // namespace gtq
