#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "gtq/drinfeld.hpp"
#include "gtq/error.hpp"
#include "gtq/tableau.hpp"

using namespace gtq;

namespace {

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 5);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

// the tableau of the highest-weight character: l_mi = lambda_i - i + 1 in every row
Tableau hw_tableau(const std::vector<Rat>& lambda) {
    int n = static_cast<int>(lambda.size());
    std::vector<std::vector<Rat>> rows;
    for (int m = 1; m <= n; ++m) {
        std::vector<Rat> row;
        for (int i = 1; i <= m; ++i) row.push_back(lambda[i - 1] - i + 1);
        rows.push_back(row);
    }
    return Tableau(rows);
}

bool distinct_rows(const Tableau& t) {
    for (int m = 2; m <= t.rank(); ++m)
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                if (t.entry(m, i) == t.entry(m, j)) return false;
    return true;
}

Tableau random_tableau(int n, std::mt19937& rng) {
    std::vector<std::vector<Rat>> rows;
    for (int m = 1; m <= n; ++m) {
        std::vector<Rat> row;
        for (int i = 0; i < m; ++i) row.push_back(rnd_rat(rng));
        rows.push_back(row);
    }
    return Tableau(rows);
}

// independent oracle: b = sigma(a) + z with sigma in S_1 x .. x S_n and z
// integral on rows 1..n-1, zero on row n
bool brute_orbit(const Tableau& a, const Tableau& b) {
    if (a.rank() != b.rank()) return false;
    const int n = a.rank();
    for (int m = 1; m <= n; ++m) {
        std::vector<int> idx(m);
        std::iota(idx.begin(), idx.end(), 0);
        std::sort(idx.begin(), idx.end());
        bool found = false;
        do {
            bool ok = true;
            for (int i = 0; i < m && ok; ++i) {
                Rat diff = b.row(m)[i] - a.row(m)[idx[i]];
                if (m == n ? diff != 0 : !rat_is_integer(diff)) ok = false;
            }
            if (ok) found = true;
        } while (!found && std::next_permutation(idx.begin(), idx.end()));
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("tableau construction and access") {
    Tableau t({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(t.rank() == 3);
    CHECK(t.entry(2, 1) == Rat(1) / 2);
    CHECK(t.entry(3, 3) == -1);
    CHECK_THROWS_AS(t.entry(4, 1), Error);
    CHECK_THROWS_AS(t.entry(2, 3), Error);
    CHECK_THROWS_AS(Tableau({{Rat(0)}, {Rat(1)}}), Error);
    Tableau up = t.shifted(2, 2, 1);
    CHECK(up.entry(2, 2) == Rat(1) / 2);
    CHECK(lattice_shift(lattice_shift(t, 2, 1, 1), 2, 1, -1) == t);
    CHECK_THROWS_AS(t.shifted(3, 1, 1), Error);  // top row is fixed
    CHECK_THROWS_AS(t.shifted(1, 1, 2), Error);
}

TEST_CASE("classification") {
    Tableau sing({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    Classification c = classify_tableau(sing);
    CHECK(c.kind == TabKind::Singular);
    REQUIRE(c.pairs.size() == 1);
    CHECK(c.pairs[0] == std::array<int, 3>{2, 1, 2});
    CHECK(is_one_singular(sing));
    CHECK(!is_critical(sing));

    Tableau crit({{Rat(0)}, {Rat(1) / 2, Rat(1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(classify_tableau(crit).kind == TabKind::Critical);
    CHECK(is_critical(crit));
    CHECK(!is_one_singular(crit));

    // integer differences in the top or bottom row do not make it singular
    Tableau gen({{Rat(1) / 7}, {Rat(1) / 3, Rat(-1) / 5}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(classify_tableau(gen).kind == TabKind::Generic);

    // a critical pair in the top row counts
    Tableau crit_top({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(1), Rat(-1)}});
    CHECK(is_critical(crit_top));
}

TEST_CASE("gamma on the (3,-1) row") {
    Tableau t({{Rat(1) / 2}, {Rat(3), Rat(-1)}});
    CHECK(gamma_value(t, 2, 1) == 3);
    CHECK(gamma_value(t, 1, 1) == Rat(1) / 2);
    CHECK_THROWS_AS(gamma_value(t, 3, 1), Error);
    CHECK_THROWS_AS(gamma_value(t, 2, 0), Error);
    Tableau crit({{Rat(1) / 2}, {Rat(3), Rat(3)}});
    CHECK_THROWS_AS(gamma_value(crit, 2, 1), InputError);
}

TEST_CASE("gamma is invariant under row permutation") {
    std::mt19937 rng(23);
    int done = 0;
    while (done < 100) {
        Tableau t = random_tableau(3, rng);
        if (!distinct_rows(t)) continue;
        std::uniform_int_distribution<int> pick_m(2, 3);
        int m = pick_m(rng);
        std::vector<Rat> row = t.row(m);
        std::shuffle(row.begin(), row.end(), rng);
        auto rows = t.rows();
        rows[m - 1] = row;
        Tableau p(rows);
        std::uniform_int_distribution<int> pick_k(1, m);
        int k = pick_k(rng);
        CHECK(gamma_value(t, m, k) == gamma_value(p, m, k));
        ++done;
    }
}

TEST_CASE("gamma and alpha match the highest-weight eigenvalues") {
    // pinned oracle: with l_mi = lambda_i - i + 1, gamma_mk equals the
    // eigenvalue of c_mk on a highest-weight vector, and alpha_m(u) equals the
    // Harish-Chandra image prod_i (u + l_mi) of a_m(u), coefficient by coefficient
    std::mt19937 rng(31);
    for (int n = 2; n <= 3; ++n) {
        std::vector<UPoly> a;
        for (int m = 0; m <= n; ++m) a.push_back(drinfeld_polynomial(n, DrinfeldKind::A, m));
        int done = 0;
        while (done < 10) {
            std::vector<Rat> lam;
            for (int i = 0; i < n; ++i) lam.push_back(rnd_rat(rng));
            Tableau L = hw_tableau(lam);
            if (!distinct_rows(L)) continue;
            for (int m = 1; m <= n; ++m) {
                for (int k = 1; k <= m; ++k)
                    CHECK(gamma_value(L, m, k) == hw_eigenvalue(gt_generator(n, m, k), lam));
                ScalarPoly alpha = alpha_polynomial(L, m);
                CHECK(alpha.degree() == m);
                for (int d = 0; d <= m; ++d)
                    CHECK(alpha.coeff(d) == hw_eigenvalue(a[m].coeff(d), lam));
            }
            ++done;
        }
    }
}

TEST_CASE("alpha closed form") {
    Tableau t({{Rat(1) / 2}, {Rat(3), Rat(-1)}});
    CHECK(alpha_polynomial(t, 2) == ScalarPoly({Rat(-3), Rat(2), Rat(1)}));  // (u+3)(u-1)
    CHECK(alpha_polynomial(t, 0) == ScalarPoly::constant(1));
    CHECK(alpha_polynomial(t, 1).eval(Rat(-1) / 2) == 0);
}

TEST_CASE("canonical ideal sorts rows descending") {
    Tableau t({{Rat(0)}, {Rat(-1), Rat(2)}, {Rat(1), Rat(5), Rat(-3)}});
    GTIdeal ideal = canonical_ideal(t);
    CHECK(ideal.rows()[1] == std::vector<Rat>{Rat(2), Rat(-1)});
    CHECK(ideal.rows()[2] == std::vector<Rat>{Rat(5), Rat(1), Rat(-3)});
    CHECK(canonical_ideal(ideal.representative()) == ideal);
    Tableau s({{Rat(0)}, {Rat(2), Rat(-1)}, {Rat(5), Rat(1), Rat(-3)}});
    CHECK(canonical_ideal(s) == ideal);
}

TEST_CASE("integer lattice membership") {
    Tableau a({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    Tableau b({{Rat(3)}, {Rat(5) / 2, Rat(-7) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(in_integer_lattice_of(a, b));
    Tableau c({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(0), Rat(1), Rat(-1)}});
    CHECK(!in_integer_lattice_of(a, c));  // top rows must agree exactly
    Tableau d({{Rat(1) / 3}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(!in_integer_lattice_of(a, d));
}

TEST_CASE("same_nc_component follows the sign rule") {
    Tableau root({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(same_nc_component(root, root));
    Tableau plus({{Rat(2)}, {Rat(5) / 2, Rat(-3) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(same_nc_component(root, plus));
    CHECK(same_nc_component(plus, root));
    // the singular gap flips sign: other side of the wall
    Tableau flipped({{Rat(0)}, {Rat(-3) / 2, Rat(1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(!same_nc_component(root, flipped));
    // transitivity on a chain
    Tableau far({{Rat(-1)}, {Rat(9) / 2, Rat(-5) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK(same_nc_component(plus, far));
    CHECK(same_nc_component(root, far));

    Tableau crit({{Rat(0)}, {Rat(1) / 2, Rat(1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK_THROWS_AS(same_nc_component(root, crit), InputError);
    Tableau other({{Rat(1) / 3}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    CHECK_THROWS_AS(same_nc_component(root, other), InputError);
}

TEST_CASE("orbit equivalence agrees with the brute-force group search") {
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 60) {
        Tableau a = random_tableau(3, rng);
        Tableau b(a.rows());
        std::uniform_int_distribution<int> mode(0, 2), small(-2, 2);
        int mo = mode(rng);
        auto rows = a.rows();
        if (mo == 0) {  // group move: permute rows, shift rows 1..n-1 by integers
            for (int m = 1; m <= 3; ++m) {
                std::shuffle(rows[m - 1].begin(), rows[m - 1].end(), rng);
                if (m < 3)
                    for (auto& e : rows[m - 1]) e += small(rng);
            }
            b = Tableau(rows);
        } else if (mo == 1) {  // break a fractional part
            rows[0][0] += Rat(1) / 2;
            b = Tableau(rows);
        } else {  // unrelated tableau
            b = random_tableau(3, rng);
        }
        CHECK(module_orbit_equivalent(a, b) == brute_orbit(a, b));
        CHECK(module_orbit_equivalent(b, a) == module_orbit_equivalent(a, b));
        ++checked;
    }
    Tableau t2({{Rat(0)}, {Rat(1), Rat(2)}});
    CHECK_THROWS_AS(module_orbit_equivalent(t2, random_tableau(3, rng)), InputError);
}

TEST_CASE("shifting the top row of the orbit breaks equivalence") {
    Tableau a({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(1), Rat(0), Rat(-1)}});
    Tableau b({{Rat(0)}, {Rat(1) / 2, Rat(-1) / 2}, {Rat(2), Rat(0), Rat(-1)}});
    CHECK(!module_orbit_equivalent(a, b));
    CHECK(!brute_orbit(a, b));
}
