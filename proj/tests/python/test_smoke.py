from fractions import Fraction

import pytest

import gtquiver as gt


def test_classify_singular():
    t = gt.Tableau([[0], ["1/2", "-1/2"], [1, 0, -1]])
    assert gt.classify(t) == {"kind": "singular", "pairs": [[2, 1, 2]]}


def test_classify_generic():
    t = gt.Tableau([["1/7"], ["1/3", "-1/5"], [1, 0, -1]])
    assert gt.classify(t) == {"kind": "generic", "pairs": []}


def test_gamma_value():
    t = gt.Tableau([["1/2"], [3, -1]])
    assert gt.gamma(t, 2, 1) == Fraction(3)


def test_gamma_critical_raises():
    t = gt.Tableau([["1/2"], ["1/2", "1/2"]])
    with pytest.raises(gt.InputError):
        gt.gamma(t, 2, 1)


def test_alpha_coeffs():
    t = gt.Tableau([["1/2"], [3, -1]])
    assert gt.alpha(t, 2) == [Fraction(-3), Fraction(2), Fraction(1)]


def test_tableau_round_trip():
    t = gt.Tableau([[Fraction(1, 2)], [3, "-1"]])
    assert t.rows() == [[Fraction(1, 2)], [Fraction(3), Fraction(-1)]]
    assert t.entry(2, 2) == Fraction(-1)
    assert t.n == 2


def test_hw_eigenvalue_oracle():
    c21 = gt.gt_generator(2, 2, 1)
    assert gt.hw_eigenvalue(c21, [5, 2]) == Fraction(7)


def test_drinfeld_b1():
    b1 = gt.drinfeld_polynomial(2, "b", 1)
    assert b1.degree() == 0
    assert b1.coeff(0) == gt.generator(2, 1, 2)


def test_verify_n2():
    rep = gt.verify(2)
    assert rep["all_pass"] is True
    assert len(rep["instances"]) == 9


def test_window_solve_reduce():
    t = gt.Tableau([["1/2"], [3, -1]])
    w = gt.Window(t, 1)
    assert w.vertex_count() == 3
    mod = w.solve()
    assert set(mod) == {"window", "edge_scalars", "tree_c_edges"}
    assert w.reduce([("b", 1, 1), ("c", 1, 1)]) == Fraction(15, 4)
    assert w.reduce([]) == 1


def test_reduce_non_cycle_raises():
    t = gt.Tableau([["1/2"], [3, -1]])
    with pytest.raises(gt.InputError):
        gt.Window(t, 1).reduce([("b", 1, 1)])


def test_nongeneric_window_raises():
    t = gt.Tableau([[3], [3, -1]])
    with pytest.raises(gt.NonGenericWindowError):
        gt.Window(t, 1).solve()


def test_probe_deterministic():
    t = gt.Tableau([["1/7"], ["1/3", "-1/5"], [1, 0, -1]])
    w = gt.Window(t, 2)
    a = w.probe(samples=10, max_len=6, seed=5)
    assert a == w.probe(samples=10, max_len=6, seed=5)
    assert a["pass"] is True
    assert len(a["cycles"]) == 10


def test_same_component():
    a = gt.Tableau([[0], ["1/2", "-1/2"], [1, 0, -1]])
    b = gt.Tableau([[0], ["-1/2", "1/2"], [1, 0, -1]])
    assert not gt.same_component(a, b)
    c = gt.Tableau([[1], ["3/2", "-1/2"], [1, 0, -1]])
    assert gt.same_component(a, c)


def test_orbit_equivalent():
    a = gt.Tableau([["1/7"], ["1/3", "-1/5"], [1, 0, -1]])
    b = gt.Tableau([["8/7"], ["-1/5", "7/3"], [1, -1, 0]])
    assert gt.orbit_equivalent(a, b)
    assert not gt.orbit_equivalent(a, gt.Tableau([["1/7"], ["1/3", "-1/5"], [2, 0, -1]]))


def test_canonical_rows_sorted():
    t = gt.Tableau([[0], ["-1/2", "1/2"], [0, 1, -1]])
    assert gt.canonical_rows(t) == [
        [Fraction(0)],
        [Fraction(1, 2), Fraction(-1, 2)],
        [Fraction(1), Fraction(0), Fraction(-1)],
    ]
