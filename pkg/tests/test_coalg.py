from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from symcoalg.coalg import (Coalgebra, Comodule, cocommutative_elements, comodule_from_coideal,
                            direct_sum, divided_powers, dual_algebra, dual_coalgebra, grouplike,
                            grouplikes, is_coideal, is_comodule_map, largest_coideal_in,
                            left_coideal_generated, matrix_coalgebra, module_homs,
                            intertwiner_space, opposite, regular_comodule,
                            right_coideal_generated, subcoalgebra_generated, tensor)
from symcoalg.corpus import full_corpus
from symcoalg.errors import DimensionMismatch, InvalidStructure, ParseError
from symcoalg.exactla import Matrix, Subspace, unit_vec

CORPUS = full_corpus()
vals = st.integers(-3, 3).map(Fraction)


def vectors(n):
    return st.lists(vals, min_size=n, max_size=n).map(tuple)


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_corpus_valid_and_matches_oracle(c):
    assert c.validate().ok
    assert oracles.coalgebra_ok(*oracles.dense(c))


def test_counit_violation_reported():
    bad = Coalgebra([[[1]]], [0])
    rep = bad.validate()
    assert not rep.ok
    assert {v.axiom for v in bad.violations()} == {"counit_left", "counit_right"}
    assert all(v.index == 0 for v in bad.violations())
    with pytest.raises(InvalidStructure):
        bad.check()


def test_zero_dim_rejected():
    with pytest.raises(ParseError):
        Coalgebra((), ())


def test_constructors_valid():
    assert matrix_coalgebra(1).delta == grouplike(["g"]).delta
    for n in (1, 2, 3):
        assert matrix_coalgebra(n).validate().ok
    s = direct_sum(grouplike("ab"), matrix_coalgebra(2))
    assert s.validate().ok and s.dim == 6
    t = tensor(matrix_coalgebra(2), divided_powers(3))
    assert t.validate().ok and t.dim == 12
    assert opposite(divided_powers(3)).validate().ok


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_hits_match_oracle(c):
    delta, _ = oracles.dense(c)
    for f in oracles.basis(c.dim):
        for x in oracles.basis(c.dim):
            assert c.hit_left(f, x) == oracles.hit_left(delta, f, x)
            assert c.hit_right(x, f) == oracles.hit_right(delta, x, f)


def test_matrix_coalgebra_hit_value():
    c = matrix_coalgebra(2)
    # Delta(e12) = e11 (x) e12 + e12 (x) e22, left hit contracts the second leg
    e11s = unit_vec(4, 0)
    e12 = unit_vec(4, 1)
    assert c.hit_left(e11s, e12) == (0, 0, 0, 0)
    e12s = unit_vec(4, 1)
    assert c.hit_left(e12s, e12) == unit_vec(4, 0)
    assert c.hit_right(e12, e11s) == unit_vec(4, 1)


def test_grouplike_hit():
    c = grouplike("gh")
    g = unit_vec(2, 0)
    f = (Fraction(5), Fraction(7))
    assert c.hit_left(f, g) == (5, 0)
    with pytest.raises(DimensionMismatch):
        c.hit_left((1,), g)


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
@given(data=st.data())
def test_bimodule_law(c, data):
    n = c.dim
    f, g, x = (data.draw(vectors(n)) for _ in range(3))
    assert c.hit_right(c.hit_left(f, x), g) == c.hit_left(f, c.hit_right(x, g))
    assert c.hit_left(c.counit, x) == x == c.hit_right(x, c.counit)


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_dual_algebra(c):
    a = dual_algebra(c)
    assert a.validate().ok
    assert a.unit == c.counit
    delta, _ = oracles.dense(c)
    for f in oracles.basis(c.dim):
        for g in oracles.basis(c.dim):
            assert a.multiply(f, g) == oracles.convolve(delta, f, g)
    op = dual_algebra(opposite(c))
    for i in range(c.dim):
        for j in range(c.dim):
            assert op.mult[i][j] == a.mult[j][i]


def test_dual_examples():
    a = dual_algebra(grouplike("gh"))
    e = [unit_vec(2, i) for i in range(2)]
    assert a.multiply(e[0], e[0]) == e[0] and a.multiply(e[0], e[1]) == (0, 0)
    m = dual_algebra(matrix_coalgebra(2))
    idx = lambda i, j: 2 * i + j
    for i, j, k, l in [(i, j, k, l) for i in range(2) for j in range(2) for k in range(2) for l in range(2)]:
        want = unit_vec(4, idx(i, l)) if j == k else (0,) * 4
        assert m.multiply(unit_vec(4, idx(i, j)), unit_vec(4, idx(k, l))) == want


def test_dual_coalgebra_roundtrip():
    c = matrix_coalgebra(2)
    back = dual_coalgebra(dual_algebra(c))
    assert back.delta == c.delta and back.counit == c.counit


def test_coideal_examples():
    c = matrix_coalgebra(2)
    for side in ("left", "right", "two-sided"):
        assert is_coideal(c, Subspace.full(4), side)
        assert is_coideal(c, Subspace.zero(4), side)
    s = Subspace(4, [unit_vec(4, 1)])
    for side in ("left", "right", "two-sided"):
        assert not is_coideal(c, s, side)
    with pytest.raises(DimensionMismatch):
        is_coideal(c, Subspace.full(3), "left")


@pytest.mark.parametrize("c", [c for c in CORPUS if c.dim <= 6], ids=lambda c: c.name)
@settings(max_examples=10)
@given(data=st.data())
def test_generated_coideals(c, data):
    delta, _ = oracles.dense(c)
    x = data.draw(vectors(c.dim))
    r = right_coideal_generated(c, [x])
    l = left_coideal_generated(c, [x])
    s = subcoalgebra_generated(c, [x])
    assert r.contains(x) and l.contains(x) and s.contains(x)
    assert oracles.is_coideal(delta, r.vectors, "right") and is_coideal(c, r, "right")
    assert oracles.is_coideal(delta, l.vectors, "left") and is_coideal(c, l, "left")
    assert oracles.is_coideal(delta, s.vectors, "both") and is_coideal(c, s, "both")


@pytest.mark.parametrize("c", CORPUS, ids=lambda c: c.name)
def test_cocommutative_elements(c):
    coc = cocommutative_elements(c)
    delta, _ = oracles.dense(c)
    for v in coc.vectors:
        d = oracles.coproduct(delta, v)
        assert all(d[j][k] == d[k][j] for j in range(c.dim) for k in range(c.dim))


def test_cocommutative_examples():
    assert cocommutative_elements(grouplike("abc")) == Subspace.full(3)
    m = cocommutative_elements(matrix_coalgebra(2))
    assert m == Subspace(4, [(1, 0, 0, 1)])
    s = cocommutative_elements(direct_sum(grouplike("ab"), matrix_coalgebra(2)))
    assert s == Subspace(6, [(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 1)])


def test_largest_coideal():
    c = matrix_coalgebra(2)
    s = Subspace(4, [unit_vec(4, 0), unit_vec(4, 1), unit_vec(4, 2)])
    r = largest_coideal_in(c, s, "right")
    assert is_coideal(c, r, "right") and s.contains_subspace(r)
    assert r == Subspace(4, [unit_vec(4, 0), unit_vec(4, 1)])


def test_grouplike_scan():
    assert len(grouplikes(grouplike("abc"))) == 3
    assert grouplikes(matrix_coalgebra(2)) == []
    d = direct_sum(matrix_coalgebra(2), grouplike("z"))
    assert grouplikes(d) == [unit_vec(5, 4)]


@pytest.mark.parametrize("c", CORPUS[:8], ids=lambda c: c.name)
def test_module_homs_agree_with_brute_force(c):
    L = c.left_hit_matrices
    P = tuple(R.T for R in c.right_hit_matrices)
    assert module_homs(L, P, c.dim, c.dim) == intertwiner_space(L, P, c.dim, c.dim)
    assert module_homs(L, L, c.dim, c.dim, seed=3) == intertwiner_space(L, L, c.dim, c.dim)


def test_comodules():
    c = matrix_coalgebra(2)
    reg = regular_comodule(c)
    assert reg.validate().ok
    s = right_coideal_generated(c, [unit_vec(4, 0)])
    m, incl = comodule_from_coideal(c, s)
    assert m.validate().ok and m.dim == 2
    assert is_comodule_map(incl, m, reg)
    bad = Comodule(c, [[[1, 0, 0, 0]]])
    assert not bad.validate().ok
