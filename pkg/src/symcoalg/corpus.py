"""Built-in instances: coalgebras, Hopf algebras and comodules."""

from fractions import Fraction
from itertools import permutations

from .coalg import (Algebra, Comodule, comodule_from_coideal, divided_powers,
                    dual_coalgebra, grouplike, matrix_coalgebra, regular_comodule,
                    right_coideal_generated, zero_comodule)
from .exactla import Matrix, unit_vec
from .hopf import HopfAlgebra, dual_hopf


def _algebra_from_rule(n, rule, unit, name):
    """rule(i, j) -> dict {k: coef} for e_i e_j."""
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k, v in rule(i, j).items():
                mult[i][j][k] += Fraction(v)
    return Algebra(mult, unit, name)


def quantum_exterior_dual(q):
    """Dual coalgebra of k<x,y>/(x^2, y^2, yx - q xy), basis 1, x, y, xy.

    The algebra is Frobenius for q != 0; it is symmetric only for q = 1.
    """
    q = Fraction(q)
    table = {(1, 2): {3: 1}, (2, 1): {3: q}}

    def rule(i, j):
        if i == 0:
            return {j: 1}
        if j == 0:
            return {i: 1}
        return table.get((i, j), {})

    a = _algebra_from_rule(4, rule, [1, 0, 0, 0], f"Lambda_{q}")
    return dual_coalgebra(a, ["1*", "x*", "y*", "xy*"], name=f"Lambda_{q}*")


def square_zero_dual():
    """Dual of k[x, y]/(x, y)^2: not co-Frobenius."""
    rule = lambda i, j: {j: 1} if i == 0 else ({i: 1} if j == 0 else {})
    a = _algebra_from_rule(3, rule, [1, 0, 0], "k[x,y]/m^2")
    return dual_coalgebra(a, ["1*", "x*", "y*"], name="(k[x,y]/m^2)*")


def path_coalgebra_a2():
    """e1, e2 grouplike and Delta(a) = e1 (x) a + a (x) e2."""
    from .coalg import Coalgebra
    return Coalgebra.from_terms({0: [(0, 0, 1)], 1: [(1, 1, 1)], 2: [(0, 2, 1), (2, 1, 1)]},
                                [1, 1, 0], ["e1", "e2", "a"], name="kA2")


# -- Hopf algebras -------------------------------------------------------------

def group_algebra(elements, op, name):
    elements = list(elements)
    n = len(elements)
    idx = {g: i for i, g in enumerate(elements)}
    e = next(g for g in elements if all(op(g, h) == h for h in elements))
    inv = {g: next(h for h in elements if op(g, h) == e) for g in elements}
    delta = [[[0] * n for _ in range(n)] for _ in range(n)]
    mult = [[[0] * n for _ in range(n)] for _ in range(n)]
    S = [[0] * n for _ in range(n)]
    for g in elements:
        i = idx[g]
        delta[i][i][i] = 1
        S[idx[inv[g]]][i] = 1
        for h in elements:
            mult[i][idx[h]][idx[op(g, h)]] = 1
    names = [str(g) for g in elements]
    return HopfAlgebra.from_tables(delta, [1] * n, mult, unit_vec(n, idx[e]), S, names, name)


def cyclic_group_algebra(n):
    return group_algebra(range(n), lambda a, b: (a + b) % n, f"kC{n}")


def klein_four():
    return group_algebra([(a, b) for a in range(2) for b in range(2)],
                         lambda x, y: ((x[0] + y[0]) % 2, (x[1] + y[1]) % 2), "kV4")


def s3_group_algebra():
    perms = sorted(permutations(range(3)))
    compose = lambda p, q: tuple(p[q[i]] for i in range(3))
    h = group_algebra(perms, compose, "kS3")
    return h


def sweedler():
    """H4: basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x."""
    idx = lambda a, b: a + 2 * b
    mult = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    for a in range(2):
        for b in range(2):
            for c in range(2):
                for d in range(2):
                    if b + d < 2:
                        mult[idx(a, b)][idx(c, d)][idx((a + c) % 2, b + d)] = (-1) ** (b * c)
    delta = [[[0] * 4 for _ in range(4)] for _ in range(4)]
    delta[0][0][0] = 1
    delta[1][1][1] = 1
    delta[2][2][0] = 1
    delta[2][1][2] = 1
    delta[3][3][1] = 1
    delta[3][0][3] = 1
    S = Matrix.from_columns([unit_vec(4, 0), unit_vec(4, 1),
                             tuple(-x for x in unit_vec(4, 3)), unit_vec(4, 2)])
    return HopfAlgebra.from_tables(delta, [1, 1, 0, 0], mult, unit_vec(4, 0), S,
                                   ["1", "g", "x", "gx"], "H4")


def hopf_corpus():
    kc3 = cyclic_group_algebra(3)
    ks3 = s3_group_algebra()
    h4 = sweedler()
    return [cyclic_group_algebra(1), cyclic_group_algebra(2), kc3, cyclic_group_algebra(4),
            klein_four(), ks3, h4, dual_hopf(kc3, "k^C3"), dual_hopf(ks3, "k^S3"),
            dual_hopf(h4, "H4*")]


def coalgebra_corpus():
    return [grouplike(["g"]), grouplike(["g", "h"]), grouplike(["a", "b", "c"]),
            matrix_coalgebra(2), matrix_coalgebra(3), divided_powers(2), divided_powers(3),
            square_zero_dual(), path_coalgebra_a2(), quantum_exterior_dual(2),
            quantum_exterior_dual(-1)]


def full_corpus():
    """Every coalgebra of the corpus, including Hopf coalgebras."""
    return coalgebra_corpus() + [h.coalgebra for h in hopf_corpus()]


def frobenius_not_symmetric():
    return quantum_exterior_dual(2)


def comodule_corpus(c, seed=0):
    """Regular comodule, zero comodule and a few subcomodules of C."""
    import random
    from .exactla import random_int_vector
    rng = random.Random(seed)
    out = [regular_comodule(c), zero_comodule(c)]
    for i in range(c.dim):
        s = right_coideal_generated(c, [unit_vec(c.dim, i)])
        if 0 < s.dim < c.dim:
            out.append(comodule_from_coideal(c, s)[0])
            break
    s = right_coideal_generated(c, [random_int_vector(rng, c.dim, 2)])
    out.append(comodule_from_coideal(c, s)[0])
    return out
