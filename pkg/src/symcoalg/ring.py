"""
The ring structure on C transported from C* along alpha.

    x o y = alpha^{-1}(alpha(x) alpha(y)) = alpha(x) . y
    x (.) y = x . beta(y)

The second product is computed from beta alone and must agree with the
first.  In finite dimension the ring has a genuine identity
e = alpha^{-1}(eps).
"""

from dataclasses import dataclass
from fractions import Fraction

from .coalg import Algebra, Report, is_coideal
from .errors import DimensionMismatch
from .exactla import Matrix, unit_vec

ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class TransferredRing:
    cert: object
    algebra: Algebra

    @property
    def mult_table(self):
        return self.algebra.mult

    @property
    def identity(self):
        return self.algebra.unit

    @property
    def dim(self):
        return self.algebra.dim

    def multiply(self, x, y):
        return self.algebra.multiply(x, y)


def circ_table(cert):
    """(c_a o c_b)_j = sum_k mu[b][j][k] M[k][a]."""
    c = cert.parent
    M = cert.gram
    n = c.dim
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for b in range(n):
        for j, k, x in c.terms[b]:
            for a in range(n):
                if M[k, a]:
                    t[a][b][j] += x * M[k, a]
    return t


def odot_table(cert):
    """(c_a (.) c_b)_k = sum_j mu[a][j][k] beta(c_b)_j, with beta = M^T."""
    c = cert.parent
    B = cert.beta
    n = c.dim
    t = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for a in range(n):
        for j, k, x in c.terms[a]:
            for b in range(n):
                if B[j, b]:
                    t[a][b][k] += x * B[j, b]
    return t


def build_ring(cert, check=True):
    table = circ_table(cert)
    if check and table != odot_table(cert):
        from .errors import TheoremViolation
        raise TheoremViolation("the alpha and beta products differ")
    return TransferredRing(cert, Algebra(table, cert.identity, name=f"({cert.parent.name}, o)"))


def products_agree(cert):
    """Basis pairs (a, b) where x o y and x (.) y differ."""
    t1, t2 = circ_table(cert), odot_table(cert)
    n = cert.parent.dim
    return [(a, b) for a in range(n) for b in range(n) if t1[a][b] != t2[a][b]]


def alpha_is_multiplicative(r):
    """alpha(x o y) == alpha(x) alpha(y) on all basis pairs."""
    c = r.cert.parent
    A = r.cert.alpha
    dual = c.dual
    n = c.dim
    for a in range(n):
        xa = unit_vec(n, a)
        for b in range(n):
            xb = unit_vec(n, b)
            if A.apply(r.multiply(xa, xb)) != dual.multiply(A.apply(xa), A.apply(xb)):
                return False
    return True


def bimodule_law_check(r, table=None):
    """Check (f . x) o y = f . (x o y) and x o (y . f) = (x o y) . f on basis triples.

    For a symmetric form also (x . f) o y = x o (f . y).  ``table`` replaces
    the ring's product (used for negative controls).
    """
    c = r.cert.parent
    n = c.dim
    alg = r.algebra if table is None else Algebra(table, r.identity)
    mul = alg.multiply
    L, R = c.left_hit_matrices, c.right_hit_matrices
    sym = r.cert.symmetric
    details = []
    basis = [unit_vec(n, i) for i in range(n)]
    prods = [[mul(x, y) for y in basis] for x in basis]
    for k in range(n):
        Lk, Rk = L[k], R[k]
        Lx = [Lk.apply(x) for x in basis]
        Rx = [Rk.apply(x) for x in basis]
        for a in range(n):
            for b in range(n):
                xy = prods[a][b]
                if mul(Lx[a], basis[b]) != Lk.apply(xy):
                    details.append(f"left law fails at (k={k}, x={a}, y={b})")
                if mul(basis[a], Rx[b]) != Rk.apply(xy):
                    details.append(f"right law fails at (k={k}, x={a}, y={b})")
                if sym and mul(Rx[a], basis[b]) != mul(basis[a], Lx[b]):
                    details.append(f"middle law fails at (k={k}, x={a}, y={b})")
    return Report("bimodule law", not details, details)


def is_ideal(r, s, side):
    """left: C o I in I; right: I o C in I."""
    n = r.dim
    basis = [unit_vec(n, i) for i in range(n)]
    for v in s.vectors:
        for x in basis:
            p = r.multiply(x, v) if side == "left" else r.multiply(v, x)
            if not s.contains(p):
                return False
    return True


def ideal_coideal_check(r, s):
    """Left ideals are right coideals and right ideals are left coideals."""
    if s.ambient_dim != r.dim:
        raise DimensionMismatch("subspace ambient does not match ring")
    c = r.cert.parent
    facts = {
        "left ideal": is_ideal(r, s, "left"),
        "right coideal": is_coideal(c, s, "right"),
        "right ideal": is_ideal(r, s, "right"),
        "left coideal": is_coideal(c, s, "left"),
    }
    details = [f"{k}: {v}" for k, v in facts.items()]
    ok = (facts["left ideal"] == facts["right coideal"]
          and facts["right ideal"] == facts["left coideal"])
    rep = Report("ideal/coideal correspondence", ok, details)
    rep.facts = facts
    return rep
