"""
Finite-dimensional Hopf algebras: integrals, unimodularity, the symmetry
criteria involving S^2, and wedge powers of subcoalgebras.

Antipode matrices use column convention: S(c_j) = sum_i S[i][j] c_i.

Integrals come in two flavours and are always labelled separately:

* on H  (functionals t in H*):  h* t = h*(1) t   (left),  t h* = h*(1) t  (right)
* in H  (elements t in H):      h t = eps(h) t   (left),  t h = eps(h) t  (right)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .coalg import (Algebra, Coalgebra, Report, dual_coalgebra, grouplikes,
                    is_subcoalgebra)
from .errors import DimensionMismatch, InvalidStructure, TheoremViolation
from .exactla import Matrix, Subspace, dot, inverse, kernel, lincomb, unit_vec
from .frob import BilinearForm, certificate, find_nonsingular, is_symmetric
from .nakayama import (dual_inverse, find_unit, inner_candidates, nakayama,
                       symmetric_form_from_inner)

ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    coalgebra: Coalgebra
    algebra: Algebra
    antipode: Matrix
    name: str = "H"

    def __post_init__(self):
        n = self.coalgebra.dim
        if self.algebra.dim != n or self.antipode.shape != (n, n):
            raise DimensionMismatch("Hopf data of inconsistent dimensions")

    @classmethod
    def from_tables(cls, delta, counit, mult, unit, antipode, basis_names=None, name="H"):
        c = Coalgebra(delta, counit, basis_names, name)
        a = Algebra(mult, unit, name)
        s = antipode if isinstance(antipode, Matrix) else Matrix(antipode)
        return cls(c, a, s, name)

    @property
    def dim(self):
        return self.coalgebra.dim

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def counit(self):
        return self.coalgebra.counit

    def multiply(self, a, b):
        return self.algebra.multiply(a, b)

    def S(self, x):
        return self.antipode.apply(x)

    @property
    def s2(self):
        return self.antipode @ self.antipode

    def violations(self):
        c, a = self.coalgebra, self.algebra
        n = self.dim
        out = [f"coalgebra: {v}" for v in c.violations()]
        out += [f"algebra: {v}" for v in a.violations()]
        if out:
            return out
        basis = [unit_vec(n, i) for i in range(n)]
        eps = c.counit
        for i, j in product(range(n), repeat=2):
            ab = a.multiply(basis[i], basis[j])
            lhs = c.coproduct(ab)
            rhs = {}
            for p, q, x in c.terms[i]:
                for r, s, y in c.terms[j]:
                    pr = a.multiply(basis[p], basis[r])
                    qs = a.multiply(basis[q], basis[s])
                    for u, z in enumerate(pr):
                        if z:
                            for v, w in enumerate(qs):
                                if w:
                                    rhs[(u, v)] = rhs.get((u, v), ZERO) + x * y * z * w
            if lhs != {k: v for k, v in rhs.items() if v}:
                out.append(f"Delta not multiplicative at ({i}, {j})")
            if dot(eps, ab) != eps[i] * eps[j]:
                out.append(f"counit not multiplicative at ({i}, {j})")
        one = self.unit
        if c.coproduct_flat(one) != tuple(x * y for x in one for y in one):
            out.append("unit is not grouplike")
        if dot(eps, one) != 1:
            out.append("eps(1) != 1")
        for i in range(n):
            left = [ZERO] * n
            right = [ZERO] * n
            for p, q, x in c.terms[i]:
                for k, z in enumerate(a.multiply(self.S(basis[p]), basis[q])):
                    left[k] += x * z
                for k, z in enumerate(a.multiply(basis[p], self.S(basis[q]))):
                    right[k] += x * z
            target = tuple(eps[i] * u for u in one)
            if tuple(left) != target or tuple(right) != target:
                out.append(f"antipode law fails at basis {i}")
        return out

    def validate(self):
        v = self.violations()
        return Report(f"Hopf algebra {self.name}", not v, v)

    def check(self):
        v = self.violations()
        if v:
            raise InvalidStructure(f"{self.name}: " + "; ".join(v), v)
        return self


def dual_hopf(h, name=None):
    """H* with product dual to Delta and coproduct dual to the product."""
    c = dual_coalgebra(h.algebra, [f"{x}*" for x in h.coalgebra.basis_names],
                       name or f"{h.name}*")
    d = h.coalgebra.dual
    a = Algebra(d.mult, d.unit, c.name)
    return HopfAlgebra(c, a, h.antipode.T, c.name)


# -- integrals ---------------------------------------------------------------

@dataclass
class IntegralData:
    left_on_H: Subspace
    right_on_H: Subspace
    left_in_H: Subspace
    right_in_H: Subspace

    @property
    def unimodular_on(self):
        return self.left_on_H == self.right_on_H

    @property
    def unimodular_in(self):
        return self.left_in_H == self.right_in_H

    def lines(self):
        out = []
        for key in ("left_on_H", "right_on_H", "left_in_H", "right_in_H"):
            sp = getattr(self, key)
            out.append(f"{key}: " + "; ".join(
                "(" + ", ".join(str(x) for x in v) + ")" for v in sp.vectors))
        return out


def _stacked_kernel(mats, n):
    rows = [row for m in mats for row in m]
    return kernel(Matrix(rows, cols=n))


def integrals(h):
    n = h.dim
    ident = Matrix.identity(n)
    dual = h.coalgebra.dual
    one = h.unit
    eps = h.counit
    left_on = _stacked_kernel([P - ident.scale(one[k])
                               for k, P in enumerate(dual.left_mult_matrices)], n)
    right_on = _stacked_kernel([Q - ident.scale(one[k])
                                for k, Q in enumerate(dual.right_mult_matrices)], n)
    a = h.algebra
    left_in = _stacked_kernel([P - ident.scale(eps[k])
                               for k, P in enumerate(a.left_mult_matrices)], n)
    right_in = _stacked_kernel([Q - ident.scale(eps[k])
                                for k, Q in enumerate(a.right_mult_matrices)], n)
    data = IntegralData(left_on, right_on, left_in, right_in)
    for key in ("left_on_H", "right_on_H", "left_in_H", "right_in_H"):
        if getattr(data, key).dim != 1:
            raise TheoremViolation(f"{key} has dimension {getattr(data, key).dim}")
    return data


# -- the form t(x S(y)) -------------------------------------------------------

def integral_form(h, t):
    """Gram matrix of D(x, y) = t(x S(y))."""
    n = h.dim
    if not any(t):
        raise ValueError("integral must be nonzero")
    basis = [unit_vec(n, i) for i in range(n)]
    Sb = [h.S(b) for b in basis]
    return Matrix([[dot(t, h.multiply(basis[a], Sb[b])) for b in range(n)] for a in range(n)])


def form_from_integral(h, t, check=True):
    """Certificate for D(x, y) = t(x S(y)); its Nakayama map is checked to be S^2."""
    cert = certificate(h.coalgebra, integral_form(h, t), "integral")
    if check:
        na = nakayama(cert)
        if na.sigma != h.s2:
            raise TheoremViolation("Nakayama automorphism of D is not S^2")
    return cert


def d_identity_defects(h, t):
    """Basis pairs where D(x, y) != D(S^2(y), x)."""
    G = integral_form(h, t)
    S2 = h.s2
    n = h.dim
    return [(a, b) for a in range(n) for b in range(n)
            if G[a, b] != dot(S2.column(b), G.column(a))]


# -- Theorem-style verdicts -------------------------------------------------

@dataclass
class CoalgebraVerdict:
    unimodular_on: bool
    s2_inner_dual: tuple          # u in U(H*) with S^2(h) = u^-1 . h . u, or None
    symmetric: bool
    integral: tuple = None
    form: Matrix = None           # t((u^-1 . x) S(y)) when symmetric
    cross_check: bool = None

    def lines(self):
        yn = lambda b: "yes" if b else "no"
        out = [f"unimodular(on H): {yn(self.unimodular_on)}",
               f"S^2 inner via H*: {yn(self.s2_inner_dual is not None)}"]
        if self.s2_inner_dual is not None:
            out.append("u: (" + ", ".join(map(str, self.s2_inner_dual)) + ")")
        if self.form is not None:
            out.append("symmetric form Gram: " + str(self.form.tolist()).replace("Fraction", ""))
        out.append(f"symmetric-as-coalgebra: {yn(self.symmetric)}")
        return out


def s2_inner_dual(h, seed=0, method="auto"):
    """u in U(H*) with u . S^2(x) = x . u for all x, or None."""
    c = h.coalgebra
    u, _ = find_unit(c, inner_candidates(c, h.s2), seed, method)
    return u


def hopf_symmetric_coalgebra(h, seed=0, method="auto", cross_check=True):
    data = integrals(h)
    u = s2_inner_dual(h, seed, method)
    verdict = CoalgebraVerdict(data.unimodular_on, u, False)
    if data.unimodular_on:
        t = data.left_on_H.vectors[0]
        verdict.integral = t
        cert = form_from_integral(h, t)
        if u is not None:
            na = nakayama(cert)
            gram = symmetric_form_from_inner(na, u)
            form = BilinearForm(h.coalgebra, gram)
            if not (form.is_symmetric() and form.is_nondegenerate() and form.is_balanced()):
                raise TheoremViolation("form t((u^-1 . x) S(y)) is not a symmetric witness")
            verdict.symmetric = True
            verdict.form = gram
    if cross_check:
        other = is_symmetric(h.coalgebra, seed=seed, method=method) is not None
        verdict.cross_check = other == verdict.symmetric
        if not verdict.cross_check:
            raise TheoremViolation("Hopf criterion disagrees with the direct search")
    return verdict


def s2_inner_in_H(h, seed=0, method="auto"):
    """Invertible g in H with x g = g S^2(x) for all x, or None."""
    a = h.algebra
    n = h.dim
    S2 = h.s2
    mats = [a.left_mult_matrix(unit_vec(n, i)) - a.right_mult_matrix(S2.column(i))
            for i in range(n)]
    sol = _stacked_kernel(mats, n)
    if sol.dim == 0:
        return None
    res = find_nonsingular([a.left_mult_matrix(v) for v in sol.vectors], seed=seed, method=method)
    if not res.found:
        return None
    return lincomb(res.coeffs, sol.vectors, n)


@dataclass
class AlgebraVerdict:
    unimodular_in: bool
    g: tuple
    symmetric: bool
    cross_check: bool = None


def symmetric_as_algebra(h, seed=0, method="auto", cross_check=True):
    data = integrals(h)
    g = s2_inner_in_H(h, seed, method)
    v = AlgebraVerdict(data.unimodular_in, g, data.unimodular_in and g is not None)
    if cross_check:
        other = is_symmetric(dual_hopf(h).coalgebra, seed=seed, method=method) is not None
        v.cross_check = other == v.symmetric
        if not v.cross_check:
            raise TheoremViolation("algebra symmetry verdict disagrees with the dual coalgebra")
    return v


def antipode_fixes_integral(h, t):
    """t o S == t."""
    return tuple(h.antipode.T.apply(t)) == tuple(t)


# -- wedge --------------------------------------------------------------------

def wedge(c, x, y):
    """Delta^{-1}(X (x) C + C (x) Y).

    The annihilator of X (x) C + C (x) Y is X^perp (x) Y^perp, so the wedge
    is cut out by the functionals x -> (a (x) b)(Delta x).
    """
    n = c.dim
    if x.ambient_dim != n or y.ambient_dim != n:
        raise DimensionMismatch("subspace ambient does not match coalgebra")
    ax = x.annihilator().vectors
    ay = y.annihilator().vectors
    if not ax or not ay:
        return Subspace.full(n)
    rows = []
    for a in ax:
        for b in ay:
            row = [ZERO] * n
            for i in range(n):
                s = ZERO
                for j, k, v in c.terms[i]:
                    if a[j] and b[k]:
                        s += v * a[j] * b[k]
                row[i] = s
            rows.append(row)
    return kernel(Matrix(rows, cols=n))


@dataclass
class WedgeTrace:
    result: Subspace
    steps: int
    dims: list


def wedge_powers(c, a, count):
    """[a, a^a, a^a^a, ...] up to the count-th wedge power."""
    out = [a]
    while len(out) < count:
        out.append(wedge(c, out[-1], a))
    return out


def a_infinity(c, a):
    """Union of the wedge powers of a subcoalgebra, with the step count.

    ``steps`` is the least n with wedge^n(A) = wedge^{n+1}(A).
    """
    if not is_subcoalgebra(c, a):
        raise ValueError("input is not a subcoalgebra")
    cur = a
    dims = [a.dim]
    steps = 1
    while True:
        nxt = wedge(c, cur, a)
        if nxt == cur:
            break
        cur = nxt
        dims.append(cur.dim)
        steps += 1
        if steps > c.dim + 1:
            raise TheoremViolation("wedge powers failed to stabilise")
    if not is_subcoalgebra(c, cur):
        raise TheoremViolation("A_infinity is not a subcoalgebra")
    return WedgeTrace(cur, steps, dims)


def h_infinity(h):
    return a_infinity(h.coalgebra, Subspace(h.dim, [h.unit]))


def hopf_closure_report(h, s):
    """Closure of a subspace under product, unit, Delta, S (eps is automatic)."""
    details = []
    vs = s.vectors
    if not all(s.contains(h.multiply(x, y)) for x in vs for y in vs):
        details.append("not closed under multiplication")
    if not s.contains(h.unit):
        details.append("does not contain 1")
    if not is_subcoalgebra(h.coalgebra, s):
        details.append("not a subcoalgebra")
    if not all(s.contains(h.S(x)) for x in vs):
        details.append("not stable under S")
    return Report("Hopf subalgebra", not details, details)


def s2_preserves_subcoalgebras(h, a):
    if not is_subcoalgebra(h.coalgebra, a):
        raise ValueError("input is not a subcoalgebra")
    S2 = h.s2
    return all(a.contains(S2.apply(v)) for v in a.vectors)


# -- Hopf subalgebras --------------------------------------------------------

def sub_hopf(h, s, name=None):
    """Hopf subalgebra on the rref basis of s (coordinates read at the pivots)."""
    rep = hopf_closure_report(h, s)
    if not rep.ok:
        raise ValueError("subspace is not a Hopf subalgebra: " + "; ".join(rep.details))
    vs = s.vectors
    m = len(vs)
    piv = s.pivots

    def coords(v):
        return tuple(v[p] for p in piv)

    delta = [[[ZERO] * m for _ in range(m)] for _ in range(m)]
    for a, v in enumerate(vs):
        d = h.coalgebra.coproduct(v)
        for b, p in enumerate(piv):
            for e, q in enumerate(piv):
                delta[a][b][e] = d.get((p, q), ZERO)
    counit = [dot(h.counit, v) for v in vs]
    mult = [[list(coords(h.multiply(x, y))) for y in vs] for x in vs]
    unit = coords(h.unit)
    S = Matrix.from_columns([coords(h.S(v)) for v in vs])
    names = [f"k{i}" for i in range(m)]
    return HopfAlgebra.from_tables(delta, counit, mult, unit, S, names,
                                   name or f"{h.name}|K").check()


def restrict_functional(u, s):
    """i*(u): the functional u read on the rref basis of s."""
    return tuple(dot(u, v) for v in s.vectors)


def subalgebra_inner_check(h, s, seed=0):
    """Restrict the S^2-conjugating unit of H* to a Hopf subalgebra K.

    Reports whether v = i*(u) is a unit of K* implementing S_K^2, together
    with the grouplikes of K and H.
    """
    k = sub_hopf(h, s)
    u = s2_inner_dual(h, seed)
    details = []
    gk, gh = grouplikes(k.coalgebra), grouplikes(h.coalgebra)
    details.append(f"|G(K)| = {len(gk)}, |G(H)| = {len(gh)}")
    if u is None:
        return Report("restricted unit", False, details + ["no unit in H*"]), k, None
    v = restrict_functional(u, s)
    kc = k.coalgebra
    if dual_inverse(kc, v) is None:
        details.append("i*(u) is not invertible in K*")
        return Report("restricted unit", False, details), k, v
    S2 = k.s2
    for i in range(k.dim):
        x = unit_vec(k.dim, i)
        if kc.hit_right(x, v) != kc.hit_left(v, S2.apply(x)):
            details.append(f"i*(u) does not conjugate S_K^2 at {i}")
    return Report("restricted unit", len(details) == 1, details), k, v
